#include "edgespec/weighted.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>

#include "edgespec/character.hpp"
#include "edgespec/errors.hpp"
#include "edgespec/moments.hpp"

namespace edgespec {

int MonomialSpec::degree() const {
    int d = 0;
    for (const auto& [e, k] : exponents) d += k;
    return d;
}

Int monomial_coefficient(const Graph& t, const MonomialSpec& spec, long long budget) {
    if (!t.is_tree()) throw MalformedInput("monomial coefficients are defined for trees");
    if (t.vertex_count() <= 3)
        throw RepresentationAbsent("weighted traces need n >= 4");
    if (spec.degree() < 1) throw MalformedInput("monomial degree must be >= 1");

    // the support of the monomial is an edge-induced subforest of the tree,
    // so the coefficient is the universal character sum for (support, alpha)
    ForestWithMultiplicity fm;
    std::vector<Edge> support;
    for (const auto& [e, k] : spec.exponents) {
        if (k < 0) throw MalformedInput("negative exponent");
        if (k == 0) continue;
        if (!t.has_edge(e.u, e.v)) throw MalformedInput("monomial mentions a non-edge");
        support.push_back(e);
    }
    std::uint64_t verts = 0;
    for (const Edge& e : support)
        verts |= (std::uint64_t{1} << e.u) | (std::uint64_t{1} << e.v);
    std::vector<int> newid(t.vertex_count(), -1);
    int k = 0;
    for (int v = 0; v < t.vertex_count(); ++v)
        if ((verts >> v) & 1) newid[v] = k++;
    std::vector<Edge> mapped;
    for (const Edge& e : support) mapped.push_back({newid[e.u], newid[e.v]});
    fm.forest = Graph(k, std::move(mapped));
    for (const Edge& e : support) {
        Edge me{newid[e.u], newid[e.v]};
        fm.alpha[me] = spec.exponents.at(e);
    }
    return universal_coefficient(fm, t.vertex_count(), budget);
}

LabeledLineGraph pair_adjacency_from_coefficients(const Graph& t) {
    if (!t.is_tree()) throw MalformedInput("pair classification is defined for trees");
    const int n = t.vertex_count();
    if (n <= 3) throw RepresentationAbsent("pair classification needs n >= 4");
    auto cv = closed_character_values(n);

    LabeledLineGraph lg;
    lg.labels = t.edges();
    const int m = static_cast<int>(lg.labels.size());
    lg.adjacent.assign(m, std::vector<bool>(m, false));

    const bool quartic = (n == 7);  // alpha_7 = beta_7: the quadratic trace is blind
    const Int adj_ref = quartic ? Int(4 * cv.dim + 2 * cv.alpha) : Int(2 * cv.alpha);
    const Int dis_ref = quartic ? Int(6 * cv.dim) : Int(2 * cv.beta);

    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            MonomialSpec spec;
            spec.exponents[lg.labels[i]] = quartic ? 2 : 1;
            spec.exponents[lg.labels[j]] = quartic ? 2 : 1;
            Int coeff = monomial_coefficient(t, spec);
            bool adjacent;
            if (coeff == adj_ref)
                adjacent = true;
            else if (coeff == dis_ref)
                adjacent = false;
            else
                throw InternalConsistencyError("pair coefficient " + coeff.get_str() +
                                               " matches neither reference value");
            lg.adjacent[i][j] = lg.adjacent[j][i] = adjacent;
        }
    }
    return lg;
}

ReconstructedTree tree_from_labeled_line_graph(const LabeledLineGraph& lg, int n) {
    const int m = static_cast<int>(lg.labels.size());
    if (n < 4) throw MalformedInput("reconstruction needs n >= 4");
    if (m != n - 1) throw MalformedInput("label count must be n - 1");

    // maximal cliques of the label adjacency (Bron-Kerbosch). For a tree's
    // line graph these are exactly the stars at internal vertices.
    std::vector<std::uint64_t> adj(m, 0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (i != j && lg.adjacent[i][j]) adj[i] |= std::uint64_t{1} << j;

    std::vector<std::uint64_t> cliques;
    auto expand = [&](auto&& self, std::uint64_t r, std::uint64_t p, std::uint64_t x) -> void {
        if (p == 0 && x == 0) {
            cliques.push_back(r);
            return;
        }
        std::uint64_t pivot_candidates = p | x;
        int pivot = std::countr_zero(pivot_candidates);
        std::uint64_t ext = p & ~adj[pivot];
        while (ext) {
            int v = std::countr_zero(ext);
            ext &= ext - 1;
            std::uint64_t bit = std::uint64_t{1} << v;
            self(self, r | bit, p & adj[v], x & adj[v]);
            p &= ~bit;
            x |= bit;
        }
    };
    expand(expand, 0, m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1, 0);

    std::vector<std::vector<int>> clique_of_label(m);
    for (size_t c = 0; c < cliques.size(); ++c)
        for (int i = 0; i < m; ++i)
            if ((cliques[c] >> i) & 1) clique_of_label[i].push_back(static_cast<int>(c));

    std::vector<Edge> edges;
    std::vector<Edge> label_edges(m);
    int vertex_count = static_cast<int>(cliques.size());
    for (int i = 0; i < m; ++i) {
        const auto& cs = clique_of_label[i];
        int a, b;
        if (cs.size() == 2) {
            a = cs[0];
            b = cs[1];
        } else if (cs.size() == 1) {
            a = cs[0];
            b = vertex_count++;  // fresh leaf endpoint
        } else {
            throw MalformedInput("label lies in " + std::to_string(cs.size()) +
                                 " maximal cliques; not a tree line graph");
        }
        Edge e{std::min(a, b), std::max(a, b)};
        edges.push_back(e);
        label_edges[i] = e;
    }
    if (vertex_count != n)
        throw MalformedInput("clique structure yields " + std::to_string(vertex_count) +
                             " vertices, expected " + std::to_string(n));

    Graph tree(n, edges);  // throws on repeated edges
    if (!tree.is_tree()) throw MalformedInput("clique structure does not assemble into a tree");

    // the labeling must reproduce the given adjacency exactly
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            const Edge &e = label_edges[i], &f = label_edges[j];
            bool share = e.u == f.u || e.u == f.v || e.v == f.u || e.v == f.v;
            if (share != static_cast<bool>(lg.adjacent[i][j]))
                throw MalformedInput("reconstructed tree does not realize the label adjacency");
        }
    return {std::move(tree), std::move(label_edges)};
}

Graph weighted_reconstruction(const Graph& t) {
    LabeledLineGraph lg = pair_adjacency_from_coefficients(t);
    return tree_from_labeled_line_graph(lg, t.vertex_count()).tree;
}

}  // namespace edgespec
