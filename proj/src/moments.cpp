#include "edgespec/moments.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <numeric>

#include "edgespec/character.hpp"
#include "edgespec/edge_operator.hpp"
#include "edgespec/errors.hpp"
#include "edgespec/isomorphism.hpp"

namespace edgespec {

namespace {

long long chi22_images(const std::vector<int>& img) {
    long long c1 = 0, c2 = 0;
    for (int i = 0; i < static_cast<int>(img.size()); ++i) {
        if (img[i] == i)
            ++c1;
        else if (img[i] > i && img[img[i]] == i)
            ++c2;
    }
    return c1 * (c1 - 1) / 2 + c2 - c1;
}

void require_rep_present(const Graph& g) {
    if (g.vertex_count() <= 3)
        throw RepresentationAbsent("the (n-2,2) moments need n >= 4, got n = " +
                                   std::to_string(g.vertex_count()));
}

}  // namespace

Int moment_oracle(const Graph& g, int r, long long budget) {
    require_rep_present(g);
    if (r < 1) throw MalformedInput("moment order must be >= 1");
    const auto& edges = g.edges();
    const long long m = g.edge_count();
    if (std::pow(static_cast<double>(m), static_cast<double>(r)) >
        static_cast<double>(budget))
        throw BudgetExceeded("word oracle needs " + std::to_string(m) + "^" + std::to_string(r) +
                             " words, over the budget of " + std::to_string(budget));
    if (m == 0) return 0;

    std::vector<int> img(g.vertex_count());
    std::iota(img.begin(), img.end(), 0);
    long long total = 0;
    // odometer over words; each step appends a transposition on the right,
    // which swaps two entries of the image array and undoes itself on backtrack
    auto rec = [&](auto&& self, int depth) -> void {
        if (depth == r) {
            total += chi22_images(img);
            return;
        }
        for (const Edge& e : edges) {
            std::swap(img[e.u], img[e.v]);
            self(self, depth + 1);
            std::swap(img[e.u], img[e.v]);
        }
    };
    rec(rec, 0);
    return Int(total);
}

std::vector<Int> moment_table(const Graph& g, int r_max) {
    require_rep_present(g);
    if (r_max < 1) throw MalformedInput("moment order must be >= 1");
    IntMatrix full = build_full_operator(g);
    IntMatrix vert = build_vertex_operator(g);
    IntMatrix pf = full, pv = vert;
    std::vector<Int> out;
    out.reserve(r_max);
    for (int r = 1; r <= r_max; ++r) {
        if (r > 1) {
            pf = pf.multiply(full);
            pv = pv.multiply(vert);
        }
        out.push_back(pf.trace() - pv.trace());
    }
    return out;
}

Int moment_exact(const Graph& g, int r) { return moment_table(g, r).back(); }

Int closed_m1(const Graph& g) {
    require_rep_present(g);
    Int n = g.vertex_count(), m = g.edge_count();
    return m * (n - 3) * (n - 4) / 2;
}

Int closed_m2(const Graph& g) {
    require_rep_present(g);
    auto cv = closed_character_values(g.vertex_count());
    Int m = g.edge_count();
    Int p = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        long long d = g.degree(v);
        p += d * (d - 1) / 2;
    }
    return m * cv.dim + 2 * p * cv.alpha + (m * (m - 1) - 2 * p) * cv.beta;
}

Int closed_m3(const Graph& g) {
    require_rep_present(g);
    auto cv = closed_character_values(g.vertex_count());
    ThreeEdgeCounts c = three_edge_counts(g);
    Int m = g.edge_count();
    Int head = cv.c2 * (m + 3 * m * (m - 1) + 6 * c.t);
    Int direct = head + 6 * cv.c4 * (c.s + c.r) + 6 * cv.c32 * c.q + 6 * cv.c222 * c.d3;
    // rearranged form, with d3 eliminated through C(m,3) = t+s+r+q+d3
    Int triples = m * (m - 1) * (m - 2) / 6;
    Int rearranged = head + 6 * cv.c222 * triples + 6 * (cv.c4 - cv.c222) * (c.s + c.r) +
                     6 * (cv.c32 - cv.c222) * c.q - 6 * cv.c222 * c.t;
    if (direct != rearranged)
        throw InternalConsistencyError("cubic moment arrangements disagree");
    return direct;
}

std::vector<Int> moments_from_charpoly(const IntPolynomial& p, int r_max) {
    return power_sums(p, r_max);
}

namespace {

struct MultisetWordSum {
    // edges embedded in the ambient set, with remaining multiplicities
    std::vector<Edge> edges;
    std::vector<int> remaining;
    std::vector<int> img;
    long long total = 0;

    void run(int left) {
        if (left == 0) {
            total += chi22_images(img);
            return;
        }
        for (size_t i = 0; i < edges.size(); ++i) {
            if (remaining[i] == 0) continue;
            --remaining[i];
            std::swap(img[edges[i].u], img[edges[i].v]);
            run(left - 1);
            std::swap(img[edges[i].u], img[edges[i].v]);
            ++remaining[i];
        }
    }
};

long long character_sum_over_orderings(const std::vector<Edge>& edges,
                                       const std::vector<int>& multiplicity, int ambient_n) {
    MultisetWordSum w;
    w.edges = edges;
    w.remaining = multiplicity;
    w.img.resize(ambient_n);
    std::iota(w.img.begin(), w.img.end(), 0);
    w.run(std::accumulate(multiplicity.begin(), multiplicity.end(), 0));
    return w.total;
}

Int multinomial(const std::vector<int>& parts) {
    Int out = 1;
    long long total = 0;
    for (int p : parts)
        for (int i = 1; i <= p; ++i) {
            ++total;
            out *= total;
            out /= i;
        }
    return out;
}

}  // namespace

Int universal_coefficient(const ForestWithMultiplicity& f, int n, long long budget) {
    if (n <= 3)
        throw RepresentationAbsent("universal coefficients need ambient n >= 4");
    const Graph& forest = f.forest;
    if (n < forest.vertex_count())
        throw MalformedInput("ambient set smaller than the forest");
    if (forest.edge_count() == 0) throw MalformedInput("forest has no edges");
    for (int v = 0; v < forest.vertex_count(); ++v)
        if (forest.degree(v) == 0) throw MalformedInput("forest has an isolated vertex");
    {
        // acyclic iff every component is a tree
        int comps = 0;
        std::vector<bool> seen(forest.vertex_count(), false);
        for (int v = 0; v < forest.vertex_count(); ++v) {
            if (seen[v]) continue;
            ++comps;
            std::vector<int> stack{v};
            seen[v] = true;
            while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                std::uint64_t nb = forest.neighbor_mask(x);
                while (nb) {
                    int w = std::countr_zero(nb);
                    nb &= nb - 1;
                    if (!seen[w]) {
                        seen[w] = true;
                        stack.push_back(w);
                    }
                }
            }
        }
        if (forest.edge_count() != forest.vertex_count() - comps)
            throw MalformedInput("forest contains a cycle");
    }

    std::vector<Edge> edges;
    std::vector<int> mult;
    for (const Edge& e : forest.edges()) {
        auto it = f.alpha.find(e);
        if (it == f.alpha.end() || it->second < 1)
            throw MalformedInput("every forest edge needs a multiplicity >= 1");
        edges.push_back(e);
        mult.push_back(it->second);
    }
    if (f.alpha.size() != edges.size())
        throw MalformedInput("multiplicity map mentions a non-forest edge");

    Int words = multinomial(mult);
    if (words > budget)
        throw BudgetExceeded("coefficient needs " + words.get_str() + " orderings, over the budget of " +
                             std::to_string(budget));

    long long first = character_sum_over_orderings(edges, mult, n);
    // the coefficient must not depend on where the forest sits inside [n]
    std::vector<Edge> mirrored;
    for (const Edge& e : edges) {
        int a = n - 1 - e.u, b = n - 1 - e.v;
        mirrored.push_back({std::min(a, b), std::max(a, b)});
    }
    long long second = character_sum_over_orderings(mirrored, mult, n);
    if (first != second)
        throw InternalConsistencyError("universal coefficient depends on the embedding");
    return Int(first);
}

namespace {

// compact the endpoints of an edge subset into {0..k-1}, keeping vertex order
Graph subforest(const Graph& t, std::uint32_t edge_mask) {
    std::vector<Edge> chosen;
    std::uint64_t verts = 0;
    for (int i = 0; i < t.edge_count(); ++i) {
        if ((edge_mask >> i) & 1) {
            const Edge& e = t.edges()[i];
            chosen.push_back(e);
            verts |= (std::uint64_t{1} << e.u) | (std::uint64_t{1} << e.v);
        }
    }
    std::vector<int> newid(t.vertex_count(), -1);
    int k = 0;
    for (int v = 0; v < t.vertex_count(); ++v)
        if ((verts >> v) & 1) newid[v] = k++;
    std::vector<Edge> mapped;
    for (const Edge& e : chosen) mapped.push_back({newid[e.u], newid[e.v]});
    return Graph(k, std::move(mapped));
}

// canonical code of a forest: sorted AHU codes of its components
std::string forest_code(const Graph& f) {
    std::vector<std::string> parts;
    std::vector<bool> seen(f.vertex_count(), false);
    for (int v = 0; v < f.vertex_count(); ++v) {
        if (seen[v]) continue;
        std::vector<int> comp;
        std::vector<int> stack{v};
        seen[v] = true;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            comp.push_back(x);
            std::uint64_t nb = f.neighbor_mask(x);
            while (nb) {
                int w = std::countr_zero(nb);
                nb &= nb - 1;
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        std::vector<int> newid(f.vertex_count(), -1);
        for (size_t i = 0; i < comp.size(); ++i) newid[comp[i]] = static_cast<int>(i);
        std::vector<Edge> edges;
        for (const Edge& e : f.edges())
            if (newid[e.u] >= 0 && newid[e.v] >= 0) edges.push_back({newid[e.u], newid[e.v]});
        parts.push_back(tree_canonical_code(Graph(static_cast<int>(comp.size()), std::move(edges))));
    }
    std::sort(parts.begin(), parts.end());
    std::string out;
    for (const auto& p : parts) out += p + "|";
    return out;
}

void compositions(int total, int parts, std::vector<int>& cur,
                  const std::function<void(const std::vector<int>&)>& fn) {
    if (parts == 1) {
        if (total >= 1) {
            cur.push_back(total);
            fn(cur);
            cur.pop_back();
        }
        return;
    }
    for (int first = 1; first + (parts - 1) <= total; ++first) {
        cur.push_back(first);
        compositions(total - first, parts - 1, cur, fn);
        cur.pop_back();
    }
}

}  // namespace

bool tree_expansion_check(const Graph& t, int r) {
    if (!t.is_tree()) throw MalformedInput("tree_expansion_check requires a tree");
    if (r < 1 || r > 4) throw MalformedInput("tree expansion is supported for r <= 4");
    require_rep_present(t);
    const int n = t.vertex_count();
    const int m = t.edge_count();

    // group embedded edge-subforests with <= r edges by isomorphism type
    std::map<std::string, long long> copies;
    std::map<std::string, Graph> representative;
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << m); ++mask) {
        int sz = std::popcount(mask);
        if (sz < 1 || sz > r) continue;
        Graph f = subforest(t, mask);
        std::string code = forest_code(f);
        ++copies[code];
        representative.emplace(code, std::move(f));
    }

    Int total = 0;
    for (const auto& [code, count] : copies) {
        const Graph& f = representative.at(code);
        Int per_copy = 0;
        std::vector<int> cur;
        compositions(r, f.edge_count(), cur, [&](const std::vector<int>& alpha) {
            ForestWithMultiplicity fm;
            fm.forest = f;
            for (int i = 0; i < f.edge_count(); ++i) fm.alpha[f.edges()[i]] = alpha[i];
            per_copy += universal_coefficient(fm, n);
        });
        total += count * per_copy;
    }
    return total == moment_exact(t, r);
}

}  // namespace edgespec
