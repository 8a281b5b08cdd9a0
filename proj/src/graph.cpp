#include "edgespec/graph.hpp"

#include <algorithm>
#include <bit>

#include "edgespec/errors.hpp"

namespace edgespec {

namespace {
constexpr int kMaxVertices = 62;
}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
    if (n < 0 || n > kMaxVertices)
        throw MalformedInput("vertex count out of range [0,62]: " + std::to_string(n));
    adj_.assign(n, 0);
    std::sort(edges.begin(), edges.end());
    for (const Edge& e : edges) {
        if (e.u < 0 || e.v >= n || e.u >= e.v)
            throw MalformedInput("bad edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
        if (has_edge(e.u, e.v)) throw MalformedInput("repeated edge");
        adj_[e.u] |= std::uint64_t{1} << e.v;
        adj_[e.v] |= std::uint64_t{1} << e.u;
    }
    edges_ = std::move(edges);
}

Graph Graph::path(int n) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
    return Graph(n, std::move(e));
}

Graph Graph::star(int n) {
    std::vector<Edge> e;
    for (int i = 1; i < n; ++i) e.push_back({0, i});
    return Graph(n, std::move(e));
}

Graph Graph::complete(int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.push_back({i, j});
    return Graph(n, std::move(e));
}

int Graph::degree(int v) const { return std::popcount(adj_[v]); }

std::vector<int> Graph::degrees() const {
    std::vector<int> d(n_);
    for (int v = 0; v < n_; ++v) d[v] = degree(v);
    return d;
}

bool Graph::is_connected() const {
    if (n_ == 0) return true;
    std::uint64_t seen = 1;
    std::vector<int> stack{0};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        std::uint64_t fresh = adj_[v] & ~seen;
        seen |= fresh;
        while (fresh) {
            int w = std::countr_zero(fresh);
            fresh &= fresh - 1;
            stack.push_back(w);
        }
    }
    return std::popcount(seen) == n_;
}

bool Graph::is_tree() const {
    return n_ >= 1 && edge_count() == n_ - 1 && is_connected();
}

Graph Graph::relabeled(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != n_) throw MalformedInput("relabeling size mismatch");
    std::vector<Edge> e;
    e.reserve(edges_.size());
    for (const Edge& ed : edges_) {
        int a = perm[ed.u], b = perm[ed.v];
        e.push_back({std::min(a, b), std::max(a, b)});
    }
    return Graph(n_, std::move(e));
}

Graph graph6_decode(const std::string& text) {
    if (text.empty()) throw MalformedInput("empty graph6 string");
    for (char c : text) {
        unsigned char b = static_cast<unsigned char>(c);
        if (b < 63 || b > 126) throw MalformedInput("graph6 byte out of range [63,126]");
    }
    int n = static_cast<unsigned char>(text[0]) - 63;
    if (n == 63)
        throw MalformedInput("multi-byte graph6 size prefixes (n > 62) are not supported");
    size_t nbits = static_cast<size_t>(n) * (n - 1) / 2;
    size_t nbytes = (nbits + 5) / 6;
    if (text.size() != 1 + nbytes) throw MalformedInput("graph6 length inconsistent with size byte");

    std::vector<Edge> edges;
    size_t k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            int chunk = static_cast<unsigned char>(text[1 + k / 6]) - 63;
            if ((chunk >> (5 - k % 6)) & 1) edges.push_back({i, j});
        }
    }
    // padding bits must be zero
    for (; k < nbytes * 6; ++k) {
        int chunk = static_cast<unsigned char>(text[1 + k / 6]) - 63;
        if ((chunk >> (5 - k % 6)) & 1) throw MalformedInput("nonzero graph6 padding bit");
    }
    return Graph(n, std::move(edges));
}

std::string graph6_encode(const Graph& g) {
    int n = g.vertex_count();
    if (n > kMaxVertices) throw MalformedInput("graph6 supports n <= 62 only");
    std::string out;
    out.push_back(static_cast<char>(n + 63));
    size_t nbits = static_cast<size_t>(n) * (n - 1) / 2;
    size_t nbytes = (nbits + 5) / 6;
    std::vector<int> chunk(nbytes, 0);
    size_t k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k)
            if (g.has_edge(i, j)) chunk[k / 6] |= 1 << (5 - k % 6);
    for (int c : chunk) out.push_back(static_cast<char>(c + 63));
    return out;
}

IntMatrix adjacency_matrix(const Graph& g) {
    int n = g.vertex_count();
    IntMatrix a(n, n);
    for (const Edge& e : g.edges()) {
        a.at(e.u, e.v) = 1;
        a.at(e.v, e.u) = 1;
    }
    return a;
}

IntMatrix laplacian(const Graph& g) {
    int n = g.vertex_count();
    IntMatrix l(n, n);
    for (int v = 0; v < n; ++v) l.at(v, v) = g.degree(v);
    for (const Edge& e : g.edges()) {
        l.at(e.u, e.v) = -1;
        l.at(e.v, e.u) = -1;
    }
    return l;
}

ThreeEdgeCounts three_edge_counts(const Graph& g) {
    ThreeEdgeCounts c;
    const auto& es = g.edges();
    int m = static_cast<int>(es.size());
    for (int v = 0; v < g.vertex_count(); ++v) {
        long long d = g.degree(v);
        c.p += d * (d - 1) / 2;
    }
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            for (int k = j + 1; k < m; ++k) {
                std::uint64_t verts = 0;
                for (const Edge& e : {es[i], es[j], es[k]})
                    verts |= (std::uint64_t{1} << e.u) | (std::uint64_t{1} << e.v);
                switch (std::popcount(verts)) {
                    case 3:
                        ++c.t;
                        break;
                    case 4: {
                        // claw iff one vertex lies on all three edges
                        bool claw = false;
                        std::uint64_t common = verts;
                        for (const Edge& e : {es[i], es[j], es[k]})
                            common &= (std::uint64_t{1} << e.u) | (std::uint64_t{1} << e.v);
                        claw = common != 0;
                        (claw ? c.s : c.r)++;
                        break;
                    }
                    case 5:
                        ++c.q;
                        break;
                    default:
                        ++c.d3;
                }
            }
        }
    }
    return c;
}

ThreeEdgeCounts tree_closed_counts(const Graph& t) {
    if (!t.is_tree()) throw MalformedInput("tree_closed_counts requires a tree");
    int n = t.vertex_count();
    std::vector<int> deg = t.degrees();
    ThreeEdgeCounts c;
    for (int v = 0; v < n; ++v) {
        long long d = deg[v];
        c.p += d * (d - 1) / 2;
        c.s += d * (d - 1) * (d - 2) / 6;
    }
    for (const Edge& e : t.edges())
        c.r += static_cast<long long>(deg[e.u] - 1) * (deg[e.v] - 1);
    // q: per two-edge path u-v-w, the edges disjoint from all of u,v,w
    for (int v = 0; v < n; ++v) {
        std::uint64_t nb = t.neighbor_mask(v);
        for (std::uint64_t mu = nb; mu; mu &= mu - 1) {
            int u = std::countr_zero(mu);
            for (std::uint64_t mw = mu & (mu - 1); mw; mw &= mw - 1) {
                int w = std::countr_zero(mw);
                c.q += (n - 1) - deg[u] - deg[v] - deg[w] + 2;
            }
        }
    }
    long long m = n - 1;
    c.d3 = m * (m - 1) * (m - 2) / 6 - c.s - c.r - c.q;
    return c;
}

Graph line_graph(const Graph& g) {
    const auto& es = g.edges();
    int m = static_cast<int>(es.size());
    std::vector<Edge> le;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            bool share = es[i].u == es[j].u || es[i].u == es[j].v || es[i].v == es[j].u ||
                         es[i].v == es[j].v;
            if (share) le.push_back({i, j});
        }
    return Graph(m, std::move(le));
}

}  // namespace edgespec
