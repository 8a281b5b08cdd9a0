#include "edgespec/isomorphism.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include "edgespec/errors.hpp"

namespace edgespec {

namespace {

// Centroid(s): the one or two vertices minimizing the largest component of
// T - v. Computed from subtree sizes below an arbitrary root.
std::vector<int> centroids(const Graph& t) {
    int n = t.vertex_count();
    if (n == 1) return {0};
    std::vector<int> size(n, 1), parent(n, -1), order;
    order.reserve(n);
    std::vector<int> stack{0};
    std::vector<bool> seen(n, false);
    seen[0] = true;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        order.push_back(v);
        std::uint64_t nb = t.neighbor_mask(v);
        while (nb) {
            int w = std::countr_zero(nb);
            nb &= nb - 1;
            if (!seen[w]) {
                seen[w] = true;
                parent[w] = v;
                stack.push_back(w);
            }
        }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it)
        if (parent[*it] >= 0) size[parent[*it]] += size[*it];

    std::vector<int> best;
    int best_weight = n + 1;
    for (int v = 0; v < n; ++v) {
        int weight = n - size[v];
        std::uint64_t nb = t.neighbor_mask(v);
        while (nb) {
            int w = std::countr_zero(nb);
            nb &= nb - 1;
            if (parent[w] == v) weight = std::max(weight, size[w]);
        }
        if (weight < best_weight) {
            best_weight = weight;
            best = {v};
        } else if (weight == best_weight) {
            best.push_back(v);
        }
    }
    return best;
}

std::string ahu(const Graph& t, int v, int from) {
    std::vector<std::string> child;
    std::uint64_t nb = t.neighbor_mask(v);
    while (nb) {
        int w = std::countr_zero(nb);
        nb &= nb - 1;
        if (w != from) child.push_back(ahu(t, w, v));
    }
    std::sort(child.begin(), child.end());
    std::string out = "(";
    for (const auto& c : child) out += c;
    out += ")";
    return out;
}

// One round of equitable refinement to a fixed point. Color ids are assigned
// in sorted-signature order, so they are isomorphism-invariant.
std::vector<int> refine(const Graph& g, std::vector<int> color) {
    int n = g.vertex_count();
    for (;;) {
        std::vector<std::pair<std::vector<int>, int>> sig(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> s{color[v]};
            std::uint64_t nb = g.neighbor_mask(v);
            std::vector<int> ncol;
            while (nb) {
                int w = std::countr_zero(nb);
                nb &= nb - 1;
                ncol.push_back(color[w]);
            }
            std::sort(ncol.begin(), ncol.end());
            s.insert(s.end(), ncol.begin(), ncol.end());
            sig[v] = {std::move(s), v};
        }
        std::sort(sig.begin(), sig.end());
        std::vector<int> next(n);
        int id = -1;
        for (int k = 0; k < n; ++k) {
            if (k == 0 || sig[k].first != sig[k - 1].first) ++id;
            next[sig[k].second] = id;
        }
        if (next == color) return color;
        color = std::move(next);
    }
}

std::string encode_discrete(const Graph& g, const std::vector<int>& color) {
    int n = g.vertex_count();
    std::vector<int> vertex_of(n);
    for (int v = 0; v < n; ++v) vertex_of[color[v]] = v;
    std::string bits;
    bits.reserve(static_cast<size_t>(n) * (n - 1) / 2);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            bits.push_back(g.has_edge(vertex_of[i], vertex_of[j]) ? '1' : '0');
    return bits;
}

void canon_search(const Graph& g, std::vector<int> color, std::string& best) {
    color = refine(g, color);
    int n = g.vertex_count();
    int cell_color = -1;
    for (int c = 0; c < n && cell_color < 0; ++c) {
        int count = 0;
        for (int v = 0; v < n; ++v) count += color[v] == c;
        if (count > 1) cell_color = c;
    }
    if (cell_color < 0) {
        std::string code = encode_discrete(g, color);
        if (best.empty() || code < best) best = std::move(code);
        return;
    }
    for (int v = 0; v < n; ++v) {
        if (color[v] != cell_color) continue;
        std::vector<int> split(n);
        for (int u = 0; u < n; ++u) split[u] = 2 * color[u] + (u == v ? 0 : 1);
        canon_search(g, std::move(split), best);
    }
}

}  // namespace

std::string tree_canonical_code(const Graph& t) {
    if (!t.is_tree()) throw MalformedInput("tree_canonical_code requires a tree");
    std::string best;
    for (int c : centroids(t)) {
        std::string code = ahu(t, c, -1);
        if (best.empty() || code < best) best = std::move(code);
    }
    return best;
}

std::string canonical_code(const Graph& g) {
    if (g.is_tree()) return "T" + std::to_string(g.vertex_count()) + ":" + tree_canonical_code(g);
    std::string best;
    canon_search(g, std::vector<int>(g.vertex_count(), 0), best);
    return "G" + std::to_string(g.vertex_count()) + ":" + best;
}

bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    std::vector<int> da = a.degrees(), db = b.degrees();
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    return canonical_code(a) == canonical_code(b);
}

}  // namespace edgespec
