#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "edgespec/int_linalg.hpp"

namespace edgespec {

struct Edge {
    int u = 0, v = 0;  // u < v
    auto operator<=>(const Edge&) const = default;
};

// Undirected simple graph on {0..n-1}. Adjacency is one 64-bit mask per
// vertex, which caps n at 62 to match single-byte graph6. Immutable after
// construction; safe to share between threads.
class Graph {
public:
    Graph() = default;
    Graph(int n, std::vector<Edge> edges);  // validates, dedups nothing: repeats rejected

    static Graph empty(int n) { return Graph(n, {}); }
    static Graph path(int n);
    static Graph star(int n);  // K_{1,n-1}, center 0
    static Graph complete(int n);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1; }
    int degree(int v) const;
    std::uint64_t neighbor_mask(int v) const { return adj_[v]; }
    const std::vector<Edge>& edges() const { return edges_; }

    std::vector<int> degrees() const;
    bool is_connected() const;
    bool is_tree() const;
    Graph relabeled(const std::vector<int>& perm) const;  // vertex i -> perm[i]

    bool operator==(const Graph&) const = default;

private:
    int n_ = 0;
    std::vector<std::uint64_t> adj_;
    std::vector<Edge> edges_;  // sorted (u,v) with u < v
};

// graph6 codec, single-byte size prefix only (n <= 62).
Graph graph6_decode(const std::string& text);
std::string graph6_encode(const Graph& g);

IntMatrix adjacency_matrix(const Graph& g);
IntMatrix laplacian(const Graph& g);  // D - A

// Classification of the C(m,3) unordered edge triples by the isomorphism
// type of their union, plus the two-edge path count p = sum_v C(d_v,2).
struct ThreeEdgeCounts {
    long long t = 0;   // triangles
    long long s = 0;   // claws K_{1,3}
    long long r = 0;   // three-edge paths P4
    long long q = 0;   // two-edge path plus a disjoint edge
    long long d3 = 0;  // three pairwise disjoint edges
    long long p = 0;   // two-edge paths

    bool operator==(const ThreeEdgeCounts&) const = default;
};

ThreeEdgeCounts three_edge_counts(const Graph& g);

// Same counts from degree data alone; valid for trees only. t is always 0.
ThreeEdgeCounts tree_closed_counts(const Graph& t);

// Vertices are the edges of g in edge_list order; adjacent iff they share an endpoint.
Graph line_graph(const Graph& g);

}  // namespace edgespec
