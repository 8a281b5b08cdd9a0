#pragma once

#include <map>
#include <vector>

#include "edgespec/graph.hpp"
#include "edgespec/int_linalg.hpp"

namespace edgespec {

// Exponent vector of a monomial in the edge variables of a tree.
struct MonomialSpec {
    std::map<Edge, int> exponents;  // edge of the tree -> exponent >= 0
    int degree() const;
};

// Coefficient of the monomial in tr((sum_e y_e tau_e)^r): the character sum
// over all orderings of the corresponding edge multiset.
Int monomial_coefficient(const Graph& t, const MonomialSpec& spec, long long budget = 10'000'000);

// The line graph of a tree with its vertices labeled by the tree's edges.
struct LabeledLineGraph {
    std::vector<Edge> labels;                 // tree edges, edge_list order
    std::vector<std::vector<bool>> adjacent;  // symmetric, irreflexive
};

// Classifies every pair of distinct tree edges as adjacent or disjoint from
// weighted trace coefficients alone: the quadratic y_e y_f coefficient
// (2*alpha_n vs 2*beta_n) for n != 7, the quartic y_e^2 y_f^2 coefficient
// (4d+2*alpha_n vs 6d) for n = 7 where alpha_7 = beta_7.
LabeledLineGraph pair_adjacency_from_coefficients(const Graph& t);

struct ReconstructedTree {
    Graph tree;
    std::vector<Edge> label_edges;  // label_edges[i] = edge of tree carrying label i
};

// Inverts the line-graph map for trees: maximal cliques become internal
// vertices, labels in a single clique get a fresh leaf endpoint. The K3
// ambiguity resolves to K_{1,3}, the unique tree with line graph K3.
ReconstructedTree tree_from_labeled_line_graph(const LabeledLineGraph& lg, int n);

// Full pipeline: weighted pair coefficients -> labeled line graph -> tree.
// The result is isomorphic to the input.
Graph weighted_reconstruction(const Graph& t);

}  // namespace edgespec
