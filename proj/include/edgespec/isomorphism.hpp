#pragma once

#include <string>

#include "edgespec/graph.hpp"

namespace edgespec {

// AHU parenthesis code rooted at the centroid (minimum over both roots for
// bicentroidal trees). Equal codes iff isomorphic trees.
std::string tree_canonical_code(const Graph& t);

// Canonical string for small graphs (intended n <= 16): trees get the AHU
// code; everything else is the lexicographically minimal upper-triangle
// adjacency encoding found by equitable refinement plus backtracking.
std::string canonical_code(const Graph& g);

bool is_isomorphic(const Graph& a, const Graph& b);

}  // namespace edgespec
