#pragma once

#include <Eigen/Dense>

#include <vector>

#include "edgespec/graph.hpp"
#include "edgespec/int_linalg.hpp"

namespace edgespec {

// Unordered pairs {i,j} of {0..n-1} in colex order: (0,1),(0,2),(1,2),(0,3),...
// index(i,j) = j(j-1)/2 + i. Fixed globally so matrices are reproducible.
class PairIndex {
public:
    explicit PairIndex(int n);

    int n() const { return n_; }
    int size() const { return static_cast<int>(pairs_.size()); }
    int index(int i, int j) const;  // i != j, any order
    Edge pair(int k) const { return pairs_[k]; }

private:
    int n_ = 0;
    std::vector<Edge> pairs_;
};

// Matrix of X_G = sum of edge transpositions acting on the pair basis of the
// edge space: diagonal m - d_a - d_b + 2*[ab in E], unit hops e_ab -> e_bc
// for edges ac, and e_ab -> e_ac for edges bc.
IntMatrix build_full_operator(const Graph& g);

// X_G on the vertex permutation space: mI - L_G.
IntMatrix build_vertex_operator(const Graph& g);

// Orthogonal projector onto the zero-degree edge space W_n, the complement
// of the star-vector span. Rank n(n-3)/2; requires n >= 4.
Eigen::MatrixXd w_projector(int n);

// Orthonormal basis of W_n as columns (modified Gram-Schmidt on the
// projector columns); exactly n(n-3)/2 of them.
Eigen::MatrixXd w_orthonormal_basis(int n);

// X_G expressed in the orthonormal basis of W_n; symmetric up to roundoff.
Eigen::MatrixXd restricted_operator(const Graph& g);

struct Spectrum22 {
    std::vector<double> eigenvalues;  // ascending, length n(n-3)/2
    double tolerance = 0;
};

Spectrum22 spectrum_22(const Graph& g, double tol = 1e-10);

// Exact characteristic polynomial of X_G restricted to W_n, obtained as the
// exact quotient charpoly(full operator) / charpoly(vertex operator).
IntPolynomial charpoly_22(const Graph& g);

}  // namespace edgespec
