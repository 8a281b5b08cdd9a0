#include "edgespec/edge_operator.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <bit>
#include <cmath>

#include "edgespec/errors.hpp"

namespace edgespec {

PairIndex::PairIndex(int n) : n_(n) {
    pairs_.reserve(static_cast<size_t>(n) * (n - 1) / 2);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) pairs_.push_back({i, j});
}

int PairIndex::index(int i, int j) const {
    if (i > j) std::swap(i, j);
    if (i < 0 || i == j || j >= n_) throw MalformedInput("pair index out of range");
    return j * (j - 1) / 2 + i;
}

IntMatrix build_full_operator(const Graph& g) {
    const int n = g.vertex_count();
    const int m = g.edge_count();
    PairIndex px(n);
    IntMatrix x(px.size(), px.size());
    for (int col = 0; col < px.size(); ++col) {
        auto [a, b] = px.pair(col);
        x.at(col, col) = m - g.degree(a) - g.degree(b) + (g.has_edge(a, b) ? 2 : 0);
        std::uint64_t nb = g.neighbor_mask(a);
        while (nb) {
            int c = std::countr_zero(nb);
            nb &= nb - 1;
            if (c != b) x.at(px.index(b, c), col) += 1;
        }
        nb = g.neighbor_mask(b);
        while (nb) {
            int c = std::countr_zero(nb);
            nb &= nb - 1;
            if (c != a) x.at(px.index(a, c), col) += 1;
        }
    }
    return x;
}

IntMatrix build_vertex_operator(const Graph& g) {
    const int n = g.vertex_count();
    IntMatrix x(n, n);
    for (int v = 0; v < n; ++v) x.at(v, v) = g.edge_count() - g.degree(v);
    for (const Edge& e : g.edges()) {
        x.at(e.u, e.v) = 1;
        x.at(e.v, e.u) = 1;
    }
    return x;
}

Eigen::MatrixXd w_projector(int n) {
    if (n <= 3) throw RepresentationAbsent("W_n is zero for n = " + std::to_string(n));
    PairIndex px(n);
    const int N = px.size();
    Eigen::MatrixXd s = Eigen::MatrixXd::Zero(N, n);  // star vectors as columns
    for (int k = 0; k < N; ++k) {
        s(k, px.pair(k).u) = 1.0;
        s(k, px.pair(k).v) = 1.0;
    }
    Eigen::MatrixXd gram = s.transpose() * s;  // (n-2)I + J
    Eigen::MatrixXd p = Eigen::MatrixXd::Identity(N, N) - s * gram.ldlt().solve(s.transpose());
    return p;
}

Eigen::MatrixXd w_orthonormal_basis(int n) {
    Eigen::MatrixXd p = w_projector(n);
    const int N = static_cast<int>(p.rows());
    const int dim = n * (n - 3) / 2;
    Eigen::MatrixXd q(N, dim);
    int kept = 0;
    for (int c = 0; c < N; ++c) {
        Eigen::VectorXd v = p.col(c);
        for (int k = 0; k < kept; ++k) v -= q.col(k).dot(v) * q.col(k);
        double norm = v.norm();
        if (norm < 1e-9) continue;
        if (kept == dim)
            throw InternalConsistencyError("W_n basis has more vectors than its dimension");
        q.col(kept++) = v / norm;
    }
    if (kept != dim)
        throw InternalConsistencyError("W_n basis rank deficiency: got " + std::to_string(kept) +
                                       ", expected " + std::to_string(dim));
    return q;
}

namespace {

Eigen::MatrixXd to_double(const IntMatrix& m) {
    Eigen::MatrixXd out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out(i, j) = m.at(i, j).get_d();
    return out;
}

}  // namespace

Eigen::MatrixXd restricted_operator(const Graph& g) {
    if (g.vertex_count() <= 3)
        throw RepresentationAbsent("W_n is zero for n = " + std::to_string(g.vertex_count()));
    Eigen::MatrixXd q = w_orthonormal_basis(g.vertex_count());
    Eigen::MatrixXd x = to_double(build_full_operator(g));
    return q.transpose() * (x * q);
}

Spectrum22 spectrum_22(const Graph& g, double tol) {
    Eigen::MatrixXd b = restricted_operator(g);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(b);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("symmetric eigensolver failed to converge at dimension " +
                                 std::to_string(b.rows()));
    double scale = b.norm();
    for (int i = 0; i < b.rows(); ++i) {
        double resid =
            (b * solver.eigenvectors().col(i) - solver.eigenvalues()[i] * solver.eigenvectors().col(i))
                .norm();
        if (resid > tol * scale)
            throw std::runtime_error("eigenpair residual " + std::to_string(resid) +
                                     " exceeds tolerance");
    }
    Spectrum22 out;
    out.tolerance = tol;
    out.eigenvalues.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + b.rows());
    std::sort(out.eigenvalues.begin(), out.eigenvalues.end());
    return out;
}

IntPolynomial charpoly_22(const Graph& g) {
    if (g.vertex_count() <= 3)
        throw RepresentationAbsent("W_n is zero for n = " + std::to_string(g.vertex_count()));
    IntPolynomial full = charpoly_exact(build_full_operator(g));
    IntPolynomial vertex = charpoly_exact(build_vertex_operator(g));
    return full.divide_exact(vertex);
}

}  // namespace edgespec
