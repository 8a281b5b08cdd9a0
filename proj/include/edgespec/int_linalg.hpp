#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace edgespec {

using Int = mpz_class;

// Dense matrix with arbitrary-precision integer entries.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

    static IntMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Int& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    IntMatrix multiply(const IntMatrix& rhs) const;
    Int trace() const;
    bool is_symmetric() const;

    bool operator==(const IntMatrix&) const = default;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Int> a_;
};

// Monic polynomial with integer coefficients, stored constant term first.
class IntPolynomial {
public:
    IntPolynomial() : coeffs_{1} {}  // the unit polynomial

    // Ascending coefficient order; leading coefficient must be 1.
    static IntPolynomial from_coefficients(std::vector<Int> ascending);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Int& coefficient(int k) const { return coeffs_[k]; }
    const std::vector<Int>& coefficients() const { return coeffs_; }

    IntPolynomial multiply(const IntPolynomial& rhs) const;
    // Exact quotient; throws InternalConsistencyError on a nonzero remainder.
    IntPolynomial divide_exact(const IntPolynomial& divisor) const;
    Int evaluate(const Int& x) const;

    // q(t) = (-1)^deg p(a - t), i.e. the monic polynomial whose roots are a - (roots of p).
    IntPolynomial reflect_about(const Int& a) const;

    std::string to_string() const;  // e.g. "t^3 - 4*t^2 + 3*t"
    // decimal coefficient strings, constant term first; the wire format for
    // polynomials (big integers never pass through floating point)
    std::vector<std::string> decimal_coefficients() const;

    bool operator==(const IntPolynomial&) const = default;
    bool operator<(const IntPolynomial& rhs) const { return coeffs_ < rhs.coeffs_; }

private:
    std::vector<Int> coeffs_;
};

// Exact characteristic polynomial via the Faddeev-LeVerrier recursion.
// Every division in the recursion is exact over the integers.
IntPolynomial charpoly_exact(const IntMatrix& m);

// Power sums of the roots for r = 1..r_max (Newton's identities).
std::vector<Int> power_sums(const IntPolynomial& p, int r_max);

// Real roots with multiplicity, ascending. Multiplicities come from an exact
// square-free factorization (Yun); each square-free factor is solved by a
// companion eigensolve followed by Newton polishing against exact coefficients.
// Intended for polynomials that split over the reals (e.g. symmetric charpolys).
std::vector<double> real_roots(const IntPolynomial& p);

}  // namespace edgespec
