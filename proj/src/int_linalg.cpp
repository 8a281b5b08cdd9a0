#include "edgespec/int_linalg.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <utility>

#include "edgespec/errors.hpp"

namespace edgespec {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::multiply(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw MalformedInput("matrix dimension mismatch");
    IntMatrix out(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Int& a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < rhs.cols_; ++j)
                mpz_addmul(out.at(i, j).get_mpz_t(), a.get_mpz_t(), rhs.at(k, j).get_mpz_t());
        }
    return out;
}

Int IntMatrix::trace() const {
    Int t = 0;
    for (int i = 0; i < std::min(rows_, cols_); ++i) t += at(i, i);
    return t;
}

bool IntMatrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

IntPolynomial IntPolynomial::from_coefficients(std::vector<Int> ascending) {
    if (ascending.empty() || ascending.back() != 1)
        throw MalformedInput("polynomial must be monic");
    IntPolynomial p;
    p.coeffs_ = std::move(ascending);
    return p;
}

IntPolynomial IntPolynomial::multiply(const IntPolynomial& rhs) const {
    std::vector<Int> out(coeffs_.size() + rhs.coeffs_.size() - 1);
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < rhs.coeffs_.size(); ++j)
            mpz_addmul(out[i + j].get_mpz_t(), coeffs_[i].get_mpz_t(), rhs.coeffs_[j].get_mpz_t());
    return from_coefficients(std::move(out));
}

IntPolynomial IntPolynomial::divide_exact(const IntPolynomial& divisor) const {
    int dq = degree() - divisor.degree();
    if (dq < 0) throw InternalConsistencyError("quotient degree negative");
    std::vector<Int> rem = coeffs_;
    std::vector<Int> quot(dq + 1);
    for (int k = dq; k >= 0; --k) {
        quot[k] = rem[k + divisor.degree()];
        if (quot[k] == 0) continue;
        for (int j = 0; j <= divisor.degree(); ++j)
            mpz_submul(rem[k + j].get_mpz_t(), quot[k].get_mpz_t(),
                       divisor.coeffs_[j].get_mpz_t());
    }
    for (const Int& c : rem)
        if (c != 0) throw InternalConsistencyError("exact polynomial division left a remainder");
    return from_coefficients(std::move(quot));
}

Int IntPolynomial::evaluate(const Int& x) const {
    Int acc = 0;
    for (int k = degree(); k >= 0; --k) {
        acc *= x;
        acc += coeffs_[k];
    }
    return acc;
}

IntPolynomial IntPolynomial::reflect_about(const Int& a) const {
    int d = degree();
    // expand sum_k c_k (a-t)^k, then flip the sign when d is odd
    std::vector<Int> out(d + 1);
    std::vector<Int> pow{1};  // (a-t)^k, ascending in t
    for (int k = 0; k <= d; ++k) {
        for (int j = 0; j <= k; ++j)
            mpz_addmul(out[j].get_mpz_t(), coeffs_[k].get_mpz_t(), pow[j].get_mpz_t());
        // pow *= (a - t)
        std::vector<Int> nxt(k + 2);
        for (int j = 0; j <= k; ++j) {
            mpz_addmul(nxt[j].get_mpz_t(), a.get_mpz_t(), pow[j].get_mpz_t());
            nxt[j + 1] -= pow[j];
        }
        pow = std::move(nxt);
    }
    if (d % 2 == 1)
        for (Int& c : out) c = -c;
    return from_coefficients(std::move(out));
}

std::string IntPolynomial::to_string() const {
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        const Int& c = coeffs_[k];
        if (c == 0 && degree() > 0) continue;
        Int mag = abs(c);
        if (out.empty())
            out += (c < 0) ? "-" : "";
        else
            out += (c < 0) ? " - " : " + ";
        bool need_coeff = (mag != 1) || k == 0;
        if (need_coeff) out += mag.get_str();
        if (k > 0) {
            if (need_coeff) out += "*";
            out += "t";
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

std::vector<std::string> IntPolynomial::decimal_coefficients() const {
    std::vector<std::string> out;
    out.reserve(coeffs_.size());
    for (const Int& c : coeffs_) out.push_back(c.get_str());
    return out;
}

IntPolynomial charpoly_exact(const IntMatrix& a) {
    if (a.rows() != a.cols()) throw MalformedInput("characteristic polynomial of a non-square matrix");
    const int n = a.rows();
    std::vector<Int> c(n + 1);
    c[n] = 1;
    if (n == 0) return IntPolynomial::from_coefficients(std::move(c));

    // row-sparse view of a; operator matrices are sparse with tiny entries,
    // so the Faddeev-LeVerrier products reduce to addmul sweeps
    std::vector<std::vector<std::pair<int, const Int*>>> rows(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (a.at(i, j) != 0) rows[i].emplace_back(j, &a.at(i, j));

    IntMatrix m = a;
    c[n - 1] = -m.trace();
    IntMatrix next(n, n);
    for (int k = 2; k <= n; ++k) {
        for (int i = 0; i < n; ++i) m.at(i, i) += c[n - k + 1];
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) next.at(i, j) = 0;
            for (auto [kk, coef] : rows[i])
                for (int j = 0; j < n; ++j)
                    mpz_addmul(next.at(i, j).get_mpz_t(), coef->get_mpz_t(),
                               m.at(kk, j).get_mpz_t());
        }
        std::swap(m, next);
        Int tr = m.trace(), q, r;
        mpz_tdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), tr.get_mpz_t(), k);
        if (r != 0) throw InternalConsistencyError("Faddeev-LeVerrier trace not divisible");
        c[n - k] = -q;
    }
    return IntPolynomial::from_coefficients(std::move(c));
}

std::vector<Int> power_sums(const IntPolynomial& p, int r_max) {
    const int d = p.degree();
    // e_k = (-1)^k c_{d-k}
    std::vector<Int> e(d + 1);
    e[0] = 1;
    for (int k = 1; k <= d; ++k) {
        e[k] = p.coefficient(d - k);
        if (k % 2 == 1) e[k] = -e[k];
    }
    std::vector<Int> ps(r_max + 1);
    for (int k = 1; k <= r_max; ++k) {
        Int acc = 0;
        for (int i = 1; i < k && i <= d; ++i) {
            if (i % 2 == 1)
                mpz_addmul(acc.get_mpz_t(), e[i].get_mpz_t(), ps[k - i].get_mpz_t());
            else
                mpz_submul(acc.get_mpz_t(), e[i].get_mpz_t(), ps[k - i].get_mpz_t());
        }
        if (k <= d) acc += ((k % 2 == 1) ? k : -k) * e[k];
        ps[k] = acc;
    }
    return {ps.begin() + 1, ps.end()};
}

namespace {

// Rational polynomial helpers for the square-free factorization. Coefficients
// ascending; always normalized so that trailing zero coefficients are trimmed.
using QPoly = std::vector<mpq_class>;

void trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly derivative(const QPoly& p) {
    QPoly d;
    for (size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * static_cast<long>(k));
    trim(d);
    return d;
}

QPoly make_monic(QPoly p) {
    trim(p);
    if (p.empty()) return p;
    mpq_class lead = p.back();
    for (auto& c : p) c /= lead;
    return p;
}

// division with remainder over Q; returns quotient, leaves remainder in a
QPoly divmod(QPoly& a, const QPoly& b) {
    QPoly q(a.size() > b.size() - 1 ? a.size() - b.size() + 1 : 0, mpq_class(0));
    while (a.size() >= b.size() && !a.empty()) {
        mpq_class f = a.back() / b.back();
        size_t shift = a.size() - b.size();
        q[shift] = f;
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        trim(a);
    }
    trim(q);
    return q;
}

QPoly poly_gcd(QPoly a, QPoly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        divmod(a, b);
        std::swap(a, b);
    }
    return make_monic(a);
}

QPoly divide_exact_q(QPoly a, const QPoly& b) {
    QPoly q = divmod(a, b);
    if (!a.empty()) throw InternalConsistencyError("inexact division in square-free factorization");
    return q;
}

QPoly subtract(QPoly a, const QPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), mpq_class(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

// Yun's algorithm: p = prod factors[i]^(i+1), factors square-free and coprime.
std::vector<QPoly> square_free_factors(const QPoly& p) {
    std::vector<QPoly> factors;
    QPoly dp = derivative(p);
    QPoly g = poly_gcd(p, dp);
    if (g.size() <= 1) {
        factors.push_back(make_monic(p));
        return factors;
    }
    QPoly b = divide_exact_q(p, g);
    QPoly c = divide_exact_q(dp, g);
    QPoly d = subtract(c, derivative(b));
    while (b.size() > 1) {
        QPoly a = poly_gcd(b, d);
        factors.push_back(a);
        b = divide_exact_q(b, a);
        c = divide_exact_q(d, a);
        d = subtract(c, derivative(b));
    }
    return factors;
}

// Roots of a square-free factor: companion eigenvalues polished by Newton
// against the exact coefficients.
std::vector<double> simple_roots(const QPoly& q) {
    int d = static_cast<int>(q.size()) - 1;
    if (d <= 0) return {};
    std::vector<long double> c(d + 1);
    for (int i = 0; i <= d; ++i) c[i] = static_cast<long double>(q[i].get_d());
    if (d == 1) return {static_cast<double>(-c[0] / c[1])};

    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(d, d);
    for (int i = 0; i + 1 < d; ++i) companion(i + 1, i) = 1.0;
    for (int i = 0; i < d; ++i) companion(i, d - 1) = -q[i].get_d() / q[d].get_d();
    Eigen::EigenSolver<Eigen::MatrixXd> es(companion);

    std::vector<double> roots;
    for (int i = 0; i < d; ++i) {
        long double x = es.eigenvalues()[i].real();
        for (int it = 0; it < 50; ++it) {
            long double val = 0, der = 0;
            for (int k = d; k >= 0; --k) {
                der = der * x + val;
                val = val * x + c[k];
            }
            if (der == 0) break;
            long double step = val / der;
            x -= step;
            if (std::abs(step) < 1e-15L * std::max<long double>(1.0L, std::abs(x))) break;
        }
        roots.push_back(static_cast<double>(x));
    }
    return roots;
}

}  // namespace

std::vector<double> real_roots(const IntPolynomial& p) {
    QPoly q;
    for (const Int& c : p.coefficients()) q.emplace_back(c);
    trim(q);
    std::vector<double> out;
    auto factors = square_free_factors(q);
    for (size_t i = 0; i < factors.size(); ++i)
        for (double r : simple_roots(factors[i]))
            out.insert(out.end(), i + 1, r);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace edgespec
