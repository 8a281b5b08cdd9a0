#pragma once

#include <map>
#include <string>
#include <vector>

#include "edgespec/graph.hpp"
#include "edgespec/int_linalg.hpp"

namespace edgespec {

// M_r = trace of the r-th power of X_G restricted to the zero-degree edge
// space. Four independent routes are provided; they must agree wherever
// more than one applies.

struct MomentReport {
    int r = 0;
    Int value;
    std::string method;  // "oracle" | "trace_difference" | "newton" | "closed_form"
};

// Character sum over all m^r edge words. Refuses when m^r exceeds the budget.
Int moment_oracle(const Graph& g, int r, long long budget = 100'000'000);

// tr((X on pair space)^r) - tr((mI - L)^r), all-integer. The production path.
Int moment_exact(const Graph& g, int r);

// All of M_1..M_r_max in one pass of incremental matrix powers.
std::vector<Int> moment_table(const Graph& g, int r_max);

Int closed_m1(const Graph& g);  // m (n-3)(n-4)/2
Int closed_m2(const Graph& g);  // md + 2p*alpha_n + (m(m-1)-2p)*beta_n
// Cubic formula from the three-edge counts; evaluates both arrangements of
// the formula and checks they agree.
Int closed_m3(const Graph& g);

// Power sums of the roots of a monic integer polynomial (Newton's identities).
std::vector<Int> moments_from_charpoly(const IntPolynomial& p, int r_max);

// A forest with a positive multiplicity per edge; |alpha| = word length.
struct ForestWithMultiplicity {
    Graph forest;                // acyclic, no isolated vertices
    std::map<Edge, int> alpha;   // one entry per forest edge, all >= 1
};

// Universal coefficient C_{F,alpha}(n): the character sum over all words
// using each forest edge exactly alpha_e times, inside an ambient n-set.
// Computed under two different labelings and checked for agreement.
Int universal_coefficient(const ForestWithMultiplicity& f, int n, long long budget = 10'000'000);

// Verifies the expansion M_r = sum over embedded subforests F of
// N_F(T) * C_{r,F}(n) against the trace-difference value. r <= 4.
bool tree_expansion_check(const Graph& t, int r);

}  // namespace edgespec
