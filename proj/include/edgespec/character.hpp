#pragma once

#include "edgespec/permutation.hpp"

namespace edgespec {

// Character of the (n-2,2) irreducible: C(c1,2) + c2 - c1, where c1 counts
// fixed points and c2 counts 2-cycles. Throws RepresentationAbsent for n <= 3.
long long character_22(const CycleType& ct);

// Closed forms of the character on the cycle types that appear in the first
// three trace moments. Values whose cycle type needs more vertices than n
// carry an applicability flag but are still evaluated as polynomials in n.
struct ClosedCharacterValues {
    int n = 0;
    long long dim = 0;    // identity: n(n-3)/2
    long long c2 = 0;     // (2,1^{n-2}): (n-3)(n-4)/2
    long long alpha = 0;  // (3,1^{n-3}): (n^2-9n+18)/2
    long long beta = 0;   // (2,2,1^{n-4}): (n^2-11n+32)/2
    long long c4 = 0;     // (4,1^{n-4}): (n^2-11n+28)/2
    long long c32 = 0;    // (3,2,1^{n-5}): (n^2-13n+42)/2
    long long c222 = 0;   // (2,2,2,1^{n-6}): (n^2-15n+60)/2
    bool c32_applicable = false;   // needs n >= 5
    bool c222_applicable = false;  // needs n >= 6
};

ClosedCharacterValues closed_character_values(int n);

}  // namespace edgespec
