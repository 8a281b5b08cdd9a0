#include "edgespec/character.hpp"

#include "edgespec/errors.hpp"

namespace edgespec {

long long character_22(const CycleType& ct) {
    if (ct.n <= 3)
        throw RepresentationAbsent("the (n-2,2) representation is absent for n = " +
                                   std::to_string(ct.n));
    long long c1 = ct.fixed_points();
    long long c2 = ct.two_cycles();
    return c1 * (c1 - 1) / 2 + c2 - c1;
}

ClosedCharacterValues closed_character_values(int n) {
    if (n <= 3)
        throw RepresentationAbsent("the (n-2,2) representation is absent for n = " +
                                   std::to_string(n));
    long long nn = n;
    ClosedCharacterValues v;
    v.n = n;
    v.dim = nn * (nn - 3) / 2;
    v.c2 = (nn - 3) * (nn - 4) / 2;
    v.alpha = (nn * nn - 9 * nn + 18) / 2;
    v.beta = (nn * nn - 11 * nn + 32) / 2;
    v.c4 = (nn * nn - 11 * nn + 28) / 2;
    v.c32 = (nn * nn - 13 * nn + 42) / 2;
    v.c222 = (nn * nn - 15 * nn + 60) / 2;
    v.c32_applicable = n >= 5;
    v.c222_applicable = n >= 6;
    return v;
}

}  // namespace edgespec
