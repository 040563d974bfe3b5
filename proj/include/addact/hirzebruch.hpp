#pragma once

#include <set>
#include <string>

#include "derivation.hpp"
#include "spair.hpp"

namespace addact {

/// Divisor class a E_inf + b F_0 on the surface with invariant n, written in
/// the basis of the section at infinity and a fiber.
struct HDivisor {
    int n = 0;
    long long a = 0, b = 0;
};

inline HDivisor e_infinity(int n) { return {n, 1, 0}; }
inline HDivisor fiber(int n) { return {n, 0, 1}; }
inline HDivisor e_zero(int n) { return {n, 1, n}; }

/// Intersection number from the relations F^2 = 0, F . E_inf = 1, E_inf^2 = -n.
inline long long intersection(const HDivisor& d1, const HDivisor& d2) {
    if (d1.n != d2.n)
        throw SurfaceMismatch("divisors live on different surfaces: n = " +
                              std::to_string(d1.n) + " vs " + std::to_string(d2.n));
    return -static_cast<long long>(d1.n) * d1.a * d2.a + d1.a * d2.b + d2.a * d1.b;
}

/// Ampleness criterion a > 0 and b > n a; on these surfaces ample and very
/// ample coincide.
inline bool is_ample(const HDivisor& d) { return d.a > 0 && d.b > d.n * d.a; }

/// Global sections as a monomial basis; empty for non-effective classes.
inline SectionBasis sections(const HDivisor& d) {
    return SectionBasis::create(d.n, static_cast<int>(d.a), static_cast<int>(d.b));
}

inline long long section_count_formula(int n, long long a, long long b) {
    return (a + 1) * (b + 1) - n * a * (a + 1) / 2;
}

/// The monomial S-pair of an ample divisor: the section monomials form a
/// staircase algebra and U is spanned by the two variables.
inline SPair normalized_spair(int n, int a, int b) {
    if (!is_ample({n, a, b}))
        throw NotAmple("divisor (a, b) = (" + std::to_string(a) + ", " + std::to_string(b) +
                       ") on surface " + std::to_string(n) + " is not ample");
    SectionBasis s = SectionBasis::create(n, a, b);
    std::set<Exponent> stairs;
    for (auto [k, m] : s.monomials) stairs.insert({k, m});
    return monomial_spair(quotient_from_staircase(2, stairs));
}

/// The S-pair generated by the twisted derivation pair delta1, delta2 acting
/// on the section space. Errors NZero for n = 0, where the twist degenerates
/// to the normalized action, and NotAmple for non-ample data.
inline SPair twisted_spair(int n, int a, int b) {
    if (n == 0)
        throw NZero("the twisted action is only defined for n >= 1");
    auto [d1, d2] = delta_matrices(n, a, b);
    return spair_from_operators({d1.matrix, d2.matrix});
}

}  // namespace addact
