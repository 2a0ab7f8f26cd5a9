#pragma once

// Closed forms for the knots K_n = M(-1/2, 2/5, 1/n), n odd and >= 11, which
// carry two essential surfaces whose slopes approach each other as n grows.

#include "montesinos/system.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace montesinos::family {

inline void require_member(long long n) {
    if (n < 11 || n % 2 == 0) throw std::invalid_argument("n must be an odd integer >= 11, got " + std::to_string(n));
}

inline MontesinosKnot knot(long long n) {
    require_member(n);
    return MontesinosKnot::from_tangles({Fraction(Integer(-1), Integer(2)), Fraction(Integer(2), Integer(5)),
                                         Fraction(Integer(1), Integer(n))});
}

/// 2(n-1)^2 / n
inline Fraction slope(long long n) { return Fraction(Integer(2) * (n - 1) * (n - 1), Integer(n)); }

/// 2(n^2 - 9n + 15) / (n - 7)
inline Fraction slope_prime(long long n) { return Fraction(Integer(2) * (n * n - 9 * n + 15), Integer(n - 7)); }

/// 2(1/(n-7) - 1/n)
inline Fraction gap(long long n) {
    return Fraction(2) * (Fraction(Integer(1), Integer(n - 7)) - Fraction(Integer(1), Integer(n)));
}

inline Fraction seifert_twist(long long n) { return Fraction(4 - 2 * n); }

/// n when `k` is K_n for an odd n >= 11.
inline std::optional<long long> member_index(const MontesinosKnot& k) {
    if (k.tangles.size() != 3) return std::nullopt;
    if (!(k.tangles[0] == Fraction(Integer(-1), Integer(2))) || !(k.tangles[1] == Fraction(Integer(2), Integer(5))))
        return std::nullopt;
    const Fraction& last = k.tangles[2];
    if (last.num() != 1 || last.den() < 11 || last.den() % 2 == 0 || last.den() > 1'000'000'000) return std::nullopt;
    return static_cast<long long>(last.den());
}

/// Reduced-denominator product rule versus the published single boundary
/// component for the second surface of the family.
inline std::string boundary_discrepancy_note(long long n) {
    return "boundary components = sheets / reduced slope denominator = " + std::to_string(n - 7) + " / " +
           std::to_string((n - 7) / 2) + " = 2; the published count for this surface is 1 (it matches the "
           "unreduced denominator " + std::to_string(n - 7) + ")";
}

}  // namespace montesinos::family
