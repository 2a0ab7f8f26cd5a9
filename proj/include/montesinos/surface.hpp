#pragma once

// Invariants of the candidate surface behind an edgepath system.

#include "montesinos/system.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace montesinos {

class IntegrityError : public std::logic_error {
    using std::logic_error::logic_error;
};

enum class Essentiality { proven, undetermined };

inline std::string to_string(Essentiality e) { return e == Essentiality::proven ? "proven" : "undetermined"; }

struct SurfaceReport {
    EdgepathSystem system;
    Fraction twist;
    Fraction reference_twist;
    Fraction slope;
    Integer sheets = 1;
    std::optional<Integer> euler;
    Integer boundary_components = 1;
    Essentiality essential = Essentiality::undetermined;
    bool seifert = false;

    /// The slope before reduction, as a difference of twists.
    std::string slope_raw() const { return twist.str() + " - (" + reference_twist.str() + ")"; }
};

inline Fraction boundary_slope(const EdgepathSystem& sys, const EdgepathSystem& reference) {
    return system_twist(sys) - system_twist(reference);
}

/// lcm of k+l over final partial edges with irreducible weight k/(k+l), and
/// of k over constant paths (k/(k+l))⟨p/q⟩ + (l/(k+l))⟨p/q⟩°.
inline Integer number_of_sheets(const EdgepathSystem& sys) {
    Integer sheets = 1;
    for (const auto& path : sys.paths) {
        if (path.is_constant())
            sheets = lcm(sheets, path.constant_weight->num());
        else if (path.edge_count() > 0)
            sheets = lcm(sheets, path.final_weight.den());
    }
    return sheets;
}

/// sheets = boundary components * denominator of the reduced slope.
inline Integer boundary_components(const Integer& sheets, const Fraction& slope) {
    if (sheets % slope.den() != 0)
        throw IntegrityError("sheets " + sheets.str() + " not divisible by slope denominator " + slope.den().str());
    return sheets / slope.den();
}

/// -χ/#s = Σ_{non-constant} |γ_i| + N_const - N + (N - 2 - Σ_{const} 1/q_i) / (1 - u).
inline Fraction euler_per_sheet_type_one(const EdgepathSystem& sys) {
    if (sys.system_type != PathType::I) throw std::invalid_argument("Euler formula applies to type I systems only");
    const auto n = static_cast<long long>(sys.paths.size());
    long long n_const = 0;
    Fraction lengths, inv_q;
    for (const auto& path : sys.paths) {
        if (path.is_constant()) {
            ++n_const;
            inv_q += Fraction(Integer(1), path.tangle.den());
        } else {
            lengths += path.length();
        }
    }
    return lengths + Fraction(n_const - n) + (Fraction(n - 2) - inv_q) / (Fraction(1) - sys.common_u);
}

inline Integer euler_characteristic_type_one(const EdgepathSystem& sys, const Integer& sheets) {
    Fraction chi = -euler_per_sheet_type_one(sys) * Fraction(sheets);
    if (!chi.is_integer()) throw IntegrityError("Euler characteristic " + chi.str() + " is not an integer");
    return chi.num();
}

/// Proven for type I systems whose last edges share a sign or which contain
/// a constant path; otherwise undetermined. Never a claim of inessentiality.
inline Essentiality essentiality(const EdgepathSystem& sys) {
    if (sys.system_type != PathType::I) return Essentiality::undetermined;
    std::optional<Sign> common;
    bool mixed = false;
    for (const auto& path : sys.paths) {
        if (path.is_constant()) return Essentiality::proven;
        Sign s = last_edge_sign(path);
        if (!common)
            common = s;
        else if (*common != s)
            mixed = true;
    }
    return mixed || !common || *common == Sign::none ? Essentiality::undetermined : Essentiality::proven;
}

inline SurfaceReport analyze_surface(const EdgepathSystem& sys, const EdgepathSystem& reference) {
    SurfaceReport r;
    r.system = sys;
    r.twist = system_twist(sys);
    r.reference_twist = system_twist(reference);
    r.slope = r.twist - r.reference_twist;
    r.sheets = number_of_sheets(sys);
    r.boundary_components = boundary_components(r.sheets, r.slope);
    if (sys.system_type == PathType::I) r.euler = euler_characteristic_type_one(sys, r.sheets);
    r.essential = essentiality(sys);
    r.seifert = satisfies_seifert_parity(sys);
    if (r.seifert && !r.slope.is_zero())
        throw IntegrityError("Seifert system with non-zero slope " + r.slope.str());
    return r;
}

}  // namespace montesinos
