#pragma once

// Compares the exact endpoint solver with the brute-force weight search on
// every type I choice combination of a knot.

#include "montesinos/oracle.hpp"
#include "montesinos/system.hpp"

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace montesinos {

struct CrossCheckReport {
    std::size_t combinations = 0;
    std::size_t solved = 0;
    std::size_t degenerate = 0;
    std::vector<std::string> mismatches;
};

/// Normalized oracle hits, (t_1..t_M, c), restricted to the solver's
/// canonical range: every t_i > 0 and u > 0.
inline std::set<std::pair<std::vector<Fraction>, Fraction>> normalized_oracle_solutions(
    const std::vector<Skeleton>& choice, std::int64_t m_max) {
    std::set<std::pair<std::vector<Fraction>, Fraction>> out;
    for (const auto& w : oracle::brute_force_endpoints(choice, m_max)) {
        if (w.scaled_den <= w.m) continue;
        bool positive = true;
        std::vector<Fraction> t;
        for (auto k : w.k) {
            positive = positive && k > 0;
            t.push_back(Fraction(Integer(k), Integer(w.m)));
        }
        if (positive) out.insert({std::move(t), Fraction(Integer(w.scaled_den), Integer(w.m))});
    }
    return out;
}

/// Smallest m with every t_i * m and c * m integral.
inline Integer weight_scale(const EndpointSolution& sol) {
    Integer m = sol.c.den();
    for (const auto& t : sol.t) m = lcm(m, t.den());
    return m;
}

inline CrossCheckReport cross_check_type_one(const MontesinosKnot& knot, std::int64_t m_max) {
    CrossCheckReport report;
    const ChoiceLists lists = choice_lists(knot);
    detail::for_each_combination(lists.type_one, [&](const std::vector<Skeleton>& choice) {
        ++report.combinations;
        auto describe = [&] {
            std::string d;
            for (const auto& sk : choice) d += (d.empty() ? "" : " | ") + sk.str();
            return d;
        };
        bool any_moving = false;
        for (const auto& sk : choice) any_moving = any_moving || !sk.constant;
        if (!any_moving) return;
        const SolveResult r = solve_endpoints(choice);
        if (r.status == SolveStatus::degenerate) {
            ++report.degenerate;
            return;
        }
        const auto hits = normalized_oracle_solutions(choice, m_max);
        if (r.status == SolveStatus::infeasible) {
            if (!hits.empty()) report.mismatches.push_back("oracle finds a solution the solver rejects: " + describe());
            return;
        }
        ++report.solved;
        const bool reachable = weight_scale(r.solution) <= m_max;
        const std::pair<std::vector<Fraction>, Fraction> expected{r.solution.t, r.solution.c};
        if (reachable && (hits.size() != 1 || !(*hits.begin() == expected)))
            report.mismatches.push_back("oracle disagrees with solver: " + describe());
        if (!reachable && !hits.empty())
            report.mismatches.push_back("oracle finds an unexpected solution: " + describe());
    });
    return report;
}

}  // namespace montesinos
