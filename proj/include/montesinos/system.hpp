#pragma once

// Edgepath systems for a Montesinos knot: exact endpoint solving, validation,
// enumeration by type, and detection of the Seifert reference system.

#include "montesinos/edgepath.hpp"
#include "montesinos/linear_solve.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace montesinos {

class KnotParseError : public std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

class CapExceeded : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

class SeifertError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// M(R_1, ..., R_N): N >= 3 non-integer tangles, at most one even denominator.
struct MontesinosKnot {
    std::vector<Fraction> tangles;

    friend bool operator==(const MontesinosKnot&, const MontesinosKnot&) = default;

    static MontesinosKnot from_tangles(std::vector<Fraction> tangles) {
        if (tangles.size() < 3) throw KnotParseError("need at least 3 tangles");
        int even = 0;
        for (const auto& t : tangles) {
            if (t.is_infinite() || t.den() < 2)
                throw KnotParseError("tangle " + t.str() + " must have denominator at least 2");
            if (t.den() % 2 == 0) ++even;
        }
        if (even > 1) throw KnotParseError("more than one even denominator: not a knot");
        return MontesinosKnot{std::move(tangles)};
    }

    /// "p1/q1,p2/q2,...". Each fraction must already be irreducible.
    static MontesinosKnot parse(std::string_view spec) {
        std::vector<Fraction> tangles;
        std::size_t start = 0;
        while (true) {
            std::size_t comma = spec.find(',', start);
            std::string_view item = spec.substr(start, comma == std::string_view::npos ? comma : comma - start);
            while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
            while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
            Fraction f;
            try {
                f = Fraction::parse(item);
            } catch (const std::invalid_argument& e) {
                throw KnotParseError(e.what());
            }
            auto slash = item.find('/');
            if (slash != std::string_view::npos && !f.is_infinite()) {
                std::string_view den = item.substr(slash + 1);
                if (den.front() == '-' || den.front() == '+') den.remove_prefix(1);
                if (Integer(std::string(den)) != f.den())
                    throw KnotParseError("tangle '" + std::string(item) + "' is not in lowest terms");
            }
            tangles.push_back(std::move(f));
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
        return from_tangles(std::move(tangles));
    }

    std::string str() const {
        std::string s;
        for (const auto& t : tangles) {
            if (!s.empty()) s += ",";
            s += t.str();
        }
        return s;
    }
};

struct EdgepathSystem {
    MontesinosKnot knot;
    std::vector<Edgepath> paths;
    Fraction common_u;
    PathType system_type = PathType::I;

    friend bool operator==(const EdgepathSystem&, const EdgepathSystem&) = default;
};

/// Weights t_i on the left vertex of each moving path's open final edge and
/// the shared effective denominator c, with u = 1 - 1/c.
struct EndpointSolution {
    std::vector<Fraction> t;
    Fraction c;

    Fraction u() const { return Fraction(1) - Fraction(1) / c; }
};

enum class SolveStatus { solved, infeasible, degenerate };

struct SolveResult {
    SolveStatus status = SolveStatus::infeasible;
    EndpointSolution solution;
    std::string reason;
};

/// Solves (E3) for one choice per tangle: either the constant marker or a
/// skeleton whose last edge is left open. Unknowns are t_1..t_M and c; each
/// moving path contributes t_i q_i + (1 - t_i) s_i = c and the zero-sum
/// condition is sum(t_i p_i + (1 - t_i) r_i) + c * sum(constant R_j) = 0.
/// A solution is returned only when every t_i is in (0, 1], u > 0, and every
/// constant path fits on its horizontal edge.
inline SolveResult solve_endpoints(const std::vector<Skeleton>& choice) {
    std::vector<const Skeleton*> moving;
    Fraction constant_sum;
    Integer max_constant_den = 1;
    for (const auto& sk : choice) {
        if (sk.constant) {
            constant_sum += sk.tangle;
            if (sk.tangle.den() > max_constant_den) max_constant_den = sk.tangle.den();
            continue;
        }
        if (sk.edge_count() == 0) throw std::invalid_argument("skeleton " + sk.str() + " has no open edge");
        const Fraction& right = sk.vertices[sk.vertices.size() - 2];
        const Fraction& left = sk.vertices.back();
        if (left.is_infinite() || right.is_infinite() || (left.is_integer() && right.is_integer()))
            throw std::invalid_argument("open edge of " + sk.str() + " does not lie in u > 0");
        moving.push_back(&sk);
    }
    SolveResult result;
    if (moving.empty()) {
        result.status = constant_sum.is_zero() ? SolveStatus::degenerate : SolveStatus::infeasible;
        result.reason = "no moving path";
        return result;
    }

    const std::size_t m = moving.size();
    std::vector<std::vector<Fraction>> a(m + 1, std::vector<Fraction>(m + 1));
    std::vector<Fraction> b(m + 1);
    for (std::size_t i = 0; i < m; ++i) {
        const Fraction& left = moving[i]->vertices.back();
        const Fraction& right = moving[i]->vertices[moving[i]->vertices.size() - 2];
        a[i][i] = Fraction(left.den() - right.den());
        a[i][m] = Fraction(-1);
        b[i] = Fraction(-right.den());
        a[m][i] = Fraction(left.num() - right.num());
        b[m] -= Fraction(right.num());
    }
    a[m][m] = constant_sum;

    LinearSolution lin = solve_linear(std::move(a), std::move(b));
    if (lin.status == LinearStatus::underdetermined) {
        result.status = SolveStatus::degenerate;
        result.reason = "rank " + std::to_string(lin.rank) + " < " + std::to_string(m + 1);
        return result;
    }
    if (lin.status == LinearStatus::inconsistent) {
        result.reason = "inconsistent";
        return result;
    }
    EndpointSolution sol;
    sol.c = lin.x[m];
    sol.t.assign(lin.x.begin(), lin.x.begin() + static_cast<std::ptrdiff_t>(m));
    for (const auto& t : sol.t) {
        if (t <= Fraction(0) || t > Fraction(1)) {
            result.reason = "weight " + t.str() + " outside (0, 1]";
            return result;
        }
    }
    if (sol.c <= Fraction(1)) {
        result.reason = "endpoint not in u > 0";
        return result;
    }
    if (sol.c < Fraction(max_constant_den)) {
        result.reason = "constant path cannot reach u = " + sol.u().str();
        return result;
    }
    result.status = SolveStatus::solved;
    result.solution = std::move(sol);
    return result;
}

/// Builds the type I system described by a choice and its solution.
inline EdgepathSystem build_type_one_system(const MontesinosKnot& knot, const std::vector<Skeleton>& choice,
                                            const EndpointSolution& sol) {
    EdgepathSystem sys{knot, {}, sol.u(), PathType::I};
    std::size_t next = 0;
    for (const auto& sk : choice) {
        if (sk.constant)
            sys.paths.push_back(Edgepath::constant(sk.tangle, Fraction(sk.tangle.den()) / sol.c));
        else
            sys.paths.push_back(Edgepath::along(sk.vertices, sol.t[next++]));
    }
    return sys;
}

struct SystemViolation {
    std::string condition;
    std::optional<std::size_t> path_index;
    std::string message;
};

/// Checks (E1)-(E4) from first principles: per-path conditions, then a common
/// endpoint u with v-coordinates summing to zero, then type consistency.
inline std::optional<SystemViolation> validate_system(const EdgepathSystem& sys) {
    const auto& tangles = sys.knot.tangles;
    if (sys.paths.size() != tangles.size())
        return SystemViolation{"E1", std::nullopt, "system has " + std::to_string(sys.paths.size()) +
                                                       " paths for " + std::to_string(tangles.size()) + " tangles"};
    for (std::size_t i = 0; i < sys.paths.size(); ++i) {
        if (auto v = check_path(sys.paths[i], tangles[i])) return SystemViolation{v->condition, i, v->message};
    }
    std::vector<UV> ends;
    for (const auto& p : sys.paths) ends.push_back(p.endpoint());
    Fraction v_sum;
    for (std::size_t i = 0; i < ends.size(); ++i) {
        if (!(ends[i].u == ends[0].u))
            return SystemViolation{"E3", i, "endpoint u = " + ends[i].u.str() + " differs from " + ends[0].u.str()};
        v_sum += ends[i].v;
    }
    if (!v_sum.is_zero())
        return SystemViolation{"E3", std::nullopt, "endpoint v-coordinates sum to " + v_sum.str()};
    if (!(ends[0].u == sys.common_u))
        return SystemViolation{"E3", std::nullopt, "recorded u " + sys.common_u.str() + " differs from " + ends[0].u.str()};
    for (std::size_t i = 0; i < sys.paths.size(); ++i) {
        if (classify_type(sys.paths[i]) != sys.system_type)
            return SystemViolation{"type", i, "path type differs from system type " + to_string(sys.system_type)};
    }
    return std::nullopt;
}

namespace detail {

struct Parity {
    int num;
    int den;
    friend auto operator<=>(const Parity&, const Parity&) = default;
};

inline Parity parity_of(const Fraction& f) {
    return {static_cast<int>(abs(f.num()) % 2), static_cast<int>(f.den() % 2)};
}

}  // namespace detail

/// The two conditions for a type III system to represent a Seifert surface:
/// every path reduces mod 2 to a single edge type among odd/even-even/odd,
/// even/odd-odd/odd and odd/even-odd/odd, and an even number of paths have
/// an odd integer as penultimate vertex.
inline bool satisfies_seifert_parity(const EdgepathSystem& sys) {
    if (sys.system_type != PathType::III) return false;
    int odd_penultimate = 0;
    for (const auto& path : sys.paths) {
        if (path.is_constant() || path.vertices.size() < 2 || !path.vertices.back().is_infinite()) return false;
        std::set<std::pair<detail::Parity, detail::Parity>> kinds;
        for (std::size_t i = 0; i + 1 < path.vertices.size(); ++i) {
            auto a = detail::parity_of(path.vertices[i]);
            auto b = detail::parity_of(path.vertices[i + 1]);
            kinds.insert(a < b ? std::pair{a, b} : std::pair{b, a});
        }
        if (kinds.size() != 1) return false;
        const Fraction& pen = path.vertices[path.vertices.size() - 2];
        if (pen.is_integer() && abs(pen.num()) % 2 == 1) ++odd_penultimate;
    }
    return odd_penultimate % 2 == 0;
}

inline Fraction system_twist(const EdgepathSystem& sys) {
    Fraction sum;
    for (const auto& p : sys.paths) sum += path_twist(p);
    return sum;
}

struct EnumerationOptions {
    bool type_one = true;
    bool type_two = true;
    bool type_three = true;
    std::uint64_t combination_cap = 10'000'000;
};

struct Diagnostic {
    std::string kind;  // "degenerate"
    std::string detail;
};

struct Enumeration {
    std::vector<EdgepathSystem> systems;
    std::vector<Diagnostic> diagnostics;
};

namespace detail {

template <class F>
void for_each_combination(const std::vector<std::vector<Skeleton>>& options, F&& visit) {
    for (const auto& o : options)
        if (o.empty()) return;
    std::vector<std::size_t> idx(options.size(), 0);
    std::vector<Skeleton> choice;
    choice.reserve(options.size());
    while (true) {
        choice.clear();
        for (std::size_t i = 0; i < options.size(); ++i) choice.push_back(options[i][idx[i]]);
        visit(choice);
        std::size_t k = options.size();
        while (k > 0) {
            --k;
            if (++idx[k] < options[k].size()) break;
            idx[k] = 0;
            if (k == 0) return;
        }
        if (options.empty()) return;
    }
}

inline std::uint64_t combination_count(const std::vector<std::vector<Skeleton>>& options) {
    std::uint64_t total = 1;
    for (const auto& o : options) {
        if (o.empty()) return 0;
        if (total > UINT64_MAX / o.size()) return UINT64_MAX;
        total *= o.size();
    }
    return total;
}

/// Extends type II paths that all end on the v-axis along vertical edges so
/// that their v-coordinates sum to zero. The whole correction goes to the
/// first path allowed to move in the needed direction.
inline std::optional<EdgepathSystem> close_type_two(const MontesinosKnot& knot, const std::vector<Skeleton>& choice) {
    Integer total = 0;
    for (const auto& sk : choice) total += sk.vertices.back().num();
    EdgepathSystem sys{knot, {}, Fraction(0), PathType::II};
    for (const auto& sk : choice) sys.paths.push_back(Edgepath::along(sk.vertices));
    if (total == 0) return sys;

    const Integer dir = total < 0 ? 1 : -1;  // direction to move
    Integer need = total < 0 ? Integer(-total) : total;
    for (auto& path : sys.paths) {
        const auto& vs = path.vertices;
        const Fraction z = vs.back();
        const Fraction prev = vs[vs.size() - 2];
        const Fraction step = Fraction(z.num() + dir);
        if (is_farey_edge(prev, step)) continue;  // second side of a triangle
        for (Integer i = 1; i <= need; ++i) path.vertices.push_back(Fraction(z.num() + dir * i));
        return sys;
    }
    return std::nullopt;
}

}  // namespace detail

/// Per-tangle choices feeding each system type: for type I the constant
/// marker and every skeleton with an open final edge in u > 0; for type II
/// skeletons ending at an integer vertex; for type III those reaching ⟨∞⟩.
struct ChoiceLists {
    std::vector<std::vector<Skeleton>> type_one;
    std::vector<std::vector<Skeleton>> type_two;
    std::vector<std::vector<Skeleton>> type_three;
};

inline ChoiceLists choice_lists(const MontesinosKnot& knot) {
    ChoiceLists lists;
    for (const auto& tangle : knot.tangles) {
        std::vector<Skeleton> one, two, three;
        for (auto& sk : enumerate_skeletons(tangle)) {
            if (sk.constant) {
                one.push_back(sk);
                continue;
            }
            if (sk.edge_count() == 0) continue;
            const Fraction& last = sk.vertices.back();
            if (last.is_infinite()) {
                three.push_back(sk);
                continue;
            }
            if (last.is_integer()) two.push_back(sk);
            one.push_back(sk);
        }
        lists.type_one.push_back(std::move(one));
        lists.type_two.push_back(std::move(two));
        lists.type_three.push_back(std::move(three));
    }
    return lists;
}

/// Enumerates candidate systems of the requested types in a fixed order:
/// type I, then II, then III, each in lexicographic order of the per-tangle
/// choices. Throws CapExceeded before doing any work when the number of
/// choice combinations exceeds the cap.
inline Enumeration enumerate_systems(const MontesinosKnot& knot, const EnumerationOptions& opts = {}) {
    const ChoiceLists lists = choice_lists(knot);
    const auto& type_one = lists.type_one;
    const auto& type_two = lists.type_two;
    const auto& type_three = lists.type_three;

    std::uint64_t total = 0;
    auto add = [&](std::uint64_t n) { total = (UINT64_MAX - total < n) ? UINT64_MAX : total + n; };
    if (opts.type_one) add(detail::combination_count(type_one));
    if (opts.type_two) add(detail::combination_count(type_two));
    if (opts.type_three) add(detail::combination_count(type_three));
    if (total > opts.combination_cap)
        throw CapExceeded(std::to_string(total) + " skeleton combinations exceed the cap of " +
                          std::to_string(opts.combination_cap));

    Enumeration out;
    if (opts.type_one) {
        detail::for_each_combination(type_one, [&](const std::vector<Skeleton>& choice) {
            SolveResult r = solve_endpoints(choice);
            if (r.status == SolveStatus::solved) {
                out.systems.push_back(build_type_one_system(knot, choice, r.solution));
            } else if (r.status == SolveStatus::degenerate) {
                std::string d;
                for (const auto& sk : choice) d += (d.empty() ? "" : " | ") + sk.str();
                out.diagnostics.push_back({"degenerate", d + " (" + r.reason + ")"});
            }
        });
    }
    if (opts.type_two) {
        detail::for_each_combination(type_two, [&](const std::vector<Skeleton>& choice) {
            if (auto sys = detail::close_type_two(knot, choice)) out.systems.push_back(std::move(*sys));
        });
    }
    if (opts.type_three) {
        detail::for_each_combination(type_three, [&](const std::vector<Skeleton>& choice) {
            EdgepathSystem sys{knot, {}, Fraction(-1), PathType::III};
            for (const auto& sk : choice) sys.paths.push_back(Edgepath::along(sk.vertices));
            out.systems.push_back(std::move(sys));
        });
    }
    return out;
}

/// The type III system passing both Seifert parity conditions. All passing
/// systems must share one twist.
inline EdgepathSystem find_seifert_system(const std::vector<EdgepathSystem>& systems) {
    std::optional<EdgepathSystem> found;
    Fraction twist;
    for (const auto& sys : systems) {
        if (!satisfies_seifert_parity(sys)) continue;
        Fraction t = system_twist(sys);
        if (!found) {
            found = sys;
            twist = t;
        } else if (!(t == twist)) {
            throw SeifertError("ambiguous reference: Seifert candidates with twists " + twist.str() + " and " +
                               t.str());
        }
    }
    if (!found) throw SeifertError("no Seifert reference");
    return *found;
}

inline EdgepathSystem find_seifert_system(const MontesinosKnot& knot) {
    EnumerationOptions opts;
    opts.type_one = false;
    opts.type_two = false;
    return find_seifert_system(enumerate_systems(knot, opts).systems);
}

}  // namespace montesinos
