#pragma once

// Edgepaths for a single rational tangle: skeleton enumeration, per-edge
// sign/length/twist, and type classification.

#include "montesinos/farey.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace montesinos {

enum class PathType { I, II, III };

inline std::string to_string(PathType t) {
    switch (t) {
        case PathType::I: return "I";
        case PathType::II: return "II";
        case PathType::III: return "III";
    }
    return "?";
}

/// A leftward vertex sequence starting at the tangle's vertex, or the marker
/// for a constant path on the tangle's horizontal edge.
struct Skeleton {
    Fraction tangle;
    std::vector<Fraction> vertices;
    bool constant = false;

    std::size_t edge_count() const { return vertices.empty() ? 0 : vertices.size() - 1; }

    friend bool operator==(const Skeleton&, const Skeleton&) = default;
    friend auto operator<=>(const Skeleton& a, const Skeleton& b) {
        if (a.constant != b.constant) return a.constant ? std::strong_ordering::less : std::strong_ordering::greater;
        return std::lexicographical_compare_three_way(a.vertices.begin(), a.vertices.end(),
                                                      b.vertices.begin(), b.vertices.end());
    }

    std::string str() const {
        if (constant) return "const<" + tangle.str() + ">";
        std::string s;
        for (auto it = vertices.rbegin(); it != vertices.rend(); ++it) {
            if (!s.empty()) s += " - ";
            s += DiagramVertex::angle(*it).str();
        }
        return s;
    }
};

/// One edgepath. Traversal runs from vertices.front() (the tangle) leftward.
/// The final edge, vertices[n-2] -> vertices[n-1], is covered up to weight
/// `final_weight` on its left vertex; 1 means the path reaches that vertex.
/// A constant path sits on the horizontal edge with weight `constant_weight`
/// on ⟨R⟩.
struct Edgepath {
    Fraction tangle;
    std::vector<Fraction> vertices;
    Fraction final_weight = Fraction(1);
    std::optional<Fraction> constant_weight;

    static Edgepath constant(Fraction tangle, Fraction weight) {
        Edgepath p;
        p.vertices = {tangle};
        p.tangle = std::move(tangle);
        p.constant_weight = std::move(weight);
        return p;
    }

    static Edgepath along(std::vector<Fraction> vertices, Fraction final_weight = Fraction(1)) {
        Edgepath p;
        p.tangle = vertices.front();
        p.vertices = std::move(vertices);
        p.final_weight = std::move(final_weight);
        return p;
    }

    bool is_constant() const { return constant_weight.has_value(); }
    std::size_t edge_count() const { return is_constant() ? 0 : vertices.size() - 1; }

    friend bool operator==(const Edgepath&, const Edgepath&) = default;

    std::vector<DiagramEdge> steps() const {
        std::vector<DiagramEdge> out;
        for (std::size_t i = 0; i + 1 < vertices.size() && !is_constant(); ++i)
            out.push_back(traversal_edge(vertices[i], vertices[i + 1]));
        return out;
    }

    /// Where the path stops.
    UV endpoint() const {
        if (is_constant()) return uv_coords(PartialPoint{horizontal_edge(tangle), *constant_weight});
        if (vertices.size() == 1 || final_weight == Fraction(1))
            return uv_coords(DiagramVertex::angle(vertices.back()));
        const std::size_t n = vertices.size();
        return uv_coords(PartialPoint{traversal_edge(vertices[n - 2], vertices[n - 1]), final_weight});
    }

    /// Total length: one per full edge plus the covered part of the last.
    Fraction length() const {
        if (is_constant() || vertices.size() == 1) return Fraction(0);
        return Fraction(static_cast<long long>(vertices.size() - 2)) + final_weight;
    }

    /// Notation with the endpoint written first, e.g.
    /// "(1/11)<-1> + (10/11)<-1/2> - <-1/2>".
    std::string str() const {
        if (is_constant()) {
            const Fraction& w = *constant_weight;
            return "(" + w.str() + ")<" + tangle.str() + "> + (" + (Fraction(1) - w).str() + ")<" +
                   tangle.str() + ">o";
        }
        const std::size_t n = vertices.size();
        std::string s;
        std::size_t i = n;
        if (n >= 2 && final_weight != Fraction(1)) {
            s = "(" + final_weight.str() + ")" + DiagramVertex::angle(vertices[n - 1]).str() + " + (" +
                (Fraction(1) - final_weight).str() + ")" + DiagramVertex::angle(vertices[n - 2]).str();
            i = n - 1;
        }
        while (i-- > 0) {
            if (!s.empty()) s += " - ";
            s += DiagramVertex::angle(vertices[i]).str();
        }
        return s;
    }
};

enum class Sign : int { minus = -1, none = 0, plus = 1 };

struct SignedEdge {
    DiagramEdge edge;
    Sign sign = Sign::none;
    Fraction length = Fraction(1);
};

/// +1 when v rises along right-to-left traversal, -1 when it falls, none
/// for horizontal, vertical and ∞ edges.
inline Sign edge_sign(const DiagramEdge& edge) {
    if (edge.kind != EdgeKind::farey) return Sign::none;
    if (edge.left.value > edge.right.value) return Sign::plus;
    if (edge.left.value < edge.right.value) return Sign::minus;
    return Sign::none;
}

/// -2 * sign * length for farey edges (which lie in u > 0), zero otherwise.
inline Fraction edge_twist(const SignedEdge& e) {
    if (e.edge.kind != EdgeKind::farey || e.sign == Sign::none) return Fraction(0);
    return Fraction(-2LL * static_cast<int>(e.sign)) * e.length;
}

inline std::vector<SignedEdge> signed_edges(const Edgepath& path) {
    std::vector<SignedEdge> out;
    auto steps = path.steps();
    for (std::size_t i = 0; i < steps.size(); ++i) {
        Fraction len = (i + 1 == steps.size()) ? path.final_weight : Fraction(1);
        Sign s = edge_sign(steps[i]);
        out.push_back({std::move(steps[i]), s, std::move(len)});
    }
    return out;
}

inline Fraction path_twist(const Edgepath& path) {
    Fraction sum;
    for (const auto& e : signed_edges(path)) sum += edge_twist(e);
    return sum;
}

/// Sign of the last edge; none for constant or edgeless paths.
inline Sign last_edge_sign(const Edgepath& path) {
    auto steps = path.steps();
    return steps.empty() ? Sign::none : edge_sign(steps.back());
}

inline PathType classify_type(const Edgepath& path) {
    const Fraction u = path.endpoint().u;
    if (u > Fraction(0)) return PathType::I;
    if (u == Fraction(0)) return PathType::II;
    return PathType::III;
}

namespace detail {

/// Leftward moves allowed after arriving at `cur` from `prev`: the farey
/// parents of a non-integer, ⟨∞⟩ from an integer, minus any move that would
/// run along a second side of the triangle just used.
inline std::vector<Fraction> skeleton_moves(const std::optional<Fraction>& prev, const Fraction& cur) {
    std::vector<Fraction> candidates;
    if (cur.is_infinite()) return candidates;
    if (cur.is_integer()) {
        candidates.push_back(Fraction::infinity());
    } else {
        auto [lo, hi] = farey_parents(cur);
        candidates = {lo, hi};
    }
    if (!prev) return candidates;
    const DiagramEdge incoming = traversal_edge(*prev, cur);
    std::erase_if(candidates, [&](const Fraction& next) {
        return same_triangle(incoming, traversal_edge(cur, next));
    });
    return candidates;
}

inline void collect_skeletons(std::vector<Fraction>& stack, std::vector<Skeleton>& out) {
    out.push_back(Skeleton{stack.front(), stack, false});
    std::optional<Fraction> prev;
    if (stack.size() >= 2) prev = stack[stack.size() - 2];
    for (const Fraction& next : skeleton_moves(prev, stack.back())) {
        stack.push_back(next);
        collect_skeletons(stack, out);
        stack.pop_back();
    }
}

}  // namespace detail

/// Every minimal, monotone leftward path from ⟨tangle⟩ through the farey
/// parents to the v-axis and on to ⟨∞⟩, with all prefixes (including the
/// edgeless one), preceded by the constant marker. Vertical moves are not
/// part of skeletons. Sorted, duplicate-free.
inline std::vector<Skeleton> enumerate_skeletons(const Fraction& tangle) {
    if (tangle.is_infinite() || tangle.is_integer())
        throw std::invalid_argument("integer tangle " + tangle.str() + " has no skeletons");
    std::vector<Skeleton> out;
    out.push_back(Skeleton{tangle, {tangle}, true});
    std::vector<Fraction> stack{tangle};
    detail::collect_skeletons(stack, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

struct PathViolation {
    std::string condition;  // "E1", "E2", "E4"
    std::string message;
};

/// Checks (E1), (E2) and (E4) for one path against its tangle, without using
/// the skeleton generator.
inline std::optional<PathViolation> check_path(const Edgepath& path, const Fraction& tangle) {
    if (path.is_constant()) {
        if (!(path.tangle == tangle) || path.vertices != std::vector<Fraction>{tangle})
            return PathViolation{"E1", "constant path is not on the horizontal edge of " + tangle.str()};
        const Fraction& w = *path.constant_weight;
        if (w < Fraction(0) || w > Fraction(1))
            return PathViolation{"E1", "constant weight " + w.str() + " outside [0, 1]"};
        return std::nullopt;
    }
    if (path.vertices.empty() || !(path.vertices.front() == tangle))
        return PathViolation{"E1", "path does not start at <" + tangle.str() + ">"};
    const auto& vs = path.vertices;
    if (vs.size() >= 2 && (path.final_weight <= Fraction(0) || path.final_weight > Fraction(1)))
        return PathViolation{"E2", "final weight " + path.final_weight.str() + " outside (0, 1]"};
    for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
        if (vs[i] == vs[i + 1] || !is_farey_edge(vs[i], vs[i + 1]))
            return PathViolation{"E2", "no edge between <" + vs[i].str() + "> and <" + vs[i + 1].str() + ">"};
    }
    for (std::size_t i = 0; i + 2 < vs.size(); ++i) {
        if (vs[i] == vs[i + 2])
            return PathViolation{"E2", "path retraces the edge at <" + vs[i + 1].str() + ">"};
        if (is_farey_edge(vs[i], vs[i + 2]))
            return PathViolation{"E2", "two sides of the triangle <" + vs[i].str() + ">, <" + vs[i + 1].str() +
                                           ">, <" + vs[i + 2].str() + ">"};
    }
    for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
        Fraction u_from = uv_coords(DiagramVertex::angle(vs[i])).u;
        Fraction u_to = uv_coords(DiagramVertex::angle(vs[i + 1])).u;
        if (u_to > u_from)
            return PathViolation{"E4", "path moves right from <" + vs[i].str() + "> to <" + vs[i + 1].str() + ">"};
    }
    return std::nullopt;
}

}  // namespace montesinos
