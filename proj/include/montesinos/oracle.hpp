#pragma once

// Brute-force cross-checks for the endpoint solver and the skeleton
// generator. Nothing here calls into edgepath or system code beyond the
// plain Skeleton record; searches are exhaustive over small integers.

#include "montesinos/edgepath.hpp"
#include "montesinos/farey.hpp"

#include <cstdint>
#include <set>
#include <vector>

namespace montesinos::oracle {

/// Integer weights: path i stops at (k_i/m)⟨left_i⟩ + ((m-k_i)/m)⟨right_i⟩,
/// with common scaled denominator `scaled_den` = k_i q_i + (m - k_i) s_i.
struct WeightVector {
    std::int64_t m = 0;
    std::vector<std::int64_t> k;
    std::int64_t scaled_den = 0;

    friend bool operator==(const WeightVector&, const WeightVector&) = default;
};

/// Every (m, k) with m <= m_max and each k_i in [0, m] for which the moving
/// paths share one u, the v-coordinates (constant paths fixed at v = R_j)
/// sum to zero, and every constant path fits on its horizontal edge.
inline std::vector<WeightVector> brute_force_endpoints(const std::vector<Skeleton>& choice, std::int64_t m_max) {
    struct Edge {
        std::int64_t p, q, r, s;  // left p/q, right r/s
    };
    std::vector<Edge> moving;
    Fraction const_sum;
    std::int64_t max_const_q = 1;
    for (const auto& sk : choice) {
        if (sk.constant) {
            const_sum += sk.tangle;
            max_const_q = std::max(max_const_q, to_int64(sk.tangle.den()));
            continue;
        }
        const Fraction& left = sk.vertices.back();
        const Fraction& right = sk.vertices[sk.vertices.size() - 2];
        moving.push_back({to_int64(left.num()), to_int64(left.den()), to_int64(right.num()), to_int64(right.den())});
    }
    std::vector<WeightVector> out;
    if (moving.empty()) return out;
    const std::int64_t cs_num = to_int64(const_sum.num());
    const std::int64_t cs_den = to_int64(const_sum.den());

    for (std::int64_t m = 1; m <= m_max; ++m) {
        for (std::int64_t k0 = 0; k0 <= m; ++k0) {
            const std::int64_t d = k0 * moving[0].q + (m - k0) * moving[0].s;
            WeightVector w{m, {k0}, d};
            bool ok = true;
            for (std::size_t i = 1; i < moving.size() && ok; ++i) {
                ok = false;
                for (std::int64_t ki = 0; ki <= m; ++ki) {
                    if (ki * moving[i].q + (m - ki) * moving[i].s == d) {
                        w.k.push_back(ki);
                        ok = true;
                        break;
                    }
                }
            }
            if (!ok) continue;
            std::int64_t v_sum = 0;
            for (std::size_t i = 0; i < moving.size(); ++i)
                v_sum += w.k[i] * moving[i].p + (m - w.k[i]) * moving[i].r;
            if (v_sum * cs_den + d * cs_num != 0) continue;
            if (d < m * max_const_q) continue;
            out.push_back(std::move(w));
        }
    }
    return out;
}

namespace detail {

inline Fraction u_of(const Fraction& f) {
    return f.is_infinite() ? Fraction(-1) : Fraction(f.den() - 1, f.den());
}

/// All non-vertical diagram neighbors of `x` no further right than `x`,
/// found by scanning every fraction with denominator up to den(x) in a window
/// around x.
inline std::vector<Fraction> leftward_neighbors(const Fraction& x) {
    std::vector<Fraction> out;
    if (x.is_infinite()) return out;
    if (is_farey_edge(x, Fraction::infinity())) out.push_back(Fraction::infinity());
    const std::int64_t p = to_int64(x.num());
    const std::int64_t q = to_int64(x.den());
    for (std::int64_t s = 1; s <= q; ++s) {
        const std::int64_t centre = p * s / q;
        for (std::int64_t r = centre - 3; r <= centre + 3; ++r) {
            Fraction y{Integer(r), Integer(s)};
            if (y.den() != s || y == x) continue;
            if (x.is_integer() && y.is_integer()) continue;  // vertical
            if (u_of(y) > u_of(x)) continue;
            if (!is_farey_edge(x, y)) continue;
            out.push_back(y);
        }
    }
    return out;
}

inline void search(std::vector<Fraction>& path, std::size_t max_edges, std::set<Skeleton>& out) {
    out.insert(Skeleton{path.front(), path, false});
    if (path.size() - 1 == max_edges) return;
    for (const Fraction& y : leftward_neighbors(path.back())) {
        if (path.size() >= 2) {
            const Fraction& prev = path[path.size() - 2];
            if (y == prev || is_farey_edge(prev, y)) continue;
        }
        path.push_back(y);
        search(path, max_edges, out);
        path.pop_back();
    }
}

}  // namespace detail

/// Every path from ⟨tangle⟩ of at most `max_edges` edges that never moves
/// right, never retraces, and never uses two sides of a triangle in a row,
/// plus the constant marker. Vertical edges are left out.
inline std::set<Skeleton> exhaustive_paths(const Fraction& tangle, std::size_t max_edges) {
    std::set<Skeleton> out;
    out.insert(Skeleton{tangle, {tangle}, true});
    std::vector<Fraction> path{tangle};
    detail::search(path, max_edges, out);
    return out;
}

}  // namespace montesinos::oracle
