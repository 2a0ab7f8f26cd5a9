#pragma once

// The diagram of Farey vertices and edges in the uv-plane. The diagram is
// infinite, so nothing here materializes it: neighbors are computed on demand.

#include "montesinos/fraction.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace montesinos {

struct UV {
    Fraction u;
    Fraction v;
    friend bool operator==(const UV&, const UV&) = default;
};

enum class VertexKind { angle, circle, infinity };

/// ⟨p/q⟩, ⟨p/q⟩° or ⟨∞⟩. The infinity vertex carries the value 1/0.
struct DiagramVertex {
    VertexKind kind = VertexKind::angle;
    Fraction value;

    static DiagramVertex angle(Fraction f) {
        if (f.is_infinite()) return infinity();
        return {VertexKind::angle, std::move(f)};
    }
    static DiagramVertex circle(Fraction f) {
        if (f.is_infinite()) throw std::invalid_argument("no circle vertex at infinity");
        return {VertexKind::circle, std::move(f)};
    }
    static DiagramVertex infinity() { return {VertexKind::infinity, Fraction::infinity()}; }

    bool is_infinity() const { return kind == VertexKind::infinity; }

    friend bool operator==(const DiagramVertex&, const DiagramVertex&) = default;

    std::string str() const {
        switch (kind) {
            case VertexKind::infinity: return "<inf>";
            case VertexKind::circle: return "<" + value.str() + ">o";
            case VertexKind::angle: break;
        }
        return "<" + value.str() + ">";
    }
};

inline UV uv_coords(const DiagramVertex& vertex) {
    switch (vertex.kind) {
        case VertexKind::infinity: return {Fraction(-1), Fraction(0)};
        case VertexKind::circle: return {Fraction(1), vertex.value};
        case VertexKind::angle: break;
    }
    const Fraction& f = vertex.value;
    return {Fraction(f.den() - 1, f.den()), f};
}

/// True iff |ps - qr| = 1, with infinity read as 1/0.
inline bool is_farey_edge(const Fraction& a, const Fraction& b) {
    Integer det = a.num() * b.den() - a.den() * b.num();
    return det == 1 || det == -1;
}

enum class EdgeKind { farey, horizontal, vertical, infinity_edge };

/// An edge of the diagram. `right` is where traversal starts and `left` where
/// it heads; for every edge except vertical ones this is also the u-order.
/// Horizontal edges always have the angle vertex on the left.
struct DiagramEdge {
    DiagramVertex left;
    DiagramVertex right;
    EdgeKind kind = EdgeKind::farey;

    friend bool operator==(const DiagramEdge&, const DiagramEdge&) = default;

    std::string str() const { return left.str() + " - " + right.str(); }
};

/// The edge traversed from ⟨from⟩ to ⟨to⟩ (both angle vertices or ∞).
inline DiagramEdge traversal_edge(const Fraction& from, const Fraction& to) {
    if (from == to || !is_farey_edge(from, to))
        throw std::invalid_argument("no edge between <" + from.str() + "> and <" + to.str() + ">");
    DiagramEdge e{DiagramVertex::angle(to), DiagramVertex::angle(from), EdgeKind::farey};
    if (from.is_infinite() || to.is_infinite())
        e.kind = EdgeKind::infinity_edge;
    else if (from.is_integer() && to.is_integer())
        e.kind = EdgeKind::vertical;
    return e;
}

inline DiagramEdge horizontal_edge(const Fraction& f) {
    return {DiagramVertex::angle(f), DiagramVertex::circle(f), EdgeKind::horizontal};
}

/// A point of `edge` with weight `weight_left` on the left vertex, in [0, 1].
struct PartialPoint {
    DiagramEdge edge;
    Fraction weight_left;

    friend bool operator==(const PartialPoint&, const PartialPoint&) = default;
};

/// Coordinates of a weighted point. On farey and vertical edges the weights
/// k/(k+l) combine the vertices projectively: with c = t q + (1 - t) s,
/// u = 1 - 1/c and v = (t p + (1 - t) r) / c. On horizontal edges the point
/// keeps v = p/q and u = 1 - t/q. Edges to ⟨∞⟩ interpolate affinely between
/// (0, z) and (-1, 0).
inline UV uv_coords(const PartialPoint& point) {
    const Fraction& t = point.weight_left;
    if (t < Fraction(0) || t > Fraction(1))
        throw std::invalid_argument("edge weight " + t.str() + " outside [0, 1]");
    const Fraction s = Fraction(1) - t;
    const DiagramEdge& e = point.edge;
    switch (e.kind) {
        case EdgeKind::horizontal: {
            const Fraction& f = e.left.value;
            return {Fraction(1) - t / Fraction(f.den()), f};
        }
        case EdgeKind::infinity_edge: {
            const DiagramVertex& finite = e.left.is_infinity() ? e.right : e.left;
            Fraction w_inf = e.left.is_infinity() ? t : s;
            return {-w_inf, (Fraction(1) - w_inf) * finite.value};
        }
        case EdgeKind::farey:
        case EdgeKind::vertical: break;
    }
    const Fraction& a = e.left.value;
    const Fraction& b = e.right.value;
    Fraction c = t * Fraction(a.den()) + s * Fraction(b.den());
    Fraction v_num = t * Fraction(a.num()) + s * Fraction(b.num());
    return {Fraction(1) - Fraction(1) / c, v_num / c};
}

/// The two neighbors of p/q (q >= 2) with smaller denominators, in
/// increasing order. p/q is their mediant.
inline std::pair<Fraction, Fraction> farey_parents(const Fraction& f) {
    if (f.is_infinite() || f.is_integer())
        throw std::invalid_argument("farey_parents needs a non-integer fraction, got " + f.str());
    const Integer& p = f.num();
    const Integer& q = f.den();
    // b = p^{-1} mod q via the extended Euclidean algorithm.
    Integer r0 = ((p % q) + q) % q, r1 = q;
    Integer x0 = 1, x1 = 0;
    while (r1 != 0) {
        Integer quo = r0 / r1;
        Integer r2 = r0 - quo * r1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        Integer x2 = x0 - quo * x1;
        x0 = std::move(x1);
        x1 = std::move(x2);
    }
    Integer b = ((x0 % q) + q) % q;
    Integer a = (p * b - 1) / q;
    return {Fraction(a, b), Fraction(p - a, q - b)};
}

/// True iff the two edges share a vertex and their three endpoints are
/// pairwise connected, i.e. they are two sides of one triangle.
inline bool same_triangle(const DiagramEdge& e1, const DiagramEdge& e2) {
    if (e1.kind == EdgeKind::horizontal || e2.kind == EdgeKind::horizontal) return false;
    const Fraction& a1 = e1.left.value;
    const Fraction& b1 = e1.right.value;
    const Fraction& a2 = e2.left.value;
    const Fraction& b2 = e2.right.value;
    auto distinct_pair = [](const Fraction& x, const Fraction& y) { return !(x == y); };
    if (!distinct_pair(a1, b1) || !distinct_pair(a2, b2))
        throw std::invalid_argument("degenerate edge");
    bool e1_same = (a1 == a2 && b1 == b2) || (a1 == b2 && b1 == a2);
    if (e1_same) return false;
    Fraction shared, x, y;
    if (a1 == a2) { shared = a1; x = b1; y = b2; }
    else if (a1 == b2) { shared = a1; x = b1; y = a2; }
    else if (b1 == a2) { shared = b1; x = a1; y = b2; }
    else if (b1 == b2) { shared = b1; x = a1; y = a2; }
    else throw std::invalid_argument("edges " + e1.str() + " and " + e2.str() + " are disjoint");
    return is_farey_edge(x, y) && is_farey_edge(shared, x) && is_farey_edge(shared, y);
}

}  // namespace montesinos
