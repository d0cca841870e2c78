#pragma once

#include <vector>

#include "octa/geometry.hpp"

namespace octa {

/// Outer billiards table. Exact tables carry Q(sqrt 2) coordinates; tables for
/// polygons with coordinates beyond that field live in the separate
/// float-based exploration pipeline (approx.hpp).
struct Table {
    ConvexPolygon polygon; // strictly convex, ccw

    Table() = default;
    explicit Table(ConvexPolygon p) : polygon(std::move(p)) {}
};

/// The regular octagon with vertices omega^k (circumradius 1).
Table octagon_table();

/// Rational kite K(A) with vertices (-1,0), (0,1), (0,-1), (A,0), 0 < A < 1.
struct Kite {
    Rational A;

    explicit Kite(Rational a);
    ConvexPolygon polygon() const; // ccw
    /// (1/q, 1) for A = p/q in lowest terms.
    Point2 fundamental_point() const;
};

/// One step of the outer billiards map: reflection of p through the unique
/// supporting vertex v with the table right of the ray p -> 2v - p.
/// Throws InsideTable / UndefinedOnLine.
Point2 ob_map(const Table& table, const Point2& p);
/// Reflection vertex index used by ob_map at p.
size_t ob_support_vertex(const Table& table, const Point2& p);
inline Point2 ob_map2(const Table& table, const Point2& p) { return ob_map(table, ob_map(table, p)); }

/// The octagons of necklace N_k (exact coordinates), 8k tiles: the eight
/// translates of P by k*omega^n*(sqrt 2 + 1, 1) plus the interpolating ones.
std::vector<ConvexPolygon> necklace_tiles(int k);

} // namespace octa
