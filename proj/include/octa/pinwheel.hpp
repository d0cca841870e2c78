#pragma once

#include <optional>
#include <vector>

#include "octa/outer_billiards.hpp"

namespace octa {

/// One pointed pinwheel strip (Sigma_k, L_k) with drift vector V_k and its
/// lattice lift: V = 2(v_i - v_j) for table vertices v_i, v_j, lifted to
/// 2(e_i - e_j) in Z^n.
struct StripTriple {
    Strip strip; // strip.pointed is L_k
    Vec2 v;
    int lift_i = 0;
    int lift_j = 0;
};

/// The 2n pointed strips of a convex table, cyclically ordered by the points
/// c_k where the pointed boundaries leave a large circle. The pinwheel map is
/// the strip-map composition f_{2n} o ... o f_1 with indices mod 2n, acting
/// on Sigma_0.
struct PinwheelSystem {
    Table table;
    std::vector<StripTriple> triples;

    size_t vertex_count() const { return table.polygon.size(); }
    size_t strip_count() const { return triples.size(); }
};

/// Exact octagon system from the explicit strip table; the ground truth for
/// all octagon computations.
PinwheelSystem octagon_pinwheel();

/// Generic construction: strips from the edges, drift vectors from two
/// outer-billiards reflections at a far probe point. Requires an exact table
/// with a unique farthest vertex per edge or the regular octagon.
PinwheelSystem build_pinwheel(const Table& table);

struct PinwheelStep {
    Point2 image;
    std::vector<long> m; // m_1..m_{2n}; m[2n-1] belongs to V_0
};

/// One pinwheel step: applies the strip maps in order 1, 2, ..., 2n-1, 0.
/// p must lie in Sigma_0 off the undefined lines.
PinwheelStep pinwheel_step(const PinwheelSystem& sys, const Point2& p);

/// Z^n increment of one step: sum m_k * 2(e_i - e_j).
std::vector<long> lift_step(const PinwheelSystem& sys, const std::vector<long>& m);

/// area(Sigma_k cap Sigma_{k+1}) for k = 0..2n-1; nullopt encodes an
/// infinite area (parallel strips).
std::vector<std::optional<QuadVal>> quasi_rational_check(const PinwheelSystem& sys);

struct KiteOrbit {
    std::vector<Point2> points;            // p_0, Phi(p_0), ... (one period)
    std::vector<std::vector<long>> steps;  // m-vector per step
    bool lattice_closed;                   // Z^4 path returns to the origin
};

/// Full periodic pinwheel orbit of the fundamental point (1/q, 1) of K(p/q).
KiteOrbit kite_fundamental_orbit(const Rational& A, long cap = 2000000);

} // namespace octa
