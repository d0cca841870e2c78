#pragma once

#include <map>
#include <vector>

#include "octa/geometry.hpp"

namespace octa {

/// The toy polygon exchange of section-6 flavor: a two-piece piecewise
/// rotation on the kite-shaped cell that the main partition exhibits (the
/// kite left of the big fixed octagon, with the small octagon O_4 inscribed).
///
/// phi_A rotates 3 pi/4 about the small octagon's center c_4 on A_1; phi_B
/// rotates by the opposite 3 pi/4 about (3, 2 sqrt 2 - 1) on the tip
/// triangle B_1. The exchange is exactly bijective, the inner octagon is
/// invariant with a fixed center and period-8 points. Placement and the
/// second rotation are reconstructed operationally (see the repository
/// notes): the period-8 and fixed-point invariants are the validation gate.
class ToyModel {
  public:
    static const ToyModel& instance();

    const ConvexPolygon& domain() const { return x_; }   // the kite X
    const ConvexPolygon& a1() const { return a1_; }      // pentagon piece
    const ConvexPolygon& b1() const { return b1_; }      // tip triangle
    const ConvexPolygon& a2() const { return a2_; }
    const ConvexPolygon& b2() const { return b2_; }
    const Similarity& phi_a() const { return phi_a_; }
    const Similarity& phi_b() const { return phi_b_; }
    const ConvexPolygon& inner_octagon() const { return o_; }
    Point2 inner_center() const { return o_center_; }

    /// One exchange step; throws OnCellBoundary between the pieces.
    Point2 step(const Point2& p) const;

    /// Brute-force point period (0 when the cap is hit).
    long point_period(const Point2& p, long cap = 100000) const;

    /// Measured tile periods of the first cascade levels: the orbit periods
    /// of the maximal invariant octagons, smallest first.
    std::vector<long> tile_period_cascade(int levels) const;

  private:
    ToyModel();
    ConvexPolygon x_, a1_, b1_, a2_, b2_, o_;
    Point2 o_center_;
    Similarity phi_a_, phi_b_;
};

} // namespace octa
