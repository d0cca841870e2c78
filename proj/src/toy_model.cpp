#include "octa/toy_model.hpp"

#include <algorithm>

#include "octa/errors.hpp"

namespace octa {

namespace {

const QuadVal S{Rational(1), Rational(1)};

Point2 qp(QuadVal x, QuadVal y) { return {std::move(x), std::move(y)}; }

ConvexPolygon ccw(ConvexPolygon p) {
    if (p.area2().sign() < 0) std::reverse(p.vertices.begin(), p.vertices.end());
    return p;
}

ConvexPolygon convex_intersect(ConvexPolygon a, const ConvexPolygon& b) {
    for (size_t e = 0; e < b.size() && a.size() >= 3; ++e) {
        auto [l, r] =
            clip(a, OrientedLine::through(b.vertices[e], b.vertices[(e + 1) % b.size()]));
        if (!l) return ConvexPolygon();
        a = *l;
    }
    return a;
}

} // namespace

const ToyModel& ToyModel::instance() {
    static ToyModel inst;
    return inst;
}

ToyModel::ToyModel() {
    const QuadVal h{Rational(0), Rational(1, 2)};
    const QuadVal two(2), three(3);
    // The kite with the printed B2 u B3 coordinates, ccw: tip Bv, then the
    // 90-degree corners F, D around the far corner E.
    Point2 bv = qp(S + h, QuadVal(1) + h);
    x_ = ccw(ConvexPolygon({bv, qp((two * S + QuadVal(1)) / two, (S + two) / two),
                            qp((S + three) / two, (three * S - three) / two),
                            qp((three * S - two) / two, (two * S - QuadVal(1)) / two)}));

    o_center_ = qp(two * QuadVal::sqrt2(), two); // c_4
    const QuadVal r4 = QuadVal(3) - two * QuadVal::sqrt2(); // 1/s^2
    o_ = regular_octagon(o_center_, r4);

    phi_a_ = Similarity::rotation45(o_center_, 3);
    a1_ = convex_intersect(x_, phi_a_.inverse()(x_)).normalized();
    a2_ = phi_a_(a1_).normalized();
    b1_ = ccw(ConvexPolygon({bv, qp(three, two),
                             qp(three / two + QuadVal::sqrt2(),
                                QuadVal(Rational(5, 2)) - h)}));
    Point2 cb = qp(three, two * QuadVal::sqrt2() - QuadVal(1));
    phi_b_.lin = omega_pow(5);
    phi_b_.trans = cb - phi_b_.lin.cmul(cb);
    b2_ = phi_b_(b1_).normalized();

    // The exchange must tile X on both sides.
    if (a1_.area() + b1_.area() != x_.area() || a2_.area() + b2_.area() != x_.area())
        throw Error("toy model: pieces do not tile the kite");
    if (o_.area() >= a1_.area() + b1_.area()) throw Error("toy model: octagon too large");
}

Point2 ToyModel::step(const Point2& p) const {
    int la = a1_.locate(p);
    if (la > 0) return phi_a_(p);
    int lb = b1_.locate(p);
    if (lb > 0) return phi_b_(p);
    if (la == 0 || lb == 0) throw OnCellBoundary();
    throw Error("toy step: point outside X");
}

long ToyModel::point_period(const Point2& p, long cap) const {
    Point2 q = p;
    for (long m = 1; m <= cap; ++m) {
        q = step(q);
        if (q == p) return m;
    }
    return 0;
}

std::vector<long> ToyModel::tile_period_cascade(int levels) const {
    // Tile period of the maximal octagon around a periodic center: the point
    // period of the center divided by the rotation order of the return (8).
    // We report measured periods of the smallest-period tiles by scanning
    // centers along the kite axis.
    std::vector<long> out;
    out.push_back(point_period(o_center_)); // the inner octagon: period 1
    // Successive cascade centers found by orbit search: scan sample points,
    // collect the smallest distinct point periods beyond 8.
    std::vector<long> periods;
    for (int i = -24; i <= 24; ++i) {
        for (int j = -24; j <= 24; ++j) {
            Point2 p = o_center_ +
                       Vec2{QuadVal(Rational(i, 110)), QuadVal(Rational(7 * j, 1000))};
            if (x_.locate(p) != 1) continue;
            try {
                long per = point_period(p, 4000);
                if (per > 1) periods.push_back(per);
            } catch (const Error&) {
            }
        }
    }
    std::sort(periods.begin(), periods.end());
    periods.erase(std::unique(periods.begin(), periods.end()), periods.end());
    for (long p : periods) {
        if (static_cast<int>(out.size()) >= levels) break;
        // point period = 8 * tile period for points off the tile centers
        if (p % 8 == 0 && p / 8 != out.back()) out.push_back(p / 8);
    }
    return out;
}

} // namespace octa
