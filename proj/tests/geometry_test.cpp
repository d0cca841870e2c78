#include <doctest.h>

#include <random>

#include "octa/errors.hpp"
#include "octa/geometry.hpp"

using namespace octa;

namespace {
QuadVal qv(long an, long ad, long bn, long bd) { return QuadVal::make(an, ad, bn, bd); }
Point2 pt(long x, long y) { return {QuadVal(x), QuadVal(y)}; }
} // namespace

TEST_CASE("side_of worked examples") {
    OrientedLine xaxis(pt(0, 0), {QuadVal(1), QuadVal(0)});
    CHECK(side_of(xaxis, pt(0, 1)) == 1);
    CHECK(side_of(xaxis, pt(5, 0)) == 0);
    // line y = 2 + sqrt 2 oriented +x; p = (0, 1 + sqrt 2) is below.
    OrientedLine high({QuadVal(0), qv(2, 1, 1, 1)}, {QuadVal(1), QuadVal(0)});
    CHECK(side_of(high, {QuadVal(0), qv(1, 1, 1, 1)}) == -1);
}

TEST_CASE("strip_map on the horizontal unit strip") {
    // Strip 0 < y < 1, V = (0,1).
    Strip strip(OrientedLine(pt(0, 0), {QuadVal(1), QuadVal(0)}),
                OrientedLine(pt(0, 1), {QuadVal(-1), QuadVal(0)}));
    Vec2 v{QuadVal(0), QuadVal(1)};
    auto [img, n] = strip_map(strip, v, {QuadVal(5), qv(9, 4, 0, 1)});
    CHECK(img == Point2{QuadVal(5), qv(1, 4, 0, 1)});
    CHECK(n == -2);

    auto [img2, n2] = strip_map(strip, v, {QuadVal(5), qv(1, 3, 0, 1)});
    CHECK(n2 == 0);
    CHECK(img2 == Point2{QuadVal(5), qv(1, 3, 0, 1)});

    CHECK_THROWS_AS(strip_map(strip, v, pt(5, 3)), UndefinedOnLine);
    CHECK_THROWS_AS(strip_map(strip, v, pt(5, 0)), UndefinedOnLine);

    // Replacing V by -V gives the same map.
    std::mt19937 rng(3);
    std::uniform_int_distribution<long> d(-40, 40);
    for (int i = 0; i < 200; ++i) {
        Point2 p{QuadVal(Rational(d(rng), 7)), QuadVal(Rational(d(rng), 9))};
        Point2 a, b;
        bool ta = false, tb = false;
        try {
            a = strip_map(strip, v, p).first;
        } catch (const UndefinedOnLine&) {
            ta = true;
        }
        try {
            b = strip_map(strip, -v, p).first;
        } catch (const UndefinedOnLine&) {
            tb = true;
        }
        CHECK(ta == tb);
        if (!ta) CHECK(a == b);
    }
}

TEST_CASE("clip splits the unit square") {
    ConvexPolygon square({pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)});
    OrientedLine vert({qv(1, 2, 0, 1), QuadVal(0)}, {QuadVal(0), QuadVal(1)});
    auto [left, right] = clip(square, vert);
    REQUIRE(left.has_value());
    REQUIRE(right.has_value());
    CHECK(left->area() == qv(1, 2, 0, 1));
    CHECK(right->area() == qv(1, 2, 0, 1));
    // Polygon entirely left of a far line.
    OrientedLine far(pt(10, 0), {QuadVal(0), QuadVal(1)});
    auto [l2, r2] = clip(square, far);
    CHECK(l2.has_value());
    CHECK(!r2.has_value());
    CHECK(l2->same_polygon(square));
}

TEST_CASE("clip octagon by its vertical diameter preserves area") {
    ConvexPolygon oct = regular_octagon({qv(2, 1, 1, 1), QuadVal(2)}, qv(0, 1, 1, 1) - QuadVal(0));
    OrientedLine diam({qv(2, 1, 1, 1), QuadVal(0)}, {QuadVal(0), QuadVal(1)});
    auto [l, r] = clip(oct, diam);
    REQUIRE(l.has_value());
    REQUIRE(r.has_value());
    CHECK(l->area() + r->area() == oct.area());
    // Shared edge endpoints coincide exactly: both halves contain the poles.
    CHECK(l->locate(oct.vertices[2]) == 0);
    CHECK(r->locate(oct.vertices[2]) == 0);
}

TEST_CASE("clip pieces partition: random convex polygons") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<long> d(-20, 20);
    ConvexPolygon oct = regular_octagon(pt(0, 0), QuadVal(4));
    for (int i = 0; i < 100; ++i) {
        Point2 a{QuadVal(Rational(d(rng), 3)), QuadVal(Rational(d(rng), 3))};
        Vec2 dir{QuadVal(Rational(d(rng), 2)), QuadVal(Rational(d(rng), 2))};
        if (dir.is_zero()) continue;
        auto [l, r] = clip(oct, OrientedLine(a, dir));
        QuadVal total(0);
        if (l) total += l->area();
        if (r) total += r->area();
        CHECK(total == oct.area());
    }
}

TEST_CASE("locate on convex polygon") {
    ConvexPolygon tri({pt(0, 0), pt(4, 0), pt(0, 4)});
    CHECK(tri.locate(pt(1, 1)) == 1);
    CHECK(tri.locate(pt(2, 2)) == 0);
    CHECK(tri.locate(pt(0, 0)) == 0);
    CHECK(tri.locate(pt(3, 3)) == -1);
    CHECK(tri.locate(pt(-1, 2)) == -1);
}

TEST_CASE("similarity composition and inverse") {
    Similarity rot = Similarity::rotation45({qv(1, 2, 3, 4), QuadVal(2)}, 3);
    Similarity mir;
    mir.conjugate = true;
    mir.lin = omega_pow(1);
    mir.trans = {QuadVal(1), qv(0, 1, 1, 2)};
    std::mt19937 rng(5);
    std::uniform_int_distribution<long> d(-9, 9);
    for (int i = 0; i < 100; ++i) {
        Point2 p{QuadVal(Rational(d(rng), 4)), QuadVal(Rational(d(rng), 4))};
        CHECK(rot.inverse()(rot(p)) == p);
        CHECK(mir.inverse()(mir(p)) == p);
        CHECK(rot.compose(mir)(p) == rot(mir(p)));
        CHECK(mir.compose(mir)(p) == mir(mir(p)));
    }
    CHECK(Similarity::identity()(pt(3, 7)) == pt(3, 7));
    // Identity similarity leaves polygons unchanged.
    ConvexPolygon oct = regular_octagon(pt(1, 1), QuadVal(2));
    CHECK(Similarity::identity()(oct).same_polygon(oct));
    // rotation45 has scale 1 and order 8.
    Similarity r8 = rot;
    for (int k = 0; k < 7; ++k) r8 = r8.compose(rot);
    CHECK(r8(pt(5, -3)) == pt(5, -3));
}

TEST_CASE("predicates are order independent") {
    ConvexPolygon oct = regular_octagon(pt(0, 0), QuadVal(2));
    ConvexPolygon rot(std::vector<Point2>(oct.vertices.begin() + 3, oct.vertices.end()));
    rot.vertices.insert(rot.vertices.end(), oct.vertices.begin(), oct.vertices.begin() + 3);
    CHECK(oct.same_polygon(rot));
    for (long x = -3; x <= 3; ++x)
        for (long y = -3; y <= 3; ++y) CHECK(oct.locate(pt(x, y)) == rot.locate(pt(x, y)));
}

TEST_CASE("simple polyline detection") {
    std::vector<Point2> square{pt(0, 0), pt(2, 0), pt(2, 2), pt(0, 2)};
    CHECK(polyline_is_simple(square, true));
    std::vector<Point2> bowtie{pt(0, 0), pt(2, 2), pt(2, 0), pt(0, 2)};
    CHECK(!polyline_is_simple(bowtie, true));
    std::vector<Point2> open{pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 2)};
    CHECK(polyline_is_simple(open, false));
    std::vector<Point2> touch{pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 0)};
    CHECK(!polyline_is_simple(touch, false)); // open chain returning to start
}
