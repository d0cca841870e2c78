#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "octa/quadval.hpp"

namespace octa {

struct Vec2 {
    QuadVal x, y;
    Vec2() = default;
    Vec2(QuadVal x, QuadVal y) : x(std::move(x)), y(std::move(y)) {}

    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator-() const { return {-x, -y}; }
    Vec2 operator*(const QuadVal& k) const { return {x * k, y * k}; }
    bool operator==(const Vec2& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Vec2& o) const { return !(*this == o); }
    bool is_zero() const { return x.is_zero() && y.is_zero(); }

    /// Complex multiplication, treating (x, y) as x + iy.
    Vec2 cmul(const Vec2& o) const { return {x * o.x - y * o.y, x * o.y + y * o.x}; }
    Vec2 cconj() const { return {x, -y}; }
    QuadVal norm2() const { return x * x + y * y; }
};

using Point2 = Vec2;

inline QuadVal cross(const Vec2& u, const Vec2& v) { return u.x * v.y - u.y * v.x; }
inline QuadVal dot(const Vec2& u, const Vec2& v) { return u.x * v.x + u.y * v.y; }

/// Primitive 8th root of unity omega^k as an exact vector; omega = e^{i pi/4}.
Vec2 omega_pow(int k);

/// Directed line through `anchor` along `direction` (nonzero).
struct OrientedLine {
    Point2 anchor;
    Vec2 direction;

    OrientedLine() = default;
    OrientedLine(Point2 a, Vec2 d) : anchor(std::move(a)), direction(std::move(d)) {}
    static OrientedLine through(const Point2& p, const Point2& q) {
        return OrientedLine(p, q - p);
    }

    /// Same line as a point set, regardless of orientation or anchor.
    bool same_line(const OrientedLine& o) const;
    /// Equal up to positive reparametrization: same set and same direction sense.
    bool same_directed_line(const OrientedLine& o) const;
    OrientedLine reversed() const { return OrientedLine(anchor, -direction); }
    /// Image under point reflection through c.
    OrientedLine reflect_through(const Point2& c) const {
        return OrientedLine(c + (c - anchor), -direction);
    }
    OrientedLine translated(const Vec2& v) const { return OrientedLine(anchor + v, direction); }
};

/// Exact side of directed line: +1 left, 0 on, -1 right.
int side_of(const OrientedLine& line, const Point2& p);

/// Infinite strip between two parallel boundary lines with a preferred
/// ("pointed") boundary component. Interior is strictly between the lines;
/// boundary points are outside the strip for every map defined on it.
struct Strip {
    OrientedLine pointed;  // the line L of the pointed strip (Sigma, L)
    OrientedLine other;    // the second boundary component

    Strip() = default;
    Strip(OrientedLine l, OrientedLine o) : pointed(std::move(l)), other(std::move(o)) {}

    /// Signed coordinate across the strip: 0 on `pointed`, `width_units`
    /// on `other`, measured by the unnormalized functional cross(d, p - a).
    QuadVal coordinate(const Point2& p) const { return cross(pointed.direction, p - pointed.anchor); }
    QuadVal width_units() const { return coordinate(other.anchor); }

    bool contains(const Point2& p) const;   // strictly inside
    bool on_boundary(const Point2& p) const;
};

/// Strip map f(p) = p + n V with the unique n putting p + nV inside the strip.
/// Throws UndefinedOnLine when p + nV would land on a boundary line.
/// Returns the pair (f(p), n).
std::pair<Point2, long> strip_map(const Strip& strip, const Vec2& v, const Point2& p);

/// Simple polygon with counterclockwise vertex order. Strict convexity is the
/// caller's concern: billiard tables must be strictly convex, partition cells
/// only simple and convex.
struct ConvexPolygon {
    std::vector<Point2> vertices;

    ConvexPolygon() = default;
    explicit ConvexPolygon(std::vector<Point2> vs) : vertices(std::move(vs)) {}

    size_t size() const { return vertices.size(); }
    /// Twice the signed area (shoelace); positive for ccw order.
    QuadVal area2() const;
    QuadVal area() const { return area2() / QuadVal(2); }
    /// Average of the vertices; interior for convex polygons.
    Point2 vertex_centroid() const;
    ConvexPolygon translated(const Vec2& v) const;

    /// Exact location: +1 strict interior, 0 boundary, -1 outside.
    /// Requires convexity and ccw order.
    int locate(const Point2& p) const;

    /// Exact location for arbitrary simple polygons (winding number).
    int locate_simple(const Point2& p) const;

    /// Exact ear-clipping triangulation (simple polygons, any orientation
    /// handled by normalizing to ccw first).
    std::vector<ConvexPolygon> triangulate() const;

    bool is_convex_ccw() const;
    /// Drops consecutive duplicate and collinear vertices.
    ConvexPolygon normalized() const;
    bool same_polygon(const ConvexPolygon& o) const; // same cyclic vertex set
};

/// Regular octagon with circumradius r about c, vertices at angles k*pi/4.
ConvexPolygon regular_octagon(const Point2& c, const QuadVal& r);

/// Split a convex polygon by a line: returns the (closed) piece left of the
/// line and the piece right of it. Pieces with exact zero area are absent.
std::pair<std::optional<ConvexPolygon>, std::optional<ConvexPolygon>>
clip(const ConvexPolygon& poly, const OrientedLine& line);

/// Direct or mirror similarity z -> lin * z + t or lin * conj(z) + t, with the
/// linear coefficient `lin` as a complex number over Q(sqrt 2).
struct Similarity {
    Vec2 lin{QuadVal(1), QuadVal(0)};
    bool conjugate = false;
    Vec2 trans{QuadVal(0), QuadVal(0)};

    static Similarity identity() { return {}; }
    static Similarity translation(const Vec2& t) { return {{QuadVal(1), QuadVal(0)}, false, t}; }
    /// Rotation by k * 45 degrees about c (exact).
    static Similarity rotation45(const Point2& c, int k);

    Point2 operator()(const Point2& p) const {
        Vec2 z = conjugate ? p.cconj() : p;
        return lin.cmul(z) + trans;
    }
    ConvexPolygon operator()(const ConvexPolygon& poly) const;

    Similarity compose(const Similarity& inner) const; // this ∘ inner
    Similarity inverse() const;
    QuadVal scale2() const { return lin.norm2(); }
    bool orientation_reversing() const { return conjugate; }
};

/// Exact segment intersection test (closed segments, shared endpoints count).
bool segments_intersect(const Point2& a, const Point2& b, const Point2& c, const Point2& d);

/// True if the closed polyline is simple (no self intersections besides the
/// shared endpoints of consecutive edges and the closing vertex).
bool polyline_is_simple(const std::vector<Point2>& pts, bool closed);

} // namespace octa
