#include "octa/geometry.hpp"

#include "octa/errors.hpp"

namespace octa {

Vec2 omega_pow(int k) {
    k = ((k % 8) + 8) % 8;
    const QuadVal h(Rational(0), Rational(1, 2)); // sqrt(2)/2
    switch (k) {
        case 0: return {QuadVal(1), QuadVal(0)};
        case 1: return {h, h};
        case 2: return {QuadVal(0), QuadVal(1)};
        case 3: return {-h, h};
        case 4: return {QuadVal(-1), QuadVal(0)};
        case 5: return {-h, -h};
        case 6: return {QuadVal(0), QuadVal(-1)};
        default: return {h, -h};
    }
}

bool OrientedLine::same_line(const OrientedLine& o) const {
    return cross(direction, o.direction).is_zero() &&
           cross(direction, o.anchor - anchor).is_zero();
}

bool OrientedLine::same_directed_line(const OrientedLine& o) const {
    return same_line(o) && dot(direction, o.direction).sign() > 0;
}

int side_of(const OrientedLine& line, const Point2& p) {
    return cross(line.direction, p - line.anchor).sign();
}

bool Strip::contains(const Point2& p) const {
    QuadVal c = coordinate(p);
    QuadVal w = width_units();
    if (w.sign() > 0) return c.sign() > 0 && (c - w).sign() < 0;
    return c.sign() < 0 && (c - w).sign() > 0;
}

bool Strip::on_boundary(const Point2& p) const {
    QuadVal c = coordinate(p);
    return c.sign() == 0 || (c - width_units()).sign() == 0;
}

std::pair<Point2, long> strip_map(const Strip& strip, const Vec2& v, const Point2& p) {
    QuadVal w = strip.width_units();
    if (w.is_zero()) throw Error("strip_map: degenerate strip");
    QuadVal lv = cross(strip.pointed.direction, v);
    // V must cross the strip: its functional increment equals +-width.
    if (lv != w && lv != -w) throw Error("strip_map: vector does not cross the strip");
    // ell(p + nV) = lv * (t + n); inside means t + n in (0,1) for lv = +w
    // and in (-1,0) for lv = -w.
    QuadVal t = strip.coordinate(p) / lv;
    long ft = t.floor();
    if (t == QuadVal(ft)) throw UndefinedOnLine();
    long n = (lv == w) ? -ft : -ft - 1;
    Point2 image = p + v * QuadVal(n);
    return {image, n};
}

QuadVal ConvexPolygon::area2() const {
    QuadVal s(0);
    size_t n = vertices.size();
    for (size_t i = 0; i < n; ++i) s += cross(vertices[i], vertices[(i + 1) % n]);
    return s;
}

Point2 ConvexPolygon::vertex_centroid() const {
    QuadVal sx(0), sy(0);
    for (const auto& v : vertices) {
        sx += v.x;
        sy += v.y;
    }
    QuadVal n(Rational(static_cast<long>(vertices.size())));
    return {sx / n, sy / n};
}

ConvexPolygon ConvexPolygon::translated(const Vec2& v) const {
    ConvexPolygon out;
    out.vertices.reserve(vertices.size());
    for (const auto& p : vertices) out.vertices.push_back(p + v);
    return out;
}

int ConvexPolygon::locate(const Point2& p) const {
    size_t n = vertices.size();
    bool boundary = false;
    for (size_t i = 0; i < n; ++i) {
        const Point2& a = vertices[i];
        const Point2& b = vertices[(i + 1) % n];
        int s = cross(b - a, p - a).sign();
        if (s < 0) return -1;
        if (s == 0) {
            // On the edge line; inside the segment span?
            QuadVal d = dot(b - a, p - a);
            if (d.sign() >= 0 && (d - (b - a).norm2()).sign() <= 0) boundary = true;
            else return -1;
        }
    }
    return boundary ? 0 : 1;
}

int ConvexPolygon::locate_simple(const Point2& p) const {
    size_t n = vertices.size();
    long wn = 0;
    for (size_t i = 0; i < n; ++i) {
        const Point2& a = vertices[i];
        const Point2& b = vertices[(i + 1) % n];
        // On the closed segment ab?
        if (cross(b - a, p - a).is_zero()) {
            QuadVal d = dot(b - a, p - a);
            if (d.sign() >= 0 && (d - (b - a).norm2()).sign() <= 0) return 0;
        }
        int ay = (a.y - p.y).sign();
        int by = (b.y - p.y).sign();
        if (ay <= 0) {
            if (by > 0 && cross(b - a, p - a).sign() > 0) ++wn;
        } else {
            if (by <= 0 && cross(b - a, p - a).sign() < 0) --wn;
        }
    }
    return wn != 0 ? 1 : -1;
}

std::vector<ConvexPolygon> ConvexPolygon::triangulate() const {
    ConvexPolygon poly = normalized();
    if (poly.area2().sign() < 0)
        std::reverse(poly.vertices.begin(), poly.vertices.end());
    std::vector<Point2> vs = poly.vertices;
    std::vector<ConvexPolygon> out;
    while (vs.size() > 3) {
        size_t n = vs.size();
        bool clipped = false;
        for (size_t i = 0; i < n && !clipped; ++i) {
            const Point2& a = vs[(i + n - 1) % n];
            const Point2& b = vs[i];
            const Point2& c = vs[(i + 1) % n];
            if (cross(b - a, c - b).sign() <= 0) continue; // reflex or flat
            ConvexPolygon ear({a, b, c});
            bool empty = true;
            for (size_t j = 0; j < n && empty; ++j) {
                if (j == i || j == (i + n - 1) % n || j == (i + 1) % n) continue;
                if (ear.locate(vs[j]) >= 0) empty = false;
            }
            if (!empty) continue;
            out.push_back(ear);
            vs.erase(vs.begin() + static_cast<long>(i));
            clipped = true;
        }
        if (!clipped) throw Error("triangulate: no ear found (polygon not simple?)");
    }
    out.emplace_back(ConvexPolygon(vs));
    return out;
}

bool ConvexPolygon::is_convex_ccw() const {
    size_t n = vertices.size();
    if (n < 3) return false;
    for (size_t i = 0; i < n; ++i) {
        const Point2& a = vertices[i];
        const Point2& b = vertices[(i + 1) % n];
        const Point2& c = vertices[(i + 2) % n];
        if (cross(b - a, c - b).sign() < 0) return false;
    }
    return area2().sign() > 0;
}

ConvexPolygon ConvexPolygon::normalized() const {
    std::vector<Point2> out;
    size_t n = vertices.size();
    for (size_t i = 0; i < n; ++i) {
        const Point2& prev = vertices[(i + n - 1) % n];
        const Point2& cur = vertices[i];
        const Point2& next = vertices[(i + 1) % n];
        if (cur == next) continue;
        if (cross(cur - prev, next - cur).is_zero()) continue;
        out.push_back(cur);
    }
    return ConvexPolygon(std::move(out));
}

bool ConvexPolygon::same_polygon(const ConvexPolygon& o) const {
    ConvexPolygon a = normalized();
    ConvexPolygon b = o.normalized();
    size_t n = a.size();
    if (n != b.size()) return false;
    for (size_t shift = 0; shift < n; ++shift) {
        bool ok = true;
        for (size_t i = 0; i < n && ok; ++i)
            if (a.vertices[i] != b.vertices[(i + shift) % n]) ok = false;
        if (ok) return true;
    }
    return false;
}

ConvexPolygon regular_octagon(const Point2& c, const QuadVal& r) {
    ConvexPolygon out;
    out.vertices.reserve(8);
    for (int k = 0; k < 8; ++k) out.vertices.push_back(c + omega_pow(k) * r);
    return out;
}

std::pair<std::optional<ConvexPolygon>, std::optional<ConvexPolygon>>
clip(const ConvexPolygon& poly, const OrientedLine& line) {
    std::vector<Point2> left, right;
    size_t n = poly.vertices.size();
    for (size_t i = 0; i < n; ++i) {
        const Point2& a = poly.vertices[i];
        const Point2& b = poly.vertices[(i + 1) % n];
        int sa = side_of(line, a);
        int sb = side_of(line, b);
        if (sa >= 0) left.push_back(a);
        if (sa <= 0) right.push_back(a);
        if ((sa > 0 && sb < 0) || (sa < 0 && sb > 0)) {
            // Exact intersection of segment ab with the line.
            QuadVal t = cross(line.direction, line.anchor - a) / cross(line.direction, b - a);
            Point2 x = a + (b - a) * t;
            left.push_back(x);
            right.push_back(x);
        }
    }
    auto pack = [](std::vector<Point2> vs) -> std::optional<ConvexPolygon> {
        ConvexPolygon p(std::move(vs));
        p = p.normalized();
        if (p.size() < 3 || p.area2().sign() <= 0) return std::nullopt;
        return p;
    };
    return {pack(std::move(left)), pack(std::move(right))};
}

Similarity Similarity::rotation45(const Point2& c, int k) {
    Similarity s;
    s.lin = omega_pow(k);
    s.conjugate = false;
    s.trans = c - s.lin.cmul(c);
    return s;
}

ConvexPolygon Similarity::operator()(const ConvexPolygon& poly) const {
    ConvexPolygon out;
    out.vertices.reserve(poly.size());
    for (const auto& p : poly.vertices) out.vertices.push_back((*this)(p));
    if (conjugate) { // mirror reverses orientation; restore ccw order
        std::vector<Point2> rev(out.vertices.rbegin(), out.vertices.rend());
        out.vertices = std::move(rev);
    }
    return out;
}

Similarity Similarity::compose(const Similarity& inner) const {
    // this(inner(z)). With m = lin, c = conjugate, t = trans:
    //   inner(z) = m1 * (z or conj z) + t1
    //   result   = m2 * (inner or conj inner) + t2
    Similarity r;
    if (!conjugate) {
        r.lin = lin.cmul(inner.lin);
        r.conjugate = inner.conjugate;
        r.trans = lin.cmul(inner.trans) + trans;
    } else {
        r.lin = lin.cmul(inner.lin.cconj());
        r.conjugate = !inner.conjugate;
        r.trans = lin.cmul(inner.trans.cconj()) + trans;
    }
    return r;
}

Similarity Similarity::inverse() const {
    QuadVal n = lin.norm2();
    if (n.is_zero()) throw Error("Similarity: not invertible");
    Vec2 linv{lin.x / n, -lin.y / n}; // 1/lin
    Similarity r;
    if (!conjugate) {
        r.lin = linv;
        r.conjugate = false;
        r.trans = -linv.cmul(trans);
    } else {
        // w = m conj(z) + t  =>  z = conj((w - t)/m) = conj(1/m) conj(w) - conj(t/m)
        Vec2 linvc = linv.cconj();
        r.lin = linvc;
        r.conjugate = true;
        r.trans = -linvc.cmul(trans.cconj());
    }
    return r;
}

namespace {

// 1D overlap of [a1,a2] and [b1,b2] given as QuadVals (unordered).
bool spans_overlap(QuadVal a1, QuadVal a2, QuadVal b1, QuadVal b2) {
    if (a1 > a2) std::swap(a1, a2);
    if (b1 > b2) std::swap(b1, b2);
    return !(a2 < b1 || b2 < a1);
}

} // namespace

bool segments_intersect(const Point2& a, const Point2& b, const Point2& c, const Point2& d) {
    QuadVal d1 = cross(b - a, c - a);
    QuadVal d2 = cross(b - a, d - a);
    QuadVal d3 = cross(d - c, a - c);
    QuadVal d4 = cross(d - c, b - c);
    int s1 = d1.sign(), s2 = d2.sign(), s3 = d3.sign(), s4 = d4.sign();
    if (((s1 > 0 && s2 < 0) || (s1 < 0 && s2 > 0)) &&
        ((s3 > 0 && s4 < 0) || (s3 < 0 && s4 > 0)))
        return true;
    // Collinear / touching cases.
    auto on_segment = [](const Point2& p, const Point2& q, const Point2& r) {
        // r collinear with pq assumed; is r within the bounding box?
        return spans_overlap(p.x, q.x, r.x, r.x) && spans_overlap(p.y, q.y, r.y, r.y);
    };
    if (s1 == 0 && on_segment(a, b, c)) return true;
    if (s2 == 0 && on_segment(a, b, d)) return true;
    if (s3 == 0 && on_segment(c, d, a)) return true;
    if (s4 == 0 && on_segment(c, d, b)) return true;
    return false;
}

bool polyline_is_simple(const std::vector<Point2>& pts, bool closed) {
    size_t n = pts.size();
    if (n < 3) return true;
    size_t edges = closed ? n : n - 1;
    for (size_t i = 0; i < edges; ++i) {
        Point2 a = pts[i], b = pts[(i + 1) % n];
        for (size_t j = i + 1; j < edges; ++j) {
            bool adjacent = (j == i + 1) || (closed && i == 0 && j == edges - 1);
            Point2 c = pts[j], d = pts[(j + 1) % n];
            if (adjacent) {
                // Only the shared endpoint may coincide.
                Point2 shared = (j == i + 1) ? b : a;
                Point2 afar = (j == i + 1) ? a : b;
                Point2 cfar = (j == i + 1) ? d : c;
                if (segments_intersect(a, b, c, d)) {
                    // Full overlap (backtracking) counts as non-simple.
                    if (cross(b - a, d - c).is_zero() &&
                        dot(afar - shared, cfar - shared).sign() > 0)
                        return false;
                }
                continue;
            }
            if (segments_intersect(a, b, c, d)) return false;
        }
    }
    return true;
}

} // namespace octa
