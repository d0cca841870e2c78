#include "octa/pinwheel.hpp"

#include <algorithm>
#include <map>

#include "octa/errors.hpp"

namespace octa {

namespace {

// Line through omega^i and omega^j, oriented from i to j.
OrientedLine octo_line(int i, int j) {
    return OrientedLine(omega_pow(i), omega_pow(j) - omega_pow(i));
}

// Central reflection of octo_line(i, j) through omega^k.
OrientedLine octo_line_reflected(int k, int i, int j) {
    return octo_line(i, j).reflect_through(omega_pow(k));
}

void check_strip_orientations(const StripTriple& t) {
    // Both boundary components must see the strip on their left.
    if (side_of(t.strip.pointed, t.strip.other.anchor) <= 0 ||
        side_of(t.strip.other, t.strip.pointed.anchor) <= 0)
        throw ConstructionAmbiguous("pinwheel strip boundaries are not oriented strip-left");
    // The drift vector must cross the strip.
    QuadVal lv = cross(t.strip.pointed.direction, t.v);
    QuadVal w = t.strip.width_units();
    if (lv != w && lv != -w)
        throw ConstructionAmbiguous("pinwheel drift vector does not cross its strip");
}

} // namespace

PinwheelSystem octagon_pinwheel() {
    PinwheelSystem sys;
    sys.table = octagon_table();
    sys.triples.resize(16);
    for (int m = 0; m < 8; ++m) {
        // 2m:  L = (6+m)(2+m,3+m), other = (2+m,3+m), V = -[2+m,6+m]
        StripTriple even;
        even.strip = Strip(octo_line_reflected(6 + m, 2 + m, 3 + m), octo_line(2 + m, 3 + m));
        even.v = (omega_pow(2 + m) - omega_pow(6 + m)) * QuadVal(2);
        even.lift_i = (2 + m) % 8;
        even.lift_j = (6 + m) % 8;
        sys.triples[2 * m] = even;
        // 2m+1:  L = (6+m,7+m), other = (3+m)(6+m,7+m), V = [6+m,3+m]
        StripTriple odd;
        odd.strip = Strip(octo_line(6 + m, 7 + m), octo_line_reflected(3 + m, 6 + m, 7 + m));
        odd.v = (omega_pow(3 + m) - omega_pow(6 + m)) * QuadVal(2);
        odd.lift_i = (3 + m) % 8;
        odd.lift_j = (6 + m) % 8;
        sys.triples[2 * m + 1] = odd;
    }
    for (const auto& t : sys.triples) check_strip_orientations(t);
    return sys;
}

namespace {

// Exact angular order of nonzero direction vectors, counterclockwise from +x.
int angle_class(const Vec2& d) {
    int sy = d.y.sign(), sx = d.x.sign();
    if (sy == 0) return sx > 0 ? 0 : 4;
    if (sy > 0) return sx > 0 ? 1 : (sx == 0 ? 2 : 3);
    return sx < 0 ? 5 : (sx == 0 ? 6 : 7);
}

bool angle_less(const Vec2& a, const Vec2& b) {
    int ca = angle_class(a), cb = angle_class(b);
    if (ca != cb) return ca < cb;
    return cross(a, b).sign() > 0;
}

} // namespace

PinwheelSystem build_pinwheel(const Table& table) {
    const auto& vs = table.polygon.vertices;
    size_t n = vs.size();
    PinwheelSystem sys;
    sys.table = table;

    // Strips: one per edge; the far boundary is the edge line reflected
    // through a farthest vertex (all farthest vertices land on the
    // centerline, so the choice does not matter).
    std::vector<Strip> strips;
    for (size_t i = 0; i < n; ++i) {
        OrientedLine edge = OrientedLine::through(vs[i], vs[(i + 1) % n]);
        QuadVal best(0);
        size_t far = n;
        for (size_t j = 0; j < n; ++j) {
            QuadVal d = cross(edge.direction, vs[j] - edge.anchor);
            if (d > best) {
                best = d;
                far = j;
            }
        }
        if (far == n) throw ConstructionAmbiguous("degenerate table edge");
        strips.emplace_back(edge, edge.reflect_through(vs[far]));
    }

    // Two pointed strips per strip, with drift vectors from a probe point far
    // along the pointed boundary, just outside the strip.
    const QuadVal T(1024);
    const QuadVal eps(Rational(1, 1024));
    std::vector<StripTriple> triples;
    for (const Strip& s : strips) {
        for (int side = 0; side < 2; ++side) {
            StripTriple t;
            t.strip = (side == 0) ? s : Strip(s.other, s.pointed);
            const OrientedLine& L = t.strip.pointed;
            Vec2 d = L.direction;
            Vec2 left{-d.y, d.x};
            Point2 probe = L.anchor + d * (T / QuadVal(1)) - left * eps;
            // Normalize the reach: use d as given (edge-sized), T copies is far.
            size_t v_idx = ob_support_vertex(table, probe);
            Point2 q1 = vs[v_idx] + (vs[v_idx] - probe);
            size_t w_idx = ob_support_vertex(table, q1);
            t.v = (vs[w_idx] - vs[v_idx]) * QuadVal(2);
            t.lift_i = static_cast<int>(w_idx);
            t.lift_j = static_cast<int>(v_idx);
            check_strip_orientations(t);
            triples.push_back(t);
        }
    }

    // Cyclic order by where the pointed boundary meets a large circle:
    // primary key the direction angle, secondary the signed offset of the
    // line (ascending left-offset meets the circle at a larger angle).
    std::sort(triples.begin(), triples.end(), [](const StripTriple& a, const StripTriple& b) {
        const Vec2& da = a.strip.pointed.direction;
        const Vec2& db = b.strip.pointed.direction;
        if (angle_less(da, db)) return true;
        if (angle_less(db, da)) return false;
        // Parallel same-sense: compare offsets along a common direction.
        Vec2 na{-da.y, da.x};
        QuadVal ka = dot(a.strip.pointed.anchor, na);
        QuadVal kb = dot(b.strip.pointed.anchor, na);
        return ka < kb;
    });
    sys.triples = std::move(triples);
    return sys;
}

PinwheelStep pinwheel_step(const PinwheelSystem& sys, const Point2& p) {
    size_t m = sys.strip_count();
    if (!sys.triples[0].strip.contains(p))
        throw Error("pinwheel_step: point not inside Sigma_0");
    PinwheelStep out;
    out.m.reserve(m);
    Point2 cur = p;
    for (size_t k = 1; k <= m; ++k) {
        const StripTriple& t = sys.triples[k % m];
        auto [img, nk] = strip_map(t.strip, t.v, cur);
        cur = img;
        out.m.push_back(nk);
    }
    out.image = cur;
    return out;
}

std::vector<long> lift_step(const PinwheelSystem& sys, const std::vector<long>& m) {
    size_t cnt = sys.strip_count();
    std::vector<long> lift(sys.vertex_count(), 0);
    for (size_t k = 1; k <= cnt; ++k) {
        const StripTriple& t = sys.triples[k % cnt];
        long mk = m[k - 1];
        lift[t.lift_i] += 2 * mk;
        lift[t.lift_j] -= 2 * mk;
    }
    return lift;
}

std::vector<std::optional<QuadVal>> quasi_rational_check(const PinwheelSystem& sys) {
    size_t m = sys.strip_count();
    std::vector<std::optional<QuadVal>> areas;
    for (size_t k = 0; k < m; ++k) {
        const Strip& s1 = sys.triples[k].strip;
        const Strip& s2 = sys.triples[(k + 1) % m].strip;
        QuadVal det = cross(s1.pointed.direction, s2.pointed.direction);
        if (det.is_zero()) {
            areas.push_back(std::nullopt);
            continue;
        }
        QuadVal w1 = s1.width_units(); // functional widths, unnormalized
        QuadVal w2 = s2.width_units();
        QuadVal area = w1 * w2 / det;
        if (area.sign() < 0) area = -area;
        areas.push_back(area);
    }
    return areas;
}

KiteOrbit kite_fundamental_orbit(const Rational& A, long cap) {
    Kite kite{A};
    PinwheelSystem sys = build_pinwheel(Table(kite.polygon()));
    Point2 p0 = kite.fundamental_point();

    // Rotate the strip order so that the fundamental point lies in Sigma_0.
    size_t m = sys.strip_count();
    size_t shift = m;
    for (size_t k = 0; k < m; ++k) {
        if (sys.triples[k].strip.contains(p0)) {
            shift = k;
            break;
        }
    }
    if (shift == m) throw Error("kite orbit: fundamental point lies in no strip");
    std::rotate(sys.triples.begin(), sys.triples.begin() + shift, sys.triples.end());

    KiteOrbit orbit;
    orbit.lattice_closed = false;
    std::vector<long> pos(4, 0);
    Point2 cur = p0;
    for (long it = 0; it < cap; ++it) {
        orbit.points.push_back(cur);
        PinwheelStep st = pinwheel_step(sys, cur);
        auto lift = lift_step(sys, st.m);
        for (size_t i = 0; i < 4; ++i) pos[i] += lift[i];
        orbit.steps.push_back(std::move(st.m));
        cur = st.image;
        if (cur == p0) {
            orbit.lattice_closed = std::all_of(pos.begin(), pos.end(), [](long v) { return v == 0; });
            return orbit;
        }
    }
    throw OrbitCapExceeded("kite orbit did not close within the cap");
}

} // namespace octa
