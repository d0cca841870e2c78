#include "octa/octagon_dynamics.hpp"

#include <algorithm>
#include <map>

#include "octa/errors.hpp"

namespace octa {

namespace {

const QuadVal S{Rational(1), Rational(1)};   // s = 1 + sqrt 2
const QuadVal H{Rational(0), Rational(1, 2)};// sqrt(2)/2
const QuadVal T{Rational(-1), Rational(1)};  // sqrt 2 - 1 = 1/s

Point2 qp(QuadVal x, QuadVal y) { return {std::move(x), std::move(y)}; }

// Centerline of Sigma_0: y = (sqrt 2 - 1) x - 1, through the left pinch (s, 0).
OrientedLine centerline() { return OrientedLine(qp(S, QuadVal(0)), {QuadVal(1), T}); }

ConvexPolygon ccw(ConvexPolygon p) {
    if (p.area2().sign() < 0) std::reverse(p.vertices.begin(), p.vertices.end());
    return p;
}

// A fragment of R_1 being pushed through the strip maps. The current
// position of the piece is poly translated by shift.
struct Frag {
    ConvexPolygon poly; // in domain coordinates
    Vec2 shift{QuadVal(0), QuadVal(0)};
    std::vector<long> m;
};

} // namespace

const OctagonDynamics& OctagonDynamics::instance() {
    static OctagonDynamics inst;
    return inst;
}

OctagonDynamics::OctagonDynamics() {
    pinwheel_ = octagon_pinwheel();
    build_atlas();
    derive_partition();
    build_theta();
}

void OctagonDynamics::build_atlas() {
    RegionAtlas& a = atlas_;
    const QuadVal one(1), two(2);

    // R_1: the strip region between the two necklace pinches, bounded by the
    // flanks of the four necklace octagons P+(s,+-1), P+(2s,0), P+(2s,2).
    {
        std::vector<Point2> v;
        auto oct = [&](QuadVal cx, QuadVal cy, int k) { return qp(cx, cy) + omega_pow(k); };
        // right flank of P+(s,-1), top to bottom
        v.push_back(qp(S, QuadVal(0)));
        v.push_back(oct(S, QuadVal(-1), 1));
        v.push_back(oct(S, QuadVal(-1), 0));
        v.push_back(oct(S, QuadVal(-1), 7));
        v.push_back(qp(S, QuadVal(-2)));
        // bottom boundary to the lower right octagon P+(2s,0)
        v.push_back(qp(two * S, QuadVal(-1)));
        v.push_back(oct(two * S, QuadVal(0), 5));
        v.push_back(oct(two * S, QuadVal(0), 4));
        v.push_back(oct(two * S, QuadVal(0), 3));
        v.push_back(qp(two * S, one)); // zeta, the right pinch
        v.push_back(oct(two * S, two, 5));
        v.push_back(oct(two * S, two, 4));
        v.push_back(oct(two * S, two, 3));
        // top boundary back to P+(s,1)
        v.push_back(qp(S, two));
        v.push_back(oct(S, one, 1));
        v.push_back(oct(S, one, 0));
        v.push_back(oct(S, one, 7));
        a.r1 = ConvexPolygon(v);
        if (a.r1.area() != QuadVal(4)) throw AtlasInconsistent("area(R_1) != 4");
    }
    auto [upper, lower] = clip(a.r1, centerline());
    if (!upper || !lower) throw AtlasInconsistent("centerline does not split R_1");
    a.r = upper->normalized();
    if (a.r.area() != QuadVal(2)) throw AtlasInconsistent("area(R) != 2");

    a.c1 = qp(QuadVal(3) * S / two, QuadVal(Rational(1, 2)));
    a.c2 = qp(QuadVal(3) * S / two, QuadVal(Rational(3, 2)));
    a.c3 = qp(two + QuadVal::sqrt2(), two);
    a.c4 = qp(two * QuadVal::sqrt2(), two);
    a.o3 = regular_octagon(a.c3, T);
    a.o4 = regular_octagon(a.c4, T * T);
    a.o3_twin = regular_octagon(qp(one + two * QuadVal::sqrt2(), one), T);

    // B_1 triangle and the B_2 u B_3 kite, from the printed coordinates.
    ConvexPolygon b1 = ccw(ConvexPolygon({qp(S, two),
                                          qp((QuadVal(3) + S) / two, (QuadVal(3) * S - QuadVal(3)) / two),
                                          qp((QuadVal(3) * S - two) / two, (two * S - one) / two)}));
    ConvexPolygon pent = ccw(ConvexPolygon({
        qp((QuadVal(5) * S - QuadVal(6)) / two, (two * S - one) / two),
        qp((QuadVal(4) * S - QuadVal(4)) / two, (QuadVal(4) * S - QuadVal(6)) / two),
        qp((QuadVal(3) * S - two) / two, (two * S - one) / two),
        qp((S + QuadVal(3)) / two, (QuadVal(3) * S - QuadVal(3)) / two),
        qp((two * S + one) / two, (S + two) / two)}));
    ConvexPolygon kite = ccw(ConvexPolygon({qp(S + H, one + H),
                                            qp((two * S + one) / two, (S + two) / two),
                                            qp((S + QuadVal(3)) / two, (QuadVal(3) * S - QuadVal(3)) / two),
                                            qp((QuadVal(3) * S - two) / two, (two * S - one) / two)}));

    Similarity r4_3 = Similarity::rotation45(a.c4, 3);
    Similarity r4_5 = Similarity::rotation45(a.c4, 5);
    Similarity r3_5 = Similarity::rotation45(a.c3, 5);
    Similarity r3_2 = Similarity::rotation45(a.c3, 2);
    Similarity r2_4 = Similarity::rotation45(a.c2, 4);

    a.cells[0] = a.o3;
    a.cells[1] = b1;
    a.cells[2] = r4_3(b1);
    a.cells[3] = pent;
    a.cells[4] = r4_5(b1);
    a.cells[5] = r3_5(b1);
    a.cells[6] = r3_5(kite);
    a.cells[7] = r3_5(a.cells[4]);
    a.cells[8] = r3_2(b1);
    a.cells[9] = r3_2(kite);
    a.cells[10] = r3_2(a.cells[4]);
    for (int k = 0; k <= 10; ++k) a.cells[11 + k] = r2_4(a.cells[k]);

    QuadVal total(0);
    for (const auto& c : a.cells) total += c.area();
    if (total != a.r.area())
        throw AtlasInconsistent("the 22 cells do not have total area 2: " + total.str());
}

Point2 OctagonDynamics::phi(const Point2& p) const { return pinwheel_step(pinwheel_, p).image; }

void OctagonDynamics::derive_partition() {
    // Push R_1 through the sixteen strip maps, splitting at each map's
    // undefined-line family and accumulating the exponents m_1..m_16.
    std::vector<Frag> done;
    std::vector<Frag> work;
    for (const auto& tri0 : atlas_.r1.triangulate())
        work.push_back({tri0, {QuadVal(0), QuadVal(0)}, {}});
    for (size_t step = 1; step <= 16; ++step) {
        const StripTriple& tri = pinwheel_.triples[step % 16];
        QuadVal lv = cross(tri.strip.pointed.direction, tri.v);
        QuadVal w = tri.strip.width_units();
        bool pos = (lv == w);
        std::vector<Frag> next;
        while (!work.empty()) {
            Frag f = std::move(work.back());
            work.pop_back();
            // tau values of the current position of the fragment
            QuadVal tmin, tmax;
            bool first = true;
            for (const auto& vert : f.poly.vertices) {
                QuadVal tau = tri.strip.coordinate(vert + f.shift) / lv;
                if (first || tau < tmin) tmin = tau;
                if (first || tau > tmax) tmax = tau;
                first = false;
            }
            long lo = tmin.floor();
            if (QuadVal(lo + 1) < tmax) {
                // split at tau = lo+1: the line ell(x) = (lo+1) lv
                Point2 anchor = tri.strip.pointed.anchor + tri.v * QuadVal(lo + 1) - f.shift;
                auto [l, r] = clip(f.poly, OrientedLine(anchor, tri.strip.pointed.direction));
                if (l) work.push_back({*l, f.shift, f.m});
                if (r) work.push_back({*r, f.shift, f.m});
                continue;
            }
            long n = pos ? -lo : -lo - 1;
            f.shift = f.shift + tri.v * QuadVal(n);
            f.m.push_back(n);
            next.push_back(std::move(f));
        }
        work = std::move(next);
    }
    done = std::move(work);

    // Split by the preimage of the centerline (cells differ in whether the
    // sigma correction fires), then by the centerline itself (top and bottom
    // copies of each region).
    std::vector<Frag> sides;
    for (auto& f : done) {
        OrientedLine pre = centerline().translated(-f.shift);
        auto [up, dn] = clip(f.poly, pre);
        if (up) sides.push_back({*up, f.shift, f.m});
        if (dn) sides.push_back({*dn, f.shift, f.m});
    }
    std::vector<Frag> halves;
    for (auto& f : sides) {
        auto [up, dn] = clip(f.poly, centerline());
        if (up) halves.push_back({*up, f.shift, f.m});
        if (dn) halves.push_back({*dn, f.shift, f.m});
    }

    // Assign fragments to atlas cells and their sigma^-1 copies.
    struct CellData {
        bool seen = false;
        Vec2 shift;
        std::vector<long> lift;
        QuadVal area;
    };
    std::array<CellData, 22> top, bottom;
    const Vec2 down{QuadVal(0), QuadVal(-2)};
    for (auto& f : halves) {
        Point2 c = f.poly.vertex_centroid();
        std::vector<long> lift = lift_step(pinwheel_, f.m);
        int hits = 0;
        for (int r = 0; r < 22; ++r) {
            bool in_top = atlas_.cells[r].locate(c) > 0;
            bool in_bot = atlas_.cells[r].locate(c - down) > 0;
            if (!in_top && !in_bot) continue;
            ++hits;
            CellData& d = in_top ? top[r] : bottom[r];
            if (!d.seen) {
                d = {true, f.shift, lift, f.poly.area()};
            } else {
                if (!(d.shift == f.shift) || d.lift != lift)
                    throw AtlasInconsistent("cell " + std::to_string(r) +
                                            " has fragments with unequal actions");
                d.area += f.poly.area();
            }
        }
        if (hits != 1)
            throw AtlasInconsistent("fragment centroid not in exactly one cell copy");
    }
    for (int r = 0; r < 22; ++r) {
        if (!top[r].seen || !bottom[r].seen)
            throw AtlasInconsistent("cell " + std::to_string(r) + " received no fragment");
        if (top[r].area != atlas_.cells[r].area() || bottom[r].area != atlas_.cells[r].area())
            throw AtlasInconsistent("cell " + std::to_string(r) + " is not exactly tiled");

        PartitionCell& cell = cells_[r];
        cell.polygon = atlas_.cells[r];
        cell.lift0 = top[r].lift;
        cell.lift1 = bottom[r].lift;
        // Parity: sigma fires iff Phi sends the cell into the bottom half.
        Point2 sample = atlas_.cells[r].vertex_centroid();
        Point2 image = sample + top[r].shift;
        int side = side_of(centerline(), image);
        if (side == 0) throw AtlasInconsistent("cell image touches the centerline");
        cell.parity = side < 0 ? 1 : 0;
        cell.translation =
            cell.parity ? top[r].shift + Vec2{QuadVal(0), QuadVal(2)} : top[r].shift;
    }
}

void OctagonDynamics::build_theta() {
    // Theta(z) = conj(a z + b). The printed value of a has twice the right
    // modulus (the section that lists it also halves all its coordinate
    // data); the renormalization identity picks the correct scaling.
    const QuadVal sp1 = S + QuadVal(1);
    std::vector<std::pair<Vec2, Vec2>> candidates = {
        {{sp1 / QuadVal(2), sp1 / QuadVal(2)}, {QuadVal(0), -QuadVal(3) * sp1}},
        {{sp1, sp1}, {QuadVal(0), -QuadVal(3) * sp1}},
        {{sp1 / QuadVal(2), sp1 / QuadVal(2)}, {QuadVal(0), -QuadVal(3) * sp1 / QuadVal(2)}},
        {{sp1, sp1}, {QuadVal(0), -QuadVal(3) * sp1 / QuadVal(2)}},
    };
    for (const auto& [a, b] : candidates) {
        Similarity th;
        th.conjugate = true;
        th.lin = a.cconj();
        th.trans = b.cconj();
        Similarity thi = th.inverse();
        ConvexPolygon s_poly = thi(atlas_.r).normalized();
        // S must sit inside R.
        bool inside = true;
        for (const auto& v : s_poly.vertices)
            if (atlas_.r.locate_simple(v) < 0) inside = false;
        if (!inside) continue;
        // Renormalization identity Theta^-1 o Psi o Theta = Psi^3 on S.
        bool ok = true;
        int checked = 0;
        Point2 c = s_poly.vertex_centroid();
        for (int i = -2; i <= 2 && ok; ++i) {
            for (int j = -2; j <= 2 && ok; ++j) {
                Point2 x = c + Vec2{QuadVal(Rational(i, 97)), QuadVal(Rational(j, 89))};
                if (s_poly.locate_simple(x) != 1) continue;
                try {
                    Point2 lhs = thi(psi_step(th(x)).image);
                    Point2 rhs = psi_step(psi_step(psi_step(x).image).image).image;
                    if (!(lhs == rhs)) ok = false;
                    ++checked;
                } catch (const Error&) {
                    // boundary hit; skip sample
                }
            }
        }
        if (ok && checked >= 10) {
            theta_ = th;
            theta_inv_ = thi;
            s_region_ = s_poly;
            return;
        }
    }
    throw Error("no Theta candidate satisfies the renormalization identity");
}

int OctagonDynamics::locate_region(const Point2& p) const {
    bool boundary = false;
    for (int r = 0; r < 22; ++r) {
        int loc = cells_[r].polygon.locate(p);
        if (loc > 0) return r;
        if (loc == 0) boundary = true;
    }
    if (boundary) throw OnCellBoundary();
    throw Error("point is not in the region R");
}

PsiStep OctagonDynamics::psi_step(const Point2& p) const {
    int r = locate_region(p);
    const PartitionCell& cell = cells_[r];
    return {p + cell.translation, r, cell.parity};
}

std::optional<PeriodicTile> OctagonDynamics::classify_periodic(const Point2& p, int depth_cap) const {
    if (depth_cap < 0) return std::nullopt;
    int r = locate_region(p);
    if (r == 0) return PeriodicTile{1, atlas_.o3};
    if (r == 11) return PeriodicTile{1, atlas_.o3_twin};
    Point2 q = p;
    for (int j = 0; j < 3; ++j) {
        if (s_region_.locate_simple(q) > 0) {
            auto rec = classify_periodic(theta_(q), depth_cap - 1);
            if (!rec) return std::nullopt;
            ConvexPolygon tile_q = theta_inv_(rec->tile).normalized();
            return PeriodicTile{3 * rec->period, tile_q.translated(p - q)};
        }
        q = psi_step(q).image;
    }
    return std::nullopt;
}

std::vector<int> OctagonDynamics::orbit_code(const Point2& p, long length) const {
    std::vector<int> word;
    word.reserve(length);
    int s = 0;
    Point2 cur = p;
    for (long i = 0; i < length; ++i) {
        PsiStep st = psi_step(cur);
        word.push_back(st.region + 22 * s);
        s ^= st.parity;
        cur = st.image;
    }
    return word;
}

std::array<OctagonDynamics::ParityRow, 11> OctagonDynamics::parity_table() const {
    std::array<ParityRow, 11> rows;
    for (int r = 0; r < 11; ++r) {
        Point2 z = cells_[r].polygon.vertex_centroid();
        Point2 w = theta_inv_(z);
        ParityRow row;
        row.sigma = cells_[r].parity;
        PsiStep s0 = psi_step(w);
        row.s0 = s0.parity;
        PsiStep s1 = psi_step(s0.image);
        row.s1 = s1.parity;
        PsiStep s2 = psi_step(s1.image);
        row.s2 = s2.parity;
        if (((row.s0 + row.s1 + row.s2) & 1) != row.sigma)
            throw TableMismatch("parity row " + std::to_string(r) + " violates the mod-2 identity");
        rows[r] = row;
    }
    return rows;
}

std::array<std::array<int, 3>, 44> OctagonDynamics::substitution() const {
    std::array<std::array<int, 3>, 44> table;
    for (int r = 0; r < 22; ++r) {
        Point2 z = cells_[r].polygon.vertex_centroid();
        Point2 w = theta_inv_(z);
        PsiStep s0 = psi_step(w);
        PsiStep s1 = psi_step(s0.image);
        PsiStep s2 = psi_step(s1.image);
        for (int s = 0; s < 2; ++s) {
            int acc = s;
            std::array<int, 3> img{};
            img[0] = s0.region + 22 * acc;
            acc ^= s0.parity;
            img[1] = s1.region + 22 * acc;
            acc ^= s1.parity;
            img[2] = s2.region + 22 * acc;
            table[r + 22 * s] = img;
        }
    }
    return table;
}

std::array<Vec2, 44> OctagonDynamics::g_vectors(int family) const {
    if (family != 2 && family != 3) throw Error("g_vectors: family must be 2 or 3");
    std::array<Vec2, 44> out;
    for (int r = 0; r < 22; ++r) {
        out[r] = project_octagon_vector(cells_[r].lift0, family);
        out[r + 22] = project_octagon_vector(cells_[r].lift1, family);
    }
    return out;
}

Point2 OctagonDynamics::translate_equivalent(const Point2& p, long mu) {
    return p + Vec2{S, QuadVal(1)} * QuadVal(2 * mu);
}

} // namespace octa
