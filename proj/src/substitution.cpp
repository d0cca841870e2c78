#include "octa/substitution.hpp"

#include <algorithm>
#include <cmath>

#include "octa/errors.hpp"

namespace octa {

int iota22(int n) { return n < 22 ? n + 22 : n - 22; }

int iota11(int n) {
    int r = n % 22;
    bool low = r < 11;
    return low ? n + 11 : n - 11;
}

SubstitutionSystem::SubstitutionSystem() {
    table_ = OctagonDynamics::instance().substitution();
    // Verify the printed quarter of the rule.
    static const int printed[11][3] = {
        {9, 25, 39}, {10, 14, 5},  {10, 12, 17}, {10, 12, 16}, {9, 23, 27}, {8, 36, 28},
        {8, 35, 17}, {9, 24, 6},   {9, 26, 6},   {9, 26, 7},   {9, 25, 40}};
    for (int n = 0; n <= 10; ++n)
        for (int j = 0; j < 3; ++j)
            if (table_[n][j] != printed[n][j])
                throw TableMismatch("substitution row " + std::to_string(n) +
                                    " disagrees with the printed table");
    // The rule commutes with both involutions.
    for (int n = 0; n < 44; ++n) {
        for (int j = 0; j < 3; ++j) {
            if (table_[iota22(n)][j] != iota22(table_[n][j]))
                throw TableMismatch("substitution does not commute with the +-22 involution");
            if (table_[iota11(n)][j] != iota11(table_[n][j]))
                throw TableMismatch("substitution does not commute with the +-11 involution");
        }
    }
}

const SubstitutionSystem& SubstitutionSystem::instance() {
    static SubstitutionSystem inst;
    return inst;
}

std::array<int, 3> SubstitutionSystem::apply(int symbol) const {
    if (symbol < 0 || symbol >= 44) throw MissingSymbol("symbol out of range");
    return table_[symbol];
}

std::vector<int> SubstitutionSystem::expand(const std::vector<int>& word, int steps) const {
    std::vector<int> cur = word;
    for (int s = 0; s < steps; ++s) {
        std::vector<int> next;
        next.reserve(cur.size() * 3);
        for (int n : cur) {
            auto img = apply(n);
            next.insert(next.end(), img.begin(), img.end());
        }
        cur = std::move(next);
    }
    return cur;
}

const Vec2& VectorAssignment::at(int symbol) const {
    if (symbol < 0 || symbol >= 44) throw MissingSymbol("symbol out of range");
    return vectors[symbol];
}

namespace {

QuadVal qv(long a, long b) { return QuadVal(Rational(a), Rational(b)); }

VectorAssignment make_g(int family) {
    VectorAssignment a;
    a.family = family;
    a.name = family == 2 ? "g2" : "g3";
    a.vectors = OctagonDynamics::instance().g_vectors(family);
    return a;
}

// Printed lambda tables (rows 1..10); octagon symbols take the g values.
VectorAssignment make_lambda(int family) {
    VectorAssignment a;
    a.family = family;
    a.name = family == 2 ? "lambda2" : "lambda3";
    const VectorAssignment& g = family == 2 ? g2_assignment() : g3_assignment();
    std::array<Vec2, 44>& v = a.vectors;
    if (family == 2) {
        const long rows[10][2] = {{6, 2},  {3, -3}, {2, -2}, {-3, 3}, {-6, 2},
                                  {-3, -1}, {3, 5},  {5, 3},  {3, 1},  {-2, 6}};
        for (int k = 1; k <= 10; ++k) v[k] = {QuadVal(rows[k - 1][0]), QuadVal(rows[k - 1][1])};
        v[0] = g.vectors[0];
        // lambda_2(k+11) = T(lambda_2(k)) with T(x,y) = (-y,-x); +22 negates.
        for (int k = 0; k <= 10; ++k) v[k + 11] = {-v[k].y, -v[k].x};
        v[11] = g.vectors[11];
        for (int k = 0; k <= 21; ++k) v[k + 22] = -v[k];
        v[22] = g.vectors[22];
        v[33] = g.vectors[33];
    } else {
        const long rows[10][4] = {{0, -1, -2, -1}, {2, 1, -2, -1}, {2, 1, 0, -1}, {-2, -2, 0, 0},
                                  {-2, -1, 0, -1}, {0, 0, -2, -2}, {-2, -1, 2, 1}, {-2, -2, 0, 0},
                                  {-2, -1, -2, -1}, {0, -1, 2, 1}};
        for (int k = 1; k <= 10; ++k)
            v[k] = {qv(rows[k - 1][0], rows[k - 1][1]), qv(rows[k - 1][2], rows[k - 1][3])};
        v[0] = g.vectors[0];
        // lambda_3(k+11) = -lambda_3(k); +22 repeats.
        for (int k = 0; k <= 10; ++k) v[k + 11] = -v[k];
        v[11] = g.vectors[11];
        for (int k = 0; k <= 21; ++k) v[k + 22] = v[k];
        v[22] = g.vectors[22];
        v[33] = g.vectors[33];
    }
    return a;
}

} // namespace

const VectorAssignment& g2_assignment() {
    static VectorAssignment a = make_g(2);
    return a;
}
const VectorAssignment& g3_assignment() {
    static VectorAssignment a = make_g(3);
    return a;
}
const VectorAssignment& lambda2_assignment() {
    static VectorAssignment a = make_lambda(2);
    return a;
}
const VectorAssignment& lambda3_assignment() {
    static VectorAssignment a = make_lambda(3);
    return a;
}

PlanarPolyline build_curve(const std::vector<int>& word, const VectorAssignment& assign) {
    PlanarPolyline line;
    line.points.reserve(word.size() + 1);
    Point2 cur{QuadVal(0), QuadVal(0)};
    line.points.push_back(cur);
    for (int n : word) {
        cur = cur + assign.at(n);
        line.points.push_back(cur);
    }
    line.closed = line.points.size() > 1 && line.points.front() == line.points.back();
    return line;
}

bool is_closed(const PlanarPolyline& curve) { return curve.closed; }

PlanarPolyline curve_G(int family, int k) {
    auto word = SubstitutionSystem::instance().expand({0}, k);
    return build_curve(word, family == 2 ? g2_assignment() : g3_assignment());
}

PlanarPolyline curve_L(int family, int k) {
    auto word = SubstitutionSystem::instance().expand({0}, k);
    return build_curve(word, family == 2 ? lambda2_assignment() : lambda3_assignment());
}

Vec2 renorm_scale(int family) {
    const VectorAssignment& lam = family == 2 ? lambda2_assignment() : lambda3_assignment();
    const SubstitutionSystem& sub = SubstitutionSystem::instance();
    // M = (sum of the 81 vectors of the 4-fold expansion of symbol 1) / lambda(1),
    // then verified on every non-octagon symbol.
    Vec2 m{QuadVal(0), QuadVal(0)};
    bool have = false;
    for (int n = 0; n < 44; ++n) {
        if (n % 11 == 0) continue;
        auto word = sub.expand({n}, 4);
        Vec2 total{QuadVal(0), QuadVal(0)};
        for (int w : word) total = total + lam.at(w);
        // total = M * lambda(n) (complex product)
        const Vec2& l = lam.at(n);
        Vec2 cand = total.cmul(l.cconj()) * (QuadVal(1) / l.norm2());
        if (!have) {
            m = cand;
            have = true;
        } else if (!(cand == m)) {
            throw TableMismatch("per-renormalization scale is not a single similarity factor");
        }
    }
    return m;
}

VectorAssignment renorm_operator(const VectorAssignment& assign) {
    const SubstitutionSystem& sub = SubstitutionSystem::instance();
    Vec2 m = renorm_scale(assign.family);
    Vec2 minv = m.cconj() * (QuadVal(1) / m.norm2());
    VectorAssignment out;
    out.family = assign.family;
    out.name = "R(" + assign.name + ")";
    for (int n = 0; n < 44; ++n) {
        auto word = sub.expand({n}, 4);
        Vec2 total{QuadVal(0), QuadVal(0)};
        for (int w : word) total = total + assign.at(w);
        out.vectors[n] = minv.cmul(total);
    }
    return out;
}

DeltaReport delta_check(int family) {
    const VectorAssignment& g = family == 2 ? g2_assignment() : g3_assignment();
    const VectorAssignment& lam = family == 2 ? lambda2_assignment() : lambda3_assignment();
    const auto& table = SubstitutionSystem::instance().table();
    const Vec2 quantum = family == 2 ? Vec2{QuadVal(1), QuadVal(-1)} : Vec2{QuadVal(0), QuadVal(2)};
    DeltaReport rep;
    for (int n = 0; n < 44; ++n) {
        rep.delta[n] = g.vectors[n] - lam.vectors[n];
        // delta must be eps * quantum with eps in {-1,0,1}
        const Vec2& d = rep.delta[n];
        bool in_range = d.is_zero() || d == quantum || d == -quantum;
        if (!in_range) {
            rep.ok = false;
            rep.violations.push_back("delta(" + std::to_string(n) + ") outside the quantum range");
        }
    }
    for (int n = 0; n < 44; ++n) {
        Vec2 sum = rep.delta[table[n][0]] + rep.delta[table[n][1]] + rep.delta[table[n][2]];
        if (!(sum == rep.delta[n])) {
            rep.ok = false;
            rep.violations.push_back("conservation fails at row " + std::to_string(n));
        }
    }
    return rep;
}

namespace {

struct SampledCurve {
    std::vector<double> x, y;
    // position at parameter t in [0,1], edges equally weighted
    std::pair<double, double> at(double t) const {
        size_t e = x.size() - 1;
        double u = t * static_cast<double>(e);
        size_t i = std::min(static_cast<size_t>(u), e - 1);
        double f = u - static_cast<double>(i);
        return {x[i] + f * (x[i + 1] - x[i]), y[i] + f * (y[i + 1] - y[i])};
    }
};

SampledCurve sample(const PlanarPolyline& c) {
    SampledCurve s;
    s.x.reserve(c.points.size());
    s.y.reserve(c.points.size());
    for (const auto& p : c.points) {
        s.x.push_back(p.x.approx());
        s.y.push_back(p.y.approx());
    }
    return s;
}

} // namespace

double curve_distance(const PlanarPolyline& c1, const PlanarPolyline& c2) {
    SampledCurve a = sample(c1), b = sample(c2);
    size_t e1 = a.x.size() - 1, e2 = b.x.size() - 1;
    double sup = 0;
    auto visit = [&](double t) {
        auto [x1, y1] = a.at(t);
        auto [x2, y2] = b.at(t);
        sup = std::max(sup, std::hypot(x1 - x2, y1 - y2));
    };
    for (size_t k = 0; k <= e1; ++k) {
        visit(static_cast<double>(k) / static_cast<double>(e1));
        if (k < e1) visit((static_cast<double>(k) + 0.5) / static_cast<double>(e1));
    }
    for (size_t k = 0; k <= e2; ++k) {
        visit(static_cast<double>(k) / static_cast<double>(e2));
        if (k < e2) visit((static_cast<double>(k) + 0.5) / static_cast<double>(e2));
    }
    return sup;
}

double lambda_sup_distance(int family, int k) {
    const VectorAssignment& lam = family == 2 ? lambda2_assignment() : lambda3_assignment();
    const SubstitutionSystem& sub = SubstitutionSystem::instance();
    double s = family == 2 ? std::sqrt(3.0) : 1.0 + std::sqrt(2.0);
    // Edge vectors as doubles, then two float polylines scaled by s^-j.
    std::array<std::pair<double, double>, 44> ev;
    for (int n = 0; n < 44; ++n) ev[n] = {lam.vectors[n].x.approx(), lam.vectors[n].y.approx()};
    auto build = [&](int j) {
        auto word = sub.expand({0}, j);
        SampledCurve c;
        c.x.reserve(word.size() + 1);
        c.y.reserve(word.size() + 1);
        double scale = std::pow(s, -j), x = 0, y = 0;
        c.x.push_back(0);
        c.y.push_back(0);
        for (int n : word) {
            x += ev[n].first * scale;
            y += ev[n].second * scale;
            c.x.push_back(x);
            c.y.push_back(y);
        }
        return c;
    };
    SampledCurve a = build(4 * k + 1), b = build(4 * k + 5);
    size_t e1 = a.x.size() - 1, e2 = b.x.size() - 1;
    double sup = 0;
    auto visit = [&](double t) {
        auto [x1, y1] = a.at(t);
        auto [x2, y2] = b.at(t);
        sup = std::max(sup, std::hypot(x1 - x2, y1 - y2));
    };
    for (size_t q = 0; q <= e1; ++q) {
        visit(static_cast<double>(q) / static_cast<double>(e1));
        if (q < e1) visit((static_cast<double>(q) + 0.5) / static_cast<double>(e1));
    }
    for (size_t q = 0; q <= e2; ++q) {
        visit(static_cast<double>(q) / static_cast<double>(e2));
        if (q < e2) visit((static_cast<double>(q) + 0.5) / static_cast<double>(e2));
    }
    return sup;
}

long vertex_distance_bound(int family, int k) {
    const VectorAssignment& g = family == 2 ? g2_assignment() : g3_assignment();
    const VectorAssignment& lam = family == 2 ? lambda2_assignment() : lambda3_assignment();
    auto word = SubstitutionSystem::instance().expand({0}, k);
    const Vec2 quantum = family == 2 ? Vec2{QuadVal(1), QuadVal(-1)} : Vec2{QuadVal(0), QuadVal(2)};
    Vec2 diff{QuadVal(0), QuadVal(0)};
    long worst = 0;
    for (int n : word) {
        diff = diff + (g.at(n) - lam.at(n));
        // diff = c * quantum; measure |c| exactly
        QuadVal c = quantum.x.is_zero() ? diff.y / quantum.y : diff.x / quantum.x;
        if (!(quantum * c == diff)) throw Error("vertex delta is not a quantum multiple");
        QuadVal mag = c.sign() < 0 ? -c : c;
        long m = mag.floor();
        if (QuadVal(m) != mag) throw Error("vertex delta is not an integer multiple");
        worst = std::max(worst, m);
    }
    return worst;
}

} // namespace octa
