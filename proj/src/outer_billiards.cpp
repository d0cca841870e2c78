#include "octa/outer_billiards.hpp"

#include "octa/errors.hpp"

namespace octa {

Table octagon_table() {
    return Table(regular_octagon({QuadVal(0), QuadVal(0)}, QuadVal(1)));
}

Kite::Kite(Rational a) : A(std::move(a)) {
    A.canonicalize();
    if (sgn(A) <= 0 || A >= 1) throw Error("Kite: parameter must lie in (0,1)");
}

ConvexPolygon Kite::polygon() const {
    return ConvexPolygon({{QuadVal(-1), QuadVal(0)},
                          {QuadVal(0), QuadVal(-1)},
                          {QuadVal(Rational(A)), QuadVal(0)},
                          {QuadVal(0), QuadVal(1)}});
}

Point2 Kite::fundamental_point() const {
    return {QuadVal(Rational(1) / Rational(A.get_den())), QuadVal(1)};
}

size_t ob_support_vertex(const Table& table, const Point2& p) {
    const auto& vs = table.polygon.vertices;
    if (table.polygon.locate(p) >= 0) throw InsideTable();
    size_t winner = vs.size();
    for (size_t i = 0; i < vs.size(); ++i) {
        Vec2 dir = (vs[i] - p) * QuadVal(2); // direction of the ray p -> 2v - p
        bool ok = true;
        bool grazing = false;
        for (size_t j = 0; j < vs.size() && ok; ++j) {
            if (j == i) continue;
            int s = cross(dir, vs[j] - p).sign();
            if (s > 0) ok = false;      // table not right of the ray
            if (s == 0) grazing = true; // p on an edge extension line
        }
        if (!ok) continue;
        if (grazing) throw UndefinedOnLine("outer billiards: point on an edge extension");
        winner = i;
        break;
    }
    if (winner == vs.size()) throw Error("ob_map: no supporting vertex found");
    return winner;
}

Point2 ob_map(const Table& table, const Point2& p) {
    const Point2& v = table.polygon.vertices[ob_support_vertex(table, p)];
    return v + (v - p);
}

std::vector<ConvexPolygon> necklace_tiles(int k) {
    if (k < 1) throw Error("necklace_tiles: k must be positive");
    ConvexPolygon base = octagon_table().polygon;
    const Vec2 gen{QuadVal(Rational(1), Rational(1)), QuadVal(1)}; // (sqrt 2 + 1, 1)
    std::vector<ConvexPolygon> tiles;
    tiles.reserve(8 * static_cast<size_t>(k));
    for (int n = 0; n < 8; ++n) {
        Vec2 dark = omega_pow(n).cmul(gen) * QuadVal(k);
        tiles.push_back(base.translated(dark));
        // k-1 interpolating octagons toward the next dark one
        Vec2 step = (omega_pow(n + 1) - omega_pow(n)).cmul(gen);
        for (int j = 1; j < k; ++j) tiles.push_back(base.translated(dark + step * QuadVal(j)));
    }
    return tiles;
}

} // namespace octa
