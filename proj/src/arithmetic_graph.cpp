#include "octa/arithmetic_graph.hpp"

#include <algorithm>

#include "octa/errors.hpp"

namespace octa {

bool LatticePath::lattice_closed() const {
    if (vertices.empty()) return false;
    return vertices.front() == vertices.back();
}

LatticePath accumulate(const PinwheelSystem& sys, const Point2& p, long steps) {
    LatticePath path;
    path.dimension = sys.vertex_count();
    path.vertices.push_back(std::vector<long>(path.dimension, 0));
    Point2 cur = p;
    for (long i = 0; i < steps; ++i) {
        PinwheelStep st = pinwheel_step(sys, cur);
        std::vector<long> lift = lift_step(sys, st.m);
        std::vector<long> next = path.vertices.back();
        for (size_t j = 0; j < path.dimension; ++j) next[j] += lift[j];
        path.vertices.push_back(std::move(next));
        path.step_m.push_back(std::move(st.m));
        cur = st.image;
    }
    return path;
}

Vec2 project_octagon_vector(const std::vector<long>& v, int k) {
    if (v.size() != 8) throw Error("project_octagon: dimension must be 8");
    Vec2 out{QuadVal(0), QuadVal(0)};
    for (int j = 0; j < 8; ++j)
        if (v[j] != 0) out = out + omega_pow(k * j) * QuadVal(v[j]);
    return out;
}

PlanarPolyline project_octagon(const LatticePath& path, int k) {
    if (k < 1 || k > 7) throw Error("project_octagon: k must be in 1..7");
    PlanarPolyline line;
    line.points.reserve(path.vertices.size());
    for (const auto& v : path.vertices) line.points.push_back(project_octagon_vector(v, k));
    line.closed = line.points.size() > 1 && line.points.front() == line.points.back();
    return line;
}

PlanarPolyline project_kite(const LatticePath& path, const std::array<std::array<long, 4>, 2>& m) {
    if (path.dimension != 4) throw Error("project_kite: dimension must be 4");
    PlanarPolyline line;
    line.points.reserve(path.vertices.size());
    for (const auto& v : path.vertices) {
        long x = 0, y = 0;
        for (int j = 0; j < 4; ++j) {
            x += m[0][j] * v[j];
            y += m[1][j] * v[j];
        }
        line.points.push_back({QuadVal(x), QuadVal(y)});
    }
    line.closed = line.points.size() > 1 && line.points.front() == line.points.back();
    return line;
}

bool on_single_line(const PlanarPolyline& line) {
    const auto& pts = line.points;
    if (pts.size() < 3) return true;
    size_t ref = 1;
    while (ref < pts.size() && pts[ref] == pts[0]) ++ref;
    if (ref == pts.size()) return true;
    Vec2 dir = pts[ref] - pts[0];
    for (const auto& p : pts)
        if (!cross(dir, p - pts[0]).is_zero()) return false;
    return true;
}

} // namespace octa
