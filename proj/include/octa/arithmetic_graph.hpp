#pragma once

#include <array>
#include <vector>

#include "octa/pinwheel.hpp"

namespace octa {

/// Arithmetic graph: lattice path in Z^n accumulating the lifted strip-map
/// exponents of a pinwheel orbit. Keeps the per-step m-vectors so codes and
/// projections can be regenerated without re-running the dynamics.
struct LatticePath {
    size_t dimension = 0;
    std::vector<std::vector<long>> vertices; // first vertex is the origin
    std::vector<std::vector<long>> step_m;   // m-vector per step

    size_t steps() const { return step_m.size(); }
    bool lattice_closed() const;
};

/// Accumulate `steps` pinwheel steps starting at p.
LatticePath accumulate(const PinwheelSystem& sys, const Point2& p, long steps);

struct PlanarPolyline {
    std::vector<Point2> points;
    bool closed = false; // first vertex equals last vertex exactly
};

/// Cyclotomic projection pi_k: e_j -> omega^{k j} for the octagon (n = 8),
/// exact over Q(sqrt 2). Requires 1 <= k < 8.
PlanarPolyline project_octagon(const LatticePath& path, int k);
Vec2 project_octagon_vector(const std::vector<long>& lattice_vec, int k);

constexpr std::array<std::array<long, 4>, 2> kite_projection_default() {
    return {{{{1, 0, -1, 0}}, {{0, 1, 0, -1}}}};
}

/// Fixed documented projection for kite graphs (n = 4): an integer 2 x 4
/// matrix applied to the lattice path. The default choice draws the graphs
/// of section-3.1 style figures; closedness never depends on it.
PlanarPolyline project_kite(const LatticePath& path,
                            const std::array<std::array<long, 4>, 2>& m = kite_projection_default());

/// Exact collinearity of all points of a polyline (rank-1 test).
bool on_single_line(const PlanarPolyline& line);

} // namespace octa
