#pragma once

#include <array>
#include <optional>

#include "octa/arithmetic_graph.hpp"
#include "octa/pinwheel.hpp"

namespace octa {

/// One region of the compressed system Psi: R -> R. The cell polygon carries
/// the constant plane translation of Psi, the Z^8 lifts of Phi on the cell
/// and on its sigma-shifted copy in the bottom half, and the parity bit
/// (1 iff Psi = sigma o Phi there).
struct PartitionCell {
    ConvexPolygon polygon;
    Vec2 translation;        // Psi action: p -> p + translation
    std::vector<long> lift0; // Phi-hat on the cell
    std::vector<long> lift1; // Phi-hat on cell - (0,2)
    int parity = 0;
};

/// Exact coordinate atlas around the region R_1: the regions, the four
/// centers, the named octagons, and the 22 cell polygons in symbol order.
///
/// Note on labels: the cell of symbol 0 is the large fixed octagon of radius
/// 1/s centered at c3 (and symbol 11 its 180-degree twin); the radius-1/s^2
/// octagon O4 centered at c4 is a periodic tile inside the pentagon cell 3,
/// not a cell of its own.
struct RegionAtlas {
    ConvexPolygon r1; // region between the first and second necklace pairs
    ConvexPolygon r;  // top half of r1, the domain of Psi
    Point2 c1, c2, c3, c4;
    ConvexPolygon o3;      // radius 1/s about c3 (cell 0)
    ConvexPolygon o3_twin; // its rho_2^4 image (cell 11)
    ConvexPolygon o4;      // radius 1/s^2 about c4 (periodic tile in cell 3)
    std::array<ConvexPolygon, 22> cells;
};

/// Result of a single Psi step.
struct PsiStep {
    Point2 image;
    int region; // 0..21
    int parity; // sigma bit of the region
};

struct PeriodicTile {
    long period = 0;     // 3^k
    ConvexPolygon tile;  // octagon tile containing the query point
};

/// The section-7 dynamical system: partition of R derived by pushing R_1
/// through the sixteen strip maps, the compressed map Psi, the accumulated
/// parity, the renormalization Theta and the periodic classification.
class OctagonDynamics {
  public:
    /// Builds (or returns) the singleton; derivation happens once.
    static const OctagonDynamics& instance();

    const RegionAtlas& atlas() const { return atlas_; }
    const std::array<PartitionCell, 22>& cells() const { return cells_; }
    const PinwheelSystem& pinwheel() const { return pinwheel_; }

    /// Phi on R_1 via the sixteen strip maps.
    Point2 phi(const Point2& p) const;

    /// Region index of a point of R; throws OnCellBoundary / Error.
    int locate_region(const Point2& p) const;

    PsiStep psi_step(const Point2& p) const;

    const Similarity& theta() const { return theta_; }
    const Similarity& theta_inv() const { return theta_inv_; }
    const ConvexPolygon& s_region() const { return s_region_; }

    /// Period-3^k classification via renormalization descent; nullopt when
    /// the depth cap is hit without resolving.
    std::optional<PeriodicTile> classify_periodic(const Point2& p, int depth_cap = 10) const;

    /// Symbol word over {0..43}: symbol_t = region_t + 22 * s_t with s_t the
    /// accumulated parity before step t.
    std::vector<int> orbit_code(const Point2& p, long length) const;

    struct ParityRow {
        int sigma, s0, s1, s2;
    };
    /// Rows (sigma; sigma_0, sigma_1, sigma_2) for regions 0..10, computed by
    /// renormalizing one sample per region and tracking three Psi steps.
    std::array<ParityRow, 11> parity_table() const;

    /// The derived substitution rule: symbol -> 3 symbols.
    std::array<std::array<int, 3>, 44> substitution() const;

    /// g_2 / g_3 vector assignments for all 44 symbols, derived from the
    /// cell lifts (family must be 2 or 3).
    std::array<Vec2, 44> g_vectors(int family) const;

    /// q = p + 2 mu (sqrt 2 + 1, 1), the graph-coinciding translate.
    static Point2 translate_equivalent(const Point2& p, long mu);

    int region_parity(int region) const { return cells_[region].parity; }

  private:
    OctagonDynamics();
    void derive_partition();
    void build_atlas();
    void build_theta();

    PinwheelSystem pinwheel_;
    RegionAtlas atlas_;
    std::array<PartitionCell, 22> cells_;
    Similarity theta_, theta_inv_;
    ConvexPolygon s_region_;
};

} // namespace octa
