#pragma once

#include <array>
#include <string>
#include <vector>

#include "octa/arithmetic_graph.hpp"
#include "octa/octagon_dynamics.hpp"

namespace octa {

/// The two involutions on the 44 (region, parity) symbols.
int iota22(int n); // n -> n +- 22
int iota11(int n); // n -> n +- 11, + on {0..10} u {22..32}

/// The 44-symbol substitution rule, derived from the renormalization and
/// verified against the printed quarter at construction.
class SubstitutionSystem {
  public:
    static const SubstitutionSystem& instance();

    const std::array<std::array<int, 3>, 44>& table() const { return table_; }
    std::array<int, 3> apply(int symbol) const;

    /// Iterated substitution: word length grows by a factor 3 per step.
    std::vector<int> expand(const std::vector<int>& word, int steps) const;

  private:
    SubstitutionSystem();
    std::array<std::array<int, 3>, 44> table_;
};

/// Map from symbols to edge vectors. g families come from the cell lifts of
/// the dynamics; lambda families are the printed fixed point of the
/// renormalization operator (octagon symbols carried over from g).
struct VectorAssignment {
    std::array<Vec2, 44> vectors;
    int family = 2;          // 2 or 3
    std::string name;        // "g2", "g3", "lambda2", "lambda3"

    const Vec2& at(int symbol) const;
};

const VectorAssignment& g2_assignment();
const VectorAssignment& g3_assignment();
const VectorAssignment& lambda2_assignment();
const VectorAssignment& lambda3_assignment();

/// Polyline from the origin accumulating the assigned vectors in word order.
PlanarPolyline build_curve(const std::vector<int>& word, const VectorAssignment& assign);
bool is_closed(const PlanarPolyline& curve);

/// G_i(k) and L_i(k): expand the one-letter word (0) k times and accumulate
/// the g- or lambda-vectors.
PlanarPolyline curve_G(int family, int k);
PlanarPolyline curve_L(int family, int k);

/// The per-R scale factor: the unique complex M over Q(sqrt 2) with
/// sum-over-4-fold-expansion of lambda = M * lambda on every symbol.
/// (Empirically 9 for family 2 and (1+sqrt 2)^4 for family 3.)
Vec2 renorm_scale(int family);

/// Renormalization operator: expand each symbol 4 times, sum the assigned
/// vectors and divide by the family scale factor.
VectorAssignment renorm_operator(const VectorAssignment& assign);

struct DeltaReport {
    bool ok = true;
    std::vector<std::string> violations;
    std::array<Vec2, 44> delta; // g - lambda per symbol
};
/// Checks delta(n) = delta(m1) + delta(m2) + delta(m3) for all 44 rows and
/// the quantized ranges eps*(1,-1) resp. eps*(0,2).
DeltaReport delta_check(int family);

/// Sup distance between two curves parametrized proportionally to edge count
/// over [0,1]; sampled at all vertices of both curves plus edge midpoints.
double curve_distance(const PlanarPolyline& c1, const PlanarPolyline& c2);

/// D_k = sup distance between the scaled curves Lambda_i(4k+1) and
/// Lambda_i(4k+5), computed in floating point (the sqrt-3 scaling of family
/// 2 is irrational over Q(sqrt 2)).
double lambda_sup_distance(int family, int k);

/// Max vertex distance between G_i(k) and L_i(k) in units of the family's
/// delta quantum; at most 4 log_3(3^k) = 4k.
long vertex_distance_bound(int family, int k);

} // namespace octa
