#pragma once

#include <map>
#include <optional>
#include <vector>

#include "octa/geometry.hpp"

namespace octa {

enum class ShapeKind { TriangleIn, TriangleOut, Parallelogram, Trapezoid };

/// One shape of a substitution stage. Triangles are right isosceles and keep
/// their traversal data: entry and exit (the acute vertices the curve chains
/// through) and apex (the right angle). Quadrilaterals keep their vertex
/// ring plus the special point (trapezoid long-edge midpoint resp.
/// parallelogram center) and entry/exit specials for the chain.
struct FractalShape {
    ShapeKind kind;
    Point2 entry, exit, apex; // triangles: apex = right-angle vertex
    std::vector<Point2> quad; // quadrilaterals only

    bool is_triangle() const {
        return kind == ShapeKind::TriangleIn || kind == ShapeKind::TriangleOut;
    }
    int color() const { return kind == ShapeKind::TriangleOut || kind == ShapeKind::Trapezoid; }
    ConvexPolygon polygon() const;
    Point2 special_point() const; // right-angle vertex / quad special
};

/// A cyclically ordered stage of the snowflake (I3) or carpet (I2).
struct ShapeList {
    std::vector<FractalShape> shapes;
    int depth = 0;
    int family = 3; // 3 = snowflake, 2 = carpet
};

ShapeList snowflake_seed();
ShapeList carpet_seed();
ShapeList subdivide(const ShapeList& list);
/// Children of one shape, in chain order.
std::vector<FractalShape> subdivide_shape(const FractalShape& shape);

struct SpecialPointSet {
    std::vector<Point2> points; // deduplicated
    int family = 3;
    char klass = 'A'; // 'A' or 'B'
    int depth = 0;
};
/// A3/B3: right-angle resp. acute vertices of I3(depth); A2/B2: quad special
/// points resp. quad vertices of I2(depth).
SpecialPointSet special_points(int family, char klass, int depth);

/// Exact membership of a query point in the special-point lattice, deciding
/// by refining only the shapes whose closure contains the query.
/// Throws DepthExceeded when undecided after max_depth refinements.
bool is_special_point(const Point2& p, int family, int max_depth = 24);
std::vector<bool> vertex_membership(const std::vector<Point2>& pts, int family,
                                    int max_depth = 24);

/// Pairs (triangle representative, corresponding quad representative) of the
/// canonical surjection at finite depth: the special points of matched
/// shapes in chain order.
std::vector<std::pair<Point2, Point2>> canonical_map_sample(int depth);

struct HiddenSymmetryReport {
    std::vector<double> distances; // Hausdorff-style distance per depth
    std::vector<double> ratios;    // successive ratios, expect sqrt(2)-1
};
/// Finite-depth check of the hidden symmetry lemma (family 3) and its carpet
/// version (family 2): the distance between the depth-n approximations of
/// the arc A and of A1 u A2 decays by the factor sqrt(2)-1.
HiddenSymmetryReport hidden_symmetry_check(int family, int depth);

/// The minimal admissible pattern containing both endpoints of a segment,
/// restricted to the sub-chain between them.
ShapeList minimal_pattern(const Point2& a, const Point2& b, int family, int max_depth = 24);

struct GoodHomothetyReport {
    bool ok = true;
    int edge_types_seen = 0;
    std::vector<std::string> failures;
};
/// For every edge type present in Lambda_3(5) and Lambda_3(9): the minimal
/// patterns agree up to the similarity carrying one edge to the other
/// (ratio sqrt(2)-1 over the four substitution steps).
GoodHomothetyReport good_homothety_check();

struct CompatibilityReport {
    bool ok = true;
    long edges = 0;
    std::vector<std::string> failures;
};
/// Statement-5 finite check: for each edge pair of (Lambda_3(n), Lambda_2(n))
/// the carpet endpoints are the special points of the shape-bijection images
/// of the snowflake endpoint triangles.
CompatibilityReport compatibility_check(int n);

/// Scaled curves Lambda_i(k) = s_i^{-k} L_i(k); family 3 exact, family 2
/// uses the exact integer curve with the formal sqrt(3) factor omitted.
PlanarPolyline lambda_curve_scaled(int family, int k);

} // namespace octa
