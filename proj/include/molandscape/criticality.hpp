/**
 * @file criticality.hpp
 * @brief First-order criticality on triangular grid neighborhoods and along
 *        the box boundary, and the divergence-based second-order filter
 *        that separates locally efficient points from ridge points.
 */

#ifndef MOLANDSCAPE_CRITICALITY_HPP
#define MOLANDSCAPE_CRITICALITY_HPP

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "molandscape/gradients.hpp"
#include "molandscape/grid.hpp"

namespace molandscape {

enum class PointClass : std::uint8_t {
  NonCritical = 0,
  CriticalOnly = 1,
  LocallyEfficientInterior = 2,
  LocallyEfficientBoundary = 3,
};

std::string_view to_string(PointClass c);

constexpr bool is_efficient(PointClass c) {
  return c == PointClass::LocallyEfficientInterior || c == PointClass::LocallyEfficientBoundary;
}

constexpr bool is_critical(PointClass c) { return c != PointClass::NonCritical; }

/// Merge rule when a point is labeled from several neighborhoods.
constexpr PointClass merge(PointClass a, PointClass b) { return a < b ? b : a; }

/// A grid point plus one horizontal and one vertical neighbor (flat indices).
struct TriangleNeighborhood {
  std::size_t anchor = 0;
  std::size_t horizontal = 0;
  std::size_t vertical = 0;

  [[nodiscard]] std::array<std::size_t, 3> corners() const { return {anchor, horizontal, vertical}; }
  friend bool operator==(const TriangleNeighborhood&, const TriangleNeighborhood&) = default;
};

enum class Edge : std::uint8_t { Bottom, Top, Left, Right };

std::string_view to_string(Edge e);

/// Unit tangent (+x1 for bottom/top, +x2 for left/right).
Vec2 edge_tangent(Edge e);
/// Unit normal pointing out of the box.
Vec2 edge_outward_normal(Edge e);

/// Two adjacent grid points on the same boundary edge, `first` before `second` along the tangent.
struct BoundaryPair {
  Edge edge = Edge::Bottom;
  std::size_t first = 0;
  std::size_t second = 0;
  friend bool operator==(const BoundaryPair&, const BoundaryPair&) = default;
};

/// MO gradient replaced on a boundary point.
struct BoundaryRotation {
  std::size_t index = 0;
  Vec2 original;
  Vec2 rotated;
};

/**
 * @brief True iff the origin lies in the convex hull of the vectors.
 *
 * Any vector shorter than zero_tol makes the answer true. Otherwise the
 * directions are sorted by angle and the origin is enclosed iff no angular
 * gap between consecutive directions exceeds pi; a gap of exactly pi
 * (antiparallel pair) counts as enclosing. Throws ArgumentError on an empty
 * list.
 */
bool origin_in_hull(std::span<const Vec2> vectors, double zero_tol);

/**
 * @brief All critical triangles of the grid.
 *
 * Every grid cell contributes four triangles (one anchored at each corner).
 * A triangle is critical iff origin_in_hull holds for the six single-objective
 * gradients at its corners. The output order is cell-major and independent
 * of the worker count.
 */
std::vector<TriangleNeighborhood> interior_first_order(const FieldSet& fields, unsigned workers = 1);

struct BoundaryFirstOrder {
  /// Pairs without a common strict descent direction along their edge.
  std::vector<BoundaryPair> critical_pairs;
  /// MO gradient field with the boundary rotation applied.
  VectorField rotated;
  std::vector<BoundaryRotation> rotations;
};

/**
 * @brief Boundary criticality and MO gradient rotation.
 *
 * Uses fields.g1, fields.g2, fields.mo_gradient_raw and fields.zero_tol. A
 * pair is critical unless one tangent direction has a negative directional
 * derivative (below -zero_tol) for both objectives at both points. Boundary
 * points in no critical pair whose descent direction -mo leaves the box get
 * the offending normal component(s) of the MO gradient removed.
 */
BoundaryFirstOrder boundary_first_order(const FieldSet& fields);

struct CriticalityMap {
  Grid grid;
  std::vector<PointClass> classes;
  std::vector<TriangleNeighborhood> critical_triangles;
  /// Parallel to critical_triangles.
  std::vector<bool> triangle_efficient;
  std::vector<BoundaryPair> critical_pairs;
  /// Parallel to critical_pairs.
  std::vector<bool> pair_efficient;
  std::vector<BoundaryRotation> rotations;

  explicit CriticalityMap(Grid g)
      : grid(std::move(g)), classes(grid.size(), PointClass::NonCritical) {}

  [[nodiscard]] std::size_t count(PointClass c) const;
  [[nodiscard]] std::size_t count_efficient() const;
  [[nodiscard]] std::vector<bool> efficient_mask() const;
};

/**
 * @brief Keeps a critical triangle as locally efficient iff every corner has
 *        divergence <= div_tol; corners of the others become CriticalOnly.
 */
CriticalityMap second_order_filter(std::span<const TriangleNeighborhood> triangles,
                                   const ScalarField& divergence, double div_tol);

/**
 * @brief Labels the critical boundary pairs into `map`.
 *
 * A pair is LocallyEfficientBoundary iff the descent direction -mo (raw,
 * before rotation) has a non-negative outward component at both points,
 * i.e. descent leads out of the box or along its edge.
 */
void boundary_second_order(std::span<const BoundaryPair> pairs, const FieldSet& fields,
                           CriticalityMap& map);

/// Absolute divergence tolerance: relative * max |div| over the grid.
double resolve_div_tol(const ScalarField& divergence, double relative);

/// JSON array of `{j1, j2, x1, x2, class, div, f1, f2}` for every critical point.
void write_critical_json(std::ostream& out, const CriticalityMap& map, const FieldSet& fields);

}  // namespace molandscape

#endif  // MOLANDSCAPE_CRITICALITY_HPP
