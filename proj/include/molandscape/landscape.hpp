/**
 * @file landscape.hpp
 * @brief Height landscapes over the grid: descent-path accumulation heights
 *        (gradient field heatmap), domination counts (cost landscape), and
 *        dominance ranks of the locally efficient points with their
 *        connected components.
 */

#ifndef MOLANDSCAPE_LANDSCAPE_HPP
#define MOLANDSCAPE_LANDSCAPE_HPP

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <span>
#include <vector>

#include "molandscape/criticality.hpp"
#include "molandscape/gradients.hpp"
#include "molandscape/grid.hpp"

namespace molandscape {

enum class HeightMode : std::uint8_t { Gfh, Cost };

struct HeightField {
  ScalarField heights;
  HeightMode mode = HeightMode::Gfh;
};

struct EfficientComponent {
  std::size_t id = 0;
  /// Flat grid indices, ascending.
  std::vector<std::size_t> points;
  std::size_t min_rank = 0;
  /// Lowest-index point among those with min_rank.
  std::size_t representative = 0;
  ObjectivePair representative_value;
};

struct EfficientSetDecomposition {
  Grid grid;
  std::vector<EfficientComponent> components;
  /// Dominance rank per grid point; meaningful only where component_of != kNone.
  std::vector<std::size_t> rank;
  std::vector<std::size_t> component_of;
  std::size_t n_efficient = 0;
  std::size_t n_rank0 = 0;

  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  explicit EfficientSetDecomposition(Grid g)
      : grid(std::move(g)), rank(grid.size(), 0), component_of(grid.size(), kNone) {}

  [[nodiscard]] std::size_t max_rank() const;
};

struct BasinMap {
  /// Component reached by each point's descent path, or kUnconverged.
  std::vector<std::size_t> basin;
  /// Number of distinct cycles met while tracing.
  std::size_t cycles = 0;
  /// Points whose path ended in a cycle or stalled away from an efficient point.
  std::size_t unconverged_points = 0;

  static constexpr std::size_t kUnconverged = std::numeric_limits<std::size_t>::max();

  /// Distinct converged basin labels.
  [[nodiscard]] std::size_t count_basins() const;
};

/// Connected components (8-neighborhood) and dominance ranks of the efficient points.
EfficientSetDecomposition dominance_ranks(const CriticalityMap& map, const ScalarField& f1,
                                          const ScalarField& f2);

struct GfhResult {
  HeightField heights;
  BasinMap basins;
};

/**
 * @brief Gradient field heatmap heights and basins.
 *
 * From every point the path steps to the 8-neighbor whose offset best aligns
 * with the descent direction -mo_gradient (rotated field), adding
 * |mo_gradient| times the step length in decision units. Paths end at
 * locally efficient points (height 0). Points on a cycle, and points with no
 * usable descent step, end the path unconverged; cycle points get height 0.
 * Every point has exactly one successor, so heights do not depend on the
 * tracing order.
 */
GfhResult gfh_heights(const FieldSet& fields, const CriticalityMap& map,
                      const EfficientSetDecomposition& decomposition);

/**
 * @brief Number of grid points dominating each point (minimization).
 *
 * Sort-and-sweep over f1 with a Fenwick tree on f2 ranks, O(N log N).
 */
HeightField cost_landscape(const ScalarField& f1, const ScalarField& f2);

/// Same counts as cost_landscape by pairwise comparison, O(N^2).
HeightField cost_landscape_brute_force(const ScalarField& f1, const ScalarField& f2);

/// Dominating-point counts for an arbitrary list of objective vectors.
std::vector<std::size_t> domination_counts(std::span<const ObjectivePair> values);

/// JSON `{components: [...], n_rank0, n_efficient}`.
void write_decomposition_json(std::ostream& out, const EfficientSetDecomposition& d,
                              const ScalarField& f1, const ScalarField& f2);

/// CSV with header `j1,j2,x1,x2,height` (raw heights).
void write_height_csv(std::ostream& out, const HeightField& h);

}  // namespace molandscape

#endif  // MOLANDSCAPE_LANDSCAPE_HPP
