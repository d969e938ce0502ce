/**
 * @file grid.hpp
 * @brief Equidistant rectangular evaluation grid and per-point fields.
 *
 * Indices are zero-based: j1 in [0, n1), j2 in [0, n2). Storage is row-major
 * with j1 running fastest, i.e. index = j2 * n1 + j1. Every export and
 * raster uses this convention.
 */

#ifndef MOLANDSCAPE_GRID_HPP
#define MOLANDSCAPE_GRID_HPP

#include <cstddef>
#include <iosfwd>
#include <utility>
#include <vector>

#include "molandscape/problems.hpp"
#include "molandscape/types.hpp"

namespace molandscape {

class Grid {
 public:
  /// Throws ArgumentError if n1 or n2 < 2 or the box is inverted.
  Grid(const Vec2& lower, const Vec2& upper, std::size_t n1, std::size_t n2);

  [[nodiscard]] const Vec2& lower() const { return lower_; }
  [[nodiscard]] const Vec2& upper() const { return upper_; }
  [[nodiscard]] std::size_t n1() const { return n1_; }
  [[nodiscard]] std::size_t n2() const { return n2_; }
  [[nodiscard]] std::size_t size() const { return n1_ * n2_; }
  [[nodiscard]] double s1() const { return s1_; }
  [[nodiscard]] double s2() const { return s2_; }

  /// Coordinate of the j-th grid line along axis 1 or 2. The last one is upper exactly.
  [[nodiscard]] double x1(std::size_t j1) const { return x1_[j1]; }
  [[nodiscard]] double x2(std::size_t j2) const { return x2_[j2]; }
  [[nodiscard]] Vec2 point(std::size_t j1, std::size_t j2) const { return {x1_[j1], x2_[j2]}; }
  [[nodiscard]] Vec2 point(std::size_t index) const { return point(index % n1_, index / n1_); }

  [[nodiscard]] std::size_t index(std::size_t j1, std::size_t j2) const { return j2 * n1_ + j1; }
  [[nodiscard]] std::pair<std::size_t, std::size_t> coords(std::size_t index) const {
    return {index % n1_, index / n1_};
  }
  [[nodiscard]] bool on_boundary(std::size_t j1, std::size_t j2) const {
    return j1 == 0 || j2 == 0 || j1 + 1 == n1_ || j2 + 1 == n2_;
  }

  friend bool operator==(const Grid& a, const Grid& b) {
    return a.lower_ == b.lower_ && a.upper_ == b.upper_ && a.n1_ == b.n1_ && a.n2_ == b.n2_;
  }

 private:
  Vec2 lower_;
  Vec2 upper_;
  std::size_t n1_;
  std::size_t n2_;
  double s1_;
  double s2_;
  std::vector<double> x1_;
  std::vector<double> x2_;
};

/// Same as the Grid constructor; named for symmetry with the other stages.
Grid build_grid(const Vec2& lower, const Vec2& upper, std::size_t n1, std::size_t n2);

/// One real value per grid point.
struct ScalarField {
  Grid grid;
  std::vector<double> values;

  explicit ScalarField(Grid g, double fill = 0.0) : grid(std::move(g)), values(grid.size(), fill) {}
  ScalarField(Grid g, std::vector<double> v);

  double& operator[](std::size_t i) { return values[i]; }
  double operator[](std::size_t i) const { return values[i]; }
  double& at(std::size_t j1, std::size_t j2) { return values[grid.index(j1, j2)]; }
  [[nodiscard]] double at(std::size_t j1, std::size_t j2) const { return values[grid.index(j1, j2)]; }
};

/// One 2D vector per grid point.
struct VectorField {
  Grid grid;
  std::vector<Vec2> values;

  explicit VectorField(Grid g) : grid(std::move(g)), values(grid.size()) {}

  Vec2& operator[](std::size_t i) { return values[i]; }
  const Vec2& operator[](std::size_t i) const { return values[i]; }
  Vec2& at(std::size_t j1, std::size_t j2) { return values[grid.index(j1, j2)]; }
  [[nodiscard]] const Vec2& at(std::size_t j1, std::size_t j2) const {
    return values[grid.index(j1, j2)];
  }
};

/**
 * @brief Evaluates both objectives at every grid point.
 *
 * The grid box must lie inside the problem box (DomainError otherwise);
 * non-finite values raise EvaluationError reporting the point. Rows are
 * split across workers; the result does not depend on the worker count.
 */
std::pair<ScalarField, ScalarField> evaluate_grid(const BiObjectiveProblem& problem,
                                                  const Grid& grid, unsigned workers = 1);

/// CSV with header `j1,j2,x1,x2,f1,f2`, one line per grid point in storage order.
void write_grid_csv(std::ostream& out, const ScalarField& f1, const ScalarField& f2);

}  // namespace molandscape

#endif  // MOLANDSCAPE_GRID_HPP
