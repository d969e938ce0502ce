#include "molandscape/grid.hpp"

#include <ostream>
#include <string>

#include "molandscape/csv.hpp"
#include "molandscape/parallel.hpp"

namespace molandscape {

namespace {

std::vector<double> axis_coordinates(double lo, double hi, std::size_t n, double step) {
  std::vector<double> xs(n);
  for (std::size_t j = 0; j + 1 < n; ++j) xs[j] = lo + static_cast<double>(j) * step;
  xs[n - 1] = hi;
  return xs;
}

}  // namespace

Grid::Grid(const Vec2& lower, const Vec2& upper, std::size_t n1, std::size_t n2)
    : lower_(lower), upper_(upper), n1_(n1), n2_(n2) {
  if (n1 < 2 || n2 < 2) {
    throw ArgumentError("grid needs at least 2 points per dimension, got " + std::to_string(n1) +
                        "x" + std::to_string(n2));
  }
  validate_box(lower, upper);
  s1_ = (upper.x1 - lower.x1) / static_cast<double>(n1 - 1);
  s2_ = (upper.x2 - lower.x2) / static_cast<double>(n2 - 1);
  x1_ = axis_coordinates(lower.x1, upper.x1, n1, s1_);
  x2_ = axis_coordinates(lower.x2, upper.x2, n2, s2_);
}

Grid build_grid(const Vec2& lower, const Vec2& upper, std::size_t n1, std::size_t n2) {
  return Grid(lower, upper, n1, n2);
}

ScalarField::ScalarField(Grid g, std::vector<double> v) : grid(std::move(g)), values(std::move(v)) {
  if (values.size() != grid.size()) {
    throw ArgumentError("scalar field has " + std::to_string(values.size()) + " values for " +
                        std::to_string(grid.size()) + " grid points");
  }
}

std::pair<ScalarField, ScalarField> evaluate_grid(const BiObjectiveProblem& problem,
                                                  const Grid& grid, unsigned workers) {
  const Vec2& lo = grid.lower();
  const Vec2& hi = grid.upper();
  if (lo.x1 < problem.lower.x1 || lo.x2 < problem.lower.x2 || hi.x1 > problem.upper.x1 ||
      hi.x2 > problem.upper.x2) {
    throw DomainError("grid box exceeds the box of problem '" + problem.name + "'");
  }

  ScalarField f1(grid);
  ScalarField f2(grid);
  parallel_for(grid.n2(), workers, [&](std::size_t row_begin, std::size_t row_end) {
    for (std::size_t j2 = row_begin; j2 < row_end; ++j2) {
      for (std::size_t j1 = 0; j1 < grid.n1(); ++j1) {
        const ObjectivePair f = evaluate(problem, grid.point(j1, j2));
        f1.at(j1, j2) = f.f1;
        f2.at(j1, j2) = f.f2;
      }
    }
  });
  return {std::move(f1), std::move(f2)};
}

void write_grid_csv(std::ostream& out, const ScalarField& f1, const ScalarField& f2) {
  const Grid& g = f1.grid;
  out << "j1,j2,x1,x2,f1,f2\n";
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto [j1, j2] = g.coords(i);
    const Vec2 x = g.point(i);
    out << j1 << ',' << j2 << ',' << csv::number(x.x1) << ',' << csv::number(x.x2) << ','
        << csv::number(f1[i]) << ',' << csv::number(f2[i]) << '\n';
  }
}

}  // namespace molandscape
