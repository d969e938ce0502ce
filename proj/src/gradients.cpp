#include "molandscape/gradients.hpp"

#include <ostream>

#include "molandscape/csv.hpp"

namespace molandscape {

namespace {

// Eq.-3 style derivative along one axis. value(j) reads the field at index j
// along that axis with the other index held fixed.
template <typename Read>
double axis_derivative(std::size_t j, std::size_t n, double step, const Read& value) {
  if (j == 0) return (value(1) - value(0)) / step;
  if (j + 1 == n) return (value(n - 1) - value(n - 2)) / step;
  return (value(j + 1) - value(j - 1)) / (2.0 * step);
}

}  // namespace

VectorField finite_diff_gradients(const ScalarField& field) {
  const Grid& g = field.grid;
  VectorField out(g);
  for (std::size_t j2 = 0; j2 < g.n2(); ++j2) {
    for (std::size_t j1 = 0; j1 < g.n1(); ++j1) {
      const double d1 =
          axis_derivative(j1, g.n1(), g.s1(), [&](std::size_t k) { return field.at(k, j2); });
      const double d2 =
          axis_derivative(j2, g.n2(), g.s2(), [&](std::size_t k) { return field.at(j1, k); });
      out.at(j1, j2) = {d1, d2};
    }
  }
  return out;
}

VectorField mo_gradient(const VectorField& g1, const VectorField& g2, double zero_tol) {
  if (!(g1.grid == g2.grid)) throw ArgumentError("mo_gradient: gradient fields on different grids");
  if (!(zero_tol > 0.0)) throw ArgumentError("mo_gradient: zero_tol must be positive");
  VectorField out(g1.grid);
  for (std::size_t i = 0; i < out.values.size(); ++i) {
    const double n1 = norm(g1[i]);
    const double n2 = norm(g2[i]);
    if (n1 < zero_tol || n2 < zero_tol) continue;
    out[i] = g1[i] * (1.0 / n1) + g2[i] * (1.0 / n2);
  }
  return out;
}

ScalarField divergence(const VectorField& v) {
  const Grid& g = v.grid;
  ScalarField out(g);
  for (std::size_t j2 = 0; j2 < g.n2(); ++j2) {
    for (std::size_t j1 = 0; j1 < g.n1(); ++j1) {
      const double d1 =
          axis_derivative(j1, g.n1(), g.s1(), [&](std::size_t k) { return v.at(k, j2).x1; });
      const double d2 =
          axis_derivative(j2, g.n2(), g.s2(), [&](std::size_t k) { return v.at(j1, k).x2; });
      out.at(j1, j2) = d1 + d2;
    }
  }
  return out;
}

double mean_norm(const VectorField& v) {
  double sum = 0.0;
  for (const Vec2& x : v.values) sum += norm(x);
  return v.values.empty() ? 0.0 : sum / static_cast<double>(v.values.size());
}

void write_fields_csv(std::ostream& out, const FieldSet& fields) {
  const Grid& g = fields.f1.grid;
  out << "j1,j2,g1x,g1y,g2x,g2y,mgx,mgy,div\n";
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto [j1, j2] = g.coords(i);
    const Vec2& a = fields.g1[i];
    const Vec2& b = fields.g2[i];
    const Vec2& m = fields.mo_gradient[i];
    out << j1 << ',' << j2 << ',' << csv::number(a.x1) << ',' << csv::number(a.x2) << ','
        << csv::number(b.x1) << ',' << csv::number(b.x2) << ',' << csv::number(m.x1) << ','
        << csv::number(m.x2) << ',' << csv::number(fields.divergence[i]) << '\n';
  }
}

}  // namespace molandscape
