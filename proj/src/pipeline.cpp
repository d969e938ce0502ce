#include "molandscape/pipeline.hpp"

#include <utility>

namespace molandscape {

FieldSet compute_fields(ScalarField f1, ScalarField f2, double zero_tol_relative,
                        BoundaryFirstOrder* boundary) {
  if (!(zero_tol_relative > 0.0)) throw ArgumentError("zero tolerance must be positive");
  VectorField g1 = finite_diff_gradients(f1);
  VectorField g2 = finite_diff_gradients(f2);
  const double scale = 0.5 * (mean_norm(g1) + mean_norm(g2));
  const double zero_tol = zero_tol_relative * (scale > 0.0 ? scale : 1.0);

  VectorField raw = mo_gradient(g1, g2, zero_tol);
  const Grid grid = f1.grid;
  FieldSet fields{std::move(f1), std::move(f2),        std::move(g1),       std::move(g2),
                  raw,           std::move(raw),       ScalarField(grid),   zero_tol};

  BoundaryFirstOrder first = boundary_first_order(fields);
  fields.mo_gradient = first.rotated;
  VectorField descent = fields.mo_gradient;
  for (Vec2& v : descent.values) v = -v;
  fields.divergence = divergence(descent);
  if (boundary != nullptr) *boundary = std::move(first);
  return fields;
}

CriticalityMap classify(const FieldSet& fields, const BoundaryFirstOrder& boundary, double div_tol,
                        unsigned workers) {
  const auto triangles = interior_first_order(fields, workers);
  CriticalityMap map = second_order_filter(triangles, fields.divergence, div_tol);
  boundary_second_order(boundary.critical_pairs, fields, map);
  map.rotations = boundary.rotations;
  return map;
}

PipelineResult run_pipeline(const BiObjectiveProblem& problem, const Grid& grid,
                            const PipelineOptions& options) {
  if (options.div_tol_relative < 0.0) throw ArgumentError("divergence tolerance must be non-negative");
  auto [f1, f2] = evaluate_grid(problem, grid, options.workers);
  BoundaryFirstOrder boundary{{}, VectorField(grid), {}};
  FieldSet fields = compute_fields(std::move(f1), std::move(f2), options.zero_tol_relative, &boundary);
  const double div_tol = resolve_div_tol(fields.divergence, options.div_tol_relative);
  CriticalityMap critical = classify(fields, boundary, div_tol, options.workers);
  EfficientSetDecomposition decomposition = dominance_ranks(critical, fields.f1, fields.f2);
  GfhResult gfh = gfh_heights(fields, critical, decomposition);
  std::optional<HeightField> cost;
  if (options.compute_cost) cost = cost_landscape(fields.f1, fields.f2);
  return {std::move(fields), std::move(critical), std::move(decomposition), std::move(gfh),
          std::move(cost),   div_tol};
}

}  // namespace molandscape
