#ifndef MOLANDSCAPE_PIPELINE_HPP
#define MOLANDSCAPE_PIPELINE_HPP

#include <optional>

#include "molandscape/criticality.hpp"
#include "molandscape/gradients.hpp"
#include "molandscape/grid.hpp"
#include "molandscape/landscape.hpp"
#include "molandscape/problems.hpp"

namespace molandscape {

struct PipelineOptions {
  /// Gradient-zero tolerance relative to the mean single-objective gradient length.
  double zero_tol_relative = 1e-12;
  /// Divergence tolerance relative to max |div| over the grid.
  double div_tol_relative = 1e-9;
  bool compute_cost = false;
  unsigned workers = 1;
};

struct PipelineResult {
  FieldSet fields;
  CriticalityMap critical;
  EfficientSetDecomposition decomposition;
  GfhResult gfh;
  std::optional<HeightField> cost;
  double div_tol = 0.0;

  [[nodiscard]] const Grid& grid() const { return critical.grid; }
};

/// Gradients and MO field (with boundary rotation and divergence) for given objective fields.
FieldSet compute_fields(ScalarField f1, ScalarField f2, double zero_tol_relative,
                        BoundaryFirstOrder* boundary = nullptr);

/// Criticality classification from a complete FieldSet.
CriticalityMap classify(const FieldSet& fields, const BoundaryFirstOrder& boundary, double div_tol,
                        unsigned workers = 1);

/// Grid evaluation through GFH heights (and optionally the cost landscape).
PipelineResult run_pipeline(const BiObjectiveProblem& problem, const Grid& grid,
                            const PipelineOptions& options = {});

}  // namespace molandscape

#endif  // MOLANDSCAPE_PIPELINE_HPP
