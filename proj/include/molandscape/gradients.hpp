/**
 * @file gradients.hpp
 * @brief Finite-difference gradients, the bi-objective (MO) gradient field
 *        and its divergence.
 */

#ifndef MOLANDSCAPE_GRADIENTS_HPP
#define MOLANDSCAPE_GRADIENTS_HPP

#include <iosfwd>

#include "molandscape/grid.hpp"

namespace molandscape {

/**
 * @brief Per-axis finite differences of a grid field.
 *
 * Central differences (denominator 2 s_i) at interior indices, forward
 * difference at index 0 and backward difference at index n_i - 1
 * (denominator s_i). Only the already-evaluated grid values are used.
 */
VectorField finite_diff_gradients(const ScalarField& field);

/**
 * @brief Sum of the normalized single-objective gradients.
 *
 * Points where either gradient is shorter than zero_tol get the zero vector:
 * a vanishing single-objective gradient already satisfies the first-order
 * condition.
 */
VectorField mo_gradient(const VectorField& g1, const VectorField& g2, double zero_tol);

/// Finite-difference divergence, using the same stencils as finite_diff_gradients.
ScalarField divergence(const VectorField& v);

/// Mean vector length over the field; the scale for relative zero tolerances.
double mean_norm(const VectorField& v);

/// Everything the later stages need, on one grid.
struct FieldSet {
  ScalarField f1;
  ScalarField f2;
  VectorField g1;
  VectorField g2;
  /// MO gradient after boundary rotation.
  VectorField mo_gradient;
  /// MO gradient before boundary rotation.
  VectorField mo_gradient_raw;
  /// Divergence of the negated (descent) MO gradient field.
  ScalarField divergence;
  /// Absolute tolerance below which a gradient counts as zero.
  double zero_tol = 0.0;
};

/// CSV with header `j1,j2,g1x,g1y,g2x,g2y,mgx,mgy,div` (rotated MO gradient).
void write_fields_csv(std::ostream& out, const FieldSet& fields);

}  // namespace molandscape

#endif  // MOLANDSCAPE_GRADIENTS_HPP
