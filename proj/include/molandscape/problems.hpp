/**
 * @file problems.hpp
 * @brief Box-constrained bi-objective problems over a two-dimensional
 *        decision space, and the registry of built-in benchmark problems.
 */

#ifndef MOLANDSCAPE_PROBLEMS_HPP
#define MOLANDSCAPE_PROBLEMS_HPP

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "molandscape/types.hpp"

namespace molandscape {

struct BiObjectiveProblem {
  using Objectives = std::function<ObjectivePair(const Vec2&)>;
  using Gradients = std::function<GradientPair(const Vec2&)>;

  std::string name;
  Vec2 lower;
  Vec2 upper;
  Objectives objectives;
  std::optional<Gradients> analytic_gradient;
  /// Formula taken from outside the reference material (documentation only).
  bool externally_sourced = false;

  /// Returns a copy with a different box. Throws ArgumentError if inverted.
  [[nodiscard]] BiObjectiveProblem with_bounds(const Vec2& lo, const Vec2& hi) const;
};

/// Throws ArgumentError unless lower < upper in both coordinates.
void validate_box(const Vec2& lower, const Vec2& upper);

/**
 * @brief Evaluates both objectives at x.
 *
 * Throws DomainError naming the violated bound when x lies outside the
 * closed box, and EvaluationError if an objective is not finite.
 */
ObjectivePair evaluate(const BiObjectiveProblem& problem, const Vec2& x);

// Built-in problems. Each factory returns the problem on its default box.

/// f1 = x1^4 - 2 x1^2 + 2 x2^2 + 1, f2 = (x1 + 0.5)^2 + (x2 - 2)^2 on [-2,2]x[-1,3].
BiObjectiveProblem make_aspar();

/// Unimodal sphere-like f1 against a trimodal f2, on [-0.25,1.25]^2.
BiObjectiveProblem make_sgk();

/// f1 = |x - a|^2, f2 = |x - b|^2 on [-2,2]^2.
BiObjectiveProblem make_bisphere(const Vec2& a, const Vec2& b);

/// Per objective, squared distance to the nearest of that objective's centers.
BiObjectiveProblem make_mindist(std::vector<Vec2> centers1, std::vector<Vec2> centers2);

/// MinDist with centers (-2,-1),(2,1) for f1 and (-2,1),(2,-1) for f2, on [-4,4]^2.
BiObjectiveProblem make_mindist();

/// Two-variable Kursawe function on [-5,5]^2 (externally sourced formula).
BiObjectiveProblem make_kursawe();

/// All built-in problems with default parameters.
std::vector<BiObjectiveProblem> builtin_problems();

/// Names accepted by find_problem, in registry order.
std::vector<std::string> builtin_problem_names();

/**
 * @brief Resolves a problem from a CLI-style name such as `aspar` or
 *        `bisphere:-1,0,1,0`.
 *
 * Throws NotFoundError listing the available names for unknown problems, and
 * ArgumentError for malformed or wrongly-sized parameter lists.
 */
BiObjectiveProblem find_problem(std::string_view spec);

}  // namespace molandscape

#endif  // MOLANDSCAPE_PROBLEMS_HPP
