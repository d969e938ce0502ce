#include "molandscape/problems.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>
#include <utility>

namespace molandscape {

namespace {

double squared_distance(const Vec2& x, const Vec2& c) {
  const Vec2 d = x - c;
  return dot(d, d);
}

// h / (1 + 4 |x - c|^2)
double sgk_peak(const Vec2& x, double h, const Vec2& c) {
  return h / (1.0 + 4.0 * squared_distance(x, c));
}

std::string describe(const Vec2& v) {
  std::ostringstream os;
  os.precision(std::numeric_limits<double>::max_digits10);
  os << "(" << v.x1 << ", " << v.x2 << ")";
  return os.str();
}

std::vector<double> parse_parameters(std::string_view text) {
  std::vector<double> values;
  while (true) {
    const auto comma = text.find(',');
    std::string token(text.substr(0, comma));
    // from_chars rejects a leading '+'; accept it for convenience
    if (!token.empty() && token.front() == '+') token.erase(0, 1);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size() ||
        !std::isfinite(value)) {
      throw ArgumentError("invalid problem parameter '" + token + "'");
    }
    values.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return values;
}

}  // namespace

void validate_box(const Vec2& lower, const Vec2& upper) {
  if (!(lower.x1 < upper.x1) || !(lower.x2 < upper.x2)) {
    throw ArgumentError("invalid box: lower " + describe(lower) + " must be strictly below upper " +
                        describe(upper) + " in both coordinates");
  }
}

BiObjectiveProblem BiObjectiveProblem::with_bounds(const Vec2& lo, const Vec2& hi) const {
  validate_box(lo, hi);
  BiObjectiveProblem copy = *this;
  copy.lower = lo;
  copy.upper = hi;
  return copy;
}

ObjectivePair evaluate(const BiObjectiveProblem& problem, const Vec2& x) {
  const auto check = [&](double value, double bound, bool is_lower, int axis) {
    if (is_lower ? !(value >= bound) : !(value <= bound)) {
      std::ostringstream os;
      os.precision(std::numeric_limits<double>::max_digits10);
      os << problem.name << ": point " << describe(x) << " violates "
         << (is_lower ? "lower" : "upper") << " bound x" << axis << (is_lower ? " >= " : " <= ")
         << bound;
      throw DomainError(os.str());
    }
  };
  check(x.x1, problem.lower.x1, true, 1);
  check(x.x2, problem.lower.x2, true, 2);
  check(x.x1, problem.upper.x1, false, 1);
  check(x.x2, problem.upper.x2, false, 2);

  const ObjectivePair f = problem.objectives(x);
  if (!std::isfinite(f.f1) || !std::isfinite(f.f2)) {
    throw EvaluationError(problem.name + ": non-finite objective value at " + describe(x));
  }
  return f;
}

BiObjectiveProblem make_aspar() {
  BiObjectiveProblem p;
  p.name = "aspar";
  p.lower = {-2.0, -1.0};
  p.upper = {2.0, 3.0};
  p.objectives = [](const Vec2& x) {
    const double a = x.x1 * x.x1;
    return ObjectivePair{a * a - 2.0 * a + 2.0 * x.x2 * x.x2 + 1.0,
                         (x.x1 + 0.5) * (x.x1 + 0.5) + (x.x2 - 2.0) * (x.x2 - 2.0)};
  };
  p.analytic_gradient = [](const Vec2& x) {
    return GradientPair{{4.0 * x.x1 * x.x1 * x.x1 - 4.0 * x.x1, 4.0 * x.x2},
                        {2.0 * (x.x1 + 0.5), 2.0 * (x.x2 - 2.0)}};
  };
  return p;
}

BiObjectiveProblem make_sgk() {
  BiObjectiveProblem p;
  p.name = "sgk";
  p.lower = {-0.25, -0.25};
  p.upper = {1.25, 1.25};
  p.objectives = [](const Vec2& x) {
    const double f1 = 1.0 - sgk_peak(x, 1.0, {2.0 / 3.0, 1.0});
    const double g1 = sgk_peak(x, 1.5, {0.5, 0.0});
    const double g2 = sgk_peak(x, 2.0, {0.25, 2.0 / 3.0});
    const double g3 = sgk_peak(x, 3.0, {1.0, 1.0});
    return ObjectivePair{f1, 1.0 - std::max({g1, g2, g3})};
  };
  return p;
}

BiObjectiveProblem make_bisphere(const Vec2& a, const Vec2& b) {
  BiObjectiveProblem p;
  p.name = "bisphere";
  p.lower = {-2.0, -2.0};
  p.upper = {2.0, 2.0};
  p.objectives = [a, b](const Vec2& x) {
    return ObjectivePair{squared_distance(x, a), squared_distance(x, b)};
  };
  p.analytic_gradient = [a, b](const Vec2& x) {
    return GradientPair{2.0 * (x - a), 2.0 * (x - b)};
  };
  return p;
}

BiObjectiveProblem make_mindist(std::vector<Vec2> centers1, std::vector<Vec2> centers2) {
  if (centers1.empty() || centers2.empty()) {
    throw ArgumentError("mindist needs at least one center per objective");
  }
  BiObjectiveProblem p;
  p.name = "mindist";
  p.lower = {-4.0, -4.0};
  p.upper = {4.0, 4.0};
  p.objectives = [c1 = std::move(centers1), c2 = std::move(centers2)](const Vec2& x) {
    const auto nearest = [&x](const std::vector<Vec2>& centers) {
      double best = std::numeric_limits<double>::infinity();
      for (const Vec2& c : centers) best = std::min(best, squared_distance(x, c));
      return best;
    };
    return ObjectivePair{nearest(c1), nearest(c2)};
  };
  return p;
}

BiObjectiveProblem make_mindist() {
  return make_mindist({{-2.0, -1.0}, {2.0, 1.0}}, {{-2.0, 1.0}, {2.0, -1.0}});
}

BiObjectiveProblem make_kursawe() {
  BiObjectiveProblem p;
  p.name = "kursawe";
  p.lower = {-5.0, -5.0};
  p.upper = {5.0, 5.0};
  p.externally_sourced = true;
  p.objectives = [](const Vec2& x) {
    const double f1 = -10.0 * std::exp(-0.2 * std::sqrt(x.x1 * x.x1 + x.x2 * x.x2));
    const auto term = [](double v) { return std::pow(std::abs(v), 0.8) + 5.0 * std::sin(v * v * v); };
    return ObjectivePair{f1, term(x.x1) + term(x.x2)};
  };
  return p;
}

std::vector<BiObjectiveProblem> builtin_problems() {
  return {make_sgk(), make_aspar(), make_bisphere({-1.0, 0.0}, {1.0, 0.0}), make_mindist(),
          make_kursawe()};
}

std::vector<std::string> builtin_problem_names() {
  std::vector<std::string> names;
  for (const auto& p : builtin_problems()) names.push_back(p.name);
  return names;
}

BiObjectiveProblem find_problem(std::string_view spec) {
  const auto colon = spec.find(':');
  const std::string_view name = spec.substr(0, colon);
  std::vector<double> params;
  if (colon != std::string_view::npos) params = parse_parameters(spec.substr(colon + 1));

  const auto expect_params = [&](std::size_t n) {
    if (params.size() != n) {
      throw ArgumentError(std::string(name) + " takes " + std::to_string(n) + " parameters, got " +
                          std::to_string(params.size()));
    }
  };

  if (name == "bisphere") {
    if (params.empty()) return make_bisphere({-1.0, 0.0}, {1.0, 0.0});
    expect_params(4);
    return make_bisphere({params[0], params[1]}, {params[2], params[3]});
  }
  if (name == "mindist") {
    if (params.empty()) return make_mindist();
    expect_params(8);
    return make_mindist({{params[0], params[1]}, {params[2], params[3]}},
                        {{params[4], params[5]}, {params[6], params[7]}});
  }
  for (auto& p : builtin_problems()) {
    if (p.name == name) {
      expect_params(0);
      return std::move(p);
    }
  }

  std::string available;
  for (const auto& n : builtin_problem_names()) {
    available += available.empty() ? n : ", " + n;
  }
  throw NotFoundError("unknown problem '" + std::string(name) + "'; available: " + available);
}

}  // namespace molandscape
