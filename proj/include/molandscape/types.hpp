#ifndef MOLANDSCAPE_TYPES_HPP
#define MOLANDSCAPE_TYPES_HPP

#include <cmath>
#include <stdexcept>
#include <string>

namespace molandscape {

/// A point or direction in the two-dimensional decision space.
struct Vec2 {
  double x1 = 0.0;
  double x2 = 0.0;

  constexpr Vec2& operator+=(const Vec2& o) {
    x1 += o.x1;
    x2 += o.x2;
    return *this;
  }
  constexpr Vec2& operator-=(const Vec2& o) {
    x1 -= o.x1;
    x2 -= o.x2;
    return *this;
  }
  constexpr Vec2& operator*=(double c) {
    x1 *= c;
    x2 *= c;
    return *this;
  }

  friend constexpr Vec2 operator+(Vec2 a, const Vec2& b) { return a += b; }
  friend constexpr Vec2 operator-(Vec2 a, const Vec2& b) { return a -= b; }
  friend constexpr Vec2 operator-(const Vec2& a) { return {-a.x1, -a.x2}; }
  friend constexpr Vec2 operator*(Vec2 a, double c) { return a *= c; }
  friend constexpr Vec2 operator*(double c, Vec2 a) { return a *= c; }
  friend constexpr bool operator==(const Vec2&, const Vec2&) = default;
};

constexpr double dot(const Vec2& a, const Vec2& b) { return a.x1 * b.x1 + a.x2 * b.x2; }
constexpr double cross(const Vec2& a, const Vec2& b) { return a.x1 * b.x2 - a.x2 * b.x1; }
inline double norm(const Vec2& a) { return std::hypot(a.x1, a.x2); }

/// Objective values (f1, f2) of a single decision point.
struct ObjectivePair {
  double f1 = 0.0;
  double f2 = 0.0;
  friend constexpr bool operator==(const ObjectivePair&, const ObjectivePair&) = default;
};

/// Gradients of both objectives at a single decision point.
struct GradientPair {
  Vec2 g1;
  Vec2 g2;
};

/// Minimization dominance: a is no worse in both objectives and better in one.
constexpr bool dominates(const ObjectivePair& a, const ObjectivePair& b) {
  return a.f1 <= b.f1 && a.f2 <= b.f2 && (a.f1 < b.f1 || a.f2 < b.f2);
}

// Error types. Everything thrown by the library derives from std::exception
// through one of the standard categories below.

/// A decision point outside the problem box.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed construction arguments (grid sizes, bounds, tolerances).
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Registry lookup for a name that does not exist.
class NotFoundError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// An objective returned a non-finite value.
class EvaluationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace molandscape

#endif  // MOLANDSCAPE_TYPES_HPP
