#include <doctest.h>

#include <cstring>
#include <random>

#include "molandscape/grid.hpp"
#include "molandscape/problems.hpp"
#include "test_support.hpp"

using namespace molandscape;

TEST_CASE("aspar values by substitution") {
  const auto p = make_aspar();
  CHECK(evaluate(p, {0.0, 0.0}) == ObjectivePair{1.0, 4.25});
  CHECK(evaluate(p, {1.0, 0.0}) == ObjectivePair{0.0, 6.25});
  CHECK(p.lower == Vec2{-2.0, -1.0});
  CHECK(p.upper == Vec2{2.0, 3.0});
}

TEST_CASE("sgk at the global f2 optimum") {
  const auto f = evaluate(make_sgk(), {1.0, 1.0});
  CHECK(f.f1 == doctest::Approx(1.0 - 1.0 / (1.0 + 4.0 / 9.0)).epsilon(1e-15));
  CHECK(f.f1 == doctest::Approx(0.3077).epsilon(1e-4));
  CHECK(f.f2 == doctest::Approx(-2.0).epsilon(1e-15));
}

TEST_CASE("bisphere is symmetric between its centers") {
  const auto p = make_bisphere({-1.0, 0.0}, {1.0, 0.0});
  CHECK(evaluate(p, {0.0, 0.0}) == ObjectivePair{1.0, 1.0});
  const auto g = (*p.analytic_gradient)({0.5, 0.25});
  CHECK(g.g1 == Vec2{3.0, 0.5});
  CHECK(g.g2 == Vec2{-1.0, 0.5});
}

TEST_CASE("mindist uses the nearest center per objective") {
  const auto p = make_mindist();
  CHECK(evaluate(p, {-2.0, -1.0}) == ObjectivePair{0.0, 4.0});
  CHECK(evaluate(p, {2.0, -1.0}) == ObjectivePair{4.0, 0.0});
  CHECK(evaluate(p, {0.0, 0.0}) == ObjectivePair{5.0, 5.0});
}

TEST_CASE("evaluate rejects points outside the box") {
  const auto p = make_aspar();
  CHECK_THROWS_AS(evaluate(p, {2.5, 0.0}), DomainError);
  CHECK_THROWS_AS(evaluate(p, {0.0, -1.5}), DomainError);
  try {
    evaluate(p, {0.0, 3.25});
    FAIL("expected DomainError");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("upper bound x2") != std::string::npos);
  }
  // closed box
  CHECK_NOTHROW(evaluate(p, {2.0, 3.0}));
  CHECK_NOTHROW(evaluate(p, {-2.0, -1.0}));
}

TEST_CASE("non-finite objective values are reported") {
  const auto p = testing::make_problem("nan", {0, 0}, {1, 1}, [](const Vec2& x) {
    return ObjectivePair{x.x1 > 0.5 ? std::nan("") : 0.0, 0.0};
  });
  CHECK_NOTHROW(evaluate(p, {0.25, 0.0}));
  CHECK_THROWS_AS(evaluate(p, {0.75, 0.0}), EvaluationError);
}

TEST_CASE("registry lookup") {
  const auto names = builtin_problem_names();
  for (const char* n : {"sgk", "aspar", "bisphere", "mindist", "kursawe"}) {
    CHECK(std::find(names.begin(), names.end(), n) != names.end());
  }

  const auto aspar = find_problem("aspar");
  CHECK(aspar.name == "aspar");
  CHECK(aspar.upper == Vec2{2.0, 3.0});

  const auto bs = find_problem("bisphere:-1,0,1,0");
  CHECK(evaluate(bs, {1.0, 0.0}) == ObjectivePair{4.0, 0.0});
  const auto shifted = find_problem("bisphere:0,0,1,1");
  CHECK(evaluate(shifted, {0.0, 0.0}) == ObjectivePair{0.0, 2.0});

  CHECK(find_problem("sgk").lower == Vec2{-0.25, -0.25});
  CHECK(find_problem("mindist").upper == Vec2{4.0, 4.0});
  CHECK(find_problem("kursawe").externally_sourced);
  CHECK_FALSE(find_problem("aspar").externally_sourced);
}

TEST_CASE("registry errors") {
  try {
    find_problem("dtlz1");
    FAIL("expected NotFoundError");
  } catch (const NotFoundError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("dtlz1") != std::string::npos);
    CHECK(msg.find("aspar") != std::string::npos);
    CHECK(msg.find("bisphere") != std::string::npos);
  }
  CHECK_THROWS_AS(find_problem("bisphere:1,2,3"), ArgumentError);
  CHECK_THROWS_AS(find_problem("bisphere:1,x,3,4"), ArgumentError);
  CHECK_THROWS_AS(find_problem("aspar:1"), ArgumentError);
}

TEST_CASE("box override validates bounds") {
  const auto p = make_aspar().with_bounds({-1.0, -1.0}, {1.0, 1.0});
  CHECK(p.upper == Vec2{1.0, 1.0});
  CHECK_THROWS_AS((void)make_aspar().with_bounds({1.0, 0.0}, {0.0, 1.0}), ArgumentError);
  CHECK_THROWS_AS((void)make_aspar().with_bounds({0.0, 0.0}, {1.0, 0.0}), ArgumentError);
}

TEST_CASE("sgk f2 has exactly three local minima at the peak centers") {
  const auto p = make_sgk();
  // step 0.005 puts every center except 2/3 on a grid line
  const Grid g(p.lower, p.upper, 301, 301);
  const auto [f1, f2] = evaluate_grid(p, g);
  std::vector<Vec2> minima;
  for (std::size_t j2 = 1; j2 + 1 < g.n2(); ++j2) {
    for (std::size_t j1 = 1; j1 + 1 < g.n1(); ++j1) {
      bool is_min = true;
      for (int di = -1; di <= 1 && is_min; ++di) {
        for (int dj = -1; dj <= 1; ++dj) {
          if ((di || dj) && !(f2.at(j1, j2) < f2.at(j1 + di, j2 + dj))) {
            is_min = false;
            break;
          }
        }
      }
      if (is_min) minima.push_back(g.point(j1, j2));
    }
  }
  REQUIRE(minima.size() == 3);
  const std::vector<Vec2> centers{{0.5, 0.0}, {0.25, 2.0 / 3.0}, {1.0, 1.0}};
  for (const Vec2& c : centers) {
    const bool found = std::any_of(minima.begin(), minima.end(), [&](const Vec2& m) {
      return std::max(std::abs(m.x1 - c.x1), std::abs(m.x2 - c.x2)) <= g.s1();
    });
    CHECK_MESSAGE(found, "no minimum near (" << c.x1 << ", " << c.x2 << ")");
  }
}

TEST_CASE("built-in evaluators are pure") {
  std::mt19937_64 rng(7);
  for (const auto& p : builtin_problems()) {
    std::uniform_real_distribution<double> u1(p.lower.x1, p.upper.x1);
    std::uniform_real_distribution<double> u2(p.lower.x2, p.upper.x2);
    for (int k = 0; k < 200; ++k) {
      const Vec2 x{u1(rng), u2(rng)};
      const auto a = evaluate(p, x);
      const auto b = evaluate(p, x);
      CHECK(std::memcmp(&a, &b, sizeof a) == 0);
    }
  }
}
