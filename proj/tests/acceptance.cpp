// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits non-zero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"
#include "molandscape/render.hpp"
#include "test_support.hpp"

using namespace molandscape;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

/// Collects failed sub-checks of one criterion.
struct Report {
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  void note(const std::string& s) { notes.push_back(s); }
};

std::string fmt(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

// 1
void bisphere_ground_truth(Report& r) {
  const auto p = make_bisphere({-1, 0}, {1, 0});
  const auto t0 = Clock::now();
  const Grid g(p.lower, p.upper, 201, 201);
  const auto res = run_pipeline(p, g);
  const auto img = compose_plot(res.gfh.heights, res.decomposition);
  const double elapsed = seconds_since(t0);
  const double cell = std::max(g.s1(), g.s2());

  std::vector<std::size_t> efficient;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (is_efficient(res.critical.classes[i])) efficient.push_back(i);
  }
  std::size_t outside = 0;
  for (std::size_t i : efficient) outside += testing::chebyshev_to_segment(g.point(i), -1, 1) > cell + 1e-12;
  std::size_t uncovered = 0;
  for (int k = 0; k <= 100; ++k) {
    const Vec2 s{-1.0 + 2.0 * k / 100.0, 0.0};
    const bool covered = std::any_of(efficient.begin(), efficient.end(), [&](std::size_t i) {
      const Vec2 x = g.point(i);
      return std::max(std::abs(x.x1 - s.x1), std::abs(x.x2 - s.x2)) <= cell + 1e-12;
    });
    uncovered += !covered;
  }
  const auto& d = res.decomposition;
  r.expect(!efficient.empty(), "no efficient points");
  r.expect(outside == 0, std::to_string(outside) + " efficient points farther than one cell from the segment");
  r.expect(uncovered == 0, std::to_string(uncovered) + " of 101 segment samples uncovered");
  r.expect(d.components.size() == 1, std::to_string(d.components.size()) + " components");
  r.expect(d.max_rank() == 0, std::to_string(d.n_efficient - d.n_rank0) + " of " +
                                  std::to_string(d.n_efficient) + " efficient points have rank > 0 (max " +
                                  std::to_string(d.max_rank()) + ")");
  r.expect(elapsed < 5.0, "runtime " + fmt(elapsed) + " s");
  r.note("runtime " + fmt(elapsed) + " s");
  (void)img;
}

struct SgkCounts {
  std::size_t components = 0;
  std::size_t basins = 0;
  std::size_t rank0_components = 0;
  std::size_t ranked_components = 0;  // components other than the rank-0 one with some rank > 0
};

SgkCounts sgk_counts(const PipelineResult& res) {
  const auto& d = res.decomposition;
  SgkCounts c;
  c.components = d.components.size();
  c.basins = res.gfh.basins.count_basins();
  for (const auto& comp : d.components) {
    if (comp.min_rank == 0) {
      ++c.rank0_components;
    } else if (std::any_of(comp.points.begin(), comp.points.end(), [&](std::size_t i) { return d.rank[i] > 0; })) {
      ++c.ranked_components;
    }
  }
  return c;
}

void check_sgk_counts(Report& r, const SgkCounts& c, const std::string& label) {
  r.expect(c.components == 3, label + ": " + std::to_string(c.components) + " components");
  r.expect(c.basins == 3, label + ": " + std::to_string(c.basins) + " basins");
  r.expect(c.rank0_components == 1, label + ": " + std::to_string(c.rank0_components) + " components reach rank 0");
  r.expect(c.ranked_components + c.rank0_components == c.components,
           label + ": a non-global component has no point with rank > 0");
}

// 2
void sgk_structure(Report& r) {
  const auto p = make_sgk();
  for (std::size_t n : {200, 300, 400}) {
    const auto res = run_pipeline(p, Grid(p.lower, p.upper, n, n));
    check_sgk_counts(r, sgk_counts(res), std::to_string(n) + "^2");
  }
}

// 3
void aspar_ridges(Report& r) {
  const auto p = make_aspar();
  const auto res = run_pipeline(p, Grid(p.lower, p.upper, 201, 201));
  const auto& m = res.critical;
  const std::size_t ridge = m.count(PointClass::CriticalOnly);
  r.expect(ridge > 0, "CriticalOnly is empty");
  std::size_t both = 0;
  for (std::size_t i = 0; i < m.grid.size(); ++i) {
    both += m.classes[i] == PointClass::CriticalOnly && is_efficient(m.classes[i]);
  }
  r.expect(both == 0, "CriticalOnly overlaps LocallyEfficient");
  std::size_t rejected = 0, unexplained = 0;
  for (std::size_t k = 0; k < m.critical_triangles.size(); ++k) {
    if (m.triangle_efficient[k]) continue;
    ++rejected;
    const auto c = m.critical_triangles[k].corners();
    unexplained += std::none_of(c.begin(), c.end(), [&](std::size_t i) { return res.fields.divergence[i] > res.div_tol; });
  }
  r.expect(unexplained == 0, std::to_string(unexplained) + " rejected triangles without a corner above div_tol");
  r.note(std::to_string(ridge) + " CriticalOnly points, " + std::to_string(rejected) + " rejected triangles");
}

// 4
void cost_oracle(Report& r) {
  std::mt19937_64 rng(20240601);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const Grid g({0, 0}, {1, 1}, 50, 50);
  std::size_t mismatches = 0;
  for (int trial = 0; trial < 20; ++trial) {
    ScalarField f1(g), f2(g);
    // every fourth pair is quantized so that ties are exercised as well
    const double levels = trial % 4 == 3 ? 8.0 : 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
      f1[i] = levels > 0 ? std::floor(u(rng) * levels) : u(rng);
      f2[i] = levels > 0 ? std::floor(u(rng) * levels) : u(rng);
    }
    const auto fast = cost_landscape(f1, f2).heights.values;
    const auto slow = cost_landscape_brute_force(f1, f2).heights.values;
    for (std::size_t i = 0; i < fast.size(); ++i) mismatches += fast[i] != slow[i];
  }
  r.expect(mismatches == 0, std::to_string(mismatches) + " mismatches");
}

// 5
void gradient_convergence(Report& r) {
  const auto p = make_aspar();
  std::vector<double> errors;
  for (std::size_t n : {101, 201, 401}) {
    const Grid g(p.lower, p.upper, n, n);
    const auto [f1, f2] = evaluate_grid(p, g);
    const auto g1 = finite_diff_gradients(f1);
    const auto g2 = finite_diff_gradients(f2);
    double err = 0.0;
    for (std::size_t j2 = 1; j2 + 1 < n; ++j2) {
      for (std::size_t j1 = 1; j1 + 1 < n; ++j1) {
        const auto exact = (*p.analytic_gradient)(g.point(j1, j2));
        const std::size_t i = g.index(j1, j2);
        err = std::max({err, norm(g1[i] - exact.g1), norm(g2[i] - exact.g2)});
      }
    }
    errors.push_back(err);
  }
  const double r1 = errors[0] / errors[1], r2 = errors[1] / errors[2];
  r.expect(r1 >= 3.5, "101->201 ratio " + fmt(r1));
  r.expect(r2 >= 3.5, "201->401 ratio " + fmt(r2));
  r.note("ratios " + fmt(r1) + ", " + fmt(r2));
}

std::string exports(const PipelineResult& res) {
  std::ostringstream os;
  write_fields_csv(os, res.fields);
  write_critical_json(os, res.critical, res.fields);
  write_decomposition_json(os, res.decomposition, res.fields.f1, res.fields.f2);
  write_height_csv(os, res.gfh.heights);
  if (res.cost) write_height_csv(os, *res.cost);
  write_png(os, compose_plot(res.gfh.heights, res.decomposition));
  write_ppm(os, render_critical(res.critical));
  return os.str();
}

// 6
void invariance(Report& r) {
  std::mt19937_64 rng(4242);
  std::uniform_real_distribution<double> scale(1e-4, 1e4);

  std::size_t hull_changes = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<Vec2> vs(static_cast<std::size_t>(2 + trial % 7));
    for (auto& v : vs) v = testing::random_vec(rng);
    std::vector<Vec2> scaled = vs;
    for (auto& v : scaled) v = v * scale(rng);
    hull_changes += origin_in_hull(vs, 1e-12) != origin_in_hull(scaled, 1e-12);
  }
  r.expect(hull_changes == 0, "(a) " + std::to_string(hull_changes) + " of 1000 hull answers changed");

  const auto p = make_sgk();
  const Grid g(p.lower, p.upper, 200, 200);
  const auto base = run_pipeline(p, g);
  ScalarField r1(g), r2(g);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (std::size_t i = 0; i < g.size(); ++i) {
    r1[i] = u(rng);
    r2[i] = u(rng);
  }
  const auto random_cost = cost_landscape(r1, r2).heights.values;

  // A draw only counts if it is strictly increasing on the ranked data in
  // floating point; rounding may merge values that differ by an ulp.
  const auto strictly_increasing_on = [](const std::function<double(double)>& t, std::vector<double> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    for (std::size_t i = 1; i < v.size(); ++i) {
      if (!(t(v[i - 1]) < t(v[i]))) return false;
    }
    return true;
  };
  std::uniform_real_distribution<double> coef(0.5, 3.0);
  std::size_t transform_changes = 0, rejected_draws = 0;
  for (int trial = 0; trial < 10; ++trial) {
    const bool first = trial % 2 == 0;
    std::function<double(double)> t;
    do {
      const double a = coef(rng), b = coef(rng) - 1.75;
      switch (trial % 4) {
        case 0: t = [=](double v) { return a * v + b; }; break;
        case 1: t = [=](double v) { return std::exp(a * v) + b; }; break;
        case 2: t = [=](double v) { return v + a * v * v * v; }; break;
        default: t = [=](double v) { return std::exp(v) * a - std::exp(-v) * b * b; }; break;
      }
      std::vector<double> data;
      for (std::size_t i = 0; i < g.size(); ++i) {
        if (base.decomposition.component_of[i] != EfficientSetDecomposition::kNone) {
          data.push_back((first ? base.fields.f1 : base.fields.f2)[i]);
        }
      }
      const auto& extra = (first ? r1 : r2).values;
      data.insert(data.end(), extra.begin(), extra.end());
      if (strictly_increasing_on(t, data)) break;
      ++rejected_draws;
    } while (rejected_draws < 1000);

    ScalarField f1 = base.fields.f1, f2 = base.fields.f2, c1 = r1, c2 = r2;
    for (auto& v : (first ? f1 : f2).values) v = t(v);
    for (auto& v : (first ? c1 : c2).values) v = t(v);
    const auto d = dominance_ranks(base.critical, f1, f2);
    const bool same = d.rank == base.decomposition.rank && d.n_rank0 == base.decomposition.n_rank0 &&
                      cost_landscape(c1, c2).heights.values == random_cost;
    transform_changes += !same;
  }
  r.expect(transform_changes == 0, "(b) " + std::to_string(transform_changes) + " of 10 transforms changed ranks");
  r.expect(rejected_draws < 1000, "(b) no strictly increasing draw found");
  r.note(std::to_string(rejected_draws) + " transform draws rejected for floating-point ties");

  PipelineOptions serial, threaded;
  serial.compute_cost = threaded.compute_cost = true;
  threaded.workers = 4;
  const std::string first = exports(run_pipeline(p, g, serial));
  const bool repeat = exports(run_pipeline(p, g, serial)) == first;
  const bool workers = exports(run_pipeline(p, g, threaded)) == first;
  r.expect(repeat, "(c) repeated run differs");
  r.expect(workers, "(c) 4 workers differ from 1");
}

// 7
void boundary_logic(Report& r) {
  {
    const auto p = testing::make_problem("identity", {0, 0}, {1, 1}, [](const Vec2& x) {
      return ObjectivePair{x.x1, x.x2};
    });
    const Grid g(p.lower, p.upper, 51, 51);
    const auto res = run_pipeline(p, g);
    std::size_t off_edges = 0, on_bottom = 0, on_left = 0;
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (!is_efficient(res.critical.classes[i])) continue;
      const auto [j1, j2] = g.coords(i);
      on_bottom += j2 == 0;
      on_left += j1 == 0;
      off_edges += j1 != 0 && j2 != 0;
    }
    const auto& d = res.decomposition;
    r.expect(off_edges == 0, std::to_string(off_edges) + " efficient points off the x1 = 0 and x2 = 0 edges");
    r.expect(on_bottom > 1 && on_left > 1, "an edge carries no efficient points");
    r.expect(d.components.size() == 1, std::to_string(d.components.size()) + " components");
    r.expect(d.n_rank0 == 1 && d.rank[g.index(0, 0)] == 0, "rank 0 is not exactly the corner (0, 0)");
    r.expect(res.gfh.basins.unconverged_points == 0,
             std::to_string(res.gfh.basins.unconverged_points) + " descent paths do not reach the edges");
  }
  {
    const auto p = testing::make_problem("opposed", {0, 0}, {1, 1}, [](const Vec2& x) {
      return ObjectivePair{x.x1, -x.x1};
    });
    const Grid g(p.lower, p.upper, 51, 51);
    BoundaryFirstOrder bfo{{}, VectorField(g), {}};
    testing::fields_for(p, g, &bfo);
    std::size_t bottom = 0, top = 0;
    for (const auto& pair : bfo.critical_pairs) {
      bottom += pair.edge == Edge::Bottom;
      top += pair.edge == Edge::Top;
    }
    r.expect(bottom == 50 && top == 50, "x1-tangent edges: " + std::to_string(bottom) + " + " +
                                            std::to_string(top) + " of 100 pairs critical");
  }
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

// 8
void paper_scale(Report& r) {
  const auto dir = std::filesystem::temp_directory_path() / "molandscape_acceptance";
  std::filesystem::create_directories(dir);
  std::ostringstream out, err;
  const auto t0 = Clock::now();
  const int code = cli::main_with_args(
      {"--problem", "sgk", "--mode", "plot", "--resolution", "1000", "--out", (dir / "sgk.ppm").string()}, out, err);
  const double elapsed = seconds_since(t0);
  r.expect(code == 0, "exit code " + std::to_string(code) + ": " + err.str());
  r.expect(elapsed < 60.0, "runtime " + fmt(elapsed) + " s");
  r.expect(slurp(dir / "sgk.ppm").rfind("P6\n1000 1000\n255\n", 0) == 0, "image missing or malformed");
  if (code == 0) r.expect(nlohmann::json::parse(out.str())["n_components"] == 3, "summary: " + out.str());
  r.note("cli runtime " + fmt(elapsed) + " s");

  const auto p = make_sgk();
  check_sgk_counts(r, sgk_counts(run_pipeline(p, Grid(p.lower, p.upper, 1000, 1000))), "1000^2");
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, void (*)(Report&)>> criteria{
      {"bisphere ground truth", bisphere_ground_truth},
      {"sgk structure", sgk_structure},
      {"aspar ridge filtering", aspar_ridges},
      {"cost landscape oracle", cost_oracle},
      {"gradient convergence", gradient_convergence},
      {"invariance", invariance},
      {"boundary logic", boundary_logic},
      {"sgk at 1000 points per dimension", paper_scale},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Report report;
    try {
      criteria[k].second(report);
    } catch (const std::exception& e) {
      report.failures.push_back(std::string("exception: ") + e.what());
    }
    const bool ok = report.failures.empty();
    failed += !ok;
    std::cout << (ok ? "PASS" : "FAIL") << " [" << k + 1 << "] " << criteria[k].first;
    const auto& details = ok ? report.notes : report.failures;
    for (std::size_t i = 0; i < details.size(); ++i) std::cout << (i == 0 ? ": " : "; ") << details[i];
    std::cout << '\n';
  }
  std::cout << criteria.size() - failed << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
