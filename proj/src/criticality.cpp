#include "molandscape/criticality.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <ostream>

#include "molandscape/parallel.hpp"
#include <json.hpp>

namespace molandscape {

namespace {

// Angular gaps this close to pi are decided by the sign of the cross product.
constexpr double kGapResolution = 1e-9;
// Tolerance on MO gradient components, which are sums of unit vectors.
constexpr double kMoTolerance = 1e-12;

bool hull_test(const Vec2* vs, std::size_t n, double zero_tol, double* angles, std::size_t* order) {
  for (std::size_t k = 0; k < n; ++k) {
    if (norm(vs[k]) < zero_tol) return true;
    angles[k] = std::atan2(vs[k].x2, vs[k].x1);
    order[k] = k;
  }
  std::sort(order, order + n, [&](std::size_t a, std::size_t b) { return angles[a] < angles[b]; });

  constexpr double pi = std::numbers::pi;
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t from = order[k];
    const std::size_t to = order[(k + 1) % n];
    double gap = angles[to] - angles[from];
    if (k + 1 == n) gap += 2.0 * pi;
    if (std::abs(gap - pi) <= kGapResolution) {
      if (cross(vs[from], vs[to]) < 0.0) return false;
    } else if (gap > pi) {
      return false;
    }
  }
  return true;
}

struct EdgeWalk {
  Edge edge;
  std::size_t length;
  std::size_t (*index)(const Grid&, std::size_t);
};

std::array<EdgeWalk, 4> edge_walks(const Grid& g) {
  return {{
      {Edge::Bottom, g.n1(), [](const Grid& gr, std::size_t k) { return gr.index(k, 0); }},
      {Edge::Top, g.n1(), [](const Grid& gr, std::size_t k) { return gr.index(k, gr.n2() - 1); }},
      {Edge::Left, g.n2(), [](const Grid& gr, std::size_t k) { return gr.index(0, k); }},
      {Edge::Right, g.n2(), [](const Grid& gr, std::size_t k) { return gr.index(gr.n1() - 1, k); }},
  }};
}

}  // namespace

std::string_view to_string(PointClass c) {
  switch (c) {
    case PointClass::NonCritical: return "NonCritical";
    case PointClass::CriticalOnly: return "CriticalOnly";
    case PointClass::LocallyEfficientInterior: return "LocallyEfficientInterior";
    case PointClass::LocallyEfficientBoundary: return "LocallyEfficientBoundary";
  }
  return "?";
}

std::string_view to_string(Edge e) {
  switch (e) {
    case Edge::Bottom: return "bottom";
    case Edge::Top: return "top";
    case Edge::Left: return "left";
    case Edge::Right: return "right";
  }
  return "?";
}

Vec2 edge_tangent(Edge e) {
  return (e == Edge::Bottom || e == Edge::Top) ? Vec2{1.0, 0.0} : Vec2{0.0, 1.0};
}

Vec2 edge_outward_normal(Edge e) {
  switch (e) {
    case Edge::Bottom: return {0.0, -1.0};
    case Edge::Top: return {0.0, 1.0};
    case Edge::Left: return {-1.0, 0.0};
    case Edge::Right: return {1.0, 0.0};
  }
  return {};
}

bool origin_in_hull(std::span<const Vec2> vectors, double zero_tol) {
  const std::size_t n = vectors.size();
  if (n == 0) throw ArgumentError("origin_in_hull: empty vector list");
  if (n <= 8) {
    std::array<double, 8> angles{};
    std::array<std::size_t, 8> order{};
    return hull_test(vectors.data(), n, zero_tol, angles.data(), order.data());
  }
  std::vector<double> angles(n);
  std::vector<std::size_t> order(n);
  return hull_test(vectors.data(), n, zero_tol, angles.data(), order.data());
}

std::vector<TriangleNeighborhood> interior_first_order(const FieldSet& fields, unsigned workers) {
  const Grid& g = fields.f1.grid;
  const std::size_t cell_rows = g.n2() - 1;
  std::vector<std::vector<TriangleNeighborhood>> per_row(cell_rows);

  parallel_for(cell_rows, workers, [&](std::size_t begin, std::size_t end) {
    std::array<Vec2, 6> vs;
    for (std::size_t j2 = begin; j2 < end; ++j2) {
      auto& out = per_row[j2];
      for (std::size_t j1 = 0; j1 + 1 < g.n1(); ++j1) {
        const std::size_t a = g.index(j1, j2);
        const std::size_t b = g.index(j1 + 1, j2);
        const std::size_t c = g.index(j1, j2 + 1);
        const std::size_t d = g.index(j1 + 1, j2 + 1);
        const std::array<TriangleNeighborhood, 4> cell{{{a, b, c}, {b, a, d}, {c, d, a}, {d, c, b}}};
        for (const auto& t : cell) {
          std::size_t k = 0;
          for (std::size_t p : t.corners()) {
            vs[k++] = fields.g1[p];
            vs[k++] = fields.g2[p];
          }
          if (origin_in_hull(vs, fields.zero_tol)) out.push_back(t);
        }
      }
    }
  });

  std::vector<TriangleNeighborhood> all;
  for (auto& row : per_row) all.insert(all.end(), row.begin(), row.end());
  return all;
}

BoundaryFirstOrder boundary_first_order(const FieldSet& fields) {
  const Grid& g = fields.f1.grid;
  const double tol = fields.zero_tol;
  BoundaryFirstOrder result{{}, fields.mo_gradient_raw, {}};
  std::vector<bool> critical(g.size(), false);

  for (const EdgeWalk& walk : edge_walks(g)) {
    const Vec2 t = edge_tangent(walk.edge);
    for (std::size_t k = 0; k + 1 < walk.length; ++k) {
      const std::size_t p = walk.index(g, k);
      const std::size_t q = walk.index(g, k + 1);
      const std::array<double, 4> slopes{dot(fields.g1[p], t), dot(fields.g2[p], t),
                                         dot(fields.g1[q], t), dot(fields.g2[q], t)};
      const bool forward = std::all_of(slopes.begin(), slopes.end(), [&](double s) { return s < -tol; });
      const bool backward = std::all_of(slopes.begin(), slopes.end(), [&](double s) { return s > tol; });
      if (!forward && !backward) {
        result.critical_pairs.push_back({walk.edge, p, q});
        critical[p] = critical[q] = true;
      }
    }
  }

  // Rotation: drop the MO gradient components along which descent would leave the box.
  for (std::size_t j2 = 0; j2 < g.n2(); ++j2) {
    for (std::size_t j1 = 0; j1 < g.n1(); ++j1) {
      if (!g.on_boundary(j1, j2)) continue;
      const std::size_t i = g.index(j1, j2);
      if (critical[i]) continue;
      const Vec2 original = fields.mo_gradient_raw[i];
      Vec2 v = original;
      const Vec2 descent = -original;
      if ((j1 == 0 && descent.x1 < -kMoTolerance) || (j1 + 1 == g.n1() && descent.x1 > kMoTolerance)) {
        v.x1 = 0.0;
      }
      if ((j2 == 0 && descent.x2 < -kMoTolerance) || (j2 + 1 == g.n2() && descent.x2 > kMoTolerance)) {
        v.x2 = 0.0;
      }
      if (!(v == original)) {
        result.rotated[i] = v;
        result.rotations.push_back({i, original, v});
      }
    }
  }
  return result;
}

std::size_t CriticalityMap::count(PointClass c) const {
  return static_cast<std::size_t>(std::count(classes.begin(), classes.end(), c));
}

std::size_t CriticalityMap::count_efficient() const {
  return static_cast<std::size_t>(std::count_if(classes.begin(), classes.end(), is_efficient));
}

std::vector<bool> CriticalityMap::efficient_mask() const {
  std::vector<bool> mask(classes.size());
  for (std::size_t i = 0; i < classes.size(); ++i) mask[i] = is_efficient(classes[i]);
  return mask;
}

CriticalityMap second_order_filter(std::span<const TriangleNeighborhood> triangles,
                                   const ScalarField& divergence, double div_tol) {
  CriticalityMap map(divergence.grid);
  map.critical_triangles.assign(triangles.begin(), triangles.end());
  map.triangle_efficient.reserve(triangles.size());
  for (const auto& t : triangles) {
    const auto corners = t.corners();
    const bool stable = std::all_of(corners.begin(), corners.end(),
                                    [&](std::size_t p) { return divergence[p] <= div_tol; });
    map.triangle_efficient.push_back(stable);
    const PointClass label = stable ? PointClass::LocallyEfficientInterior : PointClass::CriticalOnly;
    for (std::size_t p : corners) map.classes[p] = merge(map.classes[p], label);
  }
  return map;
}

void boundary_second_order(std::span<const BoundaryPair> pairs, const FieldSet& fields,
                           CriticalityMap& map) {
  for (const auto& pair : pairs) {
    const Vec2 n = edge_outward_normal(pair.edge);
    const auto leaves_or_slides = [&](std::size_t p) {
      return dot(-fields.mo_gradient_raw[p], n) >= -kMoTolerance;
    };
    const bool efficient = leaves_or_slides(pair.first) && leaves_or_slides(pair.second);
    map.critical_pairs.push_back(pair);
    map.pair_efficient.push_back(efficient);
    const PointClass label = efficient ? PointClass::LocallyEfficientBoundary : PointClass::CriticalOnly;
    map.classes[pair.first] = merge(map.classes[pair.first], label);
    map.classes[pair.second] = merge(map.classes[pair.second], label);
  }
}

double resolve_div_tol(const ScalarField& divergence, double relative) {
  double largest = 0.0;
  for (double d : divergence.values) largest = std::max(largest, std::abs(d));
  return relative * largest;
}

void write_critical_json(std::ostream& out, const CriticalityMap& map, const FieldSet& fields) {
  nlohmann::ordered_json points = nlohmann::ordered_json::array();
  const Grid& g = map.grid;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (!is_critical(map.classes[i])) continue;
    const auto [j1, j2] = g.coords(i);
    const Vec2 x = g.point(i);
    points.push_back({{"j1", j1},
                      {"j2", j2},
                      {"x1", x.x1},
                      {"x2", x.x2},
                      {"class", to_string(map.classes[i])},
                      {"div", fields.divergence[i]},
                      {"f1", fields.f1[i]},
                      {"f2", fields.f2[i]}});
  }
  out << points.dump() << '\n';
}

}  // namespace molandscape
