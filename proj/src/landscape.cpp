#include "molandscape/landscape.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <ostream>
#include <set>

#include <json.hpp>

#include "molandscape/csv.hpp"

namespace molandscape {

namespace {

constexpr double kMoTolerance = 1e-12;

constexpr std::array<std::array<int, 2>, 8> kNeighborOffsets{
    {{1, 0}, {1, 1}, {0, 1}, {-1, 1}, {-1, 0}, {-1, -1}, {0, -1}, {1, -1}}};

// Prefix counts over 1-based positions.
class FenwickTree {
 public:
  explicit FenwickTree(std::size_t n) : tree_(n + 1, 0) {}

  void add(std::size_t pos) {
    for (std::size_t i = pos + 1; i < tree_.size(); i += i & (~i + 1)) ++tree_[i];
  }

  /// Number of inserted positions <= pos.
  [[nodiscard]] std::size_t prefix(std::size_t pos) const {
    std::size_t sum = 0;
    for (std::size_t i = pos + 1; i > 0; i -= i & (~i + 1)) sum += tree_[i];
    return sum;
  }

 private:
  std::vector<std::size_t> tree_;
};

std::vector<ObjectivePair> zip(const ScalarField& f1, const ScalarField& f2) {
  if (!(f1.grid == f2.grid)) throw ArgumentError("objective fields on different grids");
  std::vector<ObjectivePair> v(f1.values.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = {f1[i], f2[i]};
  return v;
}

HeightField to_height(const Grid& g, const std::vector<std::size_t>& counts) {
  HeightField h{ScalarField(g), HeightMode::Cost};
  for (std::size_t i = 0; i < counts.size(); ++i) h.heights[i] = static_cast<double>(counts[i]);
  return h;
}

}  // namespace

std::vector<std::size_t> domination_counts(std::span<const ObjectivePair> values) {
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (values[a].f1 != values[b].f1) return values[a].f1 < values[b].f1;
    if (values[a].f2 != values[b].f2) return values[a].f2 < values[b].f2;
    return a < b;
  });

  std::vector<double> f2_sorted(n);
  for (std::size_t i = 0; i < n; ++i) f2_sorted[i] = values[i].f2;
  std::sort(f2_sorted.begin(), f2_sorted.end());
  f2_sorted.erase(std::unique(f2_sorted.begin(), f2_sorted.end()), f2_sorted.end());
  const auto f2_rank = [&](double v) {
    return static_cast<std::size_t>(std::lower_bound(f2_sorted.begin(), f2_sorted.end(), v) -
                                    f2_sorted.begin());
  };

  // Weak dominators (q <= p in both objectives) minus exact duplicates of p, self included.
  std::vector<std::size_t> counts(n, 0);
  FenwickTree tree(f2_sorted.size());
  std::size_t group_begin = 0;
  while (group_begin < n) {
    std::size_t group_end = group_begin;
    const double f1 = values[order[group_begin]].f1;
    while (group_end < n && values[order[group_end]].f1 == f1) ++group_end;
    for (std::size_t k = group_begin; k < group_end; ++k) tree.add(f2_rank(values[order[k]].f2));

    std::size_t dup_begin = group_begin;
    while (dup_begin < group_end) {
      std::size_t dup_end = dup_begin;
      const double f2 = values[order[dup_begin]].f2;
      while (dup_end < group_end && values[order[dup_end]].f2 == f2) ++dup_end;
      const std::size_t weak = tree.prefix(f2_rank(f2));
      for (std::size_t k = dup_begin; k < dup_end; ++k) counts[order[k]] = weak - (dup_end - dup_begin);
      dup_begin = dup_end;
    }
    group_begin = group_end;
  }
  return counts;
}

HeightField cost_landscape(const ScalarField& f1, const ScalarField& f2) {
  const auto values = zip(f1, f2);
  return to_height(f1.grid, domination_counts(values));
}

HeightField cost_landscape_brute_force(const ScalarField& f1, const ScalarField& f2) {
  const auto values = zip(f1, f2);
  std::vector<std::size_t> counts(values.size(), 0);
  for (std::size_t p = 0; p < values.size(); ++p) {
    for (std::size_t q = 0; q < values.size(); ++q) {
      if (dominates(values[q], values[p])) ++counts[p];
    }
  }
  return to_height(f1.grid, counts);
}

std::size_t EfficientSetDecomposition::max_rank() const {
  std::size_t m = 0;
  for (const auto& c : components) {
    for (std::size_t p : c.points) m = std::max(m, rank[p]);
  }
  return m;
}

EfficientSetDecomposition dominance_ranks(const CriticalityMap& map, const ScalarField& f1,
                                          const ScalarField& f2) {
  const Grid& g = map.grid;
  EfficientSetDecomposition d(g);
  const std::vector<bool> mask = map.efficient_mask();

  std::vector<std::size_t> efficient;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (mask[i]) efficient.push_back(i);
  }
  d.n_efficient = efficient.size();

  std::vector<ObjectivePair> values(efficient.size());
  for (std::size_t k = 0; k < efficient.size(); ++k) values[k] = {f1[efficient[k]], f2[efficient[k]]};
  const auto counts = domination_counts(values);
  for (std::size_t k = 0; k < efficient.size(); ++k) {
    d.rank[efficient[k]] = counts[k];
    if (counts[k] == 0) ++d.n_rank0;
  }

  std::vector<std::size_t> stack;
  for (std::size_t seed : efficient) {
    if (d.component_of[seed] != EfficientSetDecomposition::kNone) continue;
    EfficientComponent comp;
    comp.id = d.components.size();
    d.component_of[seed] = comp.id;
    stack.push_back(seed);
    while (!stack.empty()) {
      const std::size_t p = stack.back();
      stack.pop_back();
      comp.points.push_back(p);
      const auto [j1, j2] = g.coords(p);
      for (const auto& [di, dj] : kNeighborOffsets) {
        const auto n1 = static_cast<std::ptrdiff_t>(j1) + di;
        const auto n2 = static_cast<std::ptrdiff_t>(j2) + dj;
        if (n1 < 0 || n2 < 0 || n1 >= static_cast<std::ptrdiff_t>(g.n1()) ||
            n2 >= static_cast<std::ptrdiff_t>(g.n2())) {
          continue;
        }
        const std::size_t q = g.index(static_cast<std::size_t>(n1), static_cast<std::size_t>(n2));
        if (mask[q] && d.component_of[q] == EfficientSetDecomposition::kNone) {
          d.component_of[q] = comp.id;
          stack.push_back(q);
        }
      }
    }
    std::sort(comp.points.begin(), comp.points.end());
    comp.min_rank = d.rank[comp.points.front()];
    comp.representative = comp.points.front();
    for (std::size_t p : comp.points) {
      if (d.rank[p] < comp.min_rank) {
        comp.min_rank = d.rank[p];
        comp.representative = p;
      }
    }
    comp.representative_value = {f1[comp.representative], f2[comp.representative]};
    d.components.push_back(std::move(comp));
  }
  return d;
}

std::size_t BasinMap::count_basins() const {
  std::set<std::size_t> labels(basin.begin(), basin.end());
  labels.erase(kUnconverged);
  return labels.size();
}

GfhResult gfh_heights(const FieldSet& fields, const CriticalityMap& map,
                      const EfficientSetDecomposition& decomposition) {
  const Grid& g = map.grid;
  const std::size_t n = g.size();
  constexpr std::size_t kStall = std::numeric_limits<std::size_t>::max();

  std::vector<std::size_t> next(n, kStall);
  std::vector<double> step_cost(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    if (is_efficient(map.classes[i])) continue;
    const Vec2 mo = fields.mo_gradient[i];
    const double length = norm(mo);
    if (length <= kMoTolerance) continue;
    const Vec2 descent = -mo;
    const auto [j1, j2] = g.coords(i);
    double best_score = 0.0;
    double best_length = 0.0;
    for (const auto& [di, dj] : kNeighborOffsets) {
      const auto n1 = static_cast<std::ptrdiff_t>(j1) + di;
      const auto n2 = static_cast<std::ptrdiff_t>(j2) + dj;
      if (n1 < 0 || n2 < 0 || n1 >= static_cast<std::ptrdiff_t>(g.n1()) ||
          n2 >= static_cast<std::ptrdiff_t>(g.n2())) {
        continue;
      }
      const Vec2 offset{di * g.s1(), dj * g.s2()};
      const double offset_length = norm(offset);
      const double score = dot(offset, descent) / offset_length;
      if (score > best_score) {
        best_score = score;
        best_length = offset_length;
        next[i] = g.index(static_cast<std::size_t>(n1), static_cast<std::size_t>(n2));
      }
    }
    step_cost[i] = length * best_length;
  }

  GfhResult result{{ScalarField(g), HeightMode::Gfh}, {}};
  auto& height = result.heights.heights;
  auto& basin = result.basins.basin;
  basin.assign(n, BasinMap::kUnconverged);

  enum : std::uint8_t { kUnvisited, kOnPath, kDone };
  std::vector<std::uint8_t> state(n, kUnvisited);
  std::vector<std::size_t> path;
  for (std::size_t start = 0; start < n; ++start) {
    std::size_t cur = start;
    while (state[cur] == kUnvisited) {
      if (is_efficient(map.classes[cur])) {
        basin[cur] = decomposition.component_of[cur];
        state[cur] = kDone;
        break;
      }
      if (next[cur] == kStall) {
        state[cur] = kDone;
        break;
      }
      state[cur] = kOnPath;
      path.push_back(cur);
      cur = next[cur];
    }
    if (state[cur] == kOnPath) {
      // Everything from cur to the end of the path is one cycle.
      ++result.basins.cycles;
      while (true) {
        const std::size_t p = path.back();
        path.pop_back();
        state[p] = kDone;
        if (p == cur) break;
      }
    }
    while (!path.empty()) {
      const std::size_t p = path.back();
      path.pop_back();
      height[p] = step_cost[p] + height[next[p]];
      basin[p] = basin[next[p]];
      state[p] = kDone;
    }
  }
  result.basins.unconverged_points = static_cast<std::size_t>(
      std::count(basin.begin(), basin.end(), BasinMap::kUnconverged));
  return result;
}

void write_decomposition_json(std::ostream& out, const EfficientSetDecomposition& d,
                              const ScalarField& f1, const ScalarField& f2) {
  using nlohmann::ordered_json;
  ordered_json components = ordered_json::array();
  for (const auto& c : d.components) {
    ordered_json points = ordered_json::array();
    for (std::size_t p : c.points) {
      const auto [j1, j2] = d.grid.coords(p);
      const Vec2 x = d.grid.point(p);
      points.push_back({{"j1", j1},
                        {"j2", j2},
                        {"x1", x.x1},
                        {"x2", x.x2},
                        {"f1", f1[p]},
                        {"f2", f2[p]},
                        {"rank", d.rank[p]}});
    }
    components.push_back({{"id", c.id}, {"size", c.points.size()}, {"points", std::move(points)}});
  }
  ordered_json doc{{"components", std::move(components)},
                   {"n_rank0", d.n_rank0},
                   {"n_efficient", d.n_efficient}};
  out << doc.dump() << '\n';
}

void write_height_csv(std::ostream& out, const HeightField& h) {
  const Grid& g = h.heights.grid;
  out << "j1,j2,x1,x2,height\n";
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto [j1, j2] = g.coords(i);
    const Vec2 x = g.point(i);
    out << j1 << ',' << j2 << ',' << csv::number(x.x1) << ',' << csv::number(x.x2) << ','
        << csv::number(h.heights[i]) << '\n';
  }
}

}  // namespace molandscape
