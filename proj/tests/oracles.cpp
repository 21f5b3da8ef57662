#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <unordered_map>

namespace oracle {

void for_each_map(const SmallGraph& f, const SmallGraph& g, const std::function<void(const std::vector<Vertex>&)>& visit) {
  const int k = f.order(), n = g.order();
  std::vector<Vertex> map(k, -1);
  std::vector<bool> used(n, false);
  std::function<void(int)> place = [&](int i) {
    if (i == k) {
      for (const auto& [a, b] : f.edges())
        if (!g.adjacent(map[a], map[b])) return;
      visit(map);
      return;
    }
    for (Vertex x = 0; x < n; ++x) {
      if (used[x]) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j)
        if (f.adjacent(i, j) && !g.adjacent(x, map[j])) ok = false;
      if (!ok) continue;
      used[x] = true;
      map[i] = x;
      place(i + 1);
      used[x] = false;
    }
  };
  place(0);
}

std::vector<std::vector<Vertex>> all_maps(const SmallGraph& f, const SmallGraph& g) {
  std::vector<std::vector<Vertex>> out;
  for_each_map(f, g, [&](const std::vector<Vertex>& map) { out.push_back(map); });
  return out;
}

std::set<std::pair<std::vector<Edge>, std::uint64_t>> distinct_copies(const SmallGraph& f, const SmallGraph& g) {
  std::set<std::pair<std::vector<Edge>, std::uint64_t>> out;
  for_each_map(f, g, [&](const std::vector<Vertex>& map) {
    std::vector<Edge> edges;
    for (const auto& [a, b] : f.edges()) edges.emplace_back(std::min(map[a], map[b]), std::max(map[a], map[b]));
    std::sort(edges.begin(), edges.end());
    std::uint64_t mask = 0;
    for (Vertex v : map) mask |= std::uint64_t{1} << v;
    out.emplace(edges, mask);
  });
  return out;
}

std::vector<std::uint64_t> copy_masks(const std::vector<Pattern>& families, const SmallGraph& g) {
  std::set<std::uint64_t> masks;
  for (const auto& f : families)
    for_each_map(f.graph(), g, [&](const std::vector<Vertex>& map) {
      std::uint64_t mask = 0;
      for (Vertex v : map) mask |= std::uint64_t{1} << v;
      masks.insert(mask);
    });
  return {masks.begin(), masks.end()};
}

namespace {

int best_packing(const std::vector<std::uint64_t>& masks, int n, bool weight_by_size) {
  std::unordered_map<std::uint64_t, int> memo;
  std::function<int(std::uint64_t)> best = [&](std::uint64_t free) -> int {
    if (free == 0) return 0;
    if (auto it = memo.find(free); it != memo.end()) return it->second;
    const int v = std::countr_zero(free);
    const std::uint64_t bit = std::uint64_t{1} << v;
    int result = best(free & ~bit);
    for (std::uint64_t m : masks)
      if ((m & bit) && (m & free) == m)
        result = std::max(result, (weight_by_size ? std::popcount(m) : 1) + best(free & ~m));
    memo[free] = result;
    return result;
  };
  return best(n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
}

}  // namespace

int max_disjoint(const std::vector<std::uint64_t>& masks, int n) { return best_packing(masks, n, false); }
int max_covered(const std::vector<std::uint64_t>& masks, int n) { return best_packing(masks, n, true); }

int naive_nu(const Pattern& f, const SmallGraph& g) { return max_disjoint(copy_masks({f}, g), g.order()); }

int naive_mixed_cover(const std::vector<Pattern>& families, const SmallGraph& g) {
  return max_covered(copy_masks(families, g), g.order());
}

int naive_vertex_cover(const SmallGraph& g) {
  const int n = g.order();
  int best = n;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    bool covers = true;
    for (const auto& [a, b] : g.edges())
      if (!((s >> a) & 1) && !((s >> b) & 1)) covers = false;
    if (covers) best = std::min(best, std::popcount(s));
  }
  return best;
}

SmallGraph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  tilebench::GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) b.add_edge(u, v);
  return std::move(b).build();
}

SmallGraph random_graph_m(int n, std::size_t m, std::mt19937_64& rng) {
  std::vector<Edge> all;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) all.emplace_back(u, v);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(std::min(m, all.size()));
  return tilebench::graph_from_edges(n, all);
}

}  // namespace oracle
