#include "tilebench/patterns.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <set>
#include <stdexcept>
#include <tuple>

#include "kernel.hpp"

namespace tilebench {

namespace {

std::vector<std::string> numbered(const std::string& prefix, int count) {
  std::vector<std::string> out;
  for (int i = 0; i < count; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

}  // namespace

Pattern Pattern::H() {
  static const auto data = std::make_shared<const Data>(Data{
      PatternType::H, "H", graph_from_edges(6, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}}),
      {"u", "v", "a", "b", "c", "d"}});
  return Pattern(data);
}

Pattern Pattern::Hhat() {
  static const auto data = std::make_shared<const Data>(
      Data{PatternType::Hhat, "Hhat",
           graph_from_edges(7, std::vector<Edge>{{0, 1}, {0, 3}, {0, 4}, {1, 5}, {1, 6}, {2, 4}, {2, 5}}),
           {"u", "v", "w", "a", "b", "c", "d"}});
  return Pattern(data);
}

Pattern Pattern::K2() {
  static const auto data =
      std::make_shared<const Data>(Data{PatternType::K2, "K2", complete_graph(2), {"x", "y"}});
  return Pattern(data);
}

Pattern Pattern::complete_bipartite(int s, int t) {
  if (s < 1 || t < 1) throw std::invalid_argument("complete bipartite pattern needs positive sides");
  if (s + t > kMaxPatternOrder) throw std::invalid_argument("pattern exceeds " + std::to_string(kMaxPatternOrder) + " vertices");
  auto labels = numbered("x", s);
  for (auto& l : numbered("y", t)) labels.push_back(l);
  return Pattern(std::make_shared<const Data>(Data{PatternType::CompleteBipartite,
                                                   "K{" + std::to_string(s) + "," + std::to_string(t) + "}",
                                                   complete_bipartite_graph(s, t), std::move(labels)}));
}

Pattern Pattern::custom(SmallGraph g, std::string name) {
  if (g.order() > kMaxPatternOrder) throw std::invalid_argument("pattern exceeds " + std::to_string(kMaxPatternOrder) + " vertices");
  if (g.size() == 0) throw std::invalid_argument("pattern must have at least one edge");
  const int k = g.order();
  return Pattern(std::make_shared<const Data>(Data{PatternType::Custom, std::move(name), std::move(g), numbered("", k)}));
}

int Pattern::index_of(std::string_view label) const {
  const auto& ls = labels();
  auto it = std::find(ls.begin(), ls.end(), label);
  if (it == ls.end()) throw std::invalid_argument("pattern " + name() + " has no vertex labelled '" + std::string(label) + "'");
  return static_cast<int>(it - ls.begin());
}

Pattern parse_pattern(std::string_view name) {
  if (name == "H") return Pattern::H();
  if (name == "Hhat") return Pattern::Hhat();
  if (name == "K2") return Pattern::K2();
  std::string_view body = name;
  if (!body.empty() && body.front() == 'K') {
    body.remove_prefix(1);
    if (body.size() >= 2 && body.front() == '{' && body.back() == '}') body = body.substr(1, body.size() - 2);
    const auto comma = body.find(',');
    if (comma != std::string_view::npos) {
      int s = 0, t = 0;
      auto l = body.substr(0, comma), r = body.substr(comma + 1);
      auto [p1, e1] = std::from_chars(l.data(), l.data() + l.size(), s);
      auto [p2, e2] = std::from_chars(r.data(), r.data() + r.size(), t);
      if (e1 == std::errc{} && e2 == std::errc{} && p1 == l.data() + l.size() && p2 == r.data() + r.size())
        return Pattern::complete_bipartite(s, t);
    }
  }
  throw std::invalid_argument("unknown pattern '" + std::string(name) + "' (expected H, Hhat, K2 or K{s,t})");
}

const SmallGraph& pattern_graph(const Pattern& p) { return p.graph(); }

std::optional<std::string> embedding_error(const Embedding& e, const SmallGraph& host) {
  const int k = e.pattern.order();
  if (static_cast<int>(e.map.size()) != k)
    return "map has " + std::to_string(e.map.size()) + " entries, pattern " + e.pattern.name() + " has " + std::to_string(k);
  for (Vertex x : e.map)
    if (x < 0 || x >= host.order()) return "image vertex " + std::to_string(x) + " outside the host";
  auto sorted = e.map;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return std::string("map is not injective");
  for (auto [p, q] : e.pattern.graph().edges()) {
    const Vertex a = e.map[static_cast<std::size_t>(p)], b = e.map[static_cast<std::size_t>(q)];
    if (!host.adjacent(a, b))
      return "pattern edge " + e.pattern.labels()[static_cast<std::size_t>(p)] + e.pattern.labels()[static_cast<std::size_t>(q)] +
             " maps to non-edge (" + std::to_string(a) + ", " + std::to_string(b) + ")";
  }
  return std::nullopt;
}

std::vector<Vertex> image_vertices(const Embedding& e) {
  auto out = e.map;
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Edge> image_edges(const Embedding& e) {
  std::vector<Edge> out;
  for (auto [p, q] : e.pattern.graph().edges()) {
    Vertex a = e.map[static_cast<std::size_t>(p)], b = e.map[static_cast<std::size_t>(q)];
    out.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Embedding> enumerate_copies(const Pattern& f, const SmallGraph& g, std::optional<std::size_t> limit) {
  const int k = f.order();
  if (k > g.order() || k == 0 || (limit && *limit == 0)) return {};
  const detail::PatternPlan plan(f.graph());

  struct Found {
    std::vector<Vertex> vertices;
    std::vector<std::uint64_t> key;
    std::vector<Vertex> map;
  };
  std::vector<Found> found;

  detail::dispatch_width(g.words_per_row(), [&]<std::size_t W>() {
    const detail::Host<W> host(g);
    std::vector<int> image(static_cast<std::size_t>(k));
    std::vector<std::uint64_t> key;
    auto allow = [](int, const detail::Bits<W>&) { return true; };
    std::set<std::vector<std::uint64_t>> seen;
    auto emit = [&](const std::vector<int>& img) {
      detail::copy_key(plan, img, g.order(), key);
      if (limit && !seen.insert(key).second) return true;
      auto verts = img;
      std::sort(verts.begin(), verts.end());
      found.push_back({std::move(verts), key, img});
      return !limit || found.size() < *limit;
    };
    detail::embed_from(host, plan.rooted[0], 0, image, host.all, allow, emit);
  });

  std::sort(found.begin(), found.end(), [](const Found& a, const Found& b) {
    return std::tie(a.vertices, a.key, a.map) < std::tie(b.vertices, b.key, b.map);
  });
  std::vector<Embedding> out;
  for (std::size_t i = 0; i < found.size(); ++i) {
    if (i > 0 && found[i].key == found[i - 1].key) continue;
    out.push_back({f, std::move(found[i].map)});
    if (limit && out.size() >= *limit) break;
  }
  return out;
}

int covering_number(const Pattern& f, int i) {
  if (i == 2) return f.order();
  if (i != 1) throw std::invalid_argument("covering number is defined for i = 1 or 2");
  const int k = f.order();
  const auto edges = f.graph().edges();
  int best = k;
  for (std::uint32_t s = 0; s < (std::uint32_t{1} << k); ++s) {
    const int size = std::popcount(s);
    if (size >= best) continue;
    bool covers = true;
    for (auto [p, q] : edges)
      if (!((s >> p) & 1u) && !((s >> q) & 1u)) {
        covers = false;
        break;
      }
    if (covers) best = size;
  }
  return best;
}

bool is_rigid(const Pattern& f, int s1, int s2) {
  if (s1 < 0 || s2 < s1) throw std::invalid_argument("rigidity sizes must satisfy 0 <= s1 <= s2");
  const int k = f.order();
  if (s1 + s2 != k) return false;
  const auto edges = f.graph().edges();
  bool bipartition = false;
  for (std::uint32_t s = 0; s < (std::uint32_t{1} << k) && !bipartition; ++s) {
    if (std::popcount(s) != s1) continue;
    bipartition = std::all_of(edges.begin(), edges.end(),
                              [s](const Edge& e) { return ((s >> e.first) & 1u) != ((s >> e.second) & 1u); });
  }
  return bipartition && covering_number(f, 1) == s1;
}

std::vector<int> automorphism_orbits(const Pattern& f) {
  const int k = f.order();
  const auto& g = f.graph();
  const detail::PatternPlan plan(g);
  std::vector<int> orbit(static_cast<std::size_t>(k));
  for (int v = 0; v < k; ++v) orbit[static_cast<std::size_t>(v)] = v;
  detail::Host<1> host(g);
  for (int r = 0; r < k; ++r) {
    if (orbit[static_cast<std::size_t>(r)] != r) continue;
    for (int x = r + 1; x < k; ++x) {
      if (orbit[static_cast<std::size_t>(x)] != x || g.degree(x) != g.degree(r)) continue;
      // An edge-preserving bijection of F onto itself is an automorphism.
      std::vector<int> image(static_cast<std::size_t>(k));
      image[static_cast<std::size_t>(r)] = x;
      detail::Bits<1> avail = host.all;
      avail.reset(x);
      bool hit = false;
      auto allow = [](int, const detail::Bits<1>&) { return true; };
      auto emit = [&](const std::vector<int>&) {
        hit = true;
        return false;
      };
      detail::embed_from(host, plan.rooted[static_cast<std::size_t>(r)], 1, image, avail, allow, emit);
      if (hit) orbit[static_cast<std::size_t>(x)] = r;
    }
  }
  return orbit;
}

}  // namespace tilebench
