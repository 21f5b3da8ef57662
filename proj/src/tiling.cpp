#include "tilebench/tiling.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "kernel.hpp"

namespace tilebench {

int Tiling::coverage() const {
  int c = 0;
  for (const auto& m : members) c += m.pattern.order();
  return c;
}

std::optional<std::string> tiling_error(const Tiling& t, const SmallGraph& host) {
  VertexSet used(host.order());
  for (std::size_t i = 0; i < t.members.size(); ++i) {
    const auto& m = t.members[i];
    if (auto err = embedding_error(m, host)) return "member " + std::to_string(i) + " (" + m.pattern.name() + "): " + *err;
    for (Vertex x : m.map) {
      if (used.contains(x)) return "member " + std::to_string(i) + " reuses vertex " + std::to_string(x);
      used.insert(x);
    }
  }
  return std::nullopt;
}

namespace {

struct Family {
  Pattern pattern;
  detail::PatternPlan plan;
  std::vector<int> roots;

  explicit Family(const Pattern& p) : pattern(p), plan(p.graph()) {
    const auto orbit = automorphism_orbits(p);
    for (int v = 0; v < p.order(); ++v)
      if (orbit[static_cast<std::size_t>(v)] == v) roots.push_back(v);
  }
};

std::vector<Family> make_families(std::vector<Pattern> patterns) {
  std::stable_sort(patterns.begin(), patterns.end(),
                   [](const Pattern& a, const Pattern& b) { return a.order() > b.order(); });
  std::vector<Family> families;
  for (const auto& p : patterns) families.emplace_back(p);
  return families;
}

struct SearchOutcome {
  int coverage = 0;
  std::vector<Embedding> members;
  bool aborted = false;
  bool reached_target = false;
  std::uint64_t nodes = 0;
};

// Branch and bound over vertex-disjoint copies. Each node takes the lowest
// vertex that can still be covered and either places a copy through it or
// leaves it (and its free twins) uncovered. Twins are interchangeable, so a
// copy may only use a vertex when no smaller twin of it is still available.
template <std::size_t W>
class CoverSearch {
 public:
  CoverSearch(const SmallGraph& g, const std::vector<Family>& families, std::optional<int> target, std::uint64_t budget)
      : host_(g), families_(families), target_(target), budget_(budget), scale_(g.order() + 1) {
    const int n = g.order();
    lower_twins_.resize(static_cast<std::size_t>(n));
    twins_.resize(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) {
      twins_[static_cast<std::size_t>(x)].set(x);
      auto open_x = host_.adj[static_cast<std::size_t>(x)];
      auto closed_x = open_x;
      closed_x.set(x);
      for (int y = 0; y < n; ++y) {
        if (y == x) continue;
        auto closed_y = host_.adj[static_cast<std::size_t>(y)];
        closed_y.set(y);
        if (host_.adj[static_cast<std::size_t>(y)] == open_x || closed_y == closed_x) {
          twins_[static_cast<std::size_t>(x)].set(y);
          if (y < x) lower_twins_[static_cast<std::size_t>(x)].set(y);
        }
      }
    }
    // min_parts[s]: fewest copies whose orders sum to exactly s.
    constexpr int kNone = std::numeric_limits<int>::max();
    std::vector<int> min_parts(static_cast<std::size_t>(n) + 1, kNone);
    min_parts[0] = 0;
    for (int s = 1; s <= n; ++s)
      for (const auto& f : families_) {
        const int k = f.pattern.order();
        if (k <= s && min_parts[static_cast<std::size_t>(s - k)] != kNone)
          min_parts[static_cast<std::size_t>(s)] =
              std::min(min_parts[static_cast<std::size_t>(s)], min_parts[static_cast<std::size_t>(s - k)] + 1);
      }
    bound_.assign(static_cast<std::size_t>(n) + 1, 0);
    for (int x = 1; x <= n; ++x) {
      bound_[static_cast<std::size_t>(x)] = bound_[static_cast<std::size_t>(x - 1)];
      if (min_parts[static_cast<std::size_t>(x)] != kNone)
        bound_[static_cast<std::size_t>(x)] =
            std::max(bound_[static_cast<std::size_t>(x)], score(x, min_parts[static_cast<std::size_t>(x)]));
    }
    for (const auto& f : families_) isolated_ = isolated_ || f.plan.has_isolated;
  }

  SearchOutcome run() {
    search(host_.all);
    SearchOutcome out;
    out.nodes = nodes_;
    out.aborted = aborted_;
    out.reached_target = done_;
    for (const auto& [fi, image] : best_) {
      out.members.push_back({families_[fi].pattern, image});
      out.coverage += families_[fi].pattern.order();
    }
    return out;
  }

 private:
  using Bits = detail::Bits<W>;

  long long score(int covered, int members) const { return static_cast<long long>(covered) * scale_ - members; }

  void record() {
    const long long s = score(covered_, static_cast<int>(stack_.size()));
    if (s > best_score_) {
      best_score_ = s;
      best_ = stack_;
    }
    if (target_ && covered_ >= *target_) done_ = true;
  }

  void search(const Bits& free) {
    if (done_ || aborted_) return;
    if (++nodes_ > budget_) {
      aborted_ = true;
      return;
    }
    Bits live;
    if (isolated_) {
      live = free;
    } else {
      free.for_each([&](int v) {
        if (host_.adj[static_cast<std::size_t>(v)].intersects(free)) live.set(v);
      });
    }
    if (score(covered_, static_cast<int>(stack_.size())) + bound_[static_cast<std::size_t>(live.count())] <= best_score_) return;
    const int v = live.lowest();
    if (v < 0) return;

    std::vector<std::pair<std::size_t, std::vector<int>>> children;
    std::set<std::vector<std::uint64_t>> seen;
    std::vector<std::uint64_t> key;
    Bits avail = free;
    avail.reset(v);
    for (std::size_t fi = 0; fi < families_.size(); ++fi) {
      const auto& fam = families_[fi];
      seen.clear();
      std::vector<int> image(static_cast<std::size_t>(fam.pattern.order()));
      auto allow = [&](int x, const Bits& av) { return !lower_twins_[static_cast<std::size_t>(x)].intersects(av); };
      auto emit = [&](const std::vector<int>& img) {
        detail::copy_key(fam.plan, img, host_.n, key);
        if (seen.insert(key).second) children.emplace_back(fi, img);
        return true;
      };
      for (int r : fam.roots) {
        const auto& ro = fam.plan.rooted[static_cast<std::size_t>(r)];
        image[static_cast<std::size_t>(ro.order[0])] = v;
        detail::embed_from(host_, ro, 1, image, avail, allow, emit);
      }
    }

    for (auto& [fi, image] : children) {
      Bits next = free;
      for (int x : image) next.reset(x);
      const int k = families_[fi].pattern.order();
      stack_.emplace_back(fi, image);
      covered_ += k;
      record();
      search(next);
      covered_ -= k;
      stack_.pop_back();
      if (done_ || aborted_) return;
    }
    search(free.minus(twins_[static_cast<std::size_t>(v)]));
  }

  const detail::Host<W> host_;
  const std::vector<Family>& families_;
  std::optional<int> target_;
  std::uint64_t budget_;
  long long scale_;
  bool isolated_ = false;
  std::vector<Bits> twins_;
  std::vector<Bits> lower_twins_;
  std::vector<long long> bound_;

  std::vector<std::pair<std::size_t, std::vector<int>>> stack_;
  std::vector<std::pair<std::size_t, std::vector<int>>> best_;
  int covered_ = 0;
  long long best_score_ = 0;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  bool done_ = false;
};

SearchOutcome cover_search(const SmallGraph& g, std::vector<Pattern> patterns, std::optional<int> target,
                           std::uint64_t budget) {
  const auto families = make_families(std::move(patterns));
  if (target && *target <= 0) {
    SearchOutcome trivial;
    trivial.reached_target = true;
    return trivial;
  }
  return detail::dispatch_width(g.words_per_row(), [&]<std::size_t W>() {
    return CoverSearch<W>(g, families, target, budget).run();
  });
}

// Depth-first search for a cover of at least `target` vertices on hosts of
// at most 64 vertices. `slack` counts how many more vertices may stay
// uncovered; failed free sets are memoized with the largest slack at which
// they failed.
class TargetSearch {
 public:
  TargetSearch(const SmallGraph& g, const std::vector<Family>& families)
      : host_(g), families_(families) {
    for (const auto& f : families_) isolated_ = isolated_ || f.plan.has_isolated;
    lower_twins_.resize(static_cast<std::size_t>(host_.n));
    for (int x = 0; x < host_.n; ++x)
      for (int y = 0; y < x; ++y) {
        const auto ax = host_.adj[static_cast<std::size_t>(x)].w[0], ay = host_.adj[static_cast<std::size_t>(y)].w[0];
        const std::uint64_t bx = std::uint64_t{1} << x, by = std::uint64_t{1} << y;
        if (ax == ay || (ax | bx) == (ay | by)) lower_twins_[static_cast<std::size_t>(x)] |= by;
      }
  }

  std::optional<Tiling> run(int target) {
    const int slack = host_.n - target;
    if (slack < 0) return std::nullopt;
    if (!search(host_.all.w[0], slack)) return std::nullopt;
    Tiling t;
    for (auto it = path_.rbegin(); it != path_.rend(); ++it) t.members.push_back({families_[it->first].pattern, it->second});
    return t;
  }

 private:
  using Bits = detail::Bits<1>;

  bool search(std::uint64_t free, int slack) {
    if (std::popcount(free) <= slack) return true;
    if (auto it = failed_.find(free); it != failed_.end() && it->second >= slack) return false;
    const std::uint64_t entry_free = free;
    const int entry_slack = slack;
    if (!isolated_) {
      std::uint64_t dead = 0;
      for (auto m = free; m; m &= m - 1) {
        const int x = std::countr_zero(m);
        if (!(host_.adj[static_cast<std::size_t>(x)].w[0] & free)) dead |= std::uint64_t{1} << x;
      }
      free &= ~dead;
      slack -= std::popcount(dead);
      if (slack < 0) return remember(entry_free, entry_slack);
      if (std::popcount(free) <= slack) return true;
    }
    const int v = std::countr_zero(free);
    Bits avail;
    avail.w[0] = free & ~(std::uint64_t{1} << v);
    bool found = false;
    for (std::size_t fi = 0; fi < families_.size() && !found; ++fi) {
      const auto& fam = families_[fi];
      std::vector<int> image(static_cast<std::size_t>(fam.pattern.order()));
      auto allow = [&](int x, const Bits& av) { return !(lower_twins_[static_cast<std::size_t>(x)] & av.w[0]); };
      auto emit = [&](const std::vector<int>& img) {
        std::uint64_t used = 0;
        for (int x : img) used |= std::uint64_t{1} << x;
        if (search(free & ~used, slack)) {
          path_.emplace_back(fi, img);
          found = true;
          return false;
        }
        return true;
      };
      for (int r : fam.roots) {
        if (found) break;
        const auto& ro = fam.plan.rooted[static_cast<std::size_t>(r)];
        image[static_cast<std::size_t>(ro.order[0])] = v;
        detail::embed_from(host_, ro, 1, image, avail, allow, emit);
      }
    }
    if (found) return true;
    if (slack > 0 && search(free & ~(std::uint64_t{1} << v), slack - 1)) return true;
    return remember(entry_free, entry_slack);
  }

  bool remember(std::uint64_t free, int slack) {
    auto [it, inserted] = failed_.try_emplace(free, slack);
    if (!inserted) it->second = std::max(it->second, slack);
    return false;
  }

  const detail::Host<1> host_;
  const std::vector<Family>& families_;
  bool isolated_ = false;
  std::vector<std::uint64_t> lower_twins_;
  std::unordered_map<std::uint64_t, int> failed_;
  std::vector<std::pair<std::size_t, std::vector<int>>> path_;
};

}  // namespace

TilingResult max_tiling(const Pattern& f, const SmallGraph& g, std::uint64_t budget) {
  auto out = cover_search(g, {f}, std::nullopt, budget);
  TilingResult r;
  r.nu = static_cast<int>(out.members.size());
  r.witness.members = std::move(out.members);
  r.exact = !out.aborted;
  r.nodes = out.nodes;
  return r;
}

Rational covering_ratio(const Pattern& f, const SmallGraph& g, std::uint64_t budget) {
  if (g.order() == 0) throw std::invalid_argument("covering ratio of an empty host");
  auto r = max_tiling(f, g, budget);
  if (!r.exact) throw std::runtime_error("tiling search exhausted its node budget");
  return ratio(f.order() * r.nu, g.order());
}

std::optional<Tiling> cover_at_least(const std::vector<Pattern>& families, const SmallGraph& g, int target) {
  if (families.empty()) throw std::invalid_argument("mixed cover needs at least one pattern family");
  if (g.order() > 64) throw std::length_error("cover_at_least supports hosts of at most 64 vertices");
  if (target <= 0) return Tiling{};
  const auto fams = make_families(families);
  return TargetSearch(g, fams).run(target);
}

std::vector<Pattern> default_families() { return {Pattern::K2(), Pattern::H(), Pattern::Hhat()}; }

CoverResult max_mixed_cover(const std::vector<Pattern>& families, const SmallGraph& g, std::optional<int> target,
                            std::uint64_t budget) {
  if (families.empty()) throw std::invalid_argument("mixed cover needs at least one pattern family");
  auto out = cover_search(g, families, target, budget);
  CoverResult r;
  r.coverage = out.coverage;
  r.witness.members = std::move(out.members);
  r.reached_target = out.reached_target;
  r.exact = out.reached_target || !out.aborted;
  r.nodes = out.nodes;
  return r;
}

Tiling k2_blowup_tiling() {
  // Copy k: u, c, d on the x side and v, a, b on the y side.
  Tiling t;
  for (int k = 0; k < 2; ++k) {
    const int x = 0, y = 1;
    t.members.push_back({Pattern::H(),
                         {blowup_index(x, 3 * k, 6), blowup_index(y, 3 * k, 6), blowup_index(y, 3 * k + 1, 6),
                          blowup_index(y, 3 * k + 2, 6), blowup_index(x, 3 * k + 1, 6), blowup_index(x, 3 * k + 2, 6)}});
  }
  return t;
}

Tiling h_blowup_tiling() {
  Tiling t;
  for (int k = 0; k < 6; ++k) {
    std::vector<Vertex> map;
    for (int label = 0; label < 6; ++label) map.push_back(blowup_index(label, k, 6));
    t.members.push_back({Pattern::H(), std::move(map)});
  }
  return t;
}

Tiling hhat_blowup_tiling(int t) {
  if (t < 1) throw std::invalid_argument("blowup factor must be positive");
  enum { U, V, W, A, B, C, D };
  // Classes of (u, v, a, b, c, d) under each embedding.
  static constexpr int kPsi[5][6] = {
      {U, V, A, A, D, D},
      {U, V, B, B, C, U},
      {U, V, V, B, C, C},
      {W, C, B, B, W, W},
      {B, W, W, W, C, C},
  };
  std::array<int, 7> next{};
  Tiling out;
  auto place = [&](const int (&psi)[6]) {
    std::vector<Vertex> map;
    for (int cls : psi) map.push_back(blowup_index(cls, next[static_cast<std::size_t>(cls)]++, t));
    out.members.push_back({Pattern::H(), std::move(map)});
  };
  for (int i = 0; i < t / 2; ++i) place(kPsi[0]);
  for (int j = 1; j < 5; ++j)
    for (int i = 0; i < t / 6; ++i) place(kPsi[j]);
  return out;
}

Tiling lift_tiling(const Tiling& t, const SmallGraph& g) {
  if (auto err = tiling_error(t, g)) throw std::invalid_argument("cannot lift an invalid tiling: " + *err);
  static const Tiling k2 = k2_blowup_tiling();
  static const Tiling h = h_blowup_tiling();
  static const Tiling hhat = hhat_blowup_tiling(6);
  Tiling out;
  for (const auto& m : t.members) {
    const Tiling* inner = nullptr;
    switch (m.pattern.type()) {
      case PatternType::K2: inner = &k2; break;
      case PatternType::H: inner = &h; break;
      case PatternType::Hhat: inner = &hhat; break;
      default: throw std::invalid_argument("lift_tiling supports only K2, H and Hhat members, got " + m.pattern.name());
    }
    for (const auto& copy : inner->members) {
      std::vector<Vertex> map;
      for (Vertex q : copy.map) map.push_back(blowup_index(m.map[static_cast<std::size_t>(q / 6)], q % 6, 6));
      out.members.push_back({Pattern::H(), std::move(map)});
    }
  }
  return out;
}

std::optional<Embedding> find_H_in_dense(const SmallGraph& g) {
  const int n = g.order();
  std::vector<int> deg(static_cast<std::size_t>(n));
  std::vector<char> alive(static_cast<std::size_t>(n), 1);
  std::vector<Vertex> queue;
  for (Vertex v = 0; v < n; ++v) {
    deg[static_cast<std::size_t>(v)] = g.degree(v);
    if (deg[static_cast<std::size_t>(v)] <= 5) queue.push_back(v);
  }
  while (!queue.empty()) {
    const Vertex v = queue.back();
    queue.pop_back();
    if (!alive[static_cast<std::size_t>(v)]) continue;
    alive[static_cast<std::size_t>(v)] = 0;
    for (Vertex w : g.neighbors(v))
      if (alive[static_cast<std::size_t>(w)] && --deg[static_cast<std::size_t>(w)] == 5) queue.push_back(w);
  }
  auto core_neighbors = [&](Vertex x) {
    std::vector<Vertex> out;
    for (Vertex w : g.neighbors(x))
      if (alive[static_cast<std::size_t>(w)]) out.push_back(w);
    return out;
  };
  for (Vertex u = 0; u < n; ++u) {
    if (!alive[static_cast<std::size_t>(u)]) continue;
    // Every core vertex has at least 6 core neighbours, so the greedy
    // choices below always succeed.
    const auto nu = core_neighbors(u);
    const Vertex v = nu[0];
    std::vector<Vertex> leaves_u;
    for (Vertex x : nu)
      if (x != v && leaves_u.size() < 2) leaves_u.push_back(x);
    std::vector<Vertex> leaves_v;
    for (Vertex x : core_neighbors(v))
      if (x != u && x != leaves_u[0] && x != leaves_u[1] && leaves_v.size() < 2) leaves_v.push_back(x);
    return Embedding{Pattern::H(), {u, v, leaves_u[0], leaves_u[1], leaves_v[0], leaves_v[1]}};
  }
  auto copies = enumerate_copies(Pattern::H(), g, 1);
  if (copies.empty()) return std::nullopt;
  return copies.front();
}

std::optional<std::vector<std::vector<int>>> disjoint_representatives(
    const std::vector<std::vector<std::vector<int>>>& families) {
  std::set<int> used;
  std::vector<std::vector<int>> picked;
  for (const auto& family : families) {
    auto it = std::find_if(family.begin(), family.end(), [&](const std::vector<int>& e) {
      return std::none_of(e.begin(), e.end(), [&](int x) { return used.count(x) > 0; });
    });
    if (it == family.end()) return std::nullopt;
    used.insert(it->begin(), it->end());
    picked.push_back(*it);
  }
  return picked;
}

}  // namespace tilebench
