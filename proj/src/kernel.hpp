// Fixed-width bitset kernel shared by copy enumeration and the tiling
// solvers. Hosts are dispatched on the number of 64-bit words per row.
#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "tilebench/graph.hpp"

namespace tilebench::detail {

template <std::size_t W>
struct Bits {
  std::array<std::uint64_t, W> w{};

  void set(int v) { w[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63); }
  void reset(int v) { w[static_cast<std::size_t>(v) >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  bool test(int v) const { return (w[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1u; }
  bool none() const {
    for (auto x : w)
      if (x) return false;
    return true;
  }
  int count() const {
    int c = 0;
    for (auto x : w) c += std::popcount(x);
    return c;
  }
  int lowest() const {
    for (std::size_t i = 0; i < W; ++i)
      if (w[i]) return static_cast<int>(i * 64 + std::countr_zero(w[i]));
    return -1;
  }
  Bits operator&(const Bits& o) const {
    Bits r;
    for (std::size_t i = 0; i < W; ++i) r.w[i] = w[i] & o.w[i];
    return r;
  }
  Bits operator|(const Bits& o) const {
    Bits r;
    for (std::size_t i = 0; i < W; ++i) r.w[i] = w[i] | o.w[i];
    return r;
  }
  Bits& operator&=(const Bits& o) {
    for (std::size_t i = 0; i < W; ++i) w[i] &= o.w[i];
    return *this;
  }
  Bits& operator|=(const Bits& o) {
    for (std::size_t i = 0; i < W; ++i) w[i] |= o.w[i];
    return *this;
  }
  Bits minus(const Bits& o) const {
    Bits r;
    for (std::size_t i = 0; i < W; ++i) r.w[i] = w[i] & ~o.w[i];
    return r;
  }
  bool intersects(const Bits& o) const {
    for (std::size_t i = 0; i < W; ++i)
      if (w[i] & o.w[i]) return true;
    return false;
  }
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < W; ++i)
      for (auto x = w[i]; x; x &= x - 1) f(static_cast<int>(i * 64 + std::countr_zero(x)));
  }
  friend bool operator==(const Bits&, const Bits&) = default;
};

template <std::size_t W>
struct Host {
  int n = 0;
  std::vector<Bits<W>> adj;
  Bits<W> all;

  explicit Host(const SmallGraph& g) : n(g.order()), adj(static_cast<std::size_t>(g.order())) {
    if (static_cast<std::size_t>(g.words_per_row()) > W) throw std::logic_error("host wider than kernel");
    for (int v = 0; v < n; ++v) {
      auto r = g.row(v);
      std::copy(r.begin(), r.end(), adj[static_cast<std::size_t>(v)].w.begin());
      all.set(v);
    }
  }
};

/// Search order for embedding a pattern starting from a chosen root vertex.
/// Position 0 is the root; every later position lists the earlier positions
/// it must be adjacent to. Positions with no earlier neighbour start a new
/// component and draw candidates from all available vertices.
struct RootedOrder {
  std::vector<int> order;                  // position -> pattern vertex
  std::vector<std::vector<int>> anchors;   // position -> earlier positions adjacent to it
};

struct PatternPlan {
  int k = 0;
  std::vector<Edge> edges;
  bool has_isolated = false;
  std::vector<RootedOrder> rooted;  // one per pattern vertex

  explicit PatternPlan(const SmallGraph& f) : k(f.order()), edges(f.edges()) {
    for (int v = 0; v < k; ++v)
      if (f.degree(v) == 0) has_isolated = true;
    rooted.resize(static_cast<std::size_t>(k));
    for (int r = 0; r < k; ++r) {
      RootedOrder ro;
      std::vector<int> pos(static_cast<std::size_t>(k), -1);
      auto push = [&](int v) {
        pos[static_cast<std::size_t>(v)] = static_cast<int>(ro.order.size());
        ro.order.push_back(v);
      };
      // BFS from r, then remaining components in index order.
      std::vector<int> starts{r};
      for (int v = 0; v < k; ++v)
        if (v != r) starts.push_back(v);
      for (int s : starts) {
        if (pos[static_cast<std::size_t>(s)] >= 0) continue;
        push(s);
        for (std::size_t head = ro.order.size() - 1; head < ro.order.size(); ++head) {
          const int x = ro.order[head];
          for (int y : f.neighbors(x))
            if (pos[static_cast<std::size_t>(y)] < 0) push(y);
        }
      }
      ro.anchors.resize(static_cast<std::size_t>(k));
      for (int i = 0; i < k; ++i)
        for (int y : f.neighbors(ro.order[static_cast<std::size_t>(i)]))
          if (pos[static_cast<std::size_t>(y)] < i) ro.anchors[static_cast<std::size_t>(i)].push_back(pos[static_cast<std::size_t>(y)]);
      rooted[static_cast<std::size_t>(r)] = std::move(ro);
    }
  }
};

/// Backtracking embedder. `image[p]` receives the host vertex of pattern
/// vertex p. `allow(x, avail)` can veto a candidate; `emit(image)` returns
/// false to stop the enumeration. Returns false if stopped early.
template <std::size_t W, class Allow, class Emit>
bool embed_from(const Host<W>& host, const RootedOrder& ro, std::size_t position, std::vector<int>& image,
                const Bits<W>& avail, Allow& allow, Emit& emit) {
  if (position == ro.order.size()) return emit(image);
  const auto& anchors = ro.anchors[position];
  Bits<W> cand = avail;
  for (int a : anchors) cand &= host.adj[static_cast<std::size_t>(image[static_cast<std::size_t>(ro.order[static_cast<std::size_t>(a)])])];
  bool keep_going = true;
  for (std::size_t i = 0; i < W && keep_going; ++i) {
    for (auto x = cand.w[i]; x && keep_going; x &= x - 1) {
      const int v = static_cast<int>(i * 64 + std::countr_zero(x));
      if (!allow(v, avail)) continue;
      image[static_cast<std::size_t>(ro.order[position])] = v;
      Bits<W> next = avail;
      next.reset(v);
      keep_going = embed_from(host, ro, position + 1, image, next, allow, emit);
    }
  }
  return keep_going;
}

/// Dedup key of an embedding: the sorted image edge set, followed by the
/// sorted images of isolated pattern vertices.
inline void copy_key(const PatternPlan& plan, const std::vector<int>& image, int n, std::vector<std::uint64_t>& out) {
  out.clear();
  for (auto [p, q] : plan.edges) {
    auto a = static_cast<std::uint64_t>(image[static_cast<std::size_t>(p)]);
    auto b = static_cast<std::uint64_t>(image[static_cast<std::size_t>(q)]);
    if (a > b) std::swap(a, b);
    out.push_back(a * static_cast<std::uint64_t>(n) + b);
  }
  std::sort(out.begin(), out.end());
  if (plan.has_isolated) {
    std::vector<std::uint64_t> verts(image.begin(), image.end());
    std::sort(verts.begin(), verts.end());
    out.push_back(~std::uint64_t{0});
    out.insert(out.end(), verts.begin(), verts.end());
  }
}

/// Calls `fn.template operator()<W>()` with the smallest supported width
/// that fits `words`.
template <class Fn>
decltype(auto) dispatch_width(int words, Fn&& fn) {
  if (words <= 1) return fn.template operator()<1>();
  if (words <= 2) return fn.template operator()<2>();
  if (words <= 4) return fn.template operator()<4>();
  if (words <= 8) return fn.template operator()<8>();
  if (words <= 16) return fn.template operator()<16>();
  if (words <= 32) return fn.template operator()<32>();
  if (words <= 64) return fn.template operator()<64>();
  throw std::length_error("host too large for the bitset kernel");
}

}  // namespace tilebench::detail
