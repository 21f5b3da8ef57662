#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tilebench/graph.hpp"
#include "tilebench/patterns.hpp"
#include "tilebench/rational.hpp"

namespace tilebench {

inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;

/// Vertex-disjoint copies in some host. The host is not stored; validate
/// against it with tiling_error().
struct Tiling {
  std::vector<Embedding> members;

  std::size_t size() const { return members.size(); }
  int coverage() const;
};

/// Empty when every member is a copy in `host` and members are pairwise
/// vertex-disjoint; otherwise the first problem found.
std::optional<std::string> tiling_error(const Tiling& t, const SmallGraph& host);
inline bool is_valid_tiling(const Tiling& t, const SmallGraph& host) { return !tiling_error(t, host); }

struct TilingResult {
  int nu = 0;
  Tiling witness;
  bool exact = false;
  std::uint64_t nodes = 0;
};

/// Maximum number of vertex-disjoint copies of `f` in `g`. When the node
/// budget runs out, `exact` is false and `nu` is the best tiling found.
TilingResult max_tiling(const Pattern& f, const SmallGraph& g, std::uint64_t budget = kDefaultNodeBudget);

/// v(F) * nu(F, G) / v(G). Throws std::invalid_argument on an empty host
/// and std::runtime_error when the solver is inconclusive.
Rational covering_ratio(const Pattern& f, const SmallGraph& g, std::uint64_t budget = kDefaultNodeBudget);

struct CoverResult {
  int coverage = 0;
  Tiling witness;
  bool exact = false;
  bool reached_target = false;
  std::uint64_t nodes = 0;
};

/// {K2, H, Hhat}.
std::vector<Pattern> default_families();

/// Maximum number of vertices covered by vertex-disjoint copies drawn from
/// `families`; among maximum covers the witness has the fewest members.
///
/// With a target the search stops at the first cover of at least `target`
/// vertices. `exact` then certifies the comparison with the target: either
/// reached_target is set, or `coverage` is the true maximum.
CoverResult max_mixed_cover(const std::vector<Pattern>& families, const SmallGraph& g,
                            std::optional<int> target = std::nullopt, std::uint64_t budget = kDefaultNodeBudget);

/// Decision version of max_mixed_cover for hosts with at most 64 vertices:
/// a tiling covering at least `target` vertices, or none when no such
/// tiling exists. Always exact.
std::optional<Tiling> cover_at_least(const std::vector<Pattern>& families, const SmallGraph& g, int target);

/// Replaces every K2, H and Hhat member of a valid tiling of G by the
/// stored perfect H-tiling of its 6-blowup, giving an H-tiling of
/// blowup(G, 6) that covers six times as many vertices. Throws
/// std::invalid_argument for invalid tilings or other member patterns.
Tiling lift_tiling(const Tiling& t, const SmallGraph& g);

/// The perfect H-tilings of K2[6] and H[6] used by lift_tiling.
Tiling k2_blowup_tiling();
Tiling h_blowup_tiling();

/// floor(t/2) + 4 floor(t/6) disjoint H-copies in blowup(Hhat, t), built
/// from the five explicit embeddings.
Tiling hhat_blowup_tiling(int t);

/// Some copy of H in G, or none when G contains no H. Guaranteed to find
/// one without enumeration when |G| >= 5 v(G).
std::optional<Embedding> find_H_in_dense(const SmallGraph& g);

/// Greedy system of disjoint representatives: member j of the result is
/// the first set of families[j] disjoint from all earlier picks. None when
/// some family has no such member.
std::optional<std::vector<std::vector<int>>> disjoint_representatives(
    const std::vector<std::vector<std::vector<int>>>& families);

}  // namespace tilebench
