#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tilebench/graph.hpp"
#include "tilebench/rational.hpp"
#include "tilebench/tiling.hpp"

namespace tilebench {

/// 3b(1 - 3b) on [0, 1/9] and 18b^2 on [1/9, 1/6]. Throws std::domain_error
/// outside [0, 1/6].
Rational xi(const Rational& beta);

/// max{3tb(1 - 3tb), 18t^2 b^2} for 0 <= b <= 1/(6t).
Rational xi_blowup(int t, const Rational& beta);

enum class ConstructionKind { BipartiteLower, GNIB };

/// BipartiteLower: complete bipartite graph with parts floor(3 beta n) - 1
/// and the rest.
/// GNIB: all r-sets meeting a planted set V_1 in at least i vertices, where
/// |V_1| = floor(beta (s_1 + ... + s_i) n) - 1.
/// In both cases V_1 (the small part) occupies indices [0, |V_1|).
struct ConstructionSpec {
  ConstructionKind kind = ConstructionKind::GNIB;
  int i = 1;
  std::vector<int> sizes{3, 3};
  long n = 0;
  Rational beta = 0;
};

/// Throws std::invalid_argument when the spec breaks its invariants.
void validate(const ConstructionSpec& spec);

/// |V_1|, or the small part for BipartiteLower. Throws std::domain_error
/// when negative.
long planted_size(const ConstructionSpec& spec);

/// Materializes the graph (r = 2 only).
SmallGraph build_construction(const ConstructionSpec& spec);

/// Closed-form edge count, for any uniformity r = sizes.size().
BigInt construction_edge_count(const ConstructionSpec& spec);

std::string describe(const ConstructionSpec& spec);

enum class BoundStatus { Holds, Fails, Inconclusive };

struct MatchingVerdict {
  int nu = 0;
  Rational beta_n;
  BoundStatus status = BoundStatus::Inconclusive;
  TilingResult solve;
};

/// Exact nu(H, G) for the built graph compared against beta n.
MatchingVerdict verify_construction_matching(const ConstructionSpec& spec, std::uint64_t budget = kDefaultNodeBudget);

struct RefutationScenario {
  std::string name;
  ConstructionSpec spec;
  bool expect_holds;
};

/// The three fixed finite witnesses: the two constructions whose matching
/// bound holds for H, and the i = 1 construction where it fails.
std::vector<RefutationScenario> refutation_scenarios();

}  // namespace tilebench
