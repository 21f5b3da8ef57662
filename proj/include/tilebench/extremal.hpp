#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tilebench/graph.hpp"
#include "tilebench/tiling.hpp"

namespace tilebench {

/// Subset of the H labels u v a b c d, bit i for label index i.
using LabelMask = std::uint8_t;

LabelMask parse_label_mask(std::string_view labels);  // e.g. "vab", "" or "-"
std::string format_label_mask(LabelMask m);              // "{v,a,b}"

/// True when the mask breaks one of the three exclusion rules on which
/// labels of a single copy can be L-vertices.
bool violates_L_rules(LabelMask m);

struct LPattern {
  LabelMask mask;
  std::string symmetry_class;
};

/// The L-patterns that survive the exclusion rules once c and d are kept
/// out of L: every admissible subset of {u,v,a,b} of size at most 2, and
/// {v,a,b}.
std::vector<LPattern> admissible_L_patterns();
bool is_admissible(LabelMask m);

/// Two H-copies with cross edges and one pendant per L-vertex. Bit
/// 6*x + y of `bip` joins label x of H_i to label y of H_j.
///
/// Host layout: H_i on 0..5, H_j on 6..11, then the pendants of L_i and
/// L_j in ascending label order.
struct PairConfig {
  std::uint64_t bip = 0;
  LabelMask L_i = 0;
  LabelMask L_j = 0;

  friend bool operator==(const PairConfig&, const PairConfig&) = default;
};

inline constexpr std::uint64_t kFullBip = (std::uint64_t{1} << 36) - 1;

inline int bip_bit(int label_i, int label_j) { return 6 * label_i + label_j; }
std::string bip_hex(std::uint64_t bip);  // 9 lowercase hex digits
std::uint64_t parse_bip_hex(std::string_view hex);

/// Throws std::invalid_argument when the mask has bits above 35 or an
/// L-pattern is not admissible.
void validate(const PairConfig& c);

/// Host vertex of the pendant attached to `label` of copy 0 (H_i) or 1 (H_j).
Vertex pendant_vertex(const PairConfig& c, int copy, int label);

SmallGraph assemble_host(const PairConfig& c);

/// A {K2, H, Hhat}-tiling of the host covering at least 13 vertices exists.
bool is_extendable(const PairConfig& c);

enum class LemmaId { L51, L52, L53, L54, L55 };

LemmaId parse_lemma_id(std::string_view name);
std::string lemma_name(LemmaId id);

struct LemmaSpec {
  LemmaId id;
  int bound;  // cross-edge bound; configurations with bound + 1 edges must be extendable
  std::vector<std::pair<LabelMask, LabelMask>> configs;
};

LemmaSpec lemma_spec(LemmaId id);

enum class VerifyMode { Exhaustive, Sampled };

struct VerifyOptions {
  VerifyMode mode = VerifyMode::Sampled;
  std::uint64_t count = 100'000;  // samples per L-configuration
  std::uint64_t seed = 42;
  unsigned jobs = 1;
  std::size_t max_failures = 100;  // failures kept in the report
  std::function<void(std::uint64_t done, std::uint64_t total)> progress;
};

struct VerificationReport {
  std::string lemma;
  VerifyMode mode = VerifyMode::Sampled;
  int boundary_edges = 0;
  std::vector<std::pair<LabelMask, LabelMask>> l_configs;
  std::uint64_t checked = 0;
  std::uint64_t failure_count = 0;
  std::vector<PairConfig> failures;
  std::optional<std::uint64_t> seed;
  std::uint64_t elapsed_ms = 0;

  bool passed() const { return failure_count == 0; }
};

/// Checks that every configuration of the lemma with exactly bound + 1
/// cross edges is extendable, either for all C(36, bound + 1) masks or for
/// `count` uniformly sampled masks per L-configuration. Exhaustive mode is
/// only accepted for L51. Results do not depend on `jobs`.
VerificationReport verify_lemma(LemmaId id, const VerifyOptions& options);

/// Looks for a non-extendable configuration with exactly `bound` cross
/// edges by sampling up to `budget` masks. Informational only.
std::optional<PairConfig> tightness_probe(LemmaId id, std::uint64_t budget, std::uint64_t seed = 1);

struct FigureFixture {
  std::string key;
  PairConfig config;
  Tiling tiling;  // in assemble_host(config)
};

std::vector<FigureFixture> figure_fixtures();
/// A copy of a fixture with one cross edge used by its tiling removed.
FigureFixture corrupted_fixture();

struct FixtureResult {
  std::string key;
  bool valid = false;
  bool extendable = false;
  int coverage = 0;
  std::string error;
};

struct FixtureReport {
  std::vector<FixtureResult> fixtures;
  FixtureResult control;
  bool passed() const;
};

FixtureResult check_fixture(const FigureFixture& f);
FixtureReport verify_figure_fixtures();

// k-subsets of {0, ..., 35} as bit masks in colex order.
std::uint64_t colex_rank(std::uint64_t mask);
std::uint64_t colex_unrank(std::uint64_t rank, int k);
/// Next mask with the same popcount (Gosper's hack).
std::uint64_t next_combination(std::uint64_t mask);

}  // namespace tilebench
