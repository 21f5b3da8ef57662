#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tilebench/graph.hpp"

namespace tilebench {

enum class PatternType { H, Hhat, K2, CompleteBipartite, Custom };

inline constexpr int kMaxPatternOrder = 16;

/// A small pattern graph with a fixed vertex labeling.
///
///   H    : u v a b c d      -> 0..5, edges uv ua ub vc vd
///   Hhat : u v w a b c d    -> 0..6, edges uv ua ub vc vd wb wc
///   K2   : x y              -> 0..1
///   K{s,t}: x0..x{s-1} y0..y{t-1}, left side first
///   Custom: "0".."k-1"
///
/// Patterns are cheap to copy; the graph is shared.
class Pattern {
 public:
  static Pattern H();
  static Pattern Hhat();
  static Pattern K2();
  static Pattern complete_bipartite(int s, int t);
  /// Throws std::invalid_argument for graphs over kMaxPatternOrder vertices
  /// or without edges.
  static Pattern custom(SmallGraph g, std::string name = "custom");

  PatternType type() const { return data_->type; }
  const std::string& name() const { return data_->name; }
  const SmallGraph& graph() const { return data_->graph; }
  int order() const { return data_->graph.order(); }
  const std::vector<std::string>& labels() const { return data_->labels; }
  /// Index of a label; throws std::invalid_argument for unknown labels.
  int index_of(std::string_view label) const;

  friend bool operator==(const Pattern& a, const Pattern& b) {
    return a.data_ == b.data_ || (a.data_->type == b.data_->type && a.data_->name == b.data_->name &&
                                  a.data_->graph == b.data_->graph);
  }

 private:
  struct Data {
    PatternType type;
    std::string name;
    SmallGraph graph;
    std::vector<std::string> labels;
  };
  explicit Pattern(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
  std::shared_ptr<const Data> data_;
};

/// "H", "Hhat", "K2" or "K{s,t}" (also "Ks,t").
Pattern parse_pattern(std::string_view name);

const SmallGraph& pattern_graph(const Pattern& p);

/// Injective map from pattern vertices (by index) to host vertices.
struct Embedding {
  Pattern pattern;
  std::vector<Vertex> map;

  friend bool operator==(const Embedding&, const Embedding&) = default;
};

/// Empty when the embedding is a valid copy in `host`, otherwise a reason.
std::optional<std::string> embedding_error(const Embedding& e, const SmallGraph& host);
inline bool is_copy(const Embedding& e, const SmallGraph& host) { return !embedding_error(e, host); }

/// Sorted image vertex set.
std::vector<Vertex> image_vertices(const Embedding& e);
/// Sorted image edge set, each edge oriented (low, high).
std::vector<Edge> image_edges(const Embedding& e);

/// One embedding per distinct copy of `f` in `g` (copies are distinct when
/// their image edge sets differ, or for patterns with isolated vertices,
/// their image vertex sets), sorted by image vertex set. With a limit the
/// search stops after `limit` distinct copies, so the result is some
/// `limit` copies rather than the first ones in sorted order.
std::vector<Embedding> enumerate_copies(const Pattern& f, const SmallGraph& g,
                                        std::optional<std::size_t> limit = std::nullopt);

/// tau_1 is the minimum vertex cover size; tau_2 is v(F).
int covering_number(const Pattern& f, int i);

/// True iff F admits a bipartition into sides of sizes s1 <= s2 and
/// tau_1(F) = s1.
bool is_rigid(const Pattern& f, int s1, int s2);

/// Pattern vertices grouped into automorphism orbits; orbit[v] is the
/// smallest vertex in v's orbit.
std::vector<int> automorphism_orbits(const Pattern& f);

}  // namespace tilebench
