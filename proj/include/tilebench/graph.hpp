#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tilebench/rational.hpp"

#ifndef TILEBENCH_VERTEX_LIMIT
#define TILEBENCH_VERTEX_LIMIT 4096
#endif

namespace tilebench {

inline constexpr int kVertexLimit = TILEBENCH_VERTEX_LIMIT;

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Bitset over the vertex indices [0, n) of one graph.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int n);
  VertexSet(int n, std::initializer_list<Vertex> members);

  int universe() const { return n_; }
  bool contains(Vertex v) const;
  void insert(Vertex v);
  void erase(Vertex v);
  int size() const;
  bool empty() const;
  bool intersects(const VertexSet& other) const;
  std::vector<Vertex> members() const;

  std::span<const std::uint64_t> words() const { return words_; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Undirected simple graph with bitset adjacency rows. Immutable once built;
/// use GraphBuilder to construct one.
class SmallGraph {
 public:
  SmallGraph() = default;

  int order() const { return n_; }
  std::size_t size() const { return m_; }
  int words_per_row() const { return words_; }

  bool adjacent(Vertex u, Vertex v) const;
  int degree(Vertex v) const;
  std::span<const std::uint64_t> row(Vertex v) const {
    return {adj_.data() + static_cast<std::size_t>(v) * words_, static_cast<std::size_t>(words_)};
  }
  std::vector<Vertex> neighbors(Vertex v) const;
  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const SmallGraph&, const SmallGraph&) = default;

 private:
  friend class GraphBuilder;
  int n_ = 0;
  int words_ = 0;
  std::size_t m_ = 0;
  std::vector<std::uint64_t> adj_;
};

class GraphBuilder {
 public:
  /// Throws std::length_error when n exceeds the vertex limit.
  explicit GraphBuilder(int n);
  explicit GraphBuilder(const SmallGraph& g);

  int order() const { return g_.n_; }
  /// Adds uv; returns false when it was already present. Loops and
  /// out-of-range endpoints throw std::invalid_argument.
  bool add_edge(Vertex u, Vertex v);
  bool remove_edge(Vertex u, Vertex v);
  bool has_edge(Vertex u, Vertex v) const { return g_.adjacent(u, v); }

  SmallGraph build() const& { return g_; }
  SmallGraph build() && { return std::move(g_); }

 private:
  void check(Vertex u, Vertex v) const;
  SmallGraph g_;
};

struct DegreeStats {
  int min = 0;
  int max = 0;
  Rational average;
};

SmallGraph empty_graph(int n);
SmallGraph complete_graph(int n);
SmallGraph complete_bipartite_graph(int s, int t);
SmallGraph graph_from_edges(int n, std::span<const Edge> edges);

/// Vertex (u, i) of the blowup sits at index u * t + i.
SmallGraph blowup(const SmallGraph& g, int t);
inline Vertex blowup_index(Vertex u, int clone, int t) { return u * t + clone; }

std::size_t induced_edge_count(const SmallGraph& g, const VertexSet& s);
/// Throws std::invalid_argument when s and t overlap.
std::size_t cross_edge_count(const SmallGraph& g, const VertexSet& s, const VertexSet& t);
DegreeStats degree_stats(const SmallGraph& g);

/// Edge-list text format: "n m" header, then m lines "u v". Lines starting
/// with '#' and blank lines are skipped. Throws std::invalid_argument on
/// malformed input, duplicate edges (in either orientation) or loops.
SmallGraph read_edge_list(std::istream& in);
SmallGraph parse_edge_list(const std::string& text);
void write_edge_list(std::ostream& out, const SmallGraph& g);
std::string format_edge_list(const SmallGraph& g);

}  // namespace tilebench
