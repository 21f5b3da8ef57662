#include "tilebench/graph.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace tilebench {

namespace {

int words_for(int n) { return (n + 63) / 64; }

void check_order(int n) {
  if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
  if (n > kVertexLimit)
    throw std::length_error("graph with " + std::to_string(n) + " vertices exceeds the vertex limit " +
                            std::to_string(kVertexLimit));
}

}  // namespace

VertexSet::VertexSet(int n) : n_(n), words_(static_cast<std::size_t>(words_for(n)), 0) {}

VertexSet::VertexSet(int n, std::initializer_list<Vertex> members) : VertexSet(n) {
  for (Vertex v : members) insert(v);
}

bool VertexSet::contains(Vertex v) const {
  if (v < 0 || v >= n_) return false;
  return (words_[v >> 6] >> (v & 63)) & 1u;
}

void VertexSet::insert(Vertex v) {
  if (v < 0 || v >= n_) throw std::out_of_range("vertex " + std::to_string(v) + " outside [0, " + std::to_string(n_) + ")");
  words_[v >> 6] |= std::uint64_t{1} << (v & 63);
}

void VertexSet::erase(Vertex v) {
  if (v < 0 || v >= n_) return;
  words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
}

int VertexSet::size() const {
  int c = 0;
  for (auto w : words_) c += std::popcount(w);
  return c;
}

bool VertexSet::empty() const {
  for (auto w : words_)
    if (w) return false;
  return true;
}

bool VertexSet::intersects(const VertexSet& other) const {
  const std::size_t k = std::min(words_.size(), other.words_.size());
  for (std::size_t i = 0; i < k; ++i)
    if (words_[i] & other.words_[i]) return true;
  return false;
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < words_.size(); ++i)
    for (auto w = words_[i]; w; w &= w - 1) out.push_back(static_cast<Vertex>(i * 64 + std::countr_zero(w)));
  return out;
}

bool SmallGraph::adjacent(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
  return (adj_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
}

int SmallGraph::degree(Vertex v) const {
  int d = 0;
  for (auto w : row(v)) d += std::popcount(w);
  return d;
}

std::vector<Vertex> SmallGraph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  auto r = row(v);
  for (std::size_t i = 0; i < r.size(); ++i)
    for (auto w = r[i]; w; w &= w - 1) out.push_back(static_cast<Vertex>(i * 64 + std::countr_zero(w)));
  return out;
}

std::vector<Edge> SmallGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

GraphBuilder::GraphBuilder(int n) {
  check_order(n);
  g_.n_ = n;
  g_.words_ = words_for(n);
  g_.adj_.assign(static_cast<std::size_t>(n) * g_.words_, 0);
}

GraphBuilder::GraphBuilder(const SmallGraph& g) : g_(g) {}

void GraphBuilder::check(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= g_.n_ || v >= g_.n_)
    throw std::invalid_argument("edge (" + std::to_string(u) + ", " + std::to_string(v) + ") has an endpoint outside [0, " +
                                std::to_string(g_.n_) + ")");
  if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
}

bool GraphBuilder::add_edge(Vertex u, Vertex v) {
  check(u, v);
  if (g_.adjacent(u, v)) return false;
  g_.adj_[static_cast<std::size_t>(u) * g_.words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
  g_.adj_[static_cast<std::size_t>(v) * g_.words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
  ++g_.m_;
  return true;
}

bool GraphBuilder::remove_edge(Vertex u, Vertex v) {
  check(u, v);
  if (!g_.adjacent(u, v)) return false;
  g_.adj_[static_cast<std::size_t>(u) * g_.words_ + (v >> 6)] &= ~(std::uint64_t{1} << (v & 63));
  g_.adj_[static_cast<std::size_t>(v) * g_.words_ + (u >> 6)] &= ~(std::uint64_t{1} << (u & 63));
  --g_.m_;
  return true;
}

SmallGraph empty_graph(int n) { return GraphBuilder(n).build(); }

SmallGraph complete_graph(int n) {
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) b.add_edge(u, v);
  return std::move(b).build();
}

SmallGraph complete_bipartite_graph(int s, int t) {
  GraphBuilder b(s + t);
  for (Vertex u = 0; u < s; ++u)
    for (Vertex v = s; v < s + t; ++v) b.add_edge(u, v);
  return std::move(b).build();
}

SmallGraph graph_from_edges(int n, std::span<const Edge> edges) {
  GraphBuilder b(n);
  for (auto [u, v] : edges)
    if (!b.add_edge(u, v))
      throw std::invalid_argument("duplicate edge (" + std::to_string(u) + ", " + std::to_string(v) + ")");
  return std::move(b).build();
}

SmallGraph blowup(const SmallGraph& g, int t) {
  if (t < 1) throw std::invalid_argument("blowup factor must be positive");
  if (static_cast<long long>(g.order()) * t > kVertexLimit)
    throw std::length_error("blowup with " + std::to_string(static_cast<long long>(g.order()) * t) +
                            " vertices exceeds the vertex limit");
  GraphBuilder b(g.order() * t);
  for (auto [u, v] : g.edges())
    for (int i = 0; i < t; ++i)
      for (int j = 0; j < t; ++j) b.add_edge(blowup_index(u, i, t), blowup_index(v, j, t));
  return std::move(b).build();
}

std::size_t induced_edge_count(const SmallGraph& g, const VertexSet& s) {
  std::size_t twice = 0;
  auto sw = s.words();
  for (Vertex u : s.members()) {
    if (u >= g.order()) throw std::invalid_argument("vertex set exceeds the graph");
    auto r = g.row(u);
    for (std::size_t i = 0; i < r.size() && i < sw.size(); ++i) twice += std::popcount(r[i] & sw[i]);
  }
  return twice / 2;
}

std::size_t cross_edge_count(const SmallGraph& g, const VertexSet& s, const VertexSet& t) {
  if (s.intersects(t)) throw std::invalid_argument("cross_edge_count needs disjoint vertex sets");
  std::size_t count = 0;
  auto tw = t.words();
  for (Vertex u : s.members()) {
    if (u >= g.order()) throw std::invalid_argument("vertex set exceeds the graph");
    auto r = g.row(u);
    for (std::size_t i = 0; i < r.size() && i < tw.size(); ++i) count += std::popcount(r[i] & tw[i]);
  }
  return count;
}

DegreeStats degree_stats(const SmallGraph& g) {
  DegreeStats st;
  st.average = 0;
  if (g.order() == 0) return st;
  st.min = g.order();
  for (Vertex v = 0; v < g.order(); ++v) {
    const int d = g.degree(v);
    st.min = std::min(st.min, d);
    st.max = std::max(st.max, d);
  }
  st.average = Rational(static_cast<unsigned long>(2 * g.size()), static_cast<unsigned long>(g.order()));
  st.average.canonicalize();
  return st;
}

namespace {

bool skip_line(const std::string& line) {
  for (char c : line) {
    if (c == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::vector<long long> parse_ints(const std::string& line, std::size_t line_no) {
  std::istringstream ss(line);
  std::vector<long long> out;
  std::string tok;
  while (ss >> tok) {
    std::size_t pos = 0;
    long long v = 0;
    try {
      v = std::stoll(tok, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != tok.size() || tok.empty())
      throw std::invalid_argument("line " + std::to_string(line_no) + ": expected integers, got '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

}  // namespace

SmallGraph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  long long n = -1, m = -1;
  while (std::getline(in, line)) {
    ++line_no;
    if (skip_line(line)) continue;
    auto vals = parse_ints(line, line_no);
    if (vals.size() != 2) throw std::invalid_argument("line " + std::to_string(line_no) + ": header must be 'n m'");
    n = vals[0];
    m = vals[1];
    break;
  }
  if (n < 0 || m < 0) throw std::invalid_argument("missing or negative 'n m' header");
  if (n > kVertexLimit) throw std::length_error("edge list declares " + std::to_string(n) + " vertices, over the vertex limit");
  GraphBuilder b(static_cast<int>(n));
  long long seen = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (skip_line(line)) continue;
    auto vals = parse_ints(line, line_no);
    if (vals.size() != 2) throw std::invalid_argument("line " + std::to_string(line_no) + ": edge must be 'u v'");
    if (vals[0] < 0 || vals[1] < 0 || vals[0] >= n || vals[1] >= n)
      throw std::invalid_argument("line " + std::to_string(line_no) + ": endpoint out of range");
    if (vals[0] == vals[1]) throw std::invalid_argument("line " + std::to_string(line_no) + ": loop");
    if (!b.add_edge(static_cast<Vertex>(vals[0]), static_cast<Vertex>(vals[1])))
      throw std::invalid_argument("line " + std::to_string(line_no) + ": duplicate edge");
    ++seen;
  }
  if (seen != m)
    throw std::invalid_argument("header declares " + std::to_string(m) + " edges but " + std::to_string(seen) + " were given");
  return std::move(b).build();
}

SmallGraph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const SmallGraph& g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

std::string format_edge_list(const SmallGraph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

}  // namespace tilebench
