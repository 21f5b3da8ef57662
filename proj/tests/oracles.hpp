#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "tilebench/graph.hpp"
#include "tilebench/patterns.hpp"

// Deliberately naive reference implementations, independent of the
// library's search code.
namespace oracle {

using tilebench::Edge;
using tilebench::Pattern;
using tilebench::SmallGraph;
using tilebench::Vertex;

void for_each_map(const SmallGraph& f, const SmallGraph& g, const std::function<void(const std::vector<Vertex>&)>& visit);

// Every injective map of the pattern into g that sends edges to edges.
std::vector<std::vector<Vertex>> all_maps(const SmallGraph& f, const SmallGraph& g);

// Distinct copies as (sorted image edges, image vertex mask); hosts up to 64 vertices.
std::set<std::pair<std::vector<Edge>, std::uint64_t>> distinct_copies(const SmallGraph& f, const SmallGraph& g);

// Vertex masks of all copies of any of the patterns.
std::vector<std::uint64_t> copy_masks(const std::vector<Pattern>& families, const SmallGraph& g);

// Memoized DP over free-vertex masks; hosts up to 20 vertices.
int max_disjoint(const std::vector<std::uint64_t>& masks, int n);
int max_covered(const std::vector<std::uint64_t>& masks, int n);

int naive_nu(const Pattern& f, const SmallGraph& g);
int naive_mixed_cover(const std::vector<Pattern>& families, const SmallGraph& g);

// Minimum vertex cover by subset enumeration.
int naive_vertex_cover(const SmallGraph& g);

SmallGraph random_graph(int n, double p, std::mt19937_64& rng);
SmallGraph random_graph_m(int n, std::size_t m, std::mt19937_64& rng);

}  // namespace oracle
