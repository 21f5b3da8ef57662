#include "tilebench/constructions.hpp"

#include <numeric>
#include <stdexcept>

namespace tilebench {

Rational xi(const Rational& beta) {
  if (beta < 0 || beta > ratio(1, 6)) throw std::domain_error("beta must lie in [0, 1/6], got " + to_string(beta));
  if (beta <= ratio(1, 9)) return 3 * beta * (1 - 3 * beta);
  return 18 * beta * beta;
}

Rational xi_blowup(int t, const Rational& beta) {
  if (t < 1) throw std::domain_error("blowup factor must be positive");
  if (beta < 0 || beta > ratio(1, 6L * t))
    throw std::domain_error("beta must lie in [0, 1/" + std::to_string(6L * t) + "], got " + to_string(beta));
  const Rational tb = t * beta;
  const Rational first = 3 * tb * (1 - 3 * tb);
  const Rational second = 18 * tb * tb;
  return first > second ? first : second;
}

void validate(const ConstructionSpec& spec) {
  if (spec.n < 1) throw std::invalid_argument("construction needs n >= 1");
  if (spec.sizes.empty()) throw std::invalid_argument("construction needs part sizes");
  for (std::size_t j = 0; j < spec.sizes.size(); ++j) {
    if (spec.sizes[j] < 1) throw std::invalid_argument("part sizes must be positive");
    if (j > 0 && spec.sizes[j] < spec.sizes[j - 1]) throw std::invalid_argument("part sizes must be nondecreasing");
  }
  const long m = std::accumulate(spec.sizes.begin(), spec.sizes.end(), 0L);
  if (spec.beta <= 0 || spec.beta >= ratio(1, m))
    throw std::invalid_argument("beta must lie in (0, 1/" + std::to_string(m) + "), got " + to_string(spec.beta));
  if (spec.kind == ConstructionKind::GNIB) {
    if (spec.i < 1 || spec.i > static_cast<int>(spec.sizes.size()))
      throw std::invalid_argument("i must lie in [1, " + std::to_string(spec.sizes.size()) + "]");
    if (spec.n < static_cast<long>(spec.sizes.size())) throw std::invalid_argument("construction needs n >= r");
  } else if (floor_of(3 * spec.beta * spec.n) < 1) {
    throw std::invalid_argument("bipartite construction needs floor(3 beta n) >= 1");
  }
}

long planted_size(const ConstructionSpec& spec) {
  validate(spec);
  BigInt size;
  if (spec.kind == ConstructionKind::BipartiteLower) {
    size = floor_of(3 * spec.beta * spec.n) - 1;
  } else {
    const long s = std::accumulate(spec.sizes.begin(), spec.sizes.begin() + spec.i, 0L);
    size = floor_of(spec.beta * s * spec.n) - 1;
  }
  if (size < 0) throw std::domain_error("planted part has negative size for " + describe(spec));
  return size.get_si();
}

SmallGraph build_construction(const ConstructionSpec& spec) {
  const long a = planted_size(spec);
  if (spec.kind == ConstructionKind::GNIB && spec.sizes.size() != 2)
    throw std::invalid_argument("only graph constructions (r = 2) can be materialized");
  if (spec.n > kVertexLimit) throw std::length_error("construction exceeds the vertex limit");
  const int n = static_cast<int>(spec.n);
  const int k = static_cast<int>(a);
  if (spec.kind == ConstructionKind::BipartiteLower) return complete_bipartite_graph(k, n - k);
  GraphBuilder b(n);
  for (int u = 0; u < k; ++u)
    for (int v = u + 1; v < n; ++v)
      if (spec.i == 1 || v < k) b.add_edge(u, v);
  return std::move(b).build();
}

BigInt construction_edge_count(const ConstructionSpec& spec) {
  const long a = planted_size(spec);
  if (spec.kind == ConstructionKind::BipartiteLower) return BigInt(a) * BigInt(spec.n - a);
  const long r = static_cast<long>(spec.sizes.size());
  BigInt total = 0;
  for (long j = spec.i; j <= r; ++j)
    total += binomial(static_cast<unsigned long>(a), static_cast<unsigned long>(j)) *
             binomial(static_cast<unsigned long>(spec.n - a), static_cast<unsigned long>(r - j));
  return total;
}

std::string describe(const ConstructionSpec& spec) {
  std::string sizes;
  for (int s : spec.sizes) sizes += (sizes.empty() ? "" : ",") + std::to_string(s);
  if (spec.kind == ConstructionKind::BipartiteLower)
    return "BipartiteLower(n=" + std::to_string(spec.n) + ", beta=" + to_string(spec.beta) + ")";
  return "GNIB(i=" + std::to_string(spec.i) + ", sizes=(" + sizes + "), n=" + std::to_string(spec.n) +
         ", beta=" + to_string(spec.beta) + ")";
}

MatchingVerdict verify_construction_matching(const ConstructionSpec& spec, std::uint64_t budget) {
  const SmallGraph g = build_construction(spec);
  MatchingVerdict v;
  v.solve = max_tiling(Pattern::H(), g, budget);
  v.nu = v.solve.nu;
  v.beta_n = spec.beta * spec.n;
  if (!v.solve.exact)
    v.status = BoundStatus::Inconclusive;
  else
    v.status = v.nu < v.beta_n ? BoundStatus::Holds : BoundStatus::Fails;
  return v;
}

std::vector<RefutationScenario> refutation_scenarios() {
  return {
      {"bipartite-lower", {ConstructionKind::BipartiteLower, 1, {3, 3}, 18, ratio(1, 9)}, true},
      {"gnib-i2", {ConstructionKind::GNIB, 2, {3, 3}, 24, ratio(1, 8)}, true},
      {"gnib-i1", {ConstructionKind::GNIB, 1, {3, 3}, 20, ratio(1, 10)}, false},
  };
}

}  // namespace tilebench
