#include <doctest.h>

#include <bit>
#include <random>

#include "oracles.hpp"
#include "tilebench/extremal.hpp"
#include "tilebench/serialize.hpp"

using namespace tilebench;

namespace {

constexpr int U = 0, V = 1, A = 2, B = 3, C = 4, D = 5;

LabelMask labels(std::initializer_list<int> ls) {
  LabelMask m = 0;
  for (int l : ls) m |= static_cast<LabelMask>(1u << l);
  return m;
}

std::uint64_t random_mask(std::mt19937_64& rng, double p) {
  std::bernoulli_distribution coin(p);
  std::uint64_t m = 0;
  for (int b = 0; b < 36; ++b)
    if (coin(rng)) m |= std::uint64_t{1} << b;
  return m;
}

}  // namespace

TEST_CASE("label masks") {
  CHECK(parse_label_mask("vab") == labels({V, A, B}));
  CHECK(parse_label_mask("") == 0);
  CHECK(parse_label_mask("-") == 0);
  CHECK(format_label_mask(labels({V, A, B})) == "{v,a,b}");
  CHECK(format_label_mask(0) == "{}");
  CHECK_THROWS_AS(parse_label_mask("vx"), std::invalid_argument);
}

TEST_CASE("admissible L-patterns") {
  const auto patterns = admissible_L_patterns();
  CHECK(patterns.size() == 10);
  CHECK(is_admissible(labels({V, A, B})));
  CHECK_FALSE(is_admissible(labels({U, A})));
  CHECK(is_admissible(0));
  CHECK_FALSE(is_admissible(labels({C})));
  for (const auto& p : patterns) {
    CHECK_FALSE(violates_L_rules(p.mask));
    CHECK((p.mask & labels({C, D})) == 0);
  }
  for (LabelMask m = 0; m < 16; ++m) {
    if (std::popcount(static_cast<unsigned>(m)) > 3) continue;
    bool listed = false;
    for (const auto& p : patterns) listed = listed || p.mask == m;
    if (!listed) CHECK(violates_L_rules(m));
  }
  CHECK(violates_L_rules(labels({A, C})));
  CHECK(violates_L_rules(labels({V, D})));
  CHECK(violates_L_rules(labels({U, B})));
}

TEST_CASE("bip masks and validation") {
  CHECK(bip_bit(U, U) == 0);
  CHECK(bip_bit(D, D) == 35);
  CHECK(bip_hex(kFullBip) == "fffffffff");
  CHECK(bip_hex(1) == "000000001");
  CHECK(parse_bip_hex("00000000a") == 10);
  CHECK_THROWS_AS(parse_bip_hex("1000000000"), std::invalid_argument);
  CHECK_THROWS_AS(parse_bip_hex("zz"), std::invalid_argument);
  CHECK_THROWS_AS(validate(PairConfig{kFullBip + 1, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(validate(PairConfig{0, labels({U, A}), 0}), std::invalid_argument);
  CHECK_THROWS_AS(is_extendable(PairConfig{0, labels({C}), 0}), std::invalid_argument);
}

TEST_CASE("assemble_host") {
  const PairConfig one{0, labels({U}), 0};
  const SmallGraph g = assemble_host(one);
  CHECK(g.order() == 13);
  CHECK(g.size() == 11);
  CHECK(pendant_vertex(one, 0, U) == 12);
  CHECK(g.adjacent(12, U));
  const SmallGraph full = assemble_host(PairConfig{kFullBip, 0, 0});
  CHECK(full.order() == 12);
  CHECK(full.size() == 46);
  const PairConfig two{std::uint64_t{1} << bip_bit(V, C), labels({V, A, B}), labels({U, V})};
  const SmallGraph g2 = assemble_host(two);
  CHECK(g2.order() == 17);
  CHECK(g2.adjacent(V, 6 + C));
  CHECK(pendant_vertex(two, 0, B) == 14);
  CHECK(pendant_vertex(two, 1, U) == 15);
  CHECK(g2.adjacent(16, 6 + V));
  CHECK_THROWS_AS(pendant_vertex(two, 1, A), std::invalid_argument);
}

TEST_CASE("is_extendable examples") {
  CHECK_FALSE(is_extendable(PairConfig{0, labels({U}), 0}));
  CHECK(is_extendable(PairConfig{kFullBip, labels({U}), 0}));
  CHECK(is_extendable(PairConfig{kFullBip, labels({A}), 0}));
  CHECK_FALSE(is_extendable(PairConfig{kFullBip, 0, 0}));
  for (const auto& f : figure_fixtures()) CHECK(is_extendable(f.config));
}

TEST_CASE("is_extendable agrees with the naive oracle") {
  std::mt19937_64 rng(31);
  const auto families = default_families();
  const LabelMask singles[] = {labels({U}), labels({V}), labels({A}), 0};
  for (int trial = 0; trial < 1000; ++trial) {
    const PairConfig c{random_mask(rng, 0.15 + 0.6 * (trial % 10) / 10.0), singles[trial % 4], 0};
    const bool naive = oracle::naive_mixed_cover(families, assemble_host(c)) >= 13;
    CHECK(is_extendable(c) == naive);
  }
}

TEST_CASE("is_extendable agrees with the generic solver on larger hosts") {
  std::mt19937_64 rng(37);
  const auto families = default_families();
  const auto patterns = admissible_L_patterns();
  for (int trial = 0; trial < 300; ++trial) {
    const PairConfig c{random_mask(rng, 0.5), patterns[rng() % patterns.size()].mask, patterns[rng() % patterns.size()].mask};
    const auto generic = max_mixed_cover(families, assemble_host(c), 13);
    REQUIRE(generic.exact);
    CHECK(is_extendable(c) == generic.reached_target);
  }
}

TEST_CASE("is_extendable is edge-monotone") {
  std::mt19937_64 rng(41);
  const auto patterns = admissible_L_patterns();
  for (int trial = 0; trial < 10000; ++trial) {
    const LabelMask li = patterns[rng() % patterns.size()].mask, lj = patterns[rng() % patterns.size()].mask;
    const std::uint64_t a = random_mask(rng, 0.55);
    const std::uint64_t b = a | random_mask(rng, 0.2);
    if (is_extendable({a, li, lj})) CHECK(is_extendable({b, li, lj}));
  }
}

TEST_CASE("colex ranking") {
  CHECK(colex_unrank(0, 3) == 0b111);
  CHECK(colex_unrank(1, 3) == 0b1011);
  CHECK(colex_rank((std::uint64_t{1} << 36) - 1) == 0);
  std::mt19937_64 rng(43);
  for (int k : {1, 5, 18, 31, 35}) {
    const BigInt total = binomial(36, k);
    const std::uint64_t count = total.get_ui();
    CHECK(colex_unrank(count - 1, k) == (((std::uint64_t{1} << k) - 1) << (36 - k)));
    for (int trial = 0; trial < 200; ++trial) {
      const std::uint64_t r = rng() % (count - 1);
      const std::uint64_t m = colex_unrank(r, k);
      CHECK(std::popcount(m) == k);
      CHECK(colex_rank(m) == r);
      CHECK(next_combination(m) == colex_unrank(r + 1, k));
    }
  }
}

TEST_CASE("lemma specs") {
  const std::pair<LemmaId, int> bounds[] = {{LemmaId::L51, 30}, {LemmaId::L52, 24}, {LemmaId::L53, 24}, {LemmaId::L54, 21}, {LemmaId::L55, 18}};
  for (const auto& [id, bound] : bounds) {
    const auto s = lemma_spec(id);
    CHECK(s.bound == bound);
    for (const auto& [li, lj] : s.configs) {
      CHECK(is_admissible(li));
      CHECK(is_admissible(lj));
    }
  }
  CHECK(lemma_spec(LemmaId::L51).configs.size() == 2);
  CHECK(lemma_spec(LemmaId::L53).configs.size() == 4);
  CHECK(lemma_spec(LemmaId::L55).configs.size() == 1);
  CHECK(parse_lemma_id("L53") == LemmaId::L53);
  CHECK(lemma_name(LemmaId::L54) == "L54");
  CHECK_THROWS_AS(parse_lemma_id("L56"), std::invalid_argument);
}

TEST_CASE("verify_lemma sampled runs are deterministic") {
  VerifyOptions o;
  o.count = 300;
  o.seed = 7;
  auto strip = [](nlohmann::json j) {
    j.erase("elapsed_ms");
    return j.dump();
  };
  for (LemmaId id : {LemmaId::L52, LemmaId::L54}) {
    o.jobs = 1;
    const auto first = verify_lemma(id, o);
    const auto second = verify_lemma(id, o);
    o.jobs = 3;
    const auto threaded = verify_lemma(id, o);
    CHECK(first.passed());
    CHECK(first.checked == 300 * lemma_spec(id).configs.size());
    CHECK(first.seed == std::optional<std::uint64_t>{7});
    CHECK(strip(to_json(first)) == strip(to_json(second)));
    CHECK(strip(to_json(first)) == strip(to_json(threaded)));
  }
  VerifyOptions exhaustive;
  exhaustive.mode = VerifyMode::Exhaustive;
  CHECK_THROWS_AS(verify_lemma(LemmaId::L52, exhaustive), std::invalid_argument);
}

TEST_CASE("tightness probe") {
  CHECK_FALSE(tightness_probe(LemmaId::L55, 0));
  for (LemmaId id : {LemmaId::L51, LemmaId::L55}) {
    const auto found = tightness_probe(id, 2000);
    if (found) {
      CHECK(std::popcount(found->bip) == lemma_spec(id).bound);
      CHECK_FALSE(is_extendable(*found));
    }
  }
}

TEST_CASE("figure fixtures") {
  const auto report = verify_figure_fixtures();
  CHECK(report.passed());
  REQUIRE(report.fixtures.size() == 6);
  for (const auto& f : report.fixtures) {
    CHECK(f.valid);
    CHECK(f.extendable);
    CHECK(f.coverage >= 13);
  }
  CHECK(report.fixtures[0].key == "hhat-3k2-pendant-u");
  CHECK(report.fixtures[0].coverage == 13);
  CHECK(report.fixtures[3].coverage == 14);
  CHECK_FALSE(report.control.valid);
  CHECK_FALSE(report.control.error.empty());

  const auto fixtures = figure_fixtures();
  const auto& hhat = fixtures[0];
  const SmallGraph host = assemble_host(hhat.config);
  for (const auto& m : hhat.tiling.members)
    for (const auto& [x, y] : image_edges(m)) CHECK(host.adjacent(x, y));
  CHECK(hhat.tiling.members[0].pattern == Pattern::Hhat());
  CHECK(hhat.tiling.size() == 4);
}
