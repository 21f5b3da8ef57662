#include "tilebench/extremal.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <chrono>
#include <charconv>
#include <mutex>
#include <random>
#include <stdexcept>
#include <thread>

namespace tilebench {

namespace {

constexpr std::array<char, 6> kLabels = {'u', 'v', 'a', 'b', 'c', 'd'};
constexpr LabelMask bit(int label) { return static_cast<LabelMask>(1u << label); }
constexpr LabelMask kU = bit(0), kV = bit(1), kA = bit(2), kB = bit(3), kC = bit(4), kD = bit(5);
constexpr LabelMask kAB = kA | kB, kCD = kC | kD;

const std::array<std::array<std::uint64_t, 37>, 37>& binomials() {
  static const auto table = [] {
    std::array<std::array<std::uint64_t, 37>, 37> t{};
    for (std::size_t n = 0; n <= 36; ++n) {
      t[n][0] = 1;
      for (std::size_t k = 1; k <= n; ++k) t[n][k] = t[n - 1][k - 1] + (k <= n - 1 ? t[n - 1][k] : 0);
    }
    return t;
  }();
  return table;
}

std::uint64_t choose36(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  return binomials()[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t block_seed(std::uint64_t seed, std::uint64_t config, std::uint64_t block) {
  return splitmix64(splitmix64(splitmix64(seed) ^ config) ^ block);
}

// Uniform in [0, n) by rejection; std distributions differ across
// standard libraries.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t threshold = (0 - n) % n;
  for (;;) {
    const std::uint64_t x = rng();
    if (x >= threshold) return x % n;
  }
}

}  // namespace

LabelMask parse_label_mask(std::string_view labels) {
  LabelMask m = 0;
  if (labels == "-") return m;
  for (char ch : labels) {
    if (ch == ',' || ch == '{' || ch == '}' || ch == ' ') continue;
    auto it = std::find(kLabels.begin(), kLabels.end(), ch);
    if (it == kLabels.end()) throw std::invalid_argument("unknown H label '" + std::string(1, ch) + "'");
    m |= bit(static_cast<int>(it - kLabels.begin()));
  }
  return m;
}

std::string format_label_mask(LabelMask m) {
  std::string out = "{";
  for (int l = 0; l < 6; ++l)
    if (m & bit(l)) {
      if (out.size() > 1) out += ',';
      out += kLabels[static_cast<std::size_t>(l)];
    }
  return out + "}";
}

bool violates_L_rules(LabelMask m) {
  const bool ab = m & kAB, cd = m & kCD;
  return (ab && cd) || (ab && (m & kU)) || (cd && (m & kV));
}

std::vector<LPattern> admissible_L_patterns() {
  return {
      {0, "empty"},   {kU, "u"},          {kV, "v"},           {kA, "leaf"},
      {kB, "leaf"},   {kU | kV, "uv"},    {kAB, "ab"},         {kV | kA, "v+leaf"},
      {kV | kB, "v+leaf"}, {kV | kA | kB, "vab"},
  };
}

bool is_admissible(LabelMask m) {
  const auto all = admissible_L_patterns();
  return std::any_of(all.begin(), all.end(), [m](const LPattern& p) { return p.mask == m; });
}

std::string bip_hex(std::uint64_t bip) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out(9, '0');
  for (int i = 8; i >= 0; --i, bip >>= 4) out[static_cast<std::size_t>(i)] = kDigits[bip & 15];
  return out;
}

std::uint64_t parse_bip_hex(std::string_view hex) {
  if (hex.starts_with("0x")) hex.remove_prefix(2);
  std::uint64_t v = 0;
  auto [p, ec] = std::from_chars(hex.data(), hex.data() + hex.size(), v, 16);
  if (ec != std::errc{} || p != hex.data() + hex.size() || hex.empty())
    throw std::invalid_argument("bad bip mask '" + std::string(hex) + "'");
  if (v > kFullBip) throw std::invalid_argument("bip mask has bits beyond the 36 cross pairs");
  return v;
}

void validate(const PairConfig& c) {
  if (c.bip > kFullBip) throw std::invalid_argument("bip mask has bits beyond the 36 cross pairs");
  if (!is_admissible(c.L_i)) throw std::invalid_argument("L_i = " + format_label_mask(c.L_i) + " is not an admissible L-pattern");
  if (!is_admissible(c.L_j)) throw std::invalid_argument("L_j = " + format_label_mask(c.L_j) + " is not an admissible L-pattern");
}

Vertex pendant_vertex(const PairConfig& c, int copy, int label) {
  const LabelMask own = copy == 0 ? c.L_i : c.L_j;
  if (!(own & bit(label))) throw std::invalid_argument("no pendant on that label");
  const int before = std::popcount(static_cast<unsigned>(own & (bit(label) - 1)));
  return 12 + (copy == 0 ? 0 : std::popcount(static_cast<unsigned>(c.L_i))) + before;
}

SmallGraph assemble_host(const PairConfig& c) {
  validate(c);
  const int pendants = std::popcount(static_cast<unsigned>(c.L_i)) + std::popcount(static_cast<unsigned>(c.L_j));
  GraphBuilder b(12 + pendants);
  for (int base : {0, 6})
    for (auto [x, y] : Pattern::H().graph().edges()) b.add_edge(base + x, base + y);
  for (int x = 0; x < 6; ++x)
    for (int y = 0; y < 6; ++y)
      if ((c.bip >> bip_bit(x, y)) & 1u) b.add_edge(x, 6 + y);
  for (int copy = 0; copy < 2; ++copy)
    for (int l = 0; l < 6; ++l)
      if ((copy == 0 ? c.L_i : c.L_j) & bit(l)) b.add_edge(6 * copy + l, pendant_vertex(c, copy, l));
  return std::move(b).build();
}

bool is_extendable(const PairConfig& c) {
  static const std::vector<Pattern> families = default_families();
  return cover_at_least(families, assemble_host(c), 13).has_value();
}

LemmaId parse_lemma_id(std::string_view name) {
  if (name == "L51") return LemmaId::L51;
  if (name == "L52") return LemmaId::L52;
  if (name == "L53") return LemmaId::L53;
  if (name == "L54") return LemmaId::L54;
  if (name == "L55") return LemmaId::L55;
  throw std::invalid_argument("unknown lemma '" + std::string(name) + "' (expected L51..L55)");
}

std::string lemma_name(LemmaId id) {
  switch (id) {
    case LemmaId::L51: return "L51";
    case LemmaId::L52: return "L52";
    case LemmaId::L53: return "L53";
    case LemmaId::L54: return "L54";
    case LemmaId::L55: return "L55";
  }
  return "?";
}

LemmaSpec lemma_spec(LemmaId id) {
  const std::vector<LabelMask> singles = {kU, kA};
  const std::vector<LabelMask> pairs = {kU | kV, kAB, kV | kA, kV | kB};
  const LabelMask triple = kV | kA | kB;
  LemmaSpec s{id, 0, {}};
  switch (id) {
    case LemmaId::L51:
      s.bound = 30;
      for (auto m : singles) s.configs.emplace_back(m, 0);
      break;
    case LemmaId::L52:
      s.bound = 24;
      for (auto mi : singles)
        for (auto mj : singles) s.configs.emplace_back(mi, mj);
      break;
    case LemmaId::L53:
      s.bound = 24;
      for (auto m : pairs) s.configs.emplace_back(m, 0);
      break;
    case LemmaId::L54:
      s.bound = 21;
      for (auto m : pairs) s.configs.emplace_back(triple, m);
      break;
    case LemmaId::L55:
      s.bound = 18;
      s.configs.emplace_back(triple, triple);
      break;
  }
  return s;
}

std::uint64_t colex_rank(std::uint64_t mask) {
  std::uint64_t rank = 0;
  int i = 1;
  for (auto m = mask; m; m &= m - 1, ++i) rank += choose36(std::countr_zero(m), i);
  return rank;
}

std::uint64_t colex_unrank(std::uint64_t rank, int k) {
  if (k < 0 || k > 36 || rank >= choose36(36, k)) throw std::out_of_range("colex rank out of range");
  std::uint64_t mask = 0;
  int c = 36;
  for (int i = k; i >= 1; --i) {
    do --c;
    while (choose36(c, i) > rank);
    mask |= std::uint64_t{1} << c;
    rank -= choose36(c, i);
  }
  return mask;
}

std::uint64_t next_combination(std::uint64_t mask) {
  const std::uint64_t low = mask & (0 - mask);
  const std::uint64_t ripple = mask + low;
  return ripple | (((mask ^ ripple) >> 2) / low);
}

namespace {

constexpr std::uint64_t kExhaustiveChunk = 4096;
constexpr std::uint64_t kSampleBlock = 1000;

struct Unit {
  std::size_t config;
  std::uint64_t first;  // first rank (exhaustive) or block index (sampled)
  std::uint64_t count;
};

struct UnitResult {
  std::uint64_t checked = 0;
  std::vector<PairConfig> failures;
};

}  // namespace

VerificationReport verify_lemma(LemmaId id, const VerifyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const LemmaSpec spec = lemma_spec(id);
  const int k = spec.bound + 1;
  const std::uint64_t space = choose36(36, k);
  if (options.mode == VerifyMode::Exhaustive && id != LemmaId::L51)
    throw std::invalid_argument("exhaustive verification is only supported for L51; use sampled mode for " + lemma_name(id));
  if (options.mode == VerifyMode::Sampled && options.count == 0)
    throw std::invalid_argument("sampled verification needs a positive count");

  std::vector<Unit> units;
  for (std::size_t ci = 0; ci < spec.configs.size(); ++ci) {
    if (options.mode == VerifyMode::Exhaustive) {
      for (std::uint64_t r = 0; r < space; r += kExhaustiveChunk) units.push_back({ci, r, std::min(kExhaustiveChunk, space - r)});
    } else {
      for (std::uint64_t b = 0; b * kSampleBlock < options.count; ++b)
        units.push_back({ci, b, std::min(kSampleBlock, options.count - b * kSampleBlock)});
    }
  }
  const std::uint64_t total = options.mode == VerifyMode::Exhaustive ? space * spec.configs.size()
                                                                       : options.count * spec.configs.size();

  std::vector<UnitResult> results(units.size());
  std::atomic<std::size_t> next{0};
  std::atomic<std::uint64_t> done{0};
  std::mutex progress_mutex;
  std::exception_ptr error;
  std::mutex error_mutex;

  auto work = [&] {
    try {
      for (std::size_t ui = next++; ui < units.size(); ui = next++) {
        const Unit& u = units[ui];
        PairConfig cfg{0, spec.configs[u.config].first, spec.configs[u.config].second};
        UnitResult& res = results[ui];
        auto check = [&](std::uint64_t mask) {
          cfg.bip = mask;
          ++res.checked;
          if (!is_extendable(cfg)) res.failures.push_back(cfg);
        };
        if (options.mode == VerifyMode::Exhaustive) {
          std::uint64_t mask = colex_unrank(u.first, k);
          for (std::uint64_t i = 0; i < u.count; ++i, mask = next_combination(mask)) check(mask);
        } else {
          std::mt19937_64 rng(block_seed(options.seed, u.config, u.first));
          for (std::uint64_t i = 0; i < u.count; ++i) check(colex_unrank(uniform_below(rng, space), k));
        }
        const auto d = done += u.count;
        if (options.progress) {
          std::lock_guard lock(progress_mutex);
          options.progress(d, total);
        }
      }
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
      next = units.size();
    }
  };

  const unsigned jobs = std::max(1u, options.jobs);
  if (jobs == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);

  VerificationReport report;
  report.lemma = lemma_name(id);
  report.mode = options.mode;
  report.boundary_edges = k;
  report.l_configs = spec.configs;
  if (options.mode == VerifyMode::Sampled) report.seed = options.seed;
  for (auto& r : results) {
    report.checked += r.checked;
    report.failure_count += r.failures.size();
    for (auto& f : r.failures)
      if (report.failures.size() < options.max_failures) report.failures.push_back(f);
  }
  report.elapsed_ms = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count());
  return report;
}

std::optional<PairConfig> tightness_probe(LemmaId id, std::uint64_t budget, std::uint64_t seed) {
  const LemmaSpec spec = lemma_spec(id);
  const std::uint64_t space = choose36(36, spec.bound);
  std::mt19937_64 rng(splitmix64(seed));
  for (std::uint64_t i = 0; i < budget; ++i) {
    const auto& [li, lj] = spec.configs[i % spec.configs.size()];
    PairConfig cfg{colex_unrank(uniform_below(rng, space), spec.bound), li, lj};
    if (!is_extendable(cfg)) return cfg;
  }
  return std::nullopt;
}

}  // namespace tilebench
