#include "tilebench/serialize.hpp"

#include <bit>
#include <fstream>
#include <stdexcept>

namespace tilebench {

using nlohmann::json;

json to_json(const Embedding& e) { return {{"pattern", e.pattern.name()}, {"vertices", e.map}}; }

json to_json(const Tiling& t) {
  json members = json::array();
  for (const auto& m : t.members) members.push_back(to_json(m));
  return {{"members", members}, {"coverage", t.coverage()}};
}

json to_json(const PairConfig& c) {
  return {{"bip_hex", bip_hex(c.bip)}, {"L_i", format_label_mask(c.L_i)}, {"L_j", format_label_mask(c.L_j)},
          {"pendants", std::popcount(static_cast<unsigned>(c.L_i)) + std::popcount(static_cast<unsigned>(c.L_j))}};
}

json to_json(const VerificationReport& r) {
  json configs = json::array();
  for (auto [li, lj] : r.l_configs) configs.push_back({{"L_i", format_label_mask(li)}, {"L_j", format_label_mask(lj)}});
  json failures = json::array();
  for (const auto& f : r.failures) failures.push_back(to_json(f));
  json out = {
      {"schema_version", kSchemaVersion},
      {"lemma", r.lemma},
      {"mode", r.mode == VerifyMode::Exhaustive ? "exhaustive" : "sampled"},
      {"boundary_edges", r.boundary_edges},
      {"l_configs", configs},
      {"checked", r.checked},
      {"failure_count", r.failure_count},
      {"failures", failures},
      {"seed", r.seed ? json(*r.seed) : json(nullptr)},
      {"elapsed_ms", r.elapsed_ms},
      {"verdict", r.passed() ? "pass" : "fail"},
  };
  return out;
}

json to_json(const FixtureReport& r) {
  auto entry = [](const FixtureResult& f) {
    json j = {{"key", f.key}, {"valid", f.valid}, {"extendable", f.extendable}, {"coverage", f.coverage}};
    if (!f.error.empty()) j["error"] = f.error;
    return j;
  };
  json fixtures = json::array();
  for (const auto& f : r.fixtures) fixtures.push_back(entry(f));
  return {{"schema_version", kSchemaVersion},
          {"fixtures", fixtures},
          {"control", entry(r.control)},
          {"verdict", r.passed() ? "pass" : "fail"}};
}

json to_json(const ConstructionSpec& spec, const MatchingVerdict& v) {
  const char* status = v.status == BoundStatus::Holds ? "holds" : v.status == BoundStatus::Fails ? "fails" : "inconclusive";
  json j = {{"schema_version", kSchemaVersion},
            {"spec", describe(spec)},
            {"nu", v.nu},
            {"beta_n", to_string(v.beta_n)},
            {"exact", v.solve.exact},
            {"status", status}};
  j["holds"] = v.status == BoundStatus::Inconclusive ? json(nullptr) : json(v.status == BoundStatus::Holds);
  return j;
}

Tiling tiling_from_json(const json& j) {
  try {
    Tiling t;
    for (const auto& m : j.at("members")) {
      Embedding e{parse_pattern(m.at("pattern").get<std::string>()), m.at("vertices").get<std::vector<Vertex>>()};
      t.members.push_back(std::move(e));
    }
    return t;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed tiling JSON: ") + e.what());
  }
}

void write_file_atomic(const std::filesystem::path& path, const std::string& text) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    out << text;
    if (!out.flush()) throw std::runtime_error("failed writing " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace tilebench
