#include <stdexcept>

#include "tilebench/extremal.hpp"

namespace tilebench {

namespace {

struct MemberSpec {
  const char* pattern;
  std::vector<std::string> vertices;  // canonical label order of the pattern
};

struct FixtureSpec {
  const char* key;
  const char* L_i;
  const char* L_j;
  std::vector<std::pair<const char*, const char*>> cross;  // (label in H_i, label in H_j)
  std::vector<MemberSpec> members;
};

int label_index(char ch) {
  static const std::string labels = "uvabcd";
  const auto pos = labels.find(ch);
  if (pos == std::string::npos) throw std::logic_error("bad fixture label");
  return static_cast<int>(pos);
}

// "x_i" or "x_j" names a copy vertex; "p(x_i)" the pendant on it.
Vertex resolve(const PairConfig& c, const std::string& name) {
  if (name.starts_with("p(") && name.ends_with(")")) {
    const std::string inner = name.substr(2, name.size() - 3);
    return pendant_vertex(c, inner[2] == 'i' ? 0 : 1, label_index(inner[0]));
  }
  if (name.size() != 3 || name[1] != '_') throw std::logic_error("bad fixture vertex " + name);
  return (name[2] == 'i' ? 0 : 6) + label_index(name[0]);
}

FigureFixture build(const FixtureSpec& s) {
  FigureFixture f;
  f.key = s.key;
  f.config.L_i = parse_label_mask(s.L_i);
  f.config.L_j = parse_label_mask(s.L_j);
  for (auto [x, y] : s.cross) f.config.bip |= std::uint64_t{1} << bip_bit(label_index(x[0]), label_index(y[0]));
  for (const auto& m : s.members) {
    Embedding e{parse_pattern(m.pattern), {}};
    for (const auto& v : m.vertices) e.map.push_back(resolve(f.config, v));
    f.tiling.members.push_back(std::move(e));
  }
  return f;
}

const std::vector<FixtureSpec>& specs() {
  static const std::vector<FixtureSpec> all = {
      {"hhat-3k2-pendant-u",
       "u",
       "",
       {{"a", "u"}, {"c", "a"}, {"b", "d"}, {"v", "b"}, {"d", "d"}},
       {{"Hhat", {"u_i", "v_i", "d_j", "p(u_i)", "b_i", "d_i", "b_j"}},
        {"K2", {"c_j", "v_j"}},
        {"K2", {"a_j", "c_i"}},
        {"K2", {"u_j", "a_i"}}}},
      {"hhat-3k2-pendant-a",
       "a",
       "",
       {{"b", "a"}, {"d", "a"}, {"u", "d"}},
       {{"K2", {"a_i", "p(a_i)"}},
        {"Hhat", {"u_i", "v_i", "a_j", "d_j", "b_i", "d_i", "c_i"}},
        {"K2", {"b_j", "u_j"}},
        {"K2", {"c_j", "v_j"}}}},
      {"h-4k2-pendants-u-u",
       "u",
       "u",
       {{"a", "c"}, {"b", "d"}, {"d", "b"}, {"c", "v"}, {"d", "u"}},
       {{"H", {"d_i", "u_j", "b_j", "v_i", "a_j", "p(u_j)"}},
        {"K2", {"a_i", "c_j"}},
        {"K2", {"b_i", "d_j"}},
        {"K2", {"c_i", "v_j"}},
        {"K2", {"u_i", "p(u_i)"}}}},
      {"2h-k2-pendants-u-a",
       "u",
       "a",
       {{"a", "a"}, {"d", "a"}, {"v", "b"}, {"d", "d"}, {"d", "u"}},
       {{"H", {"a_j", "d_i", "a_i", "p(a_j)", "d_j", "u_j"}},
        {"H", {"u_i", "v_i", "b_i", "p(u_i)", "b_j", "c_i"}},
        {"K2", {"c_j", "v_j"}}}},
      {"2h-k2-pendants-va",
       "va",
       "",
       {{"c", "c"}, {"v", "c"}, {"u", "d"}, {"u", "u"}},
       {{"H", {"u_i", "u_j", "b_i", "d_j", "a_j", "b_j"}},
        {"H", {"v_i", "c_j", "d_i", "p(v_i)", "c_i", "v_j"}},
        {"K2", {"a_i", "p(a_i)"}}}},
      {"2h-k2-pendants-vab-uv",
       "vab",
       "uv",
       {{"a", "v"}, {"b", "d"}, {"b", "u"}},
       {{"H", {"a_i", "v_j", "u_i", "p(a_i)", "c_j", "p(v_j)"}},
        {"H", {"b_i", "u_j", "d_j", "p(b_i)", "b_j", "p(u_j)"}},
        {"K2", {"v_i", "p(v_i)"}}}},
  };
  return all;
}

}  // namespace

std::vector<FigureFixture> figure_fixtures() {
  std::vector<FigureFixture> out;
  for (const auto& s : specs()) out.push_back(build(s));
  return out;
}

FigureFixture corrupted_fixture() {
  FigureFixture f = build(specs().front());
  f.key += "-corrupted";
  f.config.bip &= ~(std::uint64_t{1} << bip_bit(label_index('v'), label_index('b')));
  return f;
}

FixtureResult check_fixture(const FigureFixture& f) {
  FixtureResult r;
  r.key = f.key;
  const SmallGraph host = assemble_host(f.config);
  r.coverage = f.tiling.coverage();
  if (auto err = tiling_error(f.tiling, host)) {
    r.error = *err;
  } else {
    r.valid = r.coverage >= 13;
    if (!r.valid) r.error = "depicted tiling covers only " + std::to_string(r.coverage) + " vertices";
  }
  r.extendable = is_extendable(f.config);
  return r;
}

bool FixtureReport::passed() const {
  for (const auto& f : fixtures)
    if (!f.valid || !f.extendable) return false;
  return !control.valid;
}

FixtureReport verify_figure_fixtures() {
  FixtureReport report;
  for (const auto& f : figure_fixtures()) report.fixtures.push_back(check_fixture(f));
  report.control = check_fixture(corrupted_fixture());
  return report;
}

}  // namespace tilebench
