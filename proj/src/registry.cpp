#include "hyperfourier/registry.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <filesystem>

#include "hyperfourier/builders.hpp"
#include "hyperfourier/errors.hpp"
#include "hyperfourier/io.hpp"

namespace hf {

namespace {

std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

double parse_real(std::string_view s) {
  const std::string t = trim(s);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || ptr != t.data() + t.size() || t.empty()) throw UsageError("not a number: '" + t + "'");
  return v;
}

Source from_file(const std::string& path) {
  const std::string text = io::read_file(path);
  io::json j;
  try {
    j = io::json::parse(text);
  } catch (const io::json::exception& e) {
    throw UsageError("'" + path + "' is not valid JSON: " + e.what());
  }
  if (j.contains("structure")) return {"file:" + path, io::hypergroup_from_json(j)};
  if (j.contains("table")) return {"file:" + path, group_hypergroup(io::group_from_json(j))};
  if (j.contains("N")) return {"file:" + path, fusion_hypergroup(io::fusion_from_json(j))};
  throw UsageError("'" + path + "' is neither a hypergroup, a group nor a fusion-rule document");
}

}  // namespace

double parse_order2_parameter(std::string_view text) {
  const std::string t = trim(text);
  if (t == "phi^-2" || t == "golden") return 1.0 / (kGoldenRatio * kGoldenRatio);
  if (const auto slash = t.find('/'); slash != std::string::npos) {
    const double den = parse_real(std::string_view(t).substr(slash + 1));
    if (den == 0.0) throw UsageError("zero denominator in '" + t + "'");
    return parse_real(std::string_view(t).substr(0, slash)) / den;
  }
  return parse_real(t);
}

Source resolve_source(std::string_view spec) {
  const std::string s = trim(spec);
  if (s.empty()) throw UsageError("empty hypergroup source");
  const auto colon = s.find(':');
  if (colon == std::string::npos) {
    if (std::filesystem::is_regular_file(s)) return from_file(s);
    const FiniteGroup g = builtin_group(s);
    return {"group:" + s, group_hypergroup(g)};
  }
  const std::string kind = s.substr(0, colon);
  const std::string rest = s.substr(colon + 1);
  if (kind == "file") return from_file(rest);
  if (kind == "order2") {
    const double t = parse_order2_parameter(rest);
    if (!(t > 0.0 && t <= 1.0)) throw UsageError("order2 parameter must lie in (0, 1]");
    return {"order2:" + trim(rest), parametric_order2(t)};
  }
  if (kind == "fusion") return {"fusion:" + rest, fusion_hypergroup(builtin_fusion(rest))};

  if (kind != "group" && kind != "conj" && kind != "doublecoset") throw UsageError("unknown source kind '" + kind + "'");
  const auto colon2 = rest.find(':');
  const std::string name = rest.substr(0, colon2);
  const FiniteGroup g = builtin_group(name);
  if (kind == "doublecoset") {
    if (colon2 == std::string::npos) throw UsageError("doublecoset needs a subgroup, e.g. doublecoset:S4:(12)");
    const std::string gens = rest.substr(colon2 + 1);
    Subset h;
    try {
      h = g.parse_subgroup(gens);
    } catch (const UsageError&) {
      throw;
    } catch (const Error& e) {
      throw UsageError(std::string("bad subgroup '") + gens + "': " + e.what());
    }
    return {"doublecoset:" + name + ":" + gens, double_coset_hypergroup(g, h)};
  }
  if (colon2 != std::string::npos) throw UsageError("unexpected argument in '" + s + "'");
  return {kind + ":" + name, kind == "group" ? group_hypergroup(g) : conjugacy_hypergroup(g)};
}

std::vector<std::string> builtin_sources() {
  std::vector<std::string> out;
  for (const auto& g : builtin_group_names())
    if (g != "Z1") out.push_back("group:" + g);
  for (const char* g : {"S3", "S4", "A4", "Q8"}) out.push_back(std::string("conj:") + g);
  for (const char* d : {"doublecoset:S3:(12)", "doublecoset:S4:(12)", "doublecoset:S4:(12),(123)"}) out.emplace_back(d);
  for (const char* f : {"fusion:fib", "fusion:ising"}) out.emplace_back(f);
  for (const char* t : {"order2:1", "order2:1/2", "order2:phi^-2"}) out.emplace_back(t);
  return out;
}

std::vector<GroupPair> builtin_group_pairs(std::size_t max_order) {
  std::vector<GroupPair> out;
  for (const auto& name : builtin_group_names()) {
    const FiniteGroup g = builtin_group(name);
    if (g.order() > max_order) continue;
    for (auto& h : all_subgroups(g)) out.push_back({name, std::move(h)});
  }
  return out;
}

}  // namespace hf
