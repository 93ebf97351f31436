#include "hyperfourier/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <optional>
#include <sstream>

#include "hyperfourier/errors.hpp"
#include "hyperfourier/fourier.hpp"
#include "hyperfourier/galois.hpp"
#include "hyperfourier/inequalities.hpp"
#include "hyperfourier/io.hpp"
#include "hyperfourier/registry.hpp"
#include "hyperfourier/spectra.hpp"

namespace hf::cli {

namespace {

using io::json;

struct Config {
  std::string seed_text;
  std::size_t trials = 100;
  std::optional<double> tolerance;
  std::string format;
  std::string out_path;
  unsigned threads = 1;
  bool full_precision = false;

  int digits() const { return full_precision ? io::kFullDigits : io::kDefaultDigits; }
};

// Exit code carried out of a command body.
struct Outcome {
  int code = kExitOk;
};

std::uint64_t parse_seed(const std::string& text) {
  std::size_t used = 0;
  std::uint64_t v = 0;
  try {
    v = std::stoull(text, &used, 0);
  } catch (const std::exception&) {
    throw UsageError("invalid seed '" + text + "'");
  }
  if (used != text.size()) throw UsageError("invalid seed '" + text + "'");
  return v;
}

std::uint64_t resolve_seed(const Config& cfg) {
  if (!cfg.seed_text.empty()) return parse_seed(cfg.seed_text);
  if (const char* env = std::getenv("HYPERFOURIER_SEED"); env && *env) return parse_seed(env);
  return kDefaultSeed;
}

void emit(const Config& cfg, std::ostream& out, const std::string& text) {
  if (cfg.out_path.empty())
    out << text;
  else
    io::write_file(cfg.out_path, text);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string format_or(const Config& cfg, const std::string& fallback, std::initializer_list<const char*> allowed) {
  const std::string f = cfg.format.empty() ? fallback : cfg.format;
  for (const char* a : allowed)
    if (f == a) return f;
  throw UsageError("format '" + f + "' is not available for this command");
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
  return s;
}

std::string validation_summary(const ValidationReport& r, int digits) {
  std::ostringstream os;
  os << "validation: " << (r.passed() ? "pass" : "FAIL") << " (max violation " << io::format_number(r.max_violation(), digits)
     << ", tolerance " << io::format_number(r.tolerance, digits) << ")\n";
  for (const auto& c : r.checks)
    os << "  " << c.name << ": " << io::format_number(c.violation, digits) << (c.passed ? "" : "  FAIL") << '\n';
  return os.str();
}

// ---- gen

Outcome cmd_gen(const Config& cfg, const std::string& spec, std::ostream& out, std::ostream& err) {
  format_or(cfg, "json", {"json"});
  const Source src = resolve_source(spec);
  emit(cfg, out, io::write_hypergroup(src.hypergroup));
  const ValidationReport r = validate(src.hypergroup);
  (cfg.out_path.empty() ? err : out) << src.id << ": " << src.hypergroup.size() << " elements\n"
                                     << validation_summary(r, cfg.digits());
  return {r.passed() ? kExitOk : kExitFailure};
}

// ---- analyze

Outcome cmd_analyze(const Config& cfg, const std::string& spec, std::ostream& out) {
  const std::string fmt = format_or(cfg, "text", {"text", "json", "csv"});
  const int digits = cfg.digits();
  const Source src = resolve_source(spec);
  const Hypergroup& h = src.hypergroup;
  const Spectrum s = wedderburn_decompose(h, resolve_seed(cfg));
  const std::size_t sum = s.total_dim_squared();
  const bool sum_ok = sum == h.size();

  if (fmt == "csv") {
    if (!s.all_one_dimensional()) throw UsageError("character table CSV requires a commutative hypergroup");
    emit(cfg, out, io::character_table_csv(h, s, digits));
    return {sum_ok ? kExitOk : kExitFailure};
  }

  std::vector<std::string> dims, hyper, haar;
  for (const auto& pi : s.irreps) {
    dims.push_back(std::to_string(pi.dim));
    hyper.push_back(io::format_number(pi.hyperdimension, digits));
  }
  for (double m : h.haar()) haar.push_back(io::format_number(m, digits));

  if (fmt == "json") {
    json j;
    j["hypergroup"] = src.id;
    j["size"] = h.size();
    j["labels"] = h.labels();
    json jh = json::array();
    for (double m : h.haar()) jh.push_back(io::round_digits(m, digits));
    j["haar"] = jh;
    json jd = json::array(), jk = json::array();
    for (const auto& pi : s.irreps) {
      jd.push_back(pi.dim);
      jk.push_back(io::round_digits(pi.hyperdimension, digits));
    }
    j["dims"] = jd;
    j["hyperdimensions"] = jk;
    j["sum_dim_squared"] = sum;
    j["sum_check"] = sum_ok;
    if (s.all_one_dimensional()) {
      const CMatrix t = character_table(s);
      json rows = json::array();
      for (Eigen::Index r = 0; r < t.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index k = 0; k < t.cols(); ++k)
          row.push_back(json::array({io::round_digits(io::chop(t(r, k).real()), digits), io::round_digits(io::chop(t(r, k).imag()), digits)}));
        rows.push_back(row);
      }
      j["character_table"] = rows;
    } else {
      j["character_table"] = nullptr;
    }
    j["validation"] = io::validation_to_json(validate(h), digits);
    emit(cfg, out, dump(j));
    return {sum_ok ? kExitOk : kExitFailure};
  }

  std::ostringstream os;
  os << "hypergroup: " << src.id << " (" << h.size() << " elements: " << join(h.labels(), ", ") << ")\n";
  os << "haar: " << join(haar, ", ") << '\n';
  os << "irreps: " << s.irreps.size() << '\n';
  os << "dims: " << join(dims, ", ") << '\n';
  os << "hyperdims: " << join(hyper, ", ") << '\n';
  os << "sum of squared dims: " << sum << " (|K| = " << h.size() << ") " << (sum_ok ? "ok" : "MISMATCH") << '\n';
  if (s.all_one_dimensional()) {
    os << "character table:\n" << io::character_table_csv(h, s, digits);
  } else {
    os << "character table: not available (noncommutative)\n";
  }
  emit(cfg, out, os.str());
  return {sum_ok ? kExitOk : kExitFailure};
}

// ---- verify

Outcome cmd_verify(const Config& cfg, const std::vector<std::string>& targets, bool all, std::ostream& out, std::ostream& err) {
  const std::string fmt = format_or(cfg, "json", {"json", "csv", "text"});
  const int digits = cfg.digits();
  std::vector<std::string> suites, sources;
  for (const auto& t : targets) {
    const bool is_suite = std::find(kSuiteNames.begin(), kSuiteNames.end(), t) != kSuiteNames.end();
    if (is_suite)
      suites.push_back(t);
    else
      sources.push_back(t);
  }
  if (suites.empty()) suites.assign(kSuiteNames.begin(), kSuiteNames.end());
  if (sources.empty() || all) {
    const auto builtin = builtin_sources();
    sources.insert(sources.end(), builtin.begin(), builtin.end());
  }

  VerifyOptions opt;
  opt.trials = cfg.trials;
  opt.seed = resolve_seed(cfg);
  opt.threads = std::max(1u, cfg.threads);
  if (cfg.tolerance) opt.tolerance = *cfg.tolerance;

  std::vector<VerificationReport> reports;
  for (const auto& spec : sources) {
    const Source src = resolve_source(spec);
    const Spectrum s = wedderburn_decompose(src.hypergroup, opt.seed);
    opt.hypergroup_id = src.id;
    for (const auto& suite : suites) reports.push_back(run_suite(suite, src.hypergroup, s, opt));
  }

  bool pass = true;
  for (const auto& r : reports) {
    if (r.passed) continue;
    pass = false;
    err << "FAIL " << r.suite << " on " << r.hypergroup << ": max violation " << io::format_number(r.max_violation, digits)
        << " > " << io::format_number(r.tolerance, digits) << " at " << r.witness_case << '\n';
    for (const auto& w : r.witness) err << "  witness " << io::density_to_json(w, io::kFullDigits).dump() << '\n';
  }

  if (fmt == "csv") {
    emit(cfg, out, io::reports_csv(reports, digits));
  } else if (fmt == "text") {
    std::ostringstream os;
    for (const auto& r : reports)
      os << (r.passed ? "PASS " : "FAIL ") << r.suite << ' ' << r.hypergroup << " trials=" << r.trials
         << " max_violation=" << io::format_number(r.max_violation, digits) << '\n';
    os << (pass ? "all suites passed" : "some suites FAILED") << " (" << reports.size() << " reports)\n";
    emit(cfg, out, os.str());
  } else {
    json j;
    j["seed"] = opt.seed;
    j["trials"] = opt.trials;
    j["tolerance"] = opt.tolerance;
    j["suites"] = suites;
    j["hypergroups"] = sources;
    j["pass"] = pass;
    json rs = json::array();
    for (const auto& r : reports) rs.push_back(io::report_to_json(r, digits));
    j["reports"] = rs;
    emit(cfg, out, dump(j));
  }
  return {pass ? kExitOk : kExitFailure};
}

// ---- galois

Outcome cmd_galois_lattice(const Config& cfg, const std::string& spec, std::ostream& out) {
  const std::string fmt = format_or(cfg, "dot", {"dot", "json", "text"});
  const Source src = resolve_source(spec);
  const Lattice l = enumerate_subhypergroups(src.hypergroup);
  if (fmt == "dot") {
    emit(cfg, out, lattice_dot(l));
  } else if (fmt == "json") {
    emit(cfg, out, dump(io::lattice_to_json(l)));
  } else {
    std::ostringstream os;
    os << src.id << ": " << l.subhypergroups.size() << " closed subhypergroups\n";
    for (const auto& s : l.subhypergroups) {
      std::vector<std::string> names;
      for (std::size_t x : s) names.push_back(l.labels[x]);
      os << "  {" << join(names, ", ") << "}\n";
    }
    emit(cfg, out, os.str());
  }
  return {};
}

Outcome cmd_galois_check(const Config& cfg, const std::string& group, const std::string& gens, std::ostream& out) {
  const std::string fmt = format_or(cfg, "text", {"text", "json"});
  const FiniteGroup g = builtin_group(group);
  Subset h;
  try {
    h = g.parse_subgroup(gens);
  } catch (const UsageError&) {
    throw;
  } catch (const Error& e) {
    throw UsageError("bad subgroup '" + gens + "': " + e.what());
  }
  const CorrespondenceReport r = galois_check(g, h);
  if (fmt == "json") {
    emit(cfg, out, dump(io::correspondence_to_json(r)));
  } else {
    std::ostringstream os;
    os << "G = " << group << ", H = <" << gens << "> of order " << h.size() << '\n';
    os << "intermediate subgroups: " << r.intermediates.size() << '\n';
    os << "closed subhypergroups of H\\G/H: " << r.lattice.subhypergroups.size() << '\n';
    os << "well defined: " << (r.well_defined ? "yes" : "no") << '\n';
    os << "bijective: " << (r.bijective ? "yes" : "no") << '\n';
    os << "order preserving: " << (r.order_preserving ? "yes" : "no") << '\n';
    os << (r.passed() ? "bijection confirmed" : "correspondence FAILED: " + r.failure) << '\n';
    emit(cfg, out, os.str());
  }
  return {r.passed() ? kExitOk : kExitFailure};
}

// ---- fourier

std::vector<std::pair<std::string, double>> parse_norms(const std::string& text) {
  std::vector<std::pair<std::string, double>> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "inf" || item == "infinity") {
      out.emplace_back("inf", kInfinity);
      continue;
    }
    try {
      std::size_t used = 0;
      const double p = std::stod(item, &used);
      if (used != item.size() || !(p >= 1.0)) throw std::invalid_argument(item);
      out.emplace_back(item, p);
    } catch (const std::exception&) {
      throw UsageError("invalid norm exponent '" + item + "'");
    }
  }
  return out;
}

Outcome cmd_fourier(const Config& cfg, const std::string& spec, const std::string& input, bool inverse, const std::string& norms_text,
                    std::ostream& out) {
  const std::string fmt = format_or(cfg, "json", {"json", "text"});
  const int digits = cfg.digits();
  const auto norms = parse_norms(norms_text);
  const Source src = resolve_source(spec);
  const Hypergroup& h = src.hypergroup;
  const Spectrum s = wedderburn_decompose(h, resolve_seed(cfg));
  const WeightedTrace w(s);

  json doc;
  try {
    doc = json::parse(io::read_file(input));
  } catch (const json::exception& e) {
    throw UsageError("'" + input + "' is not valid JSON: " + e.what());
  }

  Density f;
  DualElement x;
  double round_trip = 0.0;
  try {
    if (inverse) {
      x = io::dual_from_json(doc);
      if (x.block_count() != s.irreps.size()) throw StructuralError("dual element has the wrong number of blocks");
      f = inverse_fourier(h, s, x);
      round_trip = fourier(h, s, f).max_abs_diff(x);
    } else {
      if (doc.is_object() && doc.contains("measure")) {
        // Point-mass coefficients share the density file layout.
        f = measure_to_density(h, Measure(io::density_from_json(doc.at("measure")).values()));
      } else {
        f = io::density_from_json(doc);
      }
      if (f.size() != h.size()) throw StructuralError("density length does not match the hypergroup size");
      x = fourier(h, s, f);
      const Density back = inverse_fourier(h, s, x);
      for (std::size_t k = 0; k < h.size(); ++k) round_trip = std::max(round_trip, std::abs(back[k] - f[k]));
    }
  } catch (const json::exception& e) {
    throw StructuralError(std::string("malformed input: ") + e.what());
  }

  std::vector<std::pair<std::string, double>> density_norms, dual_norms;
  for (const auto& [name, p] : norms) {
    density_norms.emplace_back(name, lp_norm(h, f, p));
    dual_norms.emplace_back(name, dual_lp_norm(x, w, p));
  }

  if (fmt == "json") {
    json j;
    j["hypergroup"] = src.id;
    if (inverse)
      j["density"] = io::density_to_json(f, digits);
    else
      j["transform"] = io::dual_to_json(x, digits);
    if (!norms.empty()) {
      json dn = json::object(), xn = json::object();
      for (const auto& [name, v] : density_norms) dn[name] = io::round_digits(v, digits);
      for (const auto& [name, v] : dual_norms) xn[name] = io::round_digits(v, digits);
      j["norms"] = json{{"density", dn}, {"dual", xn}};
    }
    j["round_trip_error"] = io::round_digits(round_trip, digits);
    emit(cfg, out, dump(j));
  } else {
    std::ostringstream os;
    os << "hypergroup: " << src.id << '\n';
    if (inverse) {
      os << "density:";
      for (const auto& v : f.values()) os << ' ' << io::format_number(v.real(), digits) << (v.imag() < 0 ? "-" : "+") << io::format_number(std::abs(v.imag()), digits) << 'i';
      os << '\n';
    } else {
      os << "transform blocks: " << x.block_count() << '\n';
      for (std::size_t i = 0; i < x.block_count(); ++i) {
        os << "  block " << i << " (dim " << x[i].rows() << "):";
        for (Eigen::Index r = 0; r < x[i].rows(); ++r)
          for (Eigen::Index c = 0; c < x[i].cols(); ++c) {
            const cplx z = x[i](r, c);
            os << ' ' << io::format_number(z.real(), digits) << (z.imag() < 0 ? "-" : "+") << io::format_number(std::abs(z.imag()), digits) << 'i';
          }
        os << '\n';
      }
    }
    for (std::size_t i = 0; i < norms.size(); ++i)
      os << "norm " << norms[i].first << ": density " << io::format_number(density_norms[i].second, digits) << ", dual "
         << io::format_number(dual_norms[i].second, digits) << '\n';
    os << "round trip max error: " << io::format_number(round_trip, digits) << '\n';
    emit(cfg, out, os.str());
  }
  return {};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fourier analysis on finite hypergroups", "hyperfourier"};
  app.require_subcommand(1);
  app.fallthrough();

  Config cfg;
  app.add_option("--seed", cfg.seed_text, "RNG seed (decimal or 0x hex); falls back to HYPERFOURIER_SEED, then 0xC0FFEE");
  app.add_option("--trials", cfg.trials, "random trials per suite")->check(CLI::PositiveNumber);
  app.add_option("--tolerance", cfg.tolerance, "override the verification tolerance")->check(CLI::PositiveNumber);
  app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "csv", "dot", "text"}));
  app.add_option("--out", cfg.out_path, "write the main output to this file");
  app.add_option("--threads", cfg.threads, "worker threads for verification")->check(CLI::PositiveNumber);
  app.add_flag("--full-precision", cfg.full_precision, "17 significant digits instead of 12");

  std::string source;
  auto* gen = app.add_subcommand("gen", "build a hypergroup and write its JSON document");
  gen->add_option("source", source, "builder spec, e.g. conj:S3, doublecoset:S4:(12), fusion:fib, order2:1/2")->required();

  auto* analyze = app.add_subcommand("analyze", "irreps, hyperdimensions and character table");
  analyze->add_option("source", source, "hypergroup source")->required();

  std::vector<std::string> targets;
  bool all = false;
  auto* verify = app.add_subcommand("verify", "run inequality suites");
  verify->add_option("targets", targets, "suite names and/or hypergroup sources (default: every suite on every builtin)");
  verify->add_flag("--all", all, "include the full builtin registry");

  auto* galois = app.add_subcommand("galois", "subhypergroup lattices and the subgroup correspondence");
  galois->require_subcommand(1);
  auto* lattice = galois->add_subcommand("lattice", "lattice of closed subhypergroups");
  lattice->add_option("source", source, "hypergroup source")->required();
  std::string group, gens;
  auto* check = galois->add_subcommand("check", "check the correspondence for a subgroup H of G");
  check->add_option("group", group, "builtin group name")->required();
  check->add_option("generators", gens, "generators of H, e.g. \"(12)\" or \"(12),(123)\"")->required();

  std::string input, norms;
  bool inverse = false;
  auto* fourier_cmd = app.add_subcommand("fourier", "transform a density or invert a dual element");
  fourier_cmd->add_option("source", source, "hypergroup source")->required();
  fourier_cmd->add_option("--input", input, "density or dual-element JSON file")->required();
  fourier_cmd->add_flag("--inverse", inverse, "input is a dual element; output its density");
  fourier_cmd->add_option("--norms", norms, "comma separated exponents, e.g. 1,2,inf");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    Outcome o;
    if (*gen)
      o = cmd_gen(cfg, source, out, err);
    else if (*analyze)
      o = cmd_analyze(cfg, source, out);
    else if (*verify)
      o = cmd_verify(cfg, targets, all, out, err);
    else if (*lattice)
      o = cmd_galois_lattice(cfg, source, out);
    else if (*check)
      o = cmd_galois_check(cfg, group, gens, out);
    else if (*fourier_cmd)
      o = cmd_fourier(cfg, source, input, inverse, norms, out);
    return o.code;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const SizeGuardError& e) {
    err << "size guard: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace hf::cli
