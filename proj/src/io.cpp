#include "hyperfourier/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "hyperfourier/errors.hpp"

namespace hf::io {

namespace {

json number(double x, int digits) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::isnan(x)) return "nan";
  return round_digits(x, digits);
}

json complex_pair(cplx z, int digits) { return json::array({number(chop(z.real()), digits), number(chop(z.imag()), digits)}); }

cplx complex_from_json(const json& v) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_array() && v.size() == 2) return {v[0].get<double>(), v[1].get<double>()};
  throw StructuralError("expected a real number or a [re, im] pair");
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

template <typename T>
T required(const json& j, const char* key) {
  if (!j.contains(key)) throw StructuralError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw StructuralError(std::string("malformed field '") + key + "': " + e.what());
  }
}

}  // namespace

double chop(double x) { return std::abs(x) < kChop ? 0.0 : x; }

double round_digits(double x, int digits) {
  if (!std::isfinite(x)) return x;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return std::strtod(buf, nullptr);
}

std::string format_number(double x, int digits) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

std::string write_hypergroup(const Hypergroup& h) {
  const std::size_t n = h.size();
  auto real = [](double x) { return format_number(x, kFullDigits); };
  std::ostringstream os;
  os << "{\n  \"size\": " << n << ",\n  \"labels\": [";
  for (std::size_t i = 0; i < n; ++i) os << (i ? ", " : "") << '"' << escape(h.labels()[i]) << '"';
  os << "],\n  \"identity\": " << h.identity() << ",\n  \"involution\": [";
  for (std::size_t i = 0; i < n; ++i) os << (i ? ", " : "") << h.involution(i);
  os << "],\n  \"structure\": [\n";
  for (std::size_t i = 0; i < n; ++i) {
    os << "    [";
    for (std::size_t j = 0; j < n; ++j) {
      os << (j ? ", " : "") << '[';
      for (std::size_t k = 0; k < n; ++k) os << (k ? ", " : "") << real(h.coeff(i, j, k));
      os << ']';
    }
    os << ']' << (i + 1 < n ? "," : "") << '\n';
  }
  os << "  ]";
  if (h.has_haar()) {
    os << ",\n  \"haar\": [";
    for (std::size_t i = 0; i < n; ++i) os << (i ? ", " : "") << real(h.haar()[i]);
    os << ']';
  }
  os << "\n}\n";
  return os.str();
}

Hypergroup hypergroup_from_json(const json& j) {
  const auto n = required<std::size_t>(j, "size");
  auto labels = j.contains("labels") ? required<std::vector<std::string>>(j, "labels") : std::vector<std::string>{};
  if (labels.empty())
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  if (labels.size() != n) throw StructuralError("label count does not match size");
  const auto identity = required<std::size_t>(j, "identity");
  const auto involution = required<std::vector<std::size_t>>(j, "involution");
  const auto structure = required<std::vector<std::vector<std::vector<double>>>>(j, "structure");
  StructureTensor c(n);
  if (structure.size() != n) throw StructuralError("structure tensor dimension does not match size");
  for (std::size_t a = 0; a < n; ++a) {
    if (structure[a].size() != n) throw StructuralError("structure tensor dimension does not match size");
    for (std::size_t b = 0; b < n; ++b) {
      if (structure[a][b].size() != n) throw StructuralError("structure tensor dimension does not match size");
      for (std::size_t k = 0; k < n; ++k) c(a, b, k) = structure[a][b][k];
    }
  }
  std::optional<std::vector<double>> haar;
  if (j.contains("haar") && !j.at("haar").is_null()) haar = required<std::vector<double>>(j, "haar");
  return finalize(Hypergroup(std::move(labels), identity, involution, std::move(c), std::move(haar)));
}

Hypergroup read_hypergroup(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw StructuralError(std::string("invalid JSON: ") + e.what());
  }
  return hypergroup_from_json(j);
}

FiniteGroup group_from_json(const json& j) {
  const auto order = required<std::size_t>(j, "order");
  auto table = required<std::vector<std::vector<std::size_t>>>(j, "table");
  if (table.size() != order) throw StructuralError("Cayley table size does not match order");
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = required<std::vector<std::string>>(j, "labels");
  return FiniteGroup(std::move(table), std::move(labels));
}

FusionData fusion_from_json(const json& j) {
  FusionData fd;
  fd.rank = required<std::size_t>(j, "rank");
  fd.fusion = required<std::vector<std::vector<std::vector<long>>>>(j, "N");
  fd.dims = required<std::vector<double>>(j, "dims");
  fd.dual = required<std::vector<std::size_t>>(j, "dual");
  if (j.contains("labels")) fd.labels = required<std::vector<std::string>>(j, "labels");
  return fd;
}

json density_to_json(const Density& f, int digits) {
  json values = json::array();
  for (const auto& v : f.values()) values.push_back(complex_pair(v, digits));
  return json{{"values", values}};
}

Density density_from_json(const json& j) {
  const json& arr = j.is_array() ? j : j.at("values");
  std::vector<cplx> v;
  for (const auto& x : arr) v.push_back(complex_from_json(x));
  return Density(std::move(v));
}

json dual_to_json(const DualElement& x, int digits) {
  json blocks = json::array();
  for (std::size_t i = 0; i < x.block_count(); ++i) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < x[i].rows(); ++r) {
      json row = json::array();
      for (Eigen::Index s = 0; s < x[i].cols(); ++s) row.push_back(complex_pair(x[i](r, s), digits));
      rows.push_back(row);
    }
    blocks.push_back(json{{"irrep", i}, {"matrix", rows}});
  }
  return json{{"blocks", blocks}};
}

DualElement dual_from_json(const json& j) {
  const auto& blocks = j.at("blocks");
  std::vector<CMatrix> out(blocks.size());
  std::vector<bool> seen(blocks.size(), false);
  for (const auto& b : blocks) {
    const auto idx = b.at("irrep").get<std::size_t>();
    if (idx >= out.size() || seen[idx]) throw StructuralError("dual element has a duplicate or out-of-range irrep index");
    seen[idx] = true;
    const auto& rows = b.at("matrix");
    const auto d = static_cast<Eigen::Index>(rows.size());
    CMatrix m(d, d);
    for (Eigen::Index r = 0; r < d; ++r) {
      if (static_cast<Eigen::Index>(rows[static_cast<std::size_t>(r)].size()) != d) throw StructuralError("dual element block is not square");
      for (Eigen::Index s = 0; s < d; ++s) m(r, s) = complex_from_json(rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(s)]);
    }
    out[idx] = std::move(m);
  }
  return DualElement(std::move(out));
}

json spectrum_to_json(const Spectrum& spec, int digits) {
  json irreps = json::array();
  for (const auto& pi : spec.irreps) {
    json mats = json::array();
    for (const auto& m : pi.matrices) {
      json rows = json::array();
      for (Eigen::Index r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index s = 0; s < m.cols(); ++s) row.push_back(complex_pair(m(r, s), digits));
        rows.push_back(row);
      }
      mats.push_back(rows);
    }
    irreps.push_back(json{{"dim", pi.dim}, {"hyperdimension", number(pi.hyperdimension, digits)}, {"matrices", mats}});
  }
  return json{{"seed", spec.seed}, {"sum_dim_squared", spec.total_dim_squared()}, {"irreps", irreps}};
}

std::string character_table_csv(const Hypergroup& h, const Spectrum& spec, int digits) {
  const CMatrix table = character_table(spec);
  std::ostringstream os;
  os << "irrep,hyperdimension";
  for (const auto& l : h.labels()) os << ",\"" << escape(l) << '"';
  os << '\n';
  for (Eigen::Index r = 0; r < table.rows(); ++r) {
    os << r << ',' << format_number(spec.irreps[static_cast<std::size_t>(r)].hyperdimension, digits);
    for (Eigen::Index k = 0; k < table.cols(); ++k) {
      const cplx z(chop(table(r, k).real()), chop(table(r, k).imag()));
      os << ',' << format_number(z.real(), digits);
      if (std::abs(z.imag()) > 1e-12) os << (z.imag() < 0 ? "-" : "+") << format_number(std::abs(z.imag()), digits) << 'i';
    }
    os << '\n';
  }
  return os.str();
}

json validation_to_json(const ValidationReport& r, int digits) {
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back(json{{"axiom", c.name}, {"violation", number(c.violation, digits)}, {"pass", c.passed}});
  return json{{"pass", r.passed()}, {"tolerance", r.tolerance}, {"max_violation", number(r.max_violation(), digits)}, {"checks", checks}};
}

json report_to_json(const VerificationReport& r, int digits) {
  json witness = json::array();
  for (const auto& f : r.witness) witness.push_back(density_to_json(f, digits)["values"]);
  json details = json::object();
  for (const auto& [k, v] : r.details) details[k] = number(v, digits);
  return json{{"suite", r.suite},         {"hypergroup", r.hypergroup},
              {"trials", r.trials},       {"seed", r.seed},
              {"tolerance", r.tolerance}, {"max_violation", number(r.max_violation, digits)},
              {"pass", r.passed},         {"witness_case", r.witness_case},
              {"details", details},       {"witness", witness}};
}

std::string reports_csv(const std::vector<VerificationReport>& reports, int digits) {
  std::ostringstream os;
  os << "suite,hypergroup,trials,seed,tolerance,max_violation,pass,witness_case\n";
  for (const auto& r : reports) {
    os << r.suite << ",\"" << escape(r.hypergroup) << "\"," << r.trials << ',' << r.seed << ',' << format_number(r.tolerance, digits) << ','
       << format_number(r.max_violation, digits) << ',' << (r.passed ? "true" : "false") << ",\"" << escape(r.witness_case) << "\"\n";
  }
  return os.str();
}

json lattice_to_json(const Lattice& l) {
  json subs = json::array();
  json named = json::array();
  for (const auto& s : l.subhypergroups) {
    subs.push_back(s);
    json names = json::array();
    for (std::size_t x : s) names.push_back(l.labels[x]);
    named.push_back(names);
  }
  json edges = json::array();
  for (const auto& [a, b] : l.edges) edges.push_back(json::array({a, b}));
  return json{{"subhypergroups", subs}, {"edges", edges}, {"labels", named}};
}

json correspondence_to_json(const CorrespondenceReport& r) {
  json inter = json::array();
  for (const auto& p : r.intermediates) {
    json names = json::array();
    for (std::size_t x : p) names.push_back(r.group_labels[x]);
    inter.push_back(names);
  }
  json matching = json::array();
  for (std::size_t i = 0; i < r.image.size(); ++i) matching.push_back(json::array({i, r.image[i]}));
  return json{{"pass", r.passed()},
              {"well_defined", r.well_defined},
              {"bijective", r.bijective},
              {"order_preserving", r.order_preserving},
              {"failure", r.failure},
              {"intermediate_subgroups", inter},
              {"lattice", lattice_to_json(r.lattice)},
              {"matching", matching}};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << contents;
}

}  // namespace hf::io
