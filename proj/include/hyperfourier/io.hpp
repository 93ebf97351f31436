#pragma once

// JSON / CSV / text formats for hypergroups, groups, fusion data, densities, dual
// elements, spectra, verification reports and lattices.

#include "json.hpp"

#include <string>
#include <vector>

#include "hyperfourier/builders.hpp"
#include "hyperfourier/core.hpp"
#include "hyperfourier/fourier.hpp"
#include "hyperfourier/galois.hpp"
#include "hyperfourier/groups.hpp"
#include "hyperfourier/inequalities.hpp"
#include "hyperfourier/spectra.hpp"

namespace hf::io {

using json = nlohmann::ordered_json;

inline constexpr int kDefaultDigits = 12;
inline constexpr int kFullDigits = 17;

// Entries below this magnitude in matrix-valued output are eigen-solve round-off.
inline constexpr double kChop = 1e-14;
double chop(double x);

// Value rounded to `digits` significant digits (round trip through "%.*g").
double round_digits(double x, int digits);
std::string format_number(double x, int digits);

// Hypergroup document; every real is written with 17 significant digits.
std::string write_hypergroup(const Hypergroup& h);
// Parses, validates and attaches the Haar measure (checking a supplied "haar" field).
Hypergroup read_hypergroup(const std::string& text);
Hypergroup hypergroup_from_json(const json& j);

FiniteGroup group_from_json(const json& j);
FusionData fusion_from_json(const json& j);

// {"values": [[re, im], ...]}; plain real numbers are also accepted on input.
json density_to_json(const Density& f, int digits);
Density density_from_json(const json& j);

// {"blocks": [{"irrep": i, "matrix": [[[re, im], ...], ...]}]}
json dual_to_json(const DualElement& x, int digits);
DualElement dual_from_json(const json& j);

json spectrum_to_json(const Spectrum& spec, int digits);
std::string character_table_csv(const Hypergroup& h, const Spectrum& spec, int digits);

json validation_to_json(const ValidationReport& r, int digits);

// Wall time is deliberately excluded so reports are reproducible byte for byte.
json report_to_json(const VerificationReport& r, int digits);
std::string reports_csv(const std::vector<VerificationReport>& reports, int digits);

json lattice_to_json(const Lattice& l);
json correspondence_to_json(const CorrespondenceReport& r);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace hf::io
