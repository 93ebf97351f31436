#pragma once

// Seeded randomized verification suites for the Fourier identities and inequalities:
// Parseval, Riemann-Lebesgue, Hausdorff-Young, Young, the *-homomorphism property,
// inversion and the Donoho-Stark uncertainty principle.
//
// A report's violation is signed: positive means the bound (or identity) is broken.
// Reports depend only on (hypergroup, spectrum, options), never on the thread count.

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hyperfourier/core.hpp"
#include "hyperfourier/fourier.hpp"
#include "hyperfourier/random.hpp"
#include "hyperfourier/spectra.hpp"

namespace hf {

inline constexpr double kVerifyTolerance = 1e-9;
inline constexpr double kInversionTolerance = 1e-8;

struct VerifyOptions {
  std::size_t trials = 100;
  std::uint64_t seed = kDefaultSeed;
  unsigned threads = 1;
  double tolerance = kVerifyTolerance;
  std::string hypergroup_id;
};

struct VerificationReport {
  std::string suite;
  std::string hypergroup;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  double max_violation = 0.0;
  double tolerance = kVerifyTolerance;
  std::string witness_case;          // which trial produced max_violation
  std::vector<Density> witness;      // its inputs
  std::vector<std::pair<std::string, double>> details;
  bool passed = true;
  double wall_time_seconds = 0.0;    // not part of serialized reports

  double detail(const std::string& key) const;
};

// Complex Gaussian entries (masked to `support` when given), rescaled to ||f||_2 = 1.
Density random_density(const Hypergroup& h, Rng& rng, const std::vector<std::size_t>* support = nullptr);
// |Gaussian| real entries, rescaled to ||f||_2 = 1.
Density random_positive_density(const Hypergroup& h, Rng& rng);

VerificationReport verify_parseval(const Hypergroup& h, const Spectrum& spec, const VerifyOptions& opt);
VerificationReport verify_riemann_lebesgue(const Hypergroup& h, const Spectrum& spec, const VerifyOptions& opt);

inline const std::vector<double> kDefaultHausdorffYoungGrid = {1.0, 6.0 / 5.0, 4.0 / 3.0, 3.0 / 2.0, 2.0};
// Each q in [1, 2] is paired with its conjugate exponent p; q = 1 and q = 2 are always added.
VerificationReport verify_hausdorff_young(const Hypergroup& h, const Spectrum& spec, const VerifyOptions& opt,
                                          std::vector<double> q_grid = kDefaultHausdorffYoungGrid);

struct YoungExponents {
  double p, q, r;
};
inline const std::vector<YoungExponents> kDefaultYoungGrid = {
    {1.0, 1.0, 1.0}, {1.0, 2.0, 2.0}, {2.0, 2.0, kInfinity}, {1.5, 3.0, 3.0}, {1.5, 1.5, 3.0}, {1.0, kInfinity, kInfinity}};
// Checks ||f*g||_r <= ||f||_p ||g||_q for 1/p + 1/q <= 1/r + 1 (throws DomainError otherwise).
// The detail "printed_form_gap" records ||f*g||_r - ||f||_p ||f||_q without asserting it.
VerificationReport verify_young(const Hypergroup& h, const Spectrum& spec, const VerifyOptions& opt,
                                std::vector<YoungExponents> grid = kDefaultYoungGrid);

VerificationReport verify_homomorphism(const Hypergroup& h, const Spectrum& spec, const VerifyOptions& opt);
VerificationReport verify_inversion(const Hypergroup& h, const Spectrum& spec, const VerifyOptions& opt);

// Trial t draws a density supported on 1 + (t mod n) random points when no schedule is given;
// otherwise support sizes cycle through the schedule.
VerificationReport verify_donoho_stark(const Hypergroup& h, const Spectrum& spec, const VerifyOptions& opt,
                                       std::vector<std::size_t> sparsity_schedule = {});

// mu(supp f) * sum_{pi in supp F(f)} k_pi rank(F(f)(pi))
double donoho_stark_product(const Hypergroup& h, const Spectrum& spec, const Density& f);

inline const std::array<const char*, 7> kSuiteNames = {
    "parseval", "riemann-lebesgue", "hausdorff-young", "young", "homomorphism", "inversion", "donoho-stark"};

// Runs a suite by name with its default grid. Donoho-Stark uses 10x the requested trials.
VerificationReport run_suite(const std::string& name, const Hypergroup& h, const Spectrum& spec, const VerifyOptions& opt);

}  // namespace hf
