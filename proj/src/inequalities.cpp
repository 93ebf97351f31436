#include "hyperfourier/inequalities.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <thread>

#include "hyperfourier/errors.hpp"

namespace hf {

namespace {

struct TrialOutcome {
  double violation = -kInfinity;
  std::vector<Density> inputs;
  std::vector<std::pair<std::string, double>> maxima;
  std::vector<std::pair<std::string, double>> minima;
};

using TrialFn = std::function<TrialOutcome(std::size_t trial, Rng& rng)>;

std::vector<TrialOutcome> run_trials(std::size_t trials, const VerifyOptions& opt, std::uint64_t stream, const TrialFn& fn) {
  std::vector<TrialOutcome> out(trials);
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t t = begin; t < end; ++t) {
      Rng rng = Rng::substream(opt.seed ^ (stream * 0xD1B54A32D192ED03ULL), t);
      out[t] = fn(t, rng);
    }
  };
  const std::size_t threads = std::max<std::size_t>(1, std::min<std::size_t>(opt.threads, trials));
  if (threads <= 1) {
    work(0, trials);
    return out;
  }
  std::vector<std::jthread> pool;
  const std::size_t chunk = (trials + threads - 1) / threads;
  for (std::size_t b = 0; b < trials; b += chunk) pool.emplace_back(work, b, std::min(trials, b + chunk));
  pool.clear();
  return out;
}

// Order-deterministic reduction of trial outcomes into a report.
class Aggregator {
 public:
  Aggregator(std::string suite, const VerifyOptions& opt) : start_(std::chrono::steady_clock::now()) {
    report_.suite = std::move(suite);
    report_.hypergroup = opt.hypergroup_id;
    report_.seed = opt.seed;
    report_.tolerance = opt.tolerance;
    report_.max_violation = -kInfinity;
  }

  void add(const std::string& case_name, TrialOutcome o) {
    if (o.violation > report_.max_violation) {
      report_.max_violation = o.violation;
      report_.witness_case = case_name;
      report_.witness = std::move(o.inputs);
    }
    for (auto& [k, v] : o.maxima) {
      auto it = maxima_.find(k);
      if (it == maxima_.end()) {
        maxima_[k] = v;
        order_.push_back(k);
      } else {
        it->second = std::max(it->second, v);
      }
    }
    for (auto& [k, v] : o.minima) {
      auto it = minima_.find(k);
      if (it == minima_.end()) {
        minima_[k] = v;
        order_.push_back(k);
      } else {
        it->second = std::min(it->second, v);
      }
    }
  }

  void add_all(const std::string& prefix, std::vector<TrialOutcome> outcomes) {
    for (std::size_t t = 0; t < outcomes.size(); ++t) add(prefix + "#" + std::to_string(t), std::move(outcomes[t]));
  }

  void set_detail(const std::string& key, double v) {
    if (!maxima_.count(key) && !minima_.count(key)) order_.push_back(key);
    maxima_[key] = v;
  }

  VerificationReport finish(std::size_t trials) {
    report_.trials = trials;
    for (const auto& k : order_) {
      if (auto it = maxima_.find(k); it != maxima_.end()) report_.details.emplace_back(k, it->second);
      else report_.details.emplace_back(k, minima_.at(k));
    }
    report_.passed = report_.max_violation <= report_.tolerance;
    report_.wall_time_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    return std::move(report_);
  }

 private:
  VerificationReport report_;
  std::map<std::string, double> maxima_, minima_;
  std::vector<std::string> order_;
  std::chrono::steady_clock::time_point start_;
};

double max_abs_diff(const Density& a, const Density& b) {
  double m = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) m = std::max(m, std::abs(a[k] - b[k]));
  return m;
}

Density normalized(const Hypergroup& h, Density f) {
  const double norm = lp_norm(h, f, 2.0);
  if (norm > 0.0)
    for (std::size_t k = 0; k < f.size(); ++k) f[k] /= norm;
  return f;
}

std::string exponent_name(double x) {
  if (std::isinf(x)) return "inf";
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

DualElement trivial_projection(const Spectrum& spec) {
  DualElement e = DualElement::zeros(spec);
  e[spec.trivial_index()](0, 0) = 1.0;
  return e;
}

}  // namespace

double VerificationReport::detail(const std::string& key) const {
  for (const auto& [k, v] : details)
    if (k == key) return v;
  throw PreconditionError("report has no detail '" + key + "'");
}

Density random_density(const Hypergroup& h, Rng& rng, const std::vector<std::size_t>* support) {
  std::vector<cplx> v(h.size(), 0.0);
  if (support) {
    for (std::size_t k : *support) v.at(k) = rng.complex_gaussian();
  } else {
    for (auto& x : v) x = rng.complex_gaussian();
  }
  return normalized(h, Density(std::move(v)));
}

Density random_positive_density(const Hypergroup& h, Rng& rng) {
  std::vector<cplx> v(h.size());
  for (auto& x : v) x = std::abs(rng.gaussian());
  return normalized(h, Density(std::move(v)));
}

VerificationReport verify_parseval(const Hypergroup& h, const Spectrum& spec, const VerifyOptions& opt) {
  const WeightedTrace tr(spec);
  auto check = [&](const Density& f, const Density& g) {
    const DualElement ff = fourier(h, spec, f), fg = fourier(h, spec, g);
    const cplx lhs = inner_product(h, f, g);
    const cplx rhs = tr.inner(ff, fg);
    const double norm_gap = std::abs(lp_norm(h, f, 2.0) - dual_lp_norm(ff, tr, 2.0));
    TrialOutcome o;
    o.violation = std::max(std::abs(lhs - rhs), norm_gap);
    o.inputs = {f, g};
    o.maxima = {{"max_pairing_gap", std::abs(lhs - rhs)}, {"max_norm_gap", norm_gap}};
    return o;
  };
  Aggregator agg("parseval", opt);
  const Density one = Density::constant(h.size(), 1.0);
  Density indicator = Density::constant(h.size(), 0.0);
  indicator[h.identity()] = 1.0;
  agg.add("f=g=1", check(one, one));
  agg.add("f=g=1_e", check(indicator, indicator));
  agg.add_all("random", run_trials(opt.trials, opt, 1, [&](std::size_t, Rng& rng) {
    const Density f = random_density(h, rng);
    const Density g = random_density(h, rng);
    return check(f, g);
  }));
  return agg.finish(opt.trials);
}

VerificationReport verify_riemann_lebesgue(const Hypergroup& h, const Spectrum& spec, const VerifyOptions& opt) {
  const WeightedTrace tr(spec);
  auto sides = [&](const Density& f) {
    return std::pair{dual_lp_norm(fourier(h, spec, f), tr, kInfinity), lp_norm(h, f, 1.0)};
  };
  Aggregator agg("riemann-lebesgue", opt);
  {
    const Density one = Density::constant(h.size(), 1.0);
    const auto [lhs, rhs] = sides(one);
    TrialOutcome o;
    o.violation = std::abs(lhs - rhs);
    o.inputs = {one};
    o.maxima = {{"max_positive_equality_error", o.violation}};
    agg.add("f=1", std::move(o));
  }
  agg.add_all("signed", run_trials(opt.trials, opt, 1, [&](std::size_t, Rng& rng) {
    const Density f = random_density(h, rng);
    const auto [lhs, rhs] = sides(f);
    TrialOutcome o;
    o.violation = lhs - rhs;
    o.inputs = {f};
    o.maxima = {{"max_signed_gap", lhs - rhs}};
    return o;
  }));
  agg.add_all("positive", run_trials(opt.trials, opt, 2, [&](std::size_t, Rng& rng) {
    const Density f = random_positive_density(h, rng);
    const auto [lhs, rhs] = sides(f);
    TrialOutcome o;
    o.violation = std::abs(lhs - rhs);
    o.inputs = {f};
    o.maxima = {{"max_positive_equality_error", o.violation}};
    return o;
  }));
  return agg.finish(2 * opt.trials);
}

VerificationReport verify_hausdorff_young(const Hypergroup& h, const Spectrum& spec, const VerifyOptions& opt,
                                          std::vector<double> q_grid) {
  for (double q : q_grid)
    if (!(q >= 1.0 && q <= 2.0)) throw DomainError("Hausdorff-Young exponent q must lie in [1, 2]");
  for (double endpoint : {1.0, 2.0})
    if (std::find(q_grid.begin(), q_grid.end(), endpoint) == q_grid.end()) q_grid.push_back(endpoint);
  std::sort(q_grid.begin(), q_grid.end());

  const WeightedTrace tr(spec);
  Aggregator agg("hausdorff-young", opt);
  for (std::size_t gi = 0; gi < q_grid.size(); ++gi) {
    const double q = q_grid[gi];
    const double p = (q == 1.0) ? kInfinity : q / (q - 1.0);
    const std::string key = "max_gap_q=" + exponent_name(q);
    agg.add_all("q=" + exponent_name(q), run_trials(opt.trials, opt, 10 + gi, [&](std::size_t, Rng& rng) {
      const Density f = random_density(h, rng);
      const double gap = dual_lp_norm(fourier(h, spec, f), tr, p) - lp_norm(h, f, q);
      TrialOutcome o;
      o.violation = (q == 2.0) ? std::abs(gap) : gap;
      o.inputs = {f};
      o.maxima = {{key, gap}};
      return o;
    }));
  }
  return agg.finish(opt.trials * q_grid.size());
}

VerificationReport verify_young(const Hypergroup& h, const Spectrum& spec, const VerifyOptions& opt,
                                std::vector<YoungExponents> grid) {
  (void)spec;
  auto inv = [](double x) { return std::isinf(x) ? 0.0 : 1.0 / x; };
  for (const auto& e : grid) {
    // Strict inequality reduces to the equality case: the Haar measure has mass 1, so
    // lowering p or q to meet the relation only shrinks the right-hand side.
    if (!(e.p >= 1.0 && e.q >= 1.0 && e.r >= 1.0) || inv(e.p) + inv(e.q) > inv(e.r) + 1.0 + 1e-12)
      throw DomainError("Young exponents must satisfy 1/p + 1/q <= 1/r + 1 with p, q, r >= 1");
  }
  auto has = [&](double p, double q, double r) {
    return std::any_of(grid.begin(), grid.end(), [&](const YoungExponents& e) { return e.p == p && e.q == q && e.r == r; });
  };
  if (!has(1.0, 1.0, 1.0)) grid.insert(grid.begin(), {1.0, 1.0, 1.0});
  if (!has(1.0, kInfinity, kInfinity)) grid.push_back({1.0, kInfinity, kInfinity});

  const bool commutative = h.is_commutative();
  Aggregator agg("young", opt);
  for (std::size_t gi = 0; gi < grid.size(); ++gi) {
    const auto [p, q, r] = grid[gi];
    const std::string tag = "(" + exponent_name(p) + "," + exponent_name(q) + "," + exponent_name(r) + ")";
    agg.add_all(tag, run_trials(opt.trials, opt, 20 + gi, [&](std::size_t, Rng& rng) {
      const Density f = random_density(h, rng);
      const Density g = random_density(h, rng);
      const Density fg = convolve_densities(h, f, g);
      const double lhs = lp_norm(h, fg, r);
      const double gap = lhs - lp_norm(h, f, p) * lp_norm(h, g, q);
      TrialOutcome o;
      o.violation = gap;
      o.inputs = {f, g};
      o.maxima = {{"max_gap_" + tag, gap}, {"printed_form_gap", lhs - lp_norm(h, f, p) * lp_norm(h, f, q)}};
      if (commutative) {
        const double comm = max_abs_diff(fg, convolve_densities(h, g, f));
        o.violation = std::max(o.violation, comm);
        o.maxima.emplace_back("max_commutator", comm);
      }
      return o;
    }));
  }
  agg.add_all("positive(1,1,1)", run_trials(opt.trials, opt, 30, [&](std::size_t, Rng& rng) {
    const Density f = random_positive_density(h, rng);
    const Density g = random_positive_density(h, rng);
    const double err = std::abs(lp_norm(h, convolve_densities(h, f, g), 1.0) - lp_norm(h, f, 1.0) * lp_norm(h, g, 1.0));
    TrialOutcome o;
    o.violation = err;
    o.inputs = {f, g};
    o.maxima = {{"max_positive_equality_error", err}};
    return o;
  }));
  {
    // delta_e density is the unit: ||delta_e * g||_r = ||g||_r.
    const Density unit = dirac_density(h, h.identity());
    Rng rng = Rng::substream(opt.seed, 0xFFFF);
    const Density g = random_density(h, rng);
    double err = 0.0;
    for (double r : {1.0, 2.0, kInfinity}) err = std::max(err, std::abs(lp_norm(h, convolve_densities(h, unit, g), r) - lp_norm(h, g, r)));
    TrialOutcome o;
    o.violation = err;
    o.inputs = {unit, g};
    o.maxima = {{"unit_error", err}};
    agg.add("f=delta_e", std::move(o));
  }
  return agg.finish(opt.trials * (grid.size() + 1));
}

VerificationReport verify_homomorphism(const Hypergroup& h, const Spectrum& spec, const VerifyOptions& opt) {
  Aggregator agg("homomorphism", opt);
  {
    const Density one = Density::constant(h.size(), 1.0);
    const DualElement f1 = fourier(h, spec, one);
    const double jones = f1.max_abs_diff(trivial_projection(spec));
    const double idem = fourier(h, spec, convolve_densities(h, one, one)).max_abs_diff(f1);
    TrialOutcome o;
    o.violation = std::max(jones, idem);
    o.inputs = {one};
    o.maxima = {{"unit_projection_error", jones}};
    agg.add("f=g=1", std::move(o));
  }
  agg.add_all("random", run_trials(opt.trials, opt, 1, [&](std::size_t, Rng& rng) {
    const Density f = random_density(h, rng);
    const Density g = random_density(h, rng);
    const DualElement ff = fourier(h, spec, f), fg = fourier(h, spec, g);
    const double mult = fourier(h, spec, convolve_densities(h, f, g)).max_abs_diff(ff * fg);
    const Density fs = involute_density(h, f);
    const double star = fourier(h, spec, fs).max_abs_diff(ff.adjoint());
    const double twice = fourier(h, spec, involute_density(h, fs)).max_abs_diff(ff);
    TrialOutcome o;
    o.violation = std::max({mult, star, twice});
    o.inputs = {f, g};
    o.maxima = {{"max_product_residual", mult}, {"max_adjoint_residual", star}, {"max_involutivity_residual", twice}};
    return o;
  }));
  return agg.finish(opt.trials);
}

VerificationReport verify_inversion(const Hypergroup& h, const Spectrum& spec, const VerifyOptions& opt) {
  auto check = [&](const Density& f) {
    const DualElement x = fourier(h, spec, f);
    const Density series = inverse_fourier_series(h, spec, x);
    const Density solved = inverse_fourier(h, spec, x);
    const double series_err = max_abs_diff(series, f);
    const double solve_err = max_abs_diff(solved, f);
    const double paths = max_abs_diff(series, solved);
    TrialOutcome o;
    o.violation = std::max({series_err, solve_err, paths});
    o.inputs = {f};
    o.maxima = {{"max_series_error", series_err}, {"max_solve_error", solve_err}, {"max_path_disagreement", paths}};
    return o;
  };
  VerifyOptions local = opt;
  if (local.tolerance < kInversionTolerance) local.tolerance = kInversionTolerance;
  Aggregator agg("inversion", local);
  agg.add("f=1", check(Density::constant(h.size(), 1.0)));
  agg.add("f=delta_e", check(dirac_density(h, h.identity())));
  agg.add_all("random", run_trials(opt.trials, opt, 1, [&](std::size_t, Rng& rng) { return check(random_density(h, rng)); }));
  return agg.finish(opt.trials);
}

double donoho_stark_product(const Hypergroup& h, const Spectrum& spec, const Density& f) {
  const auto supp = density_support(f);
  double measure = 0.0;
  for (std::size_t k : supp) measure += h.haar()[k];
  const DualSupport ds = dual_support(fourier(h, spec, f));
  double weighted_rank = 0.0;
  for (std::size_t i : ds.irreps) weighted_rank += spec.irreps[i].hyperdimension * static_cast<double>(ds.ranks[i]);
  return measure * weighted_rank;
}

VerificationReport verify_donoho_stark(const Hypergroup& h, const Spectrum& spec, const VerifyOptions& opt,
                                       std::vector<std::size_t> sparsity_schedule) {
  const std::size_t n = h.size();
  for (std::size_t s : sparsity_schedule)
    if (s == 0 || s > n) throw DomainError("support sizes in the sparsity schedule must lie in [1, |K|]");

  auto outcome = [&](const Density& f, const char* key) {
    const double prod = donoho_stark_product(h, spec, f);
    TrialOutcome o;
    o.violation = 1.0 - prod;
    o.inputs = {f};
    o.minima = {{"min_product", prod}};
    if (key) o.maxima = {{key, prod}};
    return o;
  };
  Aggregator agg("donoho-stark", opt);
  agg.add("f=1", outcome(Density::constant(n, 1.0), "product_f_one"));
  agg.add("f=delta_e", outcome(dirac_density(h, h.identity()), "product_delta_e"));
  agg.add_all("sparse", run_trials(opt.trials, opt, 1, [&](std::size_t t, Rng& rng) {
    const std::size_t s = sparsity_schedule.empty() ? 1 + t % n : sparsity_schedule[t % sparsity_schedule.size()];
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    for (std::size_t i = 0; i < s; ++i) std::swap(idx[i], idx[i + rng.below(n - i)]);
    std::vector<std::size_t> support(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(s));
    std::sort(support.begin(), support.end());
    return outcome(random_density(h, rng, &support), nullptr);
  }));
  return agg.finish(opt.trials);
}

VerificationReport run_suite(const std::string& name, const Hypergroup& h, const Spectrum& spec, const VerifyOptions& opt) {
  if (name == "parseval") return verify_parseval(h, spec, opt);
  if (name == "riemann-lebesgue") return verify_riemann_lebesgue(h, spec, opt);
  if (name == "hausdorff-young") return verify_hausdorff_young(h, spec, opt);
  if (name == "young") return verify_young(h, spec, opt);
  if (name == "homomorphism") return verify_homomorphism(h, spec, opt);
  if (name == "inversion") return verify_inversion(h, spec, opt);
  if (name == "donoho-stark") {
    VerifyOptions ds = opt;
    ds.trials = opt.trials * 10;
    return verify_donoho_stark(h, spec, ds);
  }
  throw UsageError("unknown verification suite '" + name + "'");
}

}  // namespace hf
