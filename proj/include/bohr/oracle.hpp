#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "bohr/errors.hpp"
#include "bohr/extremal.hpp"
#include "bohr/psi_catalog.hpp"
#include "bohr/radius.hpp"
#include "bohr/series.hpp"

namespace bohr {

/// Real-zero Blaschke-type Schwarz function
///   w(z) = sign * z * prod_j (z - a_j)/(1 - a_j z),   |a_j| < 1.
/// Degree 0 is the rotation w(z) = sign * z.
struct SchwarzSample {
  std::vector<double> zeros;
  int sign = 1;

  int degree() const noexcept { return static_cast<int>(zeros.size()); }
  bool is_rotation() const noexcept { return zeros.empty(); }

  static SchwarzSample identity() { return {}; }
};

inline void to_json(nlohmann::json& j, const SchwarzSample& s) {
  j = nlohmann::json{{"zeros", s.zeros}, {"sign", s.sign}};
}

/// Draws a degree uniformly from [0, degree_max], zeros uniformly from
/// (-0.95, 0.95) and the sign uniformly from {-1, +1}.
inline SchwarzSample sample_schwarz(std::mt19937_64& rng, int degree_max) {
  if (degree_max < 0) throw contract_error("sample_schwarz: degree_max must be >= 0");
  std::uniform_int_distribution<int> degree(0, degree_max);
  std::uniform_real_distribution<double> zero(-0.95, 0.95);
  std::bernoulli_distribution flip(0.5);
  SchwarzSample s;
  const int d = degree(rng);
  for (int j = 0; j < d; ++j) s.zeros.push_back(zero(rng));
  s.sign = flip(rng) ? -1 : 1;
  return s;
}

inline SchwarzSample sample_schwarz(std::uint64_t seed, int degree_max) {
  std::mt19937_64 rng(seed);
  return sample_schwarz(rng, degree_max);
}

/// Taylor coefficients of the sample; each factor (z - a)/(1 - a z) expands
/// as -a + sum_{n>=1} a^{n-1}(1 - a^2) z^n.
inline TruncatedSeries schwarz_series(const SchwarzSample& s, int order) {
  TruncatedSeries w = TruncatedSeries::monomial(static_cast<double>(s.sign), 1, order);
  for (double a : s.zeros) {
    if (!(std::abs(a) < 1.0)) throw contract_error("schwarz_series: zeros must satisfy |a| < 1");
    std::vector<double> factor(static_cast<std::size_t>(order) + 1, 0.0);
    factor[0] = -a;
    double p = 1.0 - a * a;
    for (int n = 1; n <= order; ++n, p *= a) factor[static_cast<std::size_t>(n)] = p;
    w = mul(w, TruncatedSeries(std::move(factor)));
  }
  return w;
}

/// Bohr operator M_r^N(f) = sum_{n>=N} |a_n| r^n over the stored coefficients.
inline double bohr_operator(const TruncatedSeries& f, int N, double r) {
  return eval_abs_from(f, N, r);
}

/// Outcome of one inequality check: margin = rhs - lhs, accepted when
/// margin >= -tolerance.
struct Margin {
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
  double tolerance = 0.0;

  bool ok() const noexcept { return margin >= -tolerance; }
};

namespace detail {

inline Margin make_margin(double lhs, double rhs, double tolerance) {
  return Margin{lhs, rhs, rhs - lhs, tolerance};
}

inline constexpr double kRelTolerance = 1e-9;

inline void require_tail_radius(double r, double limit, const char* what) {
  if (!(r >= 0.0 && r <= limit * (1.0 + 1e-15))) {
    throw domain_error(std::string(what) + ": r must lie in [0, " + std::to_string(limit) + "]");
  }
}

}  // namespace detail

/// Tail inequality for g = f o w with a precomputed composition:
///   M_r^N(g) <= M_r^N(f),  0 <= r <= 1/3.
inline Margin verify_tail_inequality(const TruncatedSeries& f, const TruncatedSeries& composed,
                                     int N, double r) {
  detail::require_tail_radius(r, 1.0 / 3.0, "verify_tail_inequality");
  const double rhs = bohr_operator(f, N, r);
  const double lhs = bohr_operator(composed, N, r);
  return detail::make_margin(lhs, rhs, detail::kRelTolerance * rhs + f.tail_bound(r));
}

inline Margin verify_tail_inequality(const TruncatedSeries& f, const SchwarzSample& s, int N,
                                     double r) {
  return verify_tail_inequality(f, compose(f, schwarz_series(s, f.order())), N, r);
}

struct AxiomMargin {
  std::string axiom;
  int N = 0;
  double margin = 0.0;
  bool ok = true;
};

struct AxiomReport {
  std::vector<AxiomMargin> axioms;

  bool all_ok() const {
    return std::all_of(axioms.begin(), axioms.end(), [](const AxiomMargin& a) { return a.ok; });
  }
  const AxiomMargin& at(const std::string& name) const {
    for (const auto& a : axioms) {
      if (a.axiom == name) return a;
    }
    throw contract_error("AxiomReport: no axiom " + name);
  }
};

inline constexpr double kAxiomTolerance = 1e-12;

/// Margins of the Bohr-operator properties at (N, r):
///   (i)   M >= 0, and M(f) = 0 exactly when f vanishes on the window n >= N
///   (ii)  M(f+g) <= M(f) + M(g)
///   (iii) M(alpha f) = |alpha| M(f)
///   (iv)  M(f g) <= M(f) M(g)
///   (v)   M(1) = 1
/// Equalities report -|difference| (relative to max(1, value)).
inline AxiomReport verify_bohr_operator_axioms(const TruncatedSeries& f, const TruncatedSeries& g,
                                               double alpha, int N, double r) {
  if (!(r >= 0.0 && r < 1.0)) throw domain_error("verify_bohr_operator_axioms: r must lie in [0, 1)");
  const int k = f.order();
  auto m = [&](const TruncatedSeries& s) { return bohr_operator(s, N, r); };
  auto window_zero = [&](const TruncatedSeries& s) {
    for (int n = N; n <= s.order(); ++n) {
      if (s[n] != 0.0) return false;
    }
    return true;
  };
  auto entry = [&](std::string name, double margin) {
    return AxiomMargin{std::move(name), N, margin, margin >= -kAxiomTolerance};
  };

  AxiomReport report;
  const double mf = m(f);
  const double mg = m(g);

  const bool definite = (mf == 0.0) == window_zero(f) && (mg == 0.0) == window_zero(g) &&
                        m(TruncatedSeries(k)) == 0.0;
  report.axioms.push_back(entry("i", definite ? std::min(mf, mg) : -1.0));
  report.axioms.push_back(entry("ii", mf + mg - m(add(f, g))));
  const double scaled = m(scale(f, alpha));
  report.axioms.push_back(
      entry("iii", -std::abs(scaled - std::abs(alpha) * mf) / std::max(1.0, scaled)));
  report.axioms.push_back(entry("iv", mf * mg - m(mul(f, g))));
  const double one = m(TruncatedSeries::constant(1.0, k));
  report.axioms.push_back(entry("v", -std::abs(one - 1.0)));
  return report;
}

/// Weighted tail inequality for g = h * (f o w) with sum |h_n| tau^n <= tau:
///   M_r^N(g) <= tau M_r^N(f),  0 <= r <= tau/3.
inline Margin verify_weighted(double tau, const TruncatedSeries& f, const SchwarzSample& s,
                              const TruncatedSeries& h, int N, double r) {
  if (!(tau > 0.0 && tau <= 1.0)) throw contract_error("verify_weighted: tau must lie in (0, 1]");
  detail::require_tail_radius(r, tau / 3.0, "verify_weighted");
  double h_major = 0.0;
  for (int n = h.order(); n >= 0; --n) h_major = h_major * tau + std::abs(h[n]);
  if (h_major > tau * (1.0 + 1e-15)) {
    throw contract_error("verify_weighted: weight exceeds tau on |z| = tau");
  }
  const TruncatedSeries g = mul(h, compose(f, schwarz_series(s, f.order())));
  const double rhs = tau * bohr_operator(f, N, r);
  const double lhs = bohr_operator(g, N, r);
  return detail::make_margin(lhs, rhs, detail::kRelTolerance * rhs + f.tail_bound(r));
}

/// Bohr-Rogosinski sum for g = (f0 or l0) o w against r*:
///   |g(z^m)| + M_r^N(g) <= r*,
/// with |g(z^m)| bounded by the majorant sum at r^m. Intended for r <= rb.
inline Margin verify_br_inequality(const RadiusProblem& problem, const ExtremalPair& extremal,
                                   const SchwarzSample& s, double r) {
  if (!(r >= 0.0 && r < 1.0)) throw domain_error("verify_br_inequality: r must lie in [0, 1)");
  const TruncatedSeries& f = extremal.series(problem.family);
  const TruncatedSeries g = compose(f, schwarz_series(s, f.order()));
  const double koebe = extremal.koebe(problem.family);
  double lhs = bohr_operator(g, problem.effective_N(), r);
  if (problem.mode == Mode::BohrRogosinski) lhs += eval_abs(g, std::pow(r, problem.m));
  return detail::make_margin(lhs, koebe, detail::kRelTolerance * koebe + f.tail_bound(r));
}

/// Failing check recorded by a Monte-Carlo run.
struct Counterexample {
  std::string psi;
  int trial = 0;
  SchwarzSample sample;
  int N = 0;
  double r = 0.0;
  Margin margin;
};

struct VerificationReport {
  std::uint64_t seed = 0;
  int trials = 0;
  long checks = 0;
  int violations = 0;
  double worst_margin = std::numeric_limits<double>::infinity();
  nlohmann::json config = nlohmann::json::object();
  std::vector<Counterexample> counterexamples;  // first few, in run order

  bool passed() const noexcept { return violations == 0; }

  void record(const std::string& psi, int trial, const SchwarzSample& s, int N, double r,
              const Margin& m) {
    ++checks;
    worst_margin = std::min(worst_margin, m.margin);
    if (!m.ok()) {
      ++violations;
      if (counterexamples.size() < kMaxCounterexamples) {
        counterexamples.push_back({psi, trial, s, N, r, m});
      }
    }
  }

  static constexpr std::size_t kMaxCounterexamples = 8;
};

struct TailRunConfig {
  std::uint64_t seed = 7;
  int trials = 1000;
  int degree_max = 3;
  int order = kDefaultOrder;
  Family family = Family::Starlike;
  std::vector<PsiSpec> psis = default_catalog();
  std::vector<int> Ns = {1, 2, 3};
  std::vector<double> radii = {0.1, 0.25, 1.0 / 3.0};
};

namespace detail {

inline std::vector<std::string> names(const std::vector<PsiSpec>& psis) {
  std::vector<std::string> out;
  for (const auto& p : psis) out.push_back(p.name());
  return out;
}

inline std::vector<SchwarzSample> draw_samples(std::uint64_t seed, int trials, int degree_max) {
  std::mt19937_64 rng(seed);
  std::vector<SchwarzSample> out;
  out.reserve(static_cast<std::size_t>(trials));
  for (int i = 0; i < trials; ++i) out.push_back(sample_schwarz(rng, degree_max));
  return out;
}

}  // namespace detail

/// Subordination tail inequality over seeded samples, catalog extremals, N and r.
inline VerificationReport run_tail_inequality(const TailRunConfig& cfg) {
  if (cfg.trials < 1) throw config_error("verify: trials must be >= 1");
  VerificationReport report;
  report.seed = cfg.seed;
  report.trials = cfg.trials;
  report.config = {{"check", "tail-inequality"}, {"psi", detail::names(cfg.psis)},
                   {"family", to_string(cfg.family)}, {"N", cfg.Ns},
                   {"r", cfg.radii},          {"order", cfg.order},
                   {"degree_max", cfg.degree_max}};
  const auto samples = detail::draw_samples(cfg.seed, cfg.trials, cfg.degree_max);
  for (const auto& psi : cfg.psis) {
    const TruncatedSeries f0 = build_f0(psi, cfg.order);
    const TruncatedSeries f = cfg.family == Family::Starlike ? f0 : build_l0(f0);
    for (int t = 0; t < cfg.trials; ++t) {
      const auto& s = samples[static_cast<std::size_t>(t)];
      const TruncatedSeries g = compose(f, schwarz_series(s, cfg.order));
      for (int N : cfg.Ns) {
        for (double r : cfg.radii) report.record(psi.name(), t, s, N, r, verify_tail_inequality(f, g, N, r));
      }
    }
  }
  return report;
}

struct WeightedRunConfig {
  std::uint64_t seed = 7;
  int trials = 500;
  int degree_max = 3;
  int order = kDefaultOrder;
  double tau = 0.8;
  std::vector<PsiSpec> psis = default_catalog();
  std::vector<int> Ns = {1};
};

/// Weighted inequality with h(z) = tau (1 + z)/2 at r = tau/3.
inline VerificationReport run_weighted(const WeightedRunConfig& cfg) {
  if (cfg.trials < 1) throw config_error("verify: trials must be >= 1");
  if (!(cfg.tau > 0.0 && cfg.tau <= 1.0)) throw config_error("verify: tau must lie in (0, 1]");
  VerificationReport report;
  report.seed = cfg.seed;
  report.trials = cfg.trials;
  report.config = {{"check", "weighted"}, {"psi", detail::names(cfg.psis)}, {"tau", cfg.tau},
                   {"weight", "tau*(1+z)/2"}, {"N", cfg.Ns}, {"r", cfg.tau / 3.0},
                   {"order", cfg.order}, {"degree_max", cfg.degree_max}};
  const TruncatedSeries h({cfg.tau / 2.0, cfg.tau / 2.0}, cfg.order);
  const double r = cfg.tau / 3.0;
  const auto samples = detail::draw_samples(cfg.seed, cfg.trials, cfg.degree_max);
  for (const auto& psi : cfg.psis) {
    const TruncatedSeries f = build_f0(psi, cfg.order);
    for (int t = 0; t < cfg.trials; ++t) {
      const auto& s = samples[static_cast<std::size_t>(t)];
      for (int N : cfg.Ns) report.record(psi.name(), t, s, N, r, verify_weighted(cfg.tau, f, s, h, N, r));
    }
  }
  return report;
}

struct BrRunConfig {
  std::uint64_t seed = 7;
  int trials = 200;
  int degree_max = 3;
  int order = kDefaultOrder;
  Family family = Family::Starlike;
  int m = 1;
  int N = 1;
  Mode mode = Mode::BohrRogosinski;
  std::vector<PsiSpec> psis = default_catalog();
  std::vector<double> fractions = {0.25, 0.5, 0.75, 1.0};  // of min(rb, 1/3)
};

/// Bohr-Rogosinski inequality for subordinants of the extremal function at
/// radii up to min(rb, 1/3).
inline VerificationReport run_br_inequality(const BrRunConfig& cfg) {
  if (cfg.trials < 1) throw config_error("verify: trials must be >= 1");
  VerificationReport report;
  report.seed = cfg.seed;
  report.trials = cfg.trials;
  report.config = {{"check", "bohr-rogosinski"}, {"psi", detail::names(cfg.psis)},
                   {"family", to_string(cfg.family)}, {"m", cfg.m}, {"N", cfg.N},
                   {"mode", to_string(cfg.mode)}, {"order", cfg.order},
                   {"degree_max", cfg.degree_max}, {"fractions", cfg.fractions}};
  const auto samples = detail::draw_samples(cfg.seed, cfg.trials, cfg.degree_max);
  for (const auto& psi : cfg.psis) {
    RadiusProblem problem{psi, cfg.family, cfg.m, cfg.N, cfg.mode, cfg.order};
    const ExtremalPair extremal = build_extremal(psi, cfg.order);
    const double limit = std::min(solve(problem, extremal).rb, 1.0 / 3.0);
    for (int t = 0; t < cfg.trials; ++t) {
      const auto& s = samples[static_cast<std::size_t>(t)];
      for (double frac : cfg.fractions) {
        const double r = frac * limit;
        report.record(psi.name(), t, s, problem.effective_N(), r,
                      verify_br_inequality(problem, extremal, s, r));
      }
    }
  }
  return report;
}

struct AxiomRunConfig {
  std::uint64_t seed = 7;
  int trials = 200;
  int order = 16;
  std::vector<int> Ns = {0, 1, 3};
  std::vector<double> radii = {0.2, 1.0 / 3.0, 0.5};
};

/// Per-(axiom, N) tally of a randomized axiom run.
struct AxiomTally {
  std::string axiom;
  int N = 0;
  long checks = 0;
  int violations = 0;
  double worst_margin = std::numeric_limits<double>::infinity();
  bool gated = true;  // expected to hold; ungated entries are reported only
};

struct AxiomRunReport {
  std::uint64_t seed = 0;
  int trials = 0;
  std::vector<AxiomTally> tallies;

  /// Violations among the gated (axiom, N) pairs.
  int gated_violations() const {
    int v = 0;
    for (const auto& t : tallies) v += t.gated ? t.violations : 0;
    return v;
  }
  const AxiomTally& at(const std::string& axiom, int N) const {
    for (const auto& t : tallies) {
      if (t.axiom == axiom && t.N == N) return t;
    }
    throw contract_error("AxiomRunReport: no tally for " + axiom);
  }
};

/// Every axiom is gated at every N except submultiplicativity (iv), which is
/// gated at N = 0 only. (v) is gated everywhere although M^N(1) = 0 for
/// N >= 1, so a run with such N reports it as violated.
inline bool axiom_gated(const std::string& axiom, int N) { return N == 0 || axiom != "iv"; }

/// Random coefficient pairs in [-1, 1]; every tenth pair has f vanishing on the
/// window so that definiteness is exercised in both directions.
inline AxiomRunReport run_bohr_operator_axioms(const AxiomRunConfig& cfg) {
  if (cfg.trials < 1) throw config_error("verify: trials must be >= 1");
  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  std::uniform_real_distribution<double> weight(-3.0, 3.0);
  AxiomRunReport report;
  report.seed = cfg.seed;
  report.trials = cfg.trials;
  for (int N : cfg.Ns) {
    for (const char* name : {"i", "ii", "iii", "iv", "v"}) {
      report.tallies.push_back({name, N, 0, 0, std::numeric_limits<double>::infinity(),
                                axiom_gated(name, N)});
    }
  }
  auto random_series = [&] {
    std::vector<double> c(static_cast<std::size_t>(cfg.order) + 1);
    for (double& x : c) x = coeff(rng);
    return c;
  };
  for (int t = 0; t < cfg.trials; ++t) {
    auto fc = random_series();
    const auto gc = random_series();
    const double alpha = weight(rng);
    for (int N : cfg.Ns) {
      auto f_coeffs = fc;
      if (t % 10 == 9) {
        for (std::size_t n = static_cast<std::size_t>(N); n < f_coeffs.size(); ++n) f_coeffs[n] = 0.0;
      }
      const TruncatedSeries f(std::move(f_coeffs));
      const TruncatedSeries g(gc);
      for (double r : cfg.radii) {
        const AxiomReport rep = verify_bohr_operator_axioms(f, g, alpha, N, r);
        for (const auto& a : rep.axioms) {
          for (auto& tally : report.tallies) {
            if (tally.axiom != a.axiom || tally.N != N) continue;
            ++tally.checks;
            tally.worst_margin = std::min(tally.worst_margin, a.margin);
            if (!a.ok) ++tally.violations;
          }
        }
      }
    }
  }
  return report;
}

/// f = g = z with N = 2: M(fg) = r^2 while M(f) M(g) = 0.
inline Margin submultiplicativity_counterexample(double r, int order = kDefaultOrder) {
  const TruncatedSeries z = TruncatedSeries::identity(order);
  const double lhs = bohr_operator(mul(z, z), 2, r);
  const double rhs = bohr_operator(z, 2, r) * bohr_operator(z, 2, r);
  return detail::make_margin(lhs, rhs, kAxiomTolerance);
}

inline void to_json(nlohmann::json& j, const AxiomTally& t) {
  j = nlohmann::json{{"axiom", t.axiom},           {"N", t.N},
                     {"checks", t.checks},         {"violations", t.violations},
                     {"worst_margin", t.worst_margin}, {"gated", t.gated}};
}

inline void to_json(nlohmann::json& j, const Margin& m) {
  j = nlohmann::json{{"lhs", m.lhs}, {"rhs", m.rhs}, {"margin", m.margin}, {"tolerance", m.tolerance}};
}

inline void to_json(nlohmann::json& j, const Counterexample& c) {
  j = nlohmann::json{{"psi", c.psi}, {"trial", c.trial}, {"sample", c.sample},
                     {"N", c.N},     {"r", c.r},         {"margin", c.margin}};
}

inline void to_json(nlohmann::json& j, const VerificationReport& r) {
  j = nlohmann::json{{"seed", r.seed},
                     {"trials", r.trials},
                     {"checks", r.checks},
                     {"violations", r.violations},
                     {"worst_margin", r.checks == 0 ? 0.0 : r.worst_margin},
                     {"config", r.config}};
  if (!r.counterexamples.empty()) j["counterexamples"] = r.counterexamples;
}

}  // namespace bohr
