#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <map>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bohr/errors.hpp"
#include "bohr/series.hpp"

namespace bohr {

/// Sine integral Si(x) = sum_{n>=0} (-1)^n x^{2n+1} / ((2n+1)(2n+1)!),
/// summed until the next term drops below 1e-17. Defined here for |x| <= 1.
inline double si(double x) {
  if (!(std::abs(x) <= 1.0)) throw domain_error("si: |x| must be <= 1");
  double power_over_fact = x;  // x^{2n+1} / (2n+1)!
  double sum = 0.0;
  for (int n = 0; n < 64; ++n) {
    const int odd = 2 * n + 1;
    const double term = power_over_fact / odd;
    if (std::abs(term) < 1e-17) break;
    sum += term;
    power_over_fact *= -x * x / ((odd + 1.0) * (odd + 2.0));
  }
  return sum;
}

/// Bell numbers B_0..B_{n_max} from B_{n+1} = sum_k C(n,k) B_k.
/// Throws std::overflow_error once a value leaves uint64 (n_max > 25).
inline std::vector<std::uint64_t> bell_numbers(int n_max) {
  if (n_max < 0) throw contract_error("bell_numbers: n_max must be >= 0");
  std::vector<std::uint64_t> bell{1};
  std::vector<std::uint64_t> binom{1};  // row n of Pascal's triangle
  for (int n = 0; n < n_max; ++n) {
    std::uint64_t next = 0;
    for (int k = 0; k <= n; ++k) {
      std::uint64_t term = 0;
      if (__builtin_mul_overflow(binom[static_cast<std::size_t>(k)],
                                 bell[static_cast<std::size_t>(k)], &term) ||
          __builtin_add_overflow(next, term, &next)) {
        throw std::overflow_error("bell_numbers: B_" + std::to_string(n + 1) +
                                  " exceeds 64-bit range");
      }
    }
    bell.push_back(next);
    std::vector<std::uint64_t> row(binom.size() + 1, 1);
    for (std::size_t k = 1; k < binom.size(); ++k) row[k] = binom[k - 1] + binom[k];
    binom = std::move(row);
  }
  return bell;
}

namespace detail {

inline void check_janowski(double d, double e) {
  if (!(e >= -1.0 && e < d && d <= 1.0)) {
    throw config_error("janowski: requires -1 <= E < D <= 1");
  }
}

inline std::string fmt_g(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

}  // namespace detail

/// Sharp coefficient bound for the Janowski class S[D,E]:
/// prod_{k=0}^{n-2} |E - D + E k| / (k + 1).
inline double janowski_coeff_bound(double d, double e, int n) {
  detail::check_janowski(d, e);
  if (n < 2) throw contract_error("janowski_coeff_bound: n must be >= 2");
  double prod = 1.0;
  for (int k = 0; k <= n - 2; ++k) prod *= std::abs(e - d + e * k) / (k + 1);
  return prod;
}

enum class PsiKind {
  Janowski,
  Cardioid,
  ZExpZ,
  Booth,
  Sine,
  StarlikeAlpha,
  ClassicalStarlike,
  ClassicalConvex,
  Custom,
};

struct PsiParams {
  double D = 0.0;
  double E = 0.0;
  double alpha = 0.0;
  double k = 0.0;
};

/// A Ma-Minda function psi: Taylor data, optional closed forms, and the
/// constants known for it. Parameters are validated on construction.
class PsiSpec {
 public:
  static PsiSpec janowski(double d, double e) {
    detail::check_janowski(d, e);
    PsiSpec s(PsiKind::Janowski);
    s.params_.D = d;
    s.params_.E = e;
    s.name_ = "janowski:D=" + detail::fmt_g(d) + ",E=" + detail::fmt_g(e);
    return s;
  }

  static PsiSpec cardioid() {
    PsiSpec s(PsiKind::Cardioid);
    s.name_ = "cardioid";
    return s;
  }

  static PsiSpec zexpz() {
    PsiSpec s(PsiKind::ZExpZ);
    s.name_ = "zexpz";
    return s;
  }

  /// psi(z) = 1 + (z/k)(k+z)/(k-z); the catalog default is k = sqrt(2) + 1.
  static PsiSpec booth(double k = std::numbers::sqrt2 + 1.0) {
    if (!(k > 1.0)) throw config_error("booth: requires k > 1");
    PsiSpec s(PsiKind::Booth);
    s.params_.k = k;
    s.name_ = std::abs(k - (std::numbers::sqrt2 + 1.0)) < 1e-15 ? "booth"
                                                                   : "booth:k=" + detail::fmt_g(k);
    return s;
  }

  static PsiSpec sine() {
    PsiSpec s(PsiKind::Sine);
    s.name_ = "sine";
    return s;
  }

  /// Starlike of order alpha: Janowski(1 - 2 alpha, -1).
  static PsiSpec starlike_alpha(double alpha) {
    if (!(alpha >= 0.0 && alpha < 1.0)) throw config_error("alpha: requires 0 <= alpha < 1");
    PsiSpec s(PsiKind::StarlikeAlpha);
    s.params_.alpha = alpha;
    s.params_.D = 1.0 - 2.0 * alpha;
    s.params_.E = -1.0;
    s.name_ = "alpha:" + detail::fmt_g(alpha);
    return s;
  }

  /// (1+z)/(1-z): the classes S* and C.
  static PsiSpec classical_starlike() {
    PsiSpec s(PsiKind::ClassicalStarlike);
    s.params_.D = 1.0;
    s.params_.E = -1.0;
    s.name_ = "classical-starlike";
    return s;
  }

  /// Same generator as classical_starlike(); named for use with the convex family.
  static PsiSpec classical_convex() {
    PsiSpec s(PsiKind::ClassicalConvex);
    s.params_.D = 1.0;
    s.params_.E = -1.0;
    s.name_ = "classical-convex";
    return s;
  }

  /// psi from a coefficient list (c_0 = 1, c_1 > 0). Quadrature treats the
  /// list as the whole series, so it must converge on [-1, 0].
  static PsiSpec custom(std::vector<double> coeffs, std::string name = "custom") {
    if (coeffs.size() < 2) throw config_error("custom psi: need at least c_0 and c_1");
    if (coeffs[0] != 1.0) throw config_error("custom psi: psi(0) must be 1");
    if (!(coeffs[1] > 0.0)) throw config_error("custom psi: psi'(0) must be positive");
    for (double c : coeffs) {
      if (!std::isfinite(c)) throw config_error("custom psi: non-finite coefficient");
    }
    PsiSpec s(PsiKind::Custom);
    s.custom_ = std::move(coeffs);
    s.name_ = std::move(name);
    return s;
  }

  PsiKind kind() const noexcept { return kind_; }
  const std::string& name() const noexcept { return name_; }
  const PsiParams& params() const noexcept { return params_; }

  bool is_janowski_family() const noexcept {
    return kind_ == PsiKind::Janowski || kind_ == PsiKind::StarlikeAlpha ||
           kind_ == PsiKind::ClassicalStarlike || kind_ == PsiKind::ClassicalConvex;
  }

  /// Entries whose corollaries use exact coefficient bounds report rb = r0
  /// (no 1/3 clamp).
  bool exact_coefficient_bounds() const noexcept { return is_janowski_family(); }

  /// Taylor coefficients c_0..c_K of psi.
  TruncatedSeries coefficients(int order) const {
    TruncatedSeries zero(order);  // validates order
    std::vector<double> c(static_cast<std::size_t>(order) + 1, 0.0);
    c[0] = 1.0;
    auto at = [&](int n) -> double& { return c[static_cast<std::size_t>(n)]; };
    switch (kind_) {
      case PsiKind::Janowski:
      case PsiKind::StarlikeAlpha:
      case PsiKind::ClassicalStarlike:
      case PsiKind::ClassicalConvex: {
        // (1 + D z)/(1 + E z) = 1 + (D - E) sum_{n>=1} (-E)^{n-1} z^n
        double p = params_.D - params_.E;
        for (int n = 1; n <= order; ++n, p *= -params_.E) at(n) = p;
        break;
      }
      case PsiKind::Cardioid:
        at(1) = 4.0 / 3.0;
        if (order >= 2) at(2) = 2.0 / 3.0;
        break;
      case PsiKind::ZExpZ: {
        double inv_fact = 1.0;  // 1/(n-1)!
        for (int n = 1; n <= order; ++n) {
          at(n) = inv_fact;
          inv_fact /= n;
        }
        break;
      }
      case PsiKind::Booth: {
        // (z/k)(1 + 2 sum_{n>=1} (z/k)^n)
        const double k = params_.k;
        at(1) = 1.0 / k;
        double p = 1.0 / (k * k);
        for (int n = 2; n <= order; ++n, p /= k) at(n) = 2.0 * p;
        break;
      }
      case PsiKind::Sine: {
        double inv_fact = 1.0;
        for (int n = 1; n <= order; ++n) {
          inv_fact /= (n == 1 ? 1.0 : n);
          if (n % 2 == 1) at(n) = ((n / 2) % 2 == 0 ? 1.0 : -1.0) * inv_fact;
        }
        break;
      }
      case PsiKind::Custom:
        for (std::size_t n = 1; n < custom_.size() && n <= c.size() - 1; ++n) c[n] = custom_[n];
        break;
    }
    return TruncatedSeries(std::move(c));
  }

  bool has_psi_closed() const noexcept { return kind_ != PsiKind::Custom; }

  /// psi(t) for real t in [-1, 1). Custom entries sum their coefficient list.
  double psi_at(double t) const {
    const double d = params_.D;
    const double e = params_.E;
    switch (kind_) {
      case PsiKind::Janowski:
      case PsiKind::StarlikeAlpha:
      case PsiKind::ClassicalStarlike:
      case PsiKind::ClassicalConvex:
        return (1.0 + d * t) / (1.0 + e * t);
      case PsiKind::Cardioid:
        return 1.0 + 4.0 * t / 3.0 + 2.0 * t * t / 3.0;
      case PsiKind::ZExpZ:
        return 1.0 + t * std::exp(t);
      case PsiKind::Booth: {
        const double k = params_.k;
        return 1.0 + (t / k) * (k + t) / (k - t);
      }
      case PsiKind::Sine:
        return 1.0 + std::sin(t);
      case PsiKind::Custom: {
        double acc = 0.0;
        for (auto it = custom_.rbegin(); it != custom_.rend(); ++it) acc = acc * t + *it;
        return acc;
      }
    }
    return 0.0;
  }

  bool has_f0_closed() const noexcept { return kind_ != PsiKind::Custom; }

  /// Closed-form extremal function f0 at real r, as printed for each class.
  /// For Booth this is (r/e^r)(k/(k-r))^{2k}.
  double f0_closed(double r) const {
    if (!has_f0_closed()) throw unsupported_error("f0_closed: no closed form for " + name_);
    if (!(std::abs(r) <= 1.0)) throw domain_error("f0_closed: |r| must be <= 1");
    double v = 0.0;
    switch (kind_) {
      case PsiKind::Janowski:
      case PsiKind::StarlikeAlpha:
      case PsiKind::ClassicalStarlike:
      case PsiKind::ClassicalConvex: {
        const double d = params_.D;
        const double e = params_.E;
        v = e == 0.0 ? r * std::exp(d * r) : r * std::pow(1.0 + e * r, (d - e) / e);
        break;
      }
      case PsiKind::Cardioid:
        v = r * std::exp(4.0 * r / 3.0 + r * r / 3.0);
        break;
      case PsiKind::ZExpZ:
        v = r * std::exp(std::expm1(r));
        break;
      case PsiKind::Booth: {
        const double k = params_.k;
        v = r * std::exp(-r) * std::pow(k / (k - r), 2.0 * k);
        break;
      }
      case PsiKind::Sine:
        v = r * std::exp(si(r));
        break;
      case PsiKind::Custom:
        break;
    }
    if (!std::isfinite(v)) throw domain_error("f0_closed: singular at r = " + detail::fmt_g(r));
    return v;
  }

  /// Starlike Koebe radius -f0(-1) where a closed value is known.
  std::optional<double> koebe_closed() const {
    switch (kind_) {
      case PsiKind::Janowski:
      case PsiKind::ClassicalStarlike:
      case PsiKind::ClassicalConvex: {
        const double d = params_.D;
        const double e = params_.E;
        return e == 0.0 ? std::exp(-d) : std::pow(1.0 - e, (d - e) / e);
      }
      case PsiKind::StarlikeAlpha:
        return std::pow(4.0, -(1.0 - params_.alpha));
      case PsiKind::Cardioid:
        return std::exp(-1.0);
      case PsiKind::ZExpZ:
        return std::exp(std::exp(-1.0) - 1.0);
      case PsiKind::Sine:
        return std::exp(si(-1.0));
      case PsiKind::Booth:  // printed constant belongs to a different psi; use quadrature
      case PsiKind::Custom:
        return std::nullopt;
    }
    return std::nullopt;
  }

 private:
  explicit PsiSpec(PsiKind kind) : kind_(kind) {}

  PsiKind kind_;
  PsiParams params_;
  std::string name_;
  std::vector<double> custom_;
};

inline TruncatedSeries get_psi(const PsiSpec& psi, int order) { return psi.coefficients(order); }

inline double f0_closed_eval(const PsiSpec& psi, double r) { return psi.f0_closed(r); }

namespace detail {

inline double parse_number(std::string_view text, std::string_view what) {
  std::string s(text);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw config_error("psi id: bad number for " + std::string(what) + ": '" + s + "'");
  }
  if (used != s.size()) {
    throw config_error("psi id: bad number for " + std::string(what) + ": '" + s + "'");
  }
  return v;
}

// "key=val,key=val" -> map; a bare value is stored under the empty key.
inline std::map<std::string, double> parse_params(std::string_view text) {
  std::map<std::string, double> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    std::string_view item = text.substr(0, comma);
    const auto eq = item.find('=');
    std::string key = eq == std::string_view::npos ? "" : std::string(item.substr(0, eq));
    std::string_view value = eq == std::string_view::npos ? item : item.substr(eq + 1);
    if (out.count(key)) throw config_error("psi id: duplicate parameter '" + key + "'");
    out[key] = parse_number(value, key.empty() ? "value" : key);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace detail

/// Parses catalog ids of the form `name` or `name:key=val,key=val`:
/// janowski:D=..,E=..  cardioid  zexpz  booth[:k=..]  sine  alpha:<a>
/// classical-starlike  classical-convex.
inline PsiSpec parse_psi(std::string_view id) {
  const auto colon = id.find(':');
  const std::string name(id.substr(0, colon));
  const auto params = colon == std::string_view::npos ? std::map<std::string, double>{}
                                                      : detail::parse_params(id.substr(colon + 1));
  auto require_only = [&](std::initializer_list<const char*> allowed) {
    for (const auto& [key, value] : params) {
      bool ok = false;
      for (const char* a : allowed) ok = ok || key == a;
      if (!ok) throw config_error("psi id '" + std::string(id) + "': unexpected parameter '" + key + "'");
    }
  };
  if (name == "janowski") {
    require_only({"D", "E"});
    if (!params.count("D") || !params.count("E")) {
      throw config_error("psi id '" + std::string(id) + "': janowski needs D and E");
    }
    return PsiSpec::janowski(params.at("D"), params.at("E"));
  }
  if (name == "alpha") {
    require_only({"", "alpha"});
    if (params.size() != 1) throw config_error("psi id '" + std::string(id) + "': alpha needs one value");
    return PsiSpec::starlike_alpha(params.begin()->second);
  }
  if (name == "booth") {
    require_only({"k"});
    return params.count("k") ? PsiSpec::booth(params.at("k")) : PsiSpec::booth();
  }
  if (!params.empty()) throw config_error("psi id '" + std::string(id) + "' takes no parameters");
  if (name == "cardioid") return PsiSpec::cardioid();
  if (name == "zexpz") return PsiSpec::zexpz();
  if (name == "sine") return PsiSpec::sine();
  if (name == "classical-starlike") return PsiSpec::classical_starlike();
  if (name == "classical-convex") return PsiSpec::classical_convex();
  throw config_error("unknown psi id '" + std::string(id) + "'");
}

/// The presets used by catalog listings and the Monte-Carlo runs.
inline std::vector<PsiSpec> default_catalog() {
  return {
      PsiSpec::classical_starlike(), PsiSpec::cardioid(),
      PsiSpec::zexpz(),              PsiSpec::booth(),
      PsiSpec::sine(),               PsiSpec::starlike_alpha(0.25),
      PsiSpec::janowski(0.5, -0.5),  PsiSpec::janowski(1.0, 0.0),
  };
}

}  // namespace bohr
