#pragma once

#include <cmath>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "bohr/errors.hpp"
#include "bohr/psi_catalog.hpp"
#include "bohr/series.hpp"

namespace bohr {

enum class Family { Starlike, Convex };

inline const char* to_string(Family f) { return f == Family::Starlike ? "starlike" : "convex"; }

/// Extremal functions of S*(psi) and C(psi) with their Koebe radii.
struct ExtremalPair {
  TruncatedSeries f0;  // z f0'/f0 = psi
  TruncatedSeries l0;  // z l0' = f0
  double koebe_starlike;
  double koebe_convex;

  const TruncatedSeries& series(Family f) const { return f == Family::Starlike ? f0 : l0; }
  double koebe(Family f) const { return f == Family::Starlike ? koebe_starlike : koebe_convex; }
};

/// Taylor coefficients of f0 from z f0' = psi f0:
/// t_1 = 1,  t_n = (1/(n-1)) sum_{j=1}^{n-1} c_{n-j} t_j.
inline TruncatedSeries build_f0(const PsiSpec& psi, int order) {
  const TruncatedSeries c = psi.coefficients(order);
  std::vector<double> t(static_cast<std::size_t>(order) + 1, 0.0);
  t[1] = 1.0;
  for (int n = 2; n <= order; ++n) {
    double acc = 0.0;
    for (int j = 1; j < n; ++j) acc += c[n - j] * t[static_cast<std::size_t>(j)];
    t[static_cast<std::size_t>(n)] = acc / (n - 1);
  }
  return TruncatedSeries(std::move(t));
}

/// f0(z) = z exp( integral_0^z (psi(t) - 1)/t dt ), assembled from series ops.
inline TruncatedSeries build_f0_via_exp(const PsiSpec& psi, int order) {
  const TruncatedSeries c = psi.coefficients(order);
  const TruncatedSeries exponent =
      integrate_over_t(sub(c, TruncatedSeries::constant(1.0, order)));
  return shift_up(exp_series(exponent), 1);
}

/// Convex extremal l0 through the Alexander relation: l_n = t_n / n.
inline TruncatedSeries build_l0(const TruncatedSeries& f0) {
  std::vector<double> l(f0.coeffs().begin(), f0.coeffs().end());
  for (int n = 1; n <= f0.order(); ++n) l[static_cast<std::size_t>(n)] /= n;
  return TruncatedSeries(std::move(l));
}

namespace detail {

inline constexpr double kQuadRelTol = 1e-13;
// Boost 1.74 compares an error estimate taken on [-1, 1] against a tolerance
// scaled to [a, b], so short intervals always bisect to the depth limit and
// pile up rounding floors. The integrands here are analytic on the closed
// interval, so a shallow limit loses nothing.
inline constexpr unsigned kQuadMaxDepth = 10;
inline constexpr double kSeriesRegion = 0.5;

template <class F>
double integrate_checked(F&& f, double a, double b, const char* what) {
  if (b < a) return -integrate_checked(f, b, a, what);
  double err = 0.0;
  const double v = boost::math::quadrature::gauss_kronrod<double, 21>::integrate(
      f, a, b, kQuadMaxDepth, kQuadRelTol, &err);
  if (!std::isfinite(v) || err > 1e-11 * std::max(1.0, std::abs(v))) {
    throw numeric_error(std::string(what) + ": quadrature did not converge on [" +
                        std::to_string(a) + ", " + std::to_string(b) +
                        "], value " + std::to_string(v) + ", error estimate " +
                        std::to_string(err));
  }
  return v;
}

// Evaluates integral_0^x (psi(t)-1)/t dt. Near the origin the Taylor data is
// used directly; elsewhere the closed form of psi is integrated.
class LogGrowth {
 public:
  explicit LogGrowth(const PsiSpec& psi)
      : psi_(psi),
        integral_(integrate_over_t(sub(psi.coefficients(kDefaultOrder),
                                       TruncatedSeries::constant(1.0, kDefaultOrder)))),
        quotient_(shift_down(integral_)) {}

  // (psi(t) - 1)/t
  double integrand(double t) const {
    if (std::abs(t) <= kSeriesRegion / 2) return eval(quotient_, t);
    return (psi_.psi_at(t) - 1.0) / t;
  }

  double operator()(double x) const {
    if (!(std::abs(x) <= 1.0)) throw domain_error("log growth: |x| must be <= 1");
    if (std::abs(x) <= kSeriesRegion) return eval(integral_, x);
    const double anchor = std::copysign(kSeriesRegion, x);
    return eval(integral_, anchor) +
           integrate_checked([this](double t) { return integrand(t); }, anchor, x,
                             "log growth");
  }

 private:
  // Coefficients of (psi(t) - 1)/t.
  static TruncatedSeries shift_down(const TruncatedSeries& integral) {
    std::vector<double> q(integral.coeffs().size(), 0.0);
    for (int n = 1; n <= integral.order(); ++n) q[static_cast<std::size_t>(n - 1)] = n * integral[n];
    return TruncatedSeries(std::move(q));
  }

  const PsiSpec& psi_;
  TruncatedSeries integral_;
  TruncatedSeries quotient_;
};

}  // namespace detail

/// Koebe radius by quadrature, ignoring any closed-form constant:
///   starlike  -f0(-1) = exp( integral_0^{-1} (psi(t)-1)/t dt )
///   convex    -l0(-1) = integral_0^1 exp( integral_0^{-s} (psi(t)-1)/t dt ) ds
inline double koebe_radius_quadrature(const PsiSpec& psi, Family family) {
  const detail::LogGrowth log_growth(psi);
  if (family == Family::Starlike) {
    const double head = log_growth(-detail::kSeriesRegion);
    const double rest = detail::integrate_checked(
        [&](double t) { return log_growth.integrand(t); }, -detail::kSeriesRegion, -1.0,
        "starlike Koebe radius");
    return std::exp(head + rest);
  }
  return detail::integrate_checked([&](double s) { return std::exp(log_growth(-s)); }, 0.0, 1.0,
                                   "convex Koebe radius");
}

/// r* = -f0(-1) (starlike) or -l0(-1) (convex). Closed values from the
/// catalog are used when present, quadrature otherwise.
inline double koebe_radius(const PsiSpec& psi, Family family) {
  if (family == Family::Starlike) {
    if (auto closed = psi.koebe_closed()) return *closed;
  }
  return koebe_radius_quadrature(psi, family);
}

inline ExtremalPair build_extremal(const PsiSpec& psi, int order = kDefaultOrder) {
  TruncatedSeries f0 = build_f0(psi, order);
  TruncatedSeries l0 = build_l0(f0);
  return ExtremalPair{std::move(f0), std::move(l0), koebe_radius(psi, Family::Starlike),
                      koebe_radius(psi, Family::Convex)};
}

}  // namespace bohr
