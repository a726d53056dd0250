#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "bohr/errors.hpp"

namespace bohr {

/// Default truncation order used throughout the library.
inline constexpr int kDefaultOrder = 64;

/// Radius at which TruncatedSeries::tail_hint() is reported.
inline constexpr double kTailHintRadius = 1.0 / 3.0;

/// Real power series c_0 + c_1 z + ... + c_K z^K truncated at a fixed order K.
///
/// All arithmetic keeps the order of its inputs; operands must share the same
/// order. The dropped tail is never added to any result. A heuristic estimate
/// of its size is available through tail_bound().
class TruncatedSeries {
 public:
  /// Zero series of order K.
  explicit TruncatedSeries(int order) : TruncatedSeries(checked_zeros(order)) {}

  /// Takes ownership of coeffs; order is coeffs.size() - 1.
  explicit TruncatedSeries(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.size() < 2) {
      throw contract_error("TruncatedSeries: order must be positive");
    }
    for (double c : coeffs_) {
      if (!std::isfinite(c)) {
        throw contract_error("TruncatedSeries: non-finite coefficient");
      }
    }
  }

  /// Leading coefficients from a list, zero-padded (or truncated) to order K.
  TruncatedSeries(std::initializer_list<double> leading, int order)
      : TruncatedSeries(padded(leading, order)) {}

  static TruncatedSeries constant(double c, int order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = c;
    return s;
  }

  /// c z^p; p beyond the order yields the zero series.
  static TruncatedSeries monomial(double c, int power, int order) {
    TruncatedSeries s(order);
    if (power < 0) throw contract_error("monomial: negative power");
    if (power <= order) s.coeffs_[static_cast<std::size_t>(power)] = c;
    return s;
  }

  /// The identity series w(z) = z.
  static TruncatedSeries identity(int order) { return monomial(1.0, 1, order); }

  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

  double operator[](int n) const { return coeffs_.at(static_cast<std::size_t>(n)); }

  std::span<const double> coeffs() const noexcept { return coeffs_; }

  /// Heuristic size of the dropped tail at radius r:
  /// |c_K| r^K / (1 - rho r), rho = |c_K / c_{K-1}| clamped to [0, 2].
  /// Infinite when rho r >= 1.
  double tail_bound(double r) const {
    const int k = order();
    const double ck = std::abs(coeffs_.back());
    if (ck == 0.0) return 0.0;
    const double prev = std::abs(coeffs_[static_cast<std::size_t>(k - 1)]);
    const double rho = prev == 0.0 ? 2.0 : std::clamp(ck / prev, 0.0, 2.0);
    const double denom = 1.0 - rho * std::abs(r);
    if (denom <= 0.0) return std::numeric_limits<double>::infinity();
    return ck * std::pow(std::abs(r), k) / denom;
  }

  /// tail_bound() at r = 1/3.
  double tail_hint() const { return tail_bound(kTailHintRadius); }

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  static std::vector<double> checked_zeros(int order) {
    if (order < 1) throw contract_error("TruncatedSeries: order must be positive");
    return std::vector<double>(static_cast<std::size_t>(order) + 1, 0.0);
  }

  static std::vector<double> padded(std::initializer_list<double> leading, int order) {
    auto out = checked_zeros(order);
    std::size_t n = std::min(leading.size(), out.size());
    std::copy_n(leading.begin(), n, out.begin());
    return out;
  }

  std::vector<double> coeffs_;
};

namespace detail {

inline void require_same_order(const TruncatedSeries& a, const TruncatedSeries& b,
                               const char* op) {
  if (a.order() != b.order()) {
    throw contract_error(std::string(op) + ": order mismatch (" +
                         std::to_string(a.order()) + " vs " + std::to_string(b.order()) + ")");
  }
}

inline std::vector<double> to_vector(const TruncatedSeries& s) {
  return {s.coeffs().begin(), s.coeffs().end()};
}

}  // namespace detail

inline TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
  detail::require_same_order(a, b, "add");
  auto out = detail::to_vector(a);
  for (int n = 0; n <= a.order(); ++n) out[static_cast<std::size_t>(n)] += b[n];
  return TruncatedSeries(std::move(out));
}

inline TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b) {
  detail::require_same_order(a, b, "sub");
  auto out = detail::to_vector(a);
  for (int n = 0; n <= a.order(); ++n) out[static_cast<std::size_t>(n)] -= b[n];
  return TruncatedSeries(std::move(out));
}

inline TruncatedSeries scale(const TruncatedSeries& a, double s) {
  auto out = detail::to_vector(a);
  for (double& c : out) c *= s;
  return TruncatedSeries(std::move(out));
}

/// Cauchy product truncated at the common order.
inline TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  detail::require_same_order(a, b, "mul");
  const int k = a.order();
  std::vector<double> out(static_cast<std::size_t>(k) + 1, 0.0);
  const auto ac = a.coeffs();
  const auto bc = b.coeffs();
  for (int i = 0; i <= k; ++i) {
    if (ac[static_cast<std::size_t>(i)] == 0.0) continue;
    for (int j = 0; i + j <= k; ++j) {
      out[static_cast<std::size_t>(i + j)] +=
          ac[static_cast<std::size_t>(i)] * bc[static_cast<std::size_t>(j)];
    }
  }
  return TruncatedSeries(std::move(out));
}

/// Formal derivative. The top coefficient of the result is zero since c_{K+1}
/// is unknown.
inline TruncatedSeries derivative(const TruncatedSeries& f) {
  const int k = f.order();
  std::vector<double> out(static_cast<std::size_t>(k) + 1, 0.0);
  for (int n = 0; n < k; ++n) out[static_cast<std::size_t>(n)] = (n + 1) * f[n + 1];
  return TruncatedSeries(std::move(out));
}

/// Multiplication by z^p, dropping coefficients pushed past the order.
inline TruncatedSeries shift_up(const TruncatedSeries& f, int p) {
  const int k = f.order();
  std::vector<double> out(static_cast<std::size_t>(k) + 1, 0.0);
  for (int n = 0; n + p <= k; ++n) out[static_cast<std::size_t>(n + p)] = f[n];
  return TruncatedSeries(std::move(out));
}

/// Coefficients of f(w(z)) up to the common order, by Horner's scheme in w.
/// Requires w(0) = 0 so that every coefficient is a finite sum.
inline TruncatedSeries compose(const TruncatedSeries& f, const TruncatedSeries& w) {
  detail::require_same_order(f, w, "compose");
  if (w[0] != 0.0) throw contract_error("compose: inner series must vanish at 0");
  const int k = f.order();
  TruncatedSeries acc = TruncatedSeries::constant(f[k], k);
  for (int n = k - 1; n >= 0; --n) {
    auto next = detail::to_vector(mul(acc, w));
    next[0] += f[n];
    acc = TruncatedSeries(std::move(next));
  }
  return acc;
}

/// exp(f) for f(0) = 0, via (exp f)' = f' exp f:
/// e_0 = 1, e_n = (1/n) sum_{j=1}^{n} j f_j e_{n-j}.
inline TruncatedSeries exp_series(const TruncatedSeries& f) {
  if (f[0] != 0.0) throw contract_error("exp_series: constant term must be zero");
  const int k = f.order();
  std::vector<double> e(static_cast<std::size_t>(k) + 1, 0.0);
  e[0] = 1.0;
  for (int n = 1; n <= k; ++n) {
    double acc = 0.0;
    for (int j = 1; j <= n; ++j) acc += j * f[j] * e[static_cast<std::size_t>(n - j)];
    e[static_cast<std::size_t>(n)] = acc / n;
  }
  return TruncatedSeries(std::move(e));
}

/// Coefficients of  integral_0^z h(t)/t dt  for h(0) = 0: c_n -> c_n / n.
inline TruncatedSeries integrate_over_t(const TruncatedSeries& h) {
  if (h[0] != 0.0) throw contract_error("integrate_over_t: constant term must be zero");
  const int k = h.order();
  std::vector<double> out(static_cast<std::size_t>(k) + 1, 0.0);
  for (int n = 1; n <= k; ++n) out[static_cast<std::size_t>(n)] = h[n] / n;
  return TruncatedSeries(std::move(out));
}

/// Majorant sum  sum_{n=N}^{K} |c_n| r^n  (the Bohr operator tail when N > 0).
inline double eval_abs_from(const TruncatedSeries& f, int first, double r) {
  if (!(r >= 0.0 && r < 1.0)) throw domain_error("eval_abs: r must lie in [0, 1)");
  if (first < 0) throw contract_error("eval_abs: negative start index");
  double acc = 0.0;
  for (int n = f.order(); n >= first; --n) acc = acc * r + std::abs(f[n]);
  return acc * std::pow(r, first);
}

/// sum_{n=0}^{K} |c_n| r^n for r in [0, 1).
inline double eval_abs(const TruncatedSeries& f, double r) { return eval_abs_from(f, 0, r); }

/// sum_{n=0}^{K} c_n r^n for |r| < 1.
inline double eval(const TruncatedSeries& f, double r) {
  if (!(std::abs(r) < 1.0)) throw domain_error("eval: |r| must be < 1");
  double acc = 0.0;
  for (int n = f.order(); n >= 0; --n) acc = acc * r + f[n];
  return acc;
}

/// Partial sum without the disk restriction. Used where the caller knows the
/// coefficient sequence converges at |x| = 1 (quadrature fallbacks).
inline double eval_partial_sum(const TruncatedSeries& f, double x) {
  double acc = 0.0;
  for (int n = f.order(); n >= 0; --n) acc = acc * x + f[n];
  return acc;
}

}  // namespace bohr
