#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "bohr/errors.hpp"
#include "bohr/extremal.hpp"
#include "bohr/psi_catalog.hpp"
#include "bohr/series.hpp"

namespace bohr {

enum class Mode {
  BohrRogosinski,  // |g(z^m)| + sum_{k>=N} |b_k| r^k
  BohrLimit,       // m -> infinity with N = 1: the Bohr sum
};

inline const char* to_string(Mode m) {
  return m == Mode::BohrRogosinski ? "bohr-rogosinski" : "bohr-limit";
}

/// Upper end of the search bracket is 1 - kBracketEpsilon.
inline constexpr double kBracketEpsilon = 1e-9;

/// Points used to check that the radius equation changes sign only once.
inline constexpr int kUniquenessGrid = 100;

struct RadiusProblem {
  PsiSpec psi;
  Family family = Family::Starlike;
  int m = 1;
  int N = 1;
  Mode mode = Mode::BohrRogosinski;
  int order = kDefaultOrder;
  double tol = 1e-10;

  int effective_N() const noexcept { return mode == Mode::BohrLimit ? 1 : N; }

  void validate() const {
    if (m < 1) throw config_error("radius problem: m must be >= 1");
    if (N < 1) throw config_error("radius problem: N must be >= 1");
    if (order < 2) throw config_error("radius problem: order must be >= 2");
    if (N > order) throw config_error("radius problem: N must not exceed the truncation order");
    if (!(tol > 0.0 && tol < 1e-3)) throw config_error("radius problem: tol must lie in (0, 1e-3)");
  }
};

struct RadiusResult {
  std::string psi;
  Family family = Family::Starlike;
  int m = 1;
  int N = 1;
  Mode mode = Mode::BohrRogosinski;

  double r0 = 0.0;
  double rb = 0.0;        // min(1/3, r0) when the clamp policy applies, r0 otherwise
  double lo = 0.0;        // final bracket, G(lo) < 0 <= G(hi)
  double hi = 0.0;
  int iterations = 0;
  double residual = 0.0;  // G(r0)
  bool sharp = false;     // coefficients positive and rb == r0
  bool clamp_policy = false;
  bool unique_bracket = true;  // single sign change on the uniqueness grid
  double koebe = 0.0;
  double tail_hint = 0.0;
};

/// Bohr operator head  p(r) = sum_{n=1}^{N-1} |c_n| r^n  (0 for N = 1).
inline double polynomial_head(const TruncatedSeries& s, int N, double r) {
  double acc = 0.0;
  for (int n = std::min(N - 1, s.order()); n >= 1; --n) acc = acc * r + std::abs(s[n]);
  return acc * r;
}

/// G(r) = f^(r^m) + f^(r) - p(r) - r*  for the problem's family (f0 or l0).
/// In BohrLimit mode the r^m term is dropped and N = 1.
inline double g_function(const RadiusProblem& problem, const ExtremalPair& extremal, double r) {
  if (!(r >= 0.0 && r < 1.0)) throw domain_error("g_function: r must lie in [0, 1)");
  const TruncatedSeries& s = extremal.series(problem.family);
  const double koebe = extremal.koebe(problem.family);
  const double tail = eval_abs_from(s, problem.effective_N(), r);
  if (problem.mode == Mode::BohrLimit) return tail - koebe;
  return eval_abs(s, std::pow(r, problem.m)) + tail - koebe;
}

namespace detail {

struct RootBracket {
  double root = 0.0;
  double lo = 0.0;
  double hi = 0.0;
  int iterations = 0;
  double residual = 0.0;
};

// Smallest root of an increasing function with g(lo) < 0 <= g(hi): bisection
// to width tol, one guarded centered-difference Newton step, then further
// bisection only if the residual is still above tol * scale.
template <class G>
RootBracket bracketed_root(const G& g, double lo, double hi, double tol, double scale) {
  RootBracket out;
  auto bisect_once = [&] {
    const double mid = 0.5 * (lo + hi);
    if (g(mid) < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
    ++out.iterations;
  };
  while (hi - lo >= tol) bisect_once();

  double r = 0.5 * (lo + hi);
  double gr = g(r);
  const double h = std::max(1e-7 * r, 1e-12);
  if (r - h >= 0.0 && r + h < 1.0) {
    const double slope = (g(r + h) - g(r - h)) / (2.0 * h);
    if (slope > 0.0 && std::isfinite(slope)) {
      const double polished = r - gr / slope;
      if (polished > lo && polished < hi) {
        const double gp = g(polished);
        if (std::abs(gp) < std::abs(gr)) {
          r = polished;
          gr = gp;
        }
      }
    }
  }
  while (std::abs(gr) > tol * scale && hi - lo > 4.0 * std::numeric_limits<double>::epsilon()) {
    bisect_once();
    const double mid = 0.5 * (lo + hi);
    const double gm = g(mid);
    if (std::abs(gm) < std::abs(gr) || r <= lo || r >= hi) {
      r = mid;
      gr = gm;
    }
  }
  out.root = r;
  out.lo = lo;
  out.hi = hi;
  out.residual = gr;
  return out;
}

// Narrows [lo, hi] to the first grid cell with a sign change and counts the
// sign changes over the grid.
template <class G>
std::pair<double, double> first_sign_change(const G& g, double lo, double hi, bool& unique) {
  double prev_r = lo;
  bool prev_neg = g(lo) < 0.0;
  int changes = 0;
  std::pair<double, double> cell{lo, hi};
  for (int i = 1; i <= kUniquenessGrid; ++i) {
    const double r = lo + (hi - lo) * i / kUniquenessGrid;
    const bool neg = g(r) < 0.0;
    if (neg != prev_neg) {
      if (changes == 0) cell = {prev_r, r};
      ++changes;
    }
    prev_r = r;
    prev_neg = neg;
  }
  unique = changes == 1;
  return cell;
}

inline bool all_positive(const TruncatedSeries& s) {
  for (int n = 1; n <= s.order(); ++n) {
    if (!(s[n] > 0.0)) return false;
  }
  return true;
}

}  // namespace detail

/// Solves G(r) = 0 for a prebuilt extremal pair (must match problem.order).
inline RadiusResult solve(const RadiusProblem& problem, const ExtremalPair& extremal) {
  problem.validate();
  if (extremal.f0.order() != problem.order) {
    throw contract_error("solve: extremal order does not match the problem");
  }
  RadiusResult res;
  res.psi = problem.psi.name();
  res.family = problem.family;
  res.m = problem.m;
  res.N = problem.effective_N();
  res.mode = problem.mode;
  res.koebe = extremal.koebe(problem.family);
  res.tail_hint = extremal.series(problem.family).tail_hint();

  auto g = [&](double r) { return g_function(problem, extremal, r); };
  const double lo = 0.0;
  const double hi = 1.0 - kBracketEpsilon;
  if (!(g(lo) < 0.0) || !(g(hi) > 0.0)) {
    throw inconsistent_problem_error("solve: radius equation for " + res.psi +
                                     " has no sign change on [0, 1); G(0) = " +
                                     std::to_string(g(lo)) + ", G(1-eps) = " +
                                     std::to_string(g(hi)));
  }
  const auto [cell_lo, cell_hi] = detail::first_sign_change(g, lo, hi, res.unique_bracket);
  const double scale = std::max(1.0, res.koebe);
  const auto root = detail::bracketed_root(g, cell_lo, cell_hi, problem.tol, scale);

  res.r0 = root.root;
  res.lo = root.lo;
  res.hi = root.hi;
  res.iterations = root.iterations;
  res.residual = root.residual;
  res.clamp_policy = !problem.psi.exact_coefficient_bounds();
  res.rb = res.clamp_policy ? std::min(1.0 / 3.0, res.r0) : res.r0;
  res.sharp = detail::all_positive(extremal.series(problem.family)) && res.rb == res.r0;
  return res;
}

inline RadiusResult solve(const RadiusProblem& problem) {
  problem.validate();
  return solve(problem, build_extremal(problem.psi, problem.order));
}

/// Left-hand side of the closed Janowski radius equation.
///   E != 0: r^m (1+E r^m)^{(D-E)/E} + A(r) + sum_{n>=max(N,2)} prod_{k=0}^{n-2} |E-D+Ek|/(k+1) r^n
///           - (1-E)^{(D-E)/E},   A(r) = r for N = 1
///   E == 0: r^m e^{D r^m} + r e^{D r} - J(r) - e^{-D},
///           J(r) = r + sum_{n=2}^{N-1} D^{n-1}/(n-1)! r^n  (0 for N = 1)
/// BohrLimit drops the r^m term and uses N = 1.
inline double janowski_exact_equation(double d, double e, int m, int N, Mode mode, double r) {
  if (!(r >= 0.0 && r < 1.0)) throw domain_error("janowski_exact_equation: r must lie in [0, 1)");
  if (mode == Mode::BohrLimit) N = 1;
  const double rm = std::pow(r, m);
  if (e == 0.0) {
    const double head = mode == Mode::BohrLimit ? 0.0 : rm * std::exp(d * rm);
    double j = 0.0;
    if (N >= 2) {
      double term = r;  // D^{n-1}/(n-1)! r^n at n = 1
      j = r;
      for (int n = 2; n <= N - 1; ++n) {
        term *= d * r / (n - 1);
        j += term;
      }
    }
    return head + r * std::exp(d * r) - j - std::exp(-d);
  }
  const double gamma = (d - e) / e;
  const double head = mode == Mode::BohrLimit ? 0.0 : rm * std::pow(1.0 + e * rm, gamma);
  const double a = N == 1 ? r : 0.0;
  const int first = std::max(N, 2);
  double term = std::pow(r, first);
  for (int k = 0; k <= first - 2; ++k) term *= std::abs(e - d + e * k) / (k + 1);
  double tail = 0.0;
  constexpr long kMaxTerms = 50'000'000;
  for (long n = first; term != 0.0; ++n) {
    tail += term;
    if (term < 1e-16) break;
    if (n - first > kMaxTerms) {
      throw numeric_error("janowski_exact_equation: tail did not converge at r = " +
                          std::to_string(r));
    }
    term *= std::abs(e - d + e * static_cast<double>(n - 1)) / static_cast<double>(n) * r;
  }
  return head + a + tail - std::pow(1.0 - e, gamma);
}

/// Root of the closed Janowski equation. No 1/3 clamp: rb = r0.
inline RadiusResult solve_janowski_exact(double d, double e, int m, int N, double tol,
                                         Mode mode = Mode::BohrRogosinski) {
  const PsiSpec psi = PsiSpec::janowski(d, e);
  if (m < 1 || N < 1) throw config_error("solve_janowski_exact: m and N must be >= 1");
  if (!(tol > 0.0 && tol < 1e-3)) throw config_error("solve_janowski_exact: tol must lie in (0, 1e-3)");
  auto g = [&](double r) { return janowski_exact_equation(d, e, m, N, mode, r); };

  RadiusResult res;
  res.psi = psi.name();
  res.m = m;
  res.N = mode == Mode::BohrLimit ? 1 : N;
  res.mode = mode;
  res.koebe = *psi.koebe_closed();

  // Grow the bracket towards 1 only as far as needed; the tail sum slows
  // down as r -> 1 when |E| = 1.
  double hi = 0.5;
  for (int j = 2; !(g(hi) > 0.0); ++j) {
    if (j > 30) throw inconsistent_problem_error("solve_janowski_exact: no sign change on [0, 1)");
    hi = 1.0 - std::ldexp(1.0, -j);
  }
  if (!(g(0.0) < 0.0)) throw inconsistent_problem_error("solve_janowski_exact: G(0) >= 0");
  const auto [cell_lo, cell_hi] = detail::first_sign_change(g, 0.0, hi, res.unique_bracket);
  const auto root = detail::bracketed_root(g, cell_lo, cell_hi, tol, std::max(1.0, res.koebe));
  res.r0 = root.root;
  res.rb = root.root;
  res.lo = root.lo;
  res.hi = root.hi;
  res.iterations = root.iterations;
  res.residual = root.residual;
  res.sharp = detail::all_positive(build_f0(psi, kDefaultOrder));
  return res;
}

enum class SweepAxis { N, M };

struct SweepTable {
  SweepAxis axis = SweepAxis::N;
  std::vector<RadiusResult> rows;
  bool nondecreasing = true;  // r0 along the grid; reported, not enforced
};

/// Solves base with N (or m) running over [first, last], in grid order.
inline SweepTable sweep(const RadiusProblem& base, SweepAxis axis, int first, int last) {
  if (first < 1 || last < first) throw config_error("sweep: empty or invalid range");
  base.validate();
  const ExtremalPair extremal = build_extremal(base.psi, base.order);
  SweepTable table;
  table.axis = axis;
  for (int v = first; v <= last; ++v) {
    RadiusProblem p = base;
    (axis == SweepAxis::N ? p.N : p.m) = v;
    table.rows.push_back(solve(p, extremal));
  }
  for (std::size_t i = 1; i < table.rows.size(); ++i) {
    if (table.rows[i].r0 < table.rows[i - 1].r0) table.nondecreasing = false;
  }
  return table;
}

}  // namespace bohr
