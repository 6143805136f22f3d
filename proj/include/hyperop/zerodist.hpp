#pragma once

// The limiting zero distribution of the general sequences, and comparisons of
// actual zeros and logarithmic derivatives against it.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "hyperop/eulerian.hpp"
#include "hyperop/families.hpp"
#include "hyperop/ratpoly.hpp"
#include "hyperop/rootlab.hpp"

namespace hyperop {

/// rho(x) = 2 / (sqrt(x) (1-x) (log^2((1-sqrt x)/(1+sqrt x)) + pi^2)) on (0, 1), zero outside.
inline double limit_density(double x) {
  if (x == 0.0 || x == 1.0) throw PreconditionError("limit_density: undefined at the endpoints 0 and 1");
  if (!(x > 0.0 && x < 1.0)) return 0.0;
  const double s = std::sqrt(x);
  const double l = std::log((1.0 - s) / (1.0 + s));
  return 2.0 / (s * (1.0 - x) * (l * l + std::numbers::pi * std::numbers::pi));
}

/// F(x) = (2/pi) arctan((1/pi) log((1+sqrt x)/(1-sqrt x))), clamped to [0, 1].
/// Generic over the floating type; math functions are found by argument-dependent lookup.
template <class T>
T basic_limit_cdf(const T& x) {
  using std::atan, std::atanh, std::sqrt;
  if (!(x > 0)) return T(0);
  if (x >= 1) return T(1);
  const T pi = 4 * atan(T(1));
  return T(2) / pi * atan(T(2) * atanh(sqrt(x)) / pi);
}

/// F^{-1}(t) = tanh^2((pi/2) tan(pi t / 2)).
template <class T>
T basic_limit_quantile(const T& t) {
  using std::atan, std::tan, std::tanh;
  if (!(t > 0 && t < 1)) throw PreconditionError("limit_quantile: t must lie in (0, 1)");
  const T pi = 4 * atan(T(1));
  const T th = tanh(pi / 2 * tan(pi * t / 2));
  return th * th;
}

/// Double-precision F. Near x = 1 the spacing of doubles limits how well F can be
/// resolved: F of the largest double below 1 is about 0.9475.
inline double limit_cdf(double x) { return basic_limit_cdf(x); }

inline double limit_quantile(double t) { return basic_limit_quantile(t); }

/// Natural log of a positive rational, valid far outside the double exponent range.
inline double log_rational(const Rational& q) {
  detail::require(q > 0, "log_rational: argument must be positive");
  long en = 0, ed = 0;
  const double mn = mpz_get_d_2exp(&en, q.get_num_mpz_t());
  const double md = mpz_get_d_2exp(&ed, q.get_den_mpz_t());
  return std::log(mn / md) + static_cast<double>(en - ed) * std::numbers::ln2;
}

/// F at an exact point. Above 1/2 the complement 1 - x is taken exactly, so points
/// closer to 1 than double spacing still get distinct values.
inline double limit_cdf(const Rational& x) {
  if (x <= 0) return 0.0;
  if (x >= 1) return 1.0;
  if (x <= Rational(1, 2)) return limit_cdf(x.get_d());
  // atanh(sqrt x) = log(1 + sqrt x) - log(1 - x) / 2
  const double a = std::log1p(std::sqrt(x.get_d())) - 0.5 * log_rational(1 - x);
  return 2.0 / std::numbers::pi * std::atan(2.0 * a / std::numbers::pi);
}

struct QuantileError {
  unsigned k = 0;
  double x_kn = 0;
  double predicted = 0;
  double abs_err = 0;
};

struct SSample {
  Complex z;
  Complex s_n;
  Complex s_limit;
  double abs_err = 0;
};

struct DistReport {
  unsigned n = 0;
  Family family = Family::Xi;
  double ks = 0;
  std::vector<QuantileError> quantile_errors;
  double max_cdf_gap = 0;  // max_k |F(x_kn) - k/n|
  unsigned real_roots = 0;
  bool roots_in_unit = false;
  std::vector<double> roots;
  std::vector<SSample> s_samples;
};

/// Test points in the cut plane C \ (-inf, 1].
inline std::vector<Complex> omega_grid() {
  return {{2, 0}, {3, 0}, {4, 0}, {9, 0}, {1.5, 0.5}, {1.5, -0.5}, {-1, 2}};
}

/// s_n(z) = (1/n) P_n'(z) / P_n(z), evaluated exactly at the dyadic point z and rounded once.
inline Complex s_n_eval(const RatPoly& p_n, unsigned n, Complex z) {
  detail::require(n >= 1, "s_n_eval: n must be >= 1");
  require_off_cut(z);
  return log_derivative(p_n, z) / static_cast<double>(n);
}

inline Complex s_n_eval(const FamilySpec& spec, unsigned n, Complex z) {
  detail::require(spec.c != 0, "c must be nonzero");
  return s_n_eval(iterate_P(spec, n).at(n), n, z);
}

/// 1/(sqrt z (1 + sqrt z)) + (1/(sqrt z (1 - sqrt z))) (u + (1 - u)/log u).
inline Complex s_limit(Complex z) {
  const Complex u = u_map(z);
  const Complex s = std::sqrt(z);
  return 1.0 / (s * (1.0 + s)) + (1.0 / (s * (1.0 - s))) * (u + (1.0 - u) / std::log(u));
}

/// Both sides of s_n = (1/n) T_n'/T_n + (1/n) alpha R'/(alpha R + beta), R = T_{n+1}/T_n.
struct Decomposition {
  Complex s_n;
  Complex main;
  Complex correction;
  Complex rhs() const { return main + correction; }
};

inline Decomposition log_derivative_decomposition(const FamilySpec& spec, unsigned n, Complex z) {
  detail::require(n >= 2, "log_derivative_decomposition: n must be >= 2");
  detail::require(spec.c != 0, "c must be nonzero");
  require_off_cut(z);
  const SequenceCache aux = aux_family(spec.family, n + 1);
  const ClosedFormConstants k = closed_form_constants(spec, n);
  const GaussianRational zz = exact_point(z);
  const RatPoly& tn = aux.at(n);
  const RatPoly& tn1 = aux.at(n + 1);
  const GaussianRational a = evaluate_exact(tn, zz);
  const GaussianRational ad = evaluate_exact(differentiate(tn), zz);
  const GaussianRational b = evaluate_exact(tn1, zz);
  const GaussianRational bd = evaluate_exact(differentiate(tn1), zz);
  const GaussianRational r = b / a;
  const GaussianRational rd = (bd * a - b * ad) / (a * a);
  const GaussianRational beta{k.beta, 0};
  const Rational inv_n(1, n);

  Decomposition out;
  out.main = (inv_n * (ad / a)).to_complex();
  out.correction = (inv_n * ((k.alpha * rd) / (k.alpha * r + beta))).to_complex();
  out.s_n = s_n_eval(iterate_P(spec, n).at(n), n, z);
  return out;
}

/// Default isolation width for distribution reports, 2^-34 (below 1e-10).
inline Rational dist_width() {
  Rational w(1);
  mpq_div_2exp(w.get_mpq_t(), w.get_mpq_t(), 34);
  return w;
}

/// Empirical zeros of a degree-n polynomial against the limiting law.
/// The prediction for k = n is the right endpoint 1.
inline DistReport compare_roots(const RatPoly& p_n, unsigned n, Family family, const Rational& width,
                                const std::vector<Complex>& grid) {
  DistReport rep;
  rep.n = n;
  rep.family = family;
  RootSet rs = isolate(p_n, width);
  rep.roots_in_unit = rs.total_multiplicity() == n;
  for (const auto& iv : rs.intervals()) {
    const bool inside = iv.exact() ? (iv.lo > 0 && iv.lo < 1) : (iv.lo >= 0 && iv.hi <= 1);
    rep.roots_in_unit = rep.roots_in_unit && inside;
  }

  // Narrow each interval relative to its distance from 0 and 1, where F is steep.
  Rational rel(1);
  mpq_div_2exp(rel.get_mpq_t(), rel.get_mpq_t(), 30);
  std::vector<Rational> points;
  for (std::size_t i = 0; i < rs.size(); ++i) {
    const auto& src = *rs.source(i);
    const bool endpoint_root = detail::sign_at(src, Rational(0)) == 0 || detail::sign_at(src, Rational(1)) == 0;
    for (int step = 0; step < 4096 && !endpoint_root && !rs[i].exact(); ++step) {
      const RootInterval& iv = rs[i];
      const Rational room = iv.lo >= 0 && iv.hi <= 1 ? std::min<Rational>(iv.lo, 1 - iv.hi) : Rational(1);
      if (room > 0 && iv.width() <= rel * room) break;
      rs.refine(i);
    }
    points.insert(points.end(), rs[i].multiplicity, rs[i].midpoint());
  }
  for (const auto& x : points) rep.roots.push_back(x.get_d());
  rep.real_roots = static_cast<unsigned>(points.size());

  const std::size_t m = points.size();
  for (std::size_t i = 0; i < m; ++i) {
    const double F = limit_cdf(points[i]);
    const double above = static_cast<double>(i + 1) / static_cast<double>(m);
    const double below = static_cast<double>(i) / static_cast<double>(m);
    rep.ks = std::max({rep.ks, std::abs(above - F), std::abs(below - F)});

    const auto k = static_cast<unsigned>(i + 1);
    const double t = static_cast<double>(k) / static_cast<double>(n);
    QuantileError q;
    q.k = k;
    q.x_kn = rep.roots[i];
    q.predicted = t < 1.0 ? limit_quantile(t) : 1.0;
    q.abs_err = std::abs(q.x_kn - q.predicted);
    rep.quantile_errors.push_back(q);
    rep.max_cdf_gap = std::max(rep.max_cdf_gap, std::abs(F - t));
  }

  for (const Complex z : grid) {
    SSample s;
    s.z = z;
    s.s_n = s_n_eval(p_n, n, z);
    s.s_limit = s_limit(z);
    s.abs_err = std::abs(s.s_n - s.s_limit);
    rep.s_samples.push_back(s);
  }
  return rep;
}

inline DistReport compare_distribution(const FamilySpec& spec, unsigned n, const Rational& width = dist_width(),
                                       const std::vector<Complex>& grid = omega_grid()) {
  detail::require(spec.c != 0, "c must be nonzero");
  detail::require(n >= 1, "n must be >= 1");
  return compare_roots(iterate_P(spec, n).at(n), n, spec.family, width, grid);
}

}  // namespace hyperop
