#pragma once

// Gauss hypergeometric series and the formal eigenfunctions of the two operators.

#include <algorithm>
#include <cmath>
#include <complex>
#include <utility>
#include <vector>

#include "hyperop/diffop.hpp"
#include "hyperop/errors.hpp"

namespace hyperop {

/// Parameters of a 2F1 evaluation together with the truncation that was used
/// and a ratio-test bound on the discarded tail.
struct HypParams {
  double a = 0;
  double b = 0;
  double c = 0;
  int truncation = 0;
  double tail_bound = 0;
};

inline constexpr double kHypWorkingRadius = 0.8;

/// Sums 2F1(a, b; c; x) until the tail bound is below 1e-14 (absolute) and
/// 1e-15 relative to the partial sum. Fills p.truncation and p.tail_bound.
inline double hyp2f1(HypParams& p, double x) {
  detail::require(std::abs(x) <= kHypWorkingRadius, "hyp2f1: |x| must be <= 0.8");
  detail::require(!(p.c <= 0 && p.c == std::floor(p.c)), "hyp2f1: c must not be a nonpositive integer");
  double sum = 0;
  double term = 1;
  for (int k = 0; k < 100000; ++k) {
    sum += term;
    term *= (p.a + k) * (p.b + k) / ((p.c + k) * (k + 1)) * x;
    const int K = k + 1;
    if (term == 0.0) {
      p.truncation = K;
      p.tail_bound = 0;
      return sum;
    }
    if (p.a + K <= 0 || p.b + K <= 0 || p.c + K <= 0) continue;
    // past this point both factor ratios are monotone in the index and tend to 1
    const double rho = std::abs(x) * std::max(1.0, (p.a + K) / (p.c + K)) * std::max(1.0, (p.b + K) / (1.0 + K));
    if (rho >= 1.0) continue;
    const double tail = std::abs(term) / (1.0 - rho);
    if (tail <= 1e-14 && tail <= 1e-15 * std::max(1.0, std::abs(sum))) {
      p.truncation = K;
      p.tail_bound = tail;
      return sum;
    }
  }
  throw PreconditionError("hyp2f1: series did not converge within the term cap");
}

inline double hyp2f1(double a, double b, double c, double x) {
  HypParams p{a, b, c};
  return hyp2f1(p, x);
}

/// k-th derivative of 2F1(a, b; c; x), by shifting parameters.
inline double hyp2f1_derivative(double a, double b, double c, double x, int k) {
  double factor = 1;
  for (int j = 0; j < k; ++j) factor *= (a + j) * (b + j) / (c + j);
  return factor * hyp2f1(a + k, b + k, c + k, x);
}

/// Hypergeometric parameters of the two basis solutions for a family and exponent.
struct EigenBasis {
  double a1, b1, c1;  // regular at 0
  double a2, b2, c2;  // multiplied by x^{-1/2}
};

inline EigenBasis eigen_basis(Family family, double e) {
  if (family == Family::Xi) return {e + 1, e + 1.5, 1.5, e + 0.5, e + 1, 0.5};
  return {e + 1.5, e + 2, 1.5, e + 1, e + 1.5, 0.5};
}

/// lambda = (2 alpha + 1)^2 for Xi, mu = 4 (beta + 1)^2 for Lambda.
inline double eigenvalue(Family family, double e) {
  return family == Family::Xi ? (2 * e + 1) * (2 * e + 1) : 4 * (e + 1) * (e + 1);
}

/// f and its first two derivatives at x.
struct Jet {
  double f, df, ddf;
};

inline Jet eigen_jet(Family family, double e, double C1, double C2, double x) {
  const EigenBasis p = eigen_basis(family, e);
  // H = C1 F1 + C2 x^{-1/2} F2
  double H = 0, dH = 0, ddH = 0;
  if (C1 != 0) {
    H += C1 * hyp2f1(p.a1, p.b1, p.c1, x);
    dH += C1 * hyp2f1_derivative(p.a1, p.b1, p.c1, x, 1);
    ddH += C1 * hyp2f1_derivative(p.a1, p.b1, p.c1, x, 2);
  }
  if (C2 != 0) {
    const double F = hyp2f1(p.a2, p.b2, p.c2, x);
    const double dF = hyp2f1_derivative(p.a2, p.b2, p.c2, x, 1);
    const double ddF = hyp2f1_derivative(p.a2, p.b2, p.c2, x, 2);
    const double r = 1.0 / std::sqrt(x);
    H += C2 * r * F;
    dH += C2 * (-0.5 * r / x * F + r * dF);
    ddH += C2 * (0.75 * r / (x * x) * F - r / x * dF + r * ddF);
  }
  // P = (1 - x)^e
  const double P = std::pow(1 - x, e);
  const double dP = -e * std::pow(1 - x, e - 1);
  const double ddP = e * (e - 1) * std::pow(1 - x, e - 2);
  return {P * H, dP * H + P * dH, ddP * H + 2 * dP * dH + P * ddH};
}

/// (1-x)^e [C1 2F1(...; 3/2; x) + C2 x^{-1/2} 2F1(...; 1/2; x)].
inline double eigenfunction(Family family, double e, double C1, double C2, double x) {
  detail::require(x <= kHypWorkingRadius, "eigenfunction: x must be <= 0.8");
  detail::require(x > 0 || (C2 == 0 && x > -kHypWorkingRadius), "eigenfunction: x must be positive when C2 != 0");
  return eigen_jet(family, e, C1, C2, x).f;
}

/// max |D[f](x) - (eigenvalue + shift) f(x)| over xs, derivatives taken analytically.
inline double eigen_residual(Family family, double e, double C1, double C2, const std::vector<double>& xs,
                             double eigenvalue_shift = 0) {
  const double lambda = eigenvalue(family, e) + eigenvalue_shift;
  const bool xi = family == Family::Xi;
  double worst = 0;
  for (const double x : xs) {
    detail::require(x >= 0.05 && x <= 0.6, "eigen_residual: points must lie in [0.05, 0.6]");
    const Jet j = eigen_jet(family, e, C1, C2, x);
    const double q2 = 4 * x * (x - 1) * (x - 1);
    const double q1 = xi ? 2 * (x - 1) * (7 * x - 3) : 6 * (x - 1) * (3 * x - 1);
    const double q0 = xi ? 6 * x - 5 : 12 * x - 8;
    worst = std::max(worst, std::abs(q2 * j.ddf + q1 * j.df + q0 * j.f - lambda * j.f));
  }
  return worst;
}

/// Local exponents at x = 0 (always 0 and -1/2) or x = 1:
/// Xi (-1 +- sqrt lambda)/2, Lambda -1 +- sqrt(mu)/2. Larger real part first.
inline std::pair<Complex, Complex> indicial_exponents(Family family, int point, double ev) {
  detail::require(point == 0 || point == 1, "indicial_exponents: point must be 0 or 1");
  if (point == 0) return {Complex(0), Complex(-0.5)};
  const Complex r = std::sqrt(Complex(ev));
  if (family == Family::Xi) return {(-1.0 + r) / 2.0, (-1.0 - r) / 2.0};
  return {-1.0 + r / 2.0, -1.0 - r / 2.0};
}

}  // namespace hyperop
