#pragma once

// Second-order differential operators with polynomial coefficients, the
// first-order factors A_n and B_n, and the weighted inner products under which
// the two built-in operators are formally self-adjoint.

#include <array>
#include <string>

#include "hyperop/errors.hpp"
#include "hyperop/ratpoly.hpp"

namespace hyperop {

enum class Family { Xi, Lambda };

inline std::string to_string(Family f) { return f == Family::Xi ? "xi" : "lambda"; }

inline Family parse_family(const std::string& s) {
  if (s == "xi" || s == "Xi") return Family::Xi;
  if (s == "lambda" || s == "Lambda") return Family::Lambda;
  throw PreconditionError("unknown family '" + s + "' (expected xi or lambda)");
}

/// L[f] = q2 f'' + q1 f' + q0 f.
struct DiffOp {
  RatPoly q2;
  RatPoly q1;
  RatPoly q0;

  int order() const {
    if (!q2.is_zero()) return 2;
    if (!q1.is_zero()) return 1;
    return 0;
  }

  friend bool operator==(const DiffOp&, const DiffOp&) = default;
};

/// A_n[f] = 2(x-1) f' + n f.
inline DiffOp make_A(unsigned n) {
  return {RatPoly{}, RatPoly{-2, 2}, RatPoly::constant(n)};
}

/// B_n[f] = 2x(x-1) f' + ((n+1)x - 1) f.
inline DiffOp make_B(unsigned n) {
  return {RatPoly{}, RatPoly{0, -2, 2}, RatPoly{Rational(-1), Rational(n + 1)}};
}

inline DiffOp make_D(Family family) {
  // 4x(x-1)^2 is shared by both operators.
  const RatPoly q2{0, 4, -8, 4};
  if (family == Family::Xi) {
    return {q2, RatPoly{6, -20, 14}, RatPoly{-5, 6}};  // 2(x-1)(7x-3), 6x-5
  }
  return {q2, RatPoly{6, -24, 18}, RatPoly{-8, 12}};  // 6(x-1)(3x-1), 4(3x-2)
}

inline RatPoly apply(const DiffOp& L, const RatPoly& f) {
  const RatPoly d1 = differentiate(f);
  const RatPoly d2 = differentiate(d1);
  return L.q2 * d2 + L.q1 * d1 + L.q0 * f;
}

/// (outer o inner)[f] = outer[inner[f]], expanded by the product rule.
/// The composite must again have order <= 2.
inline DiffOp compose(const DiffOp& outer, const DiffOp& inner) {
  const RatPoly& m2 = inner.q2;
  const RatPoly& m1 = inner.q1;
  const RatPoly& m0 = inner.q0;
  const RatPoly m2d = differentiate(m2), m1d = differentiate(m1), m0d = differentiate(m0);
  const RatPoly m2dd = differentiate(m2d), m1dd = differentiate(m1d), m0dd = differentiate(m0d);

  // coefficients of f, f', ..., f'''' in inner[f], (inner[f])' and (inner[f])''
  const std::array<RatPoly, 5> g0{m0, m1, m2, RatPoly{}, RatPoly{}};
  const std::array<RatPoly, 5> g1{m0d, m1d + m0, m2d + m1, m2, RatPoly{}};
  const std::array<RatPoly, 5> g2{m0dd, m1dd + Rational(2) * m0d, m2dd + Rational(2) * m1d + m0,
                                  Rational(2) * m2d + m1, m2};
  std::array<RatPoly, 5> r;
  for (std::size_t k = 0; k < 5; ++k) r[k] = outer.q0 * g0[k] + outer.q1 * g1[k] + outer.q2 * g2[k];
  detail::require(r[3].is_zero() && r[4].is_zero(), "compose: composite order exceeds 2");
  return {r[2], r[1], r[0]};
}

inline DiffOp compose_AB(unsigned n) { return compose(make_A(n), make_B(n)); }

/// Coefficients of D[x^m] on x^(m+1), x^m and x^(m-1).
struct MonomialAction {
  Rational c_plus;
  Rational c_same;
  Rational c_minus;
  friend bool operator==(const MonomialAction&, const MonomialAction&) = default;
};

inline MonomialAction monomial_action(Family family, unsigned m) {
  const Rational mm(m);
  const Rational c_minus = m == 0 ? Rational(0) : Rational(4 * mm * mm + 2 * mm);
  if (family == Family::Xi) {
    return {4 * mm * mm + 10 * mm + 6, -(8 * mm * mm + 12 * mm + 5), c_minus};
  }
  return {4 * mm * mm + 14 * mm + 12, -(8 * mm * mm + 16 * mm + 8), c_minus};
}

/// Rejects anything but the two built-in operators.
inline MonomialAction monomial_action(const DiffOp& L, unsigned m) {
  if (L == make_D(Family::Xi)) return monomial_action(Family::Xi, m);
  if (L == make_D(Family::Lambda)) return monomial_action(Family::Lambda, m);
  throw PreconditionError("monomial_action: only the built-in Xi and Lambda operators are supported");
}

/// rho(x) = x^zero_exponent * (1 - x)^one_minus_exponent.
struct WeightSpec {
  Family family;
  Rational zero_exponent;
  unsigned one_minus_exponent;
};

inline WeightSpec weight_spec(Family family) {
  return {family, rational(1, 2), family == Family::Xi ? 0u : 1u};
}

/// Checks (rho q2)' = rho q1, i.e. x(1-x)(q1 - q2') = (a(1-x) - b x) q2 for
/// rho = x^a (1-x)^b, as an exact polynomial identity.
inline bool divergence_check(const DiffOp& L, Family family) {
  const WeightSpec w = weight_spec(family);
  const RatPoly x_one_minus_x{0, 1, -1};
  const RatPoly log_deriv_num{w.zero_exponent, -w.zero_exponent - Rational(w.one_minus_exponent)};
  return x_one_minus_x * (L.q1 - differentiate(L.q2)) == log_deriv_num * L.q2;
}

inline bool divergence_check(Family family) { return divergence_check(make_D(family), family); }

/// int_0^1 x^(k + 1/2) (1-x)^b dx for the family weight.
inline Rational weighted_moment(Family family, unsigned k) {
  const unsigned b = weight_spec(family).one_minus_exponent;
  Rational sum = 0;
  long binom = 1;
  for (unsigned j = 0; j <= b; ++j) {
    const Rational term(2, 2 * (k + j) + 3);
    if (j % 2 == 0) sum += binom * term; else sum -= binom * term;
    binom = binom * static_cast<long>(b - j) / static_cast<long>(j + 1);
  }
  return sum;
}

inline Rational inner_product(const RatPoly& f, const RatPoly& g, Family family) {
  const RatPoly h = f * g;
  Rational sum = 0;
  for (std::size_t k = 0; k < h.coeffs().size(); ++k) {
    if (h.coeffs()[k] != 0) sum += h.coeffs()[k] * weighted_moment(family, static_cast<unsigned>(k));
  }
  return sum;
}

/// <D f, g> - <f, D g>; identically zero for polynomial arguments.
inline Rational selfadjoint_defect(const RatPoly& f, const RatPoly& g, Family family) {
  const DiffOp D = make_D(family);
  return inner_product(apply(D, f), g, family) - inner_product(f, apply(D, g), family);
}

}  // namespace hyperop
