#pragma once

// Eulerian polynomials of types A and B, a brute-force descent oracle, the
// Eulerian form of the auxiliary families, and the ratios R_n with their limit.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <vector>

#include "hyperop/diffop.hpp"
#include "hyperop/errors.hpp"
#include "hyperop/families.hpp"
#include "hyperop/ratpoly.hpp"

namespace hyperop {

enum class EulerianType { A, B };

struct EulerianTable {
  EulerianType type = EulerianType::A;
  std::vector<RatPoly> polys;  // polys[m] for m = 0..m_max

  const RatPoly& at(unsigned m) const {
    detail::require(m < polys.size(), "Eulerian table too short");
    return polys[m];
  }
};

/// A_{m+1} = (1 + m t) A_m + t(1-t) A_m'      (type A)
/// B_{m+1} = (1 + (2m+1) t) B_m + 2t(1-t) B_m' (type B)
inline EulerianTable build_table(EulerianType type, unsigned m_max) {
  EulerianTable table{type, {}};
  table.polys.reserve(m_max + 1);
  table.polys.push_back(RatPoly::constant(1));
  const Rational k = type == EulerianType::A ? 1 : 2;
  const RatPoly t_one_minus_t{0, k, -k};
  for (unsigned m = 0; m < m_max; ++m) {
    const RatPoly& p = table.polys.back();
    const Rational slope = type == EulerianType::A ? Rational(m) : Rational(2 * m + 1);
    table.polys.push_back(RatPoly{1, slope} * p + t_one_minus_t * differentiate(p));
  }
  return table;
}

/// Sum of t^des over all permutations (A) or signed permutations (B) of m letters.
/// Type B descents count i in [0, m) with s(i) > s(i+1), where s(0) = 0.
inline RatPoly oracle_eulerian(EulerianType type, unsigned m) {
  detail::require(m <= 8, "oracle_eulerian: m must be <= 8");
  std::vector<long> counts(m + 1, 0);
  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 1);
  const unsigned sign_masks = type == EulerianType::A ? 1u : (1u << m);
  std::vector<int> s(m + 1, 0);
  do {
    for (unsigned mask = 0; mask < sign_masks; ++mask) {
      for (unsigned i = 0; i < m; ++i) s[i + 1] = (mask >> i & 1u) ? -perm[i] : perm[i];
      unsigned des = 0;
      for (unsigned i = (type == EulerianType::A ? 1u : 0u); i < m; ++i) {
        if (s[i] > s[i + 1]) ++des;
      }
      ++counts[des];
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::vector<Rational> coeffs(counts.begin(), counts.end());
  return RatPoly(std::move(coeffs));
}

/// Type and index of the Eulerian polynomial representing entry n of the family.
inline std::pair<EulerianType, unsigned> eulerian_index(Family family, unsigned n) {
  return family == Family::Xi ? std::pair{EulerianType::B, 2 * n - 1} : std::pair{EulerianType::A, 2 * n};
}

/// The Eulerian form of the auxiliary entry n at x = t, i.e. its value at t^2:
/// Xi:     (-1)^(n+1) / (2^(4n-1) (2n-1)!)       * (1+t)^(2n-1)/t * B_{2n-1}(u)
/// Lambda: (-1)^(n+1) / ((2^(2n+1)-1) (2n)!)     * (1+t)^(2n-1)/t * A_{2n}(u)
/// with u = -(1-t)/(1+t). Exact.
inline Rational closed_form_eval(Family family, unsigned n, const Rational& t) {
  detail::require(n >= 1, "closed_form_eval: n must be >= 1");
  detail::require(t != 0, "closed_form_eval: t must be nonzero");
  detail::require(t != -1, "closed_form_eval: t must differ from -1");
  const auto [type, m] = eulerian_index(family, n);
  const EulerianTable table = build_table(type, m);
  const Rational u = -(1 - t) / (1 + t);

  Integer fact;
  Rational pref;
  if (family == Family::Xi) {
    mpz_fac_ui(fact.get_mpz_t(), 2 * n - 1);
    Integer pow2;
    mpz_ui_pow_ui(pow2.get_mpz_t(), 2, 4 * n - 1);
    pref = Rational(1, pow2 * fact);
  } else {
    mpz_fac_ui(fact.get_mpz_t(), 2 * n);
    Integer pow2;
    mpz_ui_pow_ui(pow2.get_mpz_t(), 2, 2 * n + 1);
    pref = Rational(1, (pow2 - 1) * fact);
  }
  pref.canonicalize();
  if (n % 2 == 0) pref = -pref;

  Rational one_plus_t_pow = 1;
  for (unsigned k = 0; k < 2 * n - 1; ++k) one_plus_t_pow *= 1 + t;
  return pref * one_plus_t_pow / t * evaluate_rational(table.at(m), u);
}

inline void require_off_cut(Complex z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw PreconditionError("non-finite point");
  if (z.imag() == 0.0 && z.real() <= 1.0) {
    throw PreconditionError("point lies on the cut (-inf, 1]");
  }
}

/// u(z) = (sqrt z - 1)/(sqrt z + 1) with Re sqrt z > 0.
inline Complex u_map(Complex z) {
  require_off_cut(z);
  const Complex s = std::sqrt(z);
  return (s - 1.0) / (s + 1.0);
}

/// Double-precision Horner on an integer-coefficient Eulerian polynomial.
inline Complex eval_eulerian(const RatPoly& p, Complex u) {
  Complex acc{0.0, 0.0};
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * u + it->get_d();
  return acc;
}

/// R_n(z) = T_{n+1}(z) / T_n(z) through the Eulerian representation, in doubles.
inline Complex ratio_R(Family family, unsigned n, Complex z, const EulerianTable* table = nullptr) {
  detail::require(n >= 1, "ratio_R: n must be >= 1");
  const Complex u = u_map(z);
  const Complex s = std::sqrt(z);
  const auto [type, m] = eulerian_index(family, n);
  EulerianTable local;
  if (table == nullptr || table->type != type || table->polys.size() <= m + 2) {
    local = build_table(type, m + 2);
    table = &local;
  }
  const Complex den = eval_eulerian(table->at(m), u);
  if (den == Complex{0.0, 0.0}) throw PoleError("ratio_R: Eulerian denominator vanishes");
  const Complex num = eval_eulerian(table->at(m + 2), u);
  const double nn = n;
  double scale;
  if (family == Family::Xi) {
    scale = -1.0 / (16.0 * (2 * nn) * (2 * nn + 1));
  } else {
    const double lo = std::ldexp(1.0, static_cast<int>(2 * n + 1)) - 1.0;
    const double hi = std::ldexp(1.0, static_cast<int>(2 * n + 3)) - 1.0;
    scale = -lo / (hi * (2 * nn + 1) * (2 * nn + 2));
  }
  return scale * (1.0 + s) * (1.0 + s) * num / den;
}

/// R_n(z) as the quotient of consecutive auxiliary entries, exact up to one rounding.
inline Complex direct_ratio(const SequenceCache& aux, unsigned n, Complex z) {
  detail::require(n >= 1 && n + 1 <= aux.n_max(), "direct_ratio: cache too short");
  return exact_quotient(aux.at(n + 1), aux.at(n), z);
}

/// -1 / (log u(z))^2.
inline Complex limit_R(Complex z) {
  const Complex l = std::log(u_map(z));
  return -1.0 / (l * l);
}

}  // namespace hyperop
