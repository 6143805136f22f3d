#pragma once

// The auxiliary families (the normalized iterates of D from 1/4 and 1/7) and
// the general sequences P_n obtained by iterating D from c x - d.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyperop/diffop.hpp"
#include "hyperop/errors.hpp"
#include "hyperop/ratpoly.hpp"

namespace hyperop {

/// Degree above which sequence generation is considered beyond desk scale.
inline constexpr unsigned kDeskScaleCap = 100;

/// a_n = -1 / (8 n (2n+1)).
inline Rational scaling_a(unsigned n) {
  detail::require(n >= 1, "scaling_a: n must be >= 1");
  Rational r(-1, Integer(8) * n * (2 * n + 1));
  r.canonicalize();
  return r;
}

/// b_n = -(2^(2n+1) - 1) / ((2^(2n+3) - 1)(2n+1)(2n+2)).
inline Rational scaling_b(unsigned n) {
  detail::require(n >= 1, "scaling_b: n must be >= 1");
  Integer lo, hi;
  mpz_ui_pow_ui(lo.get_mpz_t(), 2, 2 * n + 1);
  mpz_ui_pow_ui(hi.get_mpz_t(), 2, 2 * n + 3);
  Rational r(-(lo - 1), (hi - 1) * (2 * n + 1) * (2 * n + 2));
  r.canonicalize();
  return r;
}

inline Rational family_scaling(Family family, unsigned n) {
  return family == Family::Xi ? scaling_a(n) : scaling_b(n);
}

/// First entry of the auxiliary family: 1/4 for Xi, 1/7 for Lambda.
inline Rational aux_initial(Family family) {
  return family == Family::Xi ? rational(1, 4) : rational(1, 7);
}

/// Multipliers A_n (Xi) or B_n (Lambda) applied at each step of the P recurrence.
struct Scaling {
  enum class Kind { Standard, AllOnes, Custom };
  Kind kind = Kind::Standard;
  std::vector<Rational> values;  // Custom only; values[n-1] multiplies step n

  static Scaling standard() { return {Kind::Standard, {}}; }
  static Scaling all_ones() { return {Kind::AllOnes, {}}; }
  static Scaling custom(std::vector<Rational> v) {
    for (const auto& s : v) detail::require(s != 0, "custom scaling values must be nonzero");
    return {Kind::Custom, std::move(v)};
  }
};

inline std::string to_string(Scaling::Kind k) {
  switch (k) {
    case Scaling::Kind::Standard: return "standard";
    case Scaling::Kind::AllOnes: return "ones";
    case Scaling::Kind::Custom: return "custom";
  }
  return "?";
}

struct FamilySpec {
  Family family = Family::Xi;
  Rational c = 1;
  Rational d = 0;
  Scaling scaling;
};

/// Multiplier used to go from P_n to P_{n+1}.
inline Rational scaling_value(const FamilySpec& spec, unsigned n) {
  switch (spec.scaling.kind) {
    case Scaling::Kind::Standard: return family_scaling(spec.family, n);
    case Scaling::Kind::AllOnes: return 1;
    case Scaling::Kind::Custom:
      detail::require(n >= 1 && n <= spec.scaling.values.size(),
                      "custom scaling has no value for step " + std::to_string(n));
      detail::require(spec.scaling.values[n - 1] != 0, "custom scaling values must be nonzero");
      return spec.scaling.values[n - 1];
  }
  return 1;
}

/// Immutable list of sequence entries, indexed from 1.
class SequenceCache {
 public:
  SequenceCache(Family family, std::vector<RatPoly> entries)
      : family_(family), entries_(std::move(entries)) {}

  Family family() const { return family_; }
  unsigned n_max() const { return static_cast<unsigned>(entries_.size()); }
  const RatPoly& at(unsigned n) const {
    detail::require(n >= 1 && n <= entries_.size(), "sequence index out of range");
    return entries_[n - 1];
  }
  const std::vector<RatPoly>& entries() const { return entries_; }

 private:
  Family family_;
  std::vector<RatPoly> entries_;
};

/// Xi~_1..Xi~_{n_max} (or Lambda~) via T_{n+1} = s_n D[T_n].
inline SequenceCache aux_family(Family family, unsigned n_max) {
  detail::require(n_max >= 1, "aux_family: n_max must be >= 1");
  const DiffOp D = make_D(family);
  std::vector<RatPoly> out;
  out.reserve(n_max);
  out.push_back(RatPoly::constant(aux_initial(family)));
  for (unsigned n = 1; n < n_max; ++n) out.push_back(family_scaling(family, n) * apply(D, out.back()));
  return SequenceCache(family, std::move(out));
}

/// P_1 = c x - d, P_{n+1} = S_n D[P_n].
inline SequenceCache iterate_P(const FamilySpec& spec, unsigned n_max) {
  detail::require(n_max >= 1, "iterate_P: n_max must be >= 1");
  const DiffOp D = make_D(spec.family);
  std::vector<RatPoly> out;
  out.reserve(n_max);
  out.push_back(RatPoly{-spec.d, spec.c});
  for (unsigned n = 1; n < n_max; ++n) out.push_back(scaling_value(spec, n) * apply(D, out.back()));
  return SequenceCache(spec.family, std::move(out));
}

/// The constants relating P_n to the auxiliary family:
/// P_n = kappa * prod_{k<n} (S_k / s_k) * (alpha_n T_{n+1} + beta T_n).
struct ClosedFormConstants {
  Rational kappa;
  Rational scaling_product;
  Rational alpha;
  Rational beta;
};

/// Coefficient of c in alpha_n before multiplying by c.
inline Rational alpha_factor(Family family, unsigned n) {
  if (family == Family::Xi) {
    Rational r(Integer(4) * n * (2 * n + 1), 3);
    r.canonicalize();
    return r;
  }
  Integer lo, hi;
  mpz_ui_pow_ui(lo.get_mpz_t(), 2, 2 * n + 1);
  mpz_ui_pow_ui(hi.get_mpz_t(), 2, 2 * n + 3);
  Rational r((hi - 1) * (2 * n + 1) * (2 * n + 2), 12 * (lo - 1));
  r.canonicalize();
  return r;
}

/// The offset beta = d - shift * c uses shift 5/6 (Xi) or 2/3 (Lambda).
inline Rational beta_shift(Family family) {
  return family == Family::Xi ? rational(5, 6) : rational(2, 3);
}

inline ClosedFormConstants closed_form_constants(const FamilySpec& spec, unsigned n,
                                                 std::optional<Rational> shift = std::nullopt) {
  detail::require(n >= 2, "closed form requires n >= 2");
  ClosedFormConstants k;
  k.kappa = spec.family == Family::Xi ? Rational(-4) : Rational(-7);
  k.scaling_product = 1;
  for (unsigned j = 1; j < n; ++j) {
    k.scaling_product *= scaling_value(spec, j) / family_scaling(spec.family, j);
  }
  k.alpha = alpha_factor(spec.family, n) * spec.c;
  k.beta = spec.d - shift.value_or(beta_shift(spec.family)) * spec.c;
  return k;
}

/// Right-hand side of the closed formula, assembled from the auxiliary family.
inline RatPoly closed_form_rhs(const FamilySpec& spec, unsigned n, const SequenceCache& aux,
                               std::optional<Rational> shift = std::nullopt) {
  detail::require(aux.family() == spec.family && aux.n_max() >= n + 1,
                  "closed_form_rhs: auxiliary cache too short");
  const ClosedFormConstants k = closed_form_constants(spec, n, shift);
  return (k.kappa * k.scaling_product) * (k.alpha * aux.at(n + 1) + k.beta * aux.at(n));
}

/// Exact equality of P_n with the closed formula. `shift` replaces the 5/6
/// (resp. 2/3) constant and exists for negative controls.
inline bool closed_form_check(const FamilySpec& spec, unsigned n,
                              std::optional<Rational> shift = std::nullopt) {
  detail::require(n >= 2, "closed_form_check: n must be >= 2");
  const SequenceCache p = iterate_P(spec, n);
  const SequenceCache aux = aux_family(spec.family, n + 1);
  return p.at(n) == closed_form_rhs(spec, n, aux, shift);
}

}  // namespace hyperop
