#pragma once

// Exact rational scalars and dense univariate polynomials over Q.

#include <gmpxx.h>

#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hyperop/detail/zpoly.hpp"
#include "hyperop/errors.hpp"

namespace hyperop {

/// Exact rational. GMP keeps it canonical: positive denominator, reduced, zero as 0/1.
using Rational = mpq_class;
using Integer = mpz_class;
using Complex = std::complex<double>;

inline Rational rational(long num, long den = 1) {
  detail::require(den != 0, "rational: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Parses "p", "-p" or "p/q" with integer p, q and q != 0.
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  const auto bad = [&] { return PreconditionError("not a rational number: '" + s + "'"); };
  if (s.empty()) throw bad();
  const auto slash = s.find('/');
  const auto digits_ok = [](std::string_view part, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !part.empty() && (part[0] == '-' || part[0] == '+')) i = 1;
    if (i >= part.size()) return false;
    for (; i < part.size(); ++i) {
      if (part[i] < '0' || part[i] > '9') return false;
    }
    return true;
  };
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!digits_ok(num, true) || !digits_ok(den, false)) throw bad();
  if (num[0] == '+') num.erase(0, 1);
  Integer n(num, 10);
  Integer d(den, 10);
  if (d == 0) throw bad();
  Rational r(n, d);
  r.canonicalize();
  return r;
}

/// Always "num/den", denominator included even when it is 1.
inline std::string to_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline double to_double(const Rational& r) { return r.get_d(); }

/// Exact rational value of a finite double.
inline Rational exact_rational(double x) { return Rational(x); }

/// Dense polynomial with exact rational coefficients, coeffs()[k] multiplies x^k.
/// The coefficient vector never ends in a zero; the zero polynomial is empty.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }
  RatPoly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { normalize(); }

  static RatPoly constant(const Rational& c) { return RatPoly(std::vector<Rational>{c}); }
  static RatPoly monomial(const Rational& c, std::size_t power) {
    std::vector<Rational> v(power + 1);
    v[power] = c;
    return RatPoly(std::move(v));
  }
  static RatPoly x() { return monomial(1, 1); }
  /// lc * prod (x - r).
  static RatPoly from_roots(const std::vector<Rational>& roots, const Rational& lc = 1) {
    RatPoly p = constant(lc);
    for (const auto& r : roots) p = p * RatPoly{-r, Rational(1)};
    return p;
  }

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Coefficient of x^k, zero beyond the degree.
  Rational coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }
  Rational leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }

  friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.coeffs_ == b.coeffs_; }

  friend RatPoly operator+(const RatPoly& a, const RatPoly& b) {
    std::vector<Rational> r(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t k = 0; k < a.coeffs_.size(); ++k) r[k] = a.coeffs_[k];
    for (std::size_t k = 0; k < b.coeffs_.size(); ++k) r[k] += b.coeffs_[k];
    return RatPoly(std::move(r));
  }
  friend RatPoly operator-(const RatPoly& a) {
    std::vector<Rational> r(a.coeffs_);
    for (auto& c : r) c = -c;
    return RatPoly(std::move(r));
  }
  friend RatPoly operator-(const RatPoly& a, const RatPoly& b) { return a + (-b); }
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> r(a.coeffs_.size() + b.coeffs_.size() - 1);
    Rational t;
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        t = a.coeffs_[i] * b.coeffs_[j];
        r[i + j] += t;
      }
    }
    return RatPoly(std::move(r));
  }
  friend RatPoly operator*(const Rational& s, const RatPoly& p) {
    if (s == 0) return {};
    std::vector<Rational> r(p.coeffs_);
    for (auto& c : r) c *= s;
    return RatPoly(std::move(r));
  }
  friend RatPoly operator*(const RatPoly& p, const Rational& s) { return s * p; }
  friend RatPoly operator/(const RatPoly& p, const Rational& s) {
    detail::require(s != 0, "polynomial division by zero scalar");
    return (1 / Rational(s)) * p;
  }

 private:
  void normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Rational> coeffs_;
};

enum class ArithKind { Add, Sub, Mul };

inline RatPoly arith(const RatPoly& f, const RatPoly& g, ArithKind kind) {
  switch (kind) {
    case ArithKind::Add: return f + g;
    case ArithKind::Sub: return f - g;
    case ArithKind::Mul: return f * g;
  }
  return {};
}

inline RatPoly differentiate(const RatPoly& f) {
  if (f.degree() <= 0) return {};
  std::vector<Rational> d(f.coeffs().size() - 1);
  for (std::size_t k = 1; k < f.coeffs().size(); ++k) {
    d[k - 1] = f.coeffs()[k] * static_cast<unsigned long>(k);
  }
  return RatPoly(std::move(d));
}

inline Rational evaluate_rational(const RatPoly& f, const Rational& x) {
  Rational acc = 0;
  for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

/// Double-precision Horner. Coefficients are pre-scaled by a common power of
/// two so that very large or very small exact coefficients do not overflow.
inline Complex evaluate_complex(const RatPoly& f, Complex z) {
  if (f.is_zero()) return {0.0, 0.0};
  long top = 0;
  bool first = true;
  for (const auto& c : f.coeffs()) {
    if (c == 0) continue;
    const long e = static_cast<long>(mpz_sizeinbase(c.get_num_mpz_t(), 2)) -
                   static_cast<long>(mpz_sizeinbase(c.get_den_mpz_t(), 2));
    if (first || e > top) top = e;
    first = false;
  }
  Complex acc{0.0, 0.0};
  Rational scaled;
  for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) {
    if (top >= 0) {
      mpq_div_2exp(scaled.get_mpq_t(), it->get_mpq_t(), static_cast<mp_bitcnt_t>(top));
    } else {
      mpq_mul_2exp(scaled.get_mpq_t(), it->get_mpq_t(), static_cast<mp_bitcnt_t>(-top));
    }
    acc = acc * z + scaled.get_d();
  }
  return {std::ldexp(acc.real(), static_cast<int>(top)), std::ldexp(acc.imag(), static_cast<int>(top))};
}

/// Exact Gaussian rational, used to evaluate at dyadic complex points without rounding.
struct GaussianRational {
  Rational re;
  Rational im;

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianRational operator*(const Rational& s, const GaussianRational& a) {
    return {s * a.re, s * a.im};
  }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    const Rational n = b.re * b.re + b.im * b.im;
    if (n == 0) throw PoleError("division by zero Gaussian rational");
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
  }
  bool is_zero() const { return re == 0 && im == 0; }
  Complex to_complex() const { return {re.get_d(), im.get_d()}; }
};

inline GaussianRational evaluate_exact(const RatPoly& f, const GaussianRational& z) {
  GaussianRational acc{0, 0};
  for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) {
    acc = acc * z;
    acc.re += *it;
  }
  return acc;
}

inline GaussianRational exact_point(Complex z) {
  detail::require(std::isfinite(z.real()) && std::isfinite(z.imag()), "non-finite evaluation point");
  return {exact_rational(z.real()), exact_rational(z.imag())};
}

/// f(z) / g(z) computed exactly at the dyadic point z and rounded once.
inline Complex exact_quotient(const RatPoly& f, const RatPoly& g, Complex z) {
  const auto zz = exact_point(z);
  const auto den = evaluate_exact(g, zz);
  if (den.is_zero()) throw PoleError("exact_quotient: denominator vanishes");
  return (evaluate_exact(f, zz) / den).to_complex();
}

/// f'(z) / f(z), exact up to the final rounding.
inline Complex log_derivative(const RatPoly& f, Complex z) {
  return exact_quotient(differentiate(f), f, z);
}

/// g(x) = f(x^2).
inline RatPoly compose_square(const RatPoly& f) {
  if (f.is_zero()) return {};
  std::vector<Rational> r(2 * f.coeffs().size() - 1);
  for (std::size_t k = 0; k < f.coeffs().size(); ++k) r[2 * k] = f.coeffs()[k];
  return RatPoly(std::move(r));
}

/// Quotient and remainder over Q.
inline std::pair<RatPoly, RatPoly> divmod(const RatPoly& f, const RatPoly& g) {
  detail::require(!g.is_zero(), "divmod: division by the zero polynomial");
  if (f.degree() < g.degree()) return {RatPoly{}, f};
  std::vector<Rational> rem(f.coeffs());
  std::vector<Rational> quo(f.coeffs().size() - g.coeffs().size() + 1);
  const Rational lc_inv = 1 / g.leading();
  const std::size_t gn = g.coeffs().size();
  Rational t;
  for (std::size_t i = quo.size(); i-- > 0;) {
    const Rational q = rem[i + gn - 1] * lc_inv;
    quo[i] = q;
    if (q == 0) continue;
    for (std::size_t j = 0; j < gn; ++j) {
      t = q * g.coeffs()[j];
      rem[i + j] -= t;
    }
  }
  rem.resize(gn - 1);
  return {RatPoly(std::move(quo)), RatPoly(std::move(rem))};
}

/// Integer coefficient vector of c * f with c > 0 chosen to make it primitive.
inline detail::ZPoly to_primitive_integer(const RatPoly& f) {
  Integer l = 1;
  for (const auto& c : f.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  detail::ZPoly z(f.coeffs().size());
  for (std::size_t k = 0; k < z.size(); ++k) {
    z[k] = f.coeffs()[k].get_num() * (l / f.coeffs()[k].get_den());
  }
  return detail::primitive(std::move(z));
}

inline RatPoly from_integer(const detail::ZPoly& z) {
  std::vector<Rational> v(z.size());
  for (std::size_t k = 0; k < z.size(); ++k) v[k] = Rational(z[k]);
  return RatPoly(std::move(v));
}

/// Integer-primitive associate with positive leading coefficient.
inline RatPoly primitive_part(const RatPoly& f) { return from_integer(to_primitive_integer(f)); }

/// gcd normalized as an integer-primitive polynomial with positive leading coefficient.
inline RatPoly gcd(const RatPoly& f, const RatPoly& g) {
  return from_integer(detail::subresultant_gcd(to_primitive_integer(f), to_primitive_integer(g)));
}

/// f / gcd(f, f'), integer-primitive with positive leading coefficient.
inline RatPoly squarefree_part(const RatPoly& f) {
  detail::require(!f.is_zero(), "squarefree_part: zero polynomial");
  if (f.degree() == 0) return RatPoly::constant(1);
  const auto zf = to_primitive_integer(f);
  const auto zd = detail::derivative(zf);
  if (detail::certified_coprime(zf, zd)) return from_integer(zf);
  const RatPoly g = from_integer(detail::subresultant_gcd(zf, zd));
  return primitive_part(divmod(from_integer(zf), g).first);
}

/// Yun's decomposition: result[i] is the (integer-primitive) product of the
/// distinct linear factors of multiplicity i + 1. Trailing entries are nonconstant.
inline std::vector<RatPoly> squarefree_decomposition(const RatPoly& f) {
  detail::require(!f.is_zero(), "squarefree_decomposition: zero polynomial");
  std::vector<RatPoly> out;
  if (f.degree() == 0) return out;
  const auto zf = to_primitive_integer(f);
  const auto zd = detail::derivative(zf);
  if (detail::certified_coprime(zf, zd)) return {from_integer(zf)};

  const RatPoly pf = from_integer(zf);
  const RatPoly a0 = gcd(pf, from_integer(zd));
  RatPoly b = divmod(pf, a0).first;
  RatPoly c = divmod(from_integer(zd), a0).first;
  RatPoly d = c - differentiate(b);
  while (b.degree() > 0) {
    const RatPoly a = gcd(b, d);
    out.push_back(primitive_part(a));
    b = divmod(b, a).first;
    c = divmod(d, a).first;
    d = c - differentiate(b);
  }
  while (!out.empty() && out.back().degree() <= 0) out.pop_back();
  return out;
}

}  // namespace hyperop
