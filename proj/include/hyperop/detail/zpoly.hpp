#pragma once

// Dense integer polynomials (lowest degree first) used as the exact working
// representation for gcds, remainder sequences and sign evaluation.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

namespace hyperop::detail {

using ZPoly = std::vector<mpz_class>;

inline void trim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int degree(const ZPoly& p) { return static_cast<int>(p.size()) - 1; }

inline mpz_class content(const ZPoly& p) {
  mpz_class g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

/// Content removed and leading coefficient made positive.
inline ZPoly primitive(ZPoly p) {
  trim(p);
  if (p.empty()) return p;
  mpz_class g = content(p);
  if (p.back() < 0) g = -g;
  if (g != 1) {
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
  return p;
}

inline ZPoly derivative(const ZPoly& p) {
  if (p.size() <= 1) return {};
  ZPoly d(p.size() - 1);
  for (std::size_t k = 1; k < p.size(); ++k) d[k - 1] = p[k] * static_cast<unsigned long>(k);
  return d;
}

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b.
inline ZPoly prem(ZPoly a, const ZPoly& b) {
  const int n = degree(b);
  const int m = degree(a);
  if (m < n) return a;
  const mpz_class& lb = b.back();
  int steps = 0;
  mpz_class t;
  while (degree(a) >= n && !a.empty()) {
    const int shift = degree(a) - n;
    const mpz_class la = a.back();
    for (auto& c : a) c *= lb;
    for (int k = 0; k <= n; ++k) {
      t = la * b[k];
      a[k + shift] -= t;
    }
    trim(a);
    ++steps;
  }
  const int missing = m - n + 1 - steps;
  if (missing > 0 && !a.empty()) {
    mpz_class f;
    mpz_pow_ui(f.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(missing));
    for (auto& c : a) c *= f;
  }
  return a;
}

/// gcd over Z[x] by the subresultant remainder sequence; primitive, positive leading coefficient.
inline ZPoly subresultant_gcd(ZPoly a, ZPoly b) {
  a = primitive(std::move(a));
  b = primitive(std::move(b));
  if (a.empty()) return b;
  if (b.empty()) return a;
  if (degree(a) < degree(b)) std::swap(a, b);
  mpz_class g = 1;
  mpz_class h = 1;
  mpz_class tmp;
  for (;;) {
    const int delta = degree(a) - degree(b);
    ZPoly r = prem(a, b);
    if (r.empty()) return primitive(std::move(b));
    if (degree(r) == 0) return ZPoly{1};
    a = std::move(b);
    // divisor g * h^delta
    mpz_pow_ui(tmp.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta));
    tmp *= g;
    for (auto& c : r) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), tmp.get_mpz_t());
    b = std::move(r);
    g = a.back();
    if (delta > 0) {
      mpz_class num, den;
      mpz_pow_ui(num.get_mpz_t(), g.get_mpz_t(), static_cast<unsigned long>(delta));
      mpz_pow_ui(den.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta - 1));
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
  }
}

namespace modp {

inline std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

inline std::vector<std::uint64_t> reduce(const ZPoly& a, std::uint64_t p) {
  std::vector<std::uint64_t> r(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    r[k] = mpz_fdiv_ui(a[k].get_mpz_t(), static_cast<unsigned long>(p));
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

/// Degree of gcd(a, b) in F_p[x]; -1 when both vanish.
inline int gcd_degree(std::vector<std::uint64_t> a, std::vector<std::uint64_t> b, std::uint64_t p) {
  auto trim_mod = [](std::vector<std::uint64_t>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  };
  while (!b.empty()) {
    // a <- a mod b
    const std::uint64_t inv = pow_mod(b.back(), p - 2, p);
    while (a.size() >= b.size()) {
      const std::uint64_t q = a.back() * inv % p;
      const std::size_t shift = a.size() - b.size();
      for (std::size_t k = 0; k < b.size(); ++k) {
        a[k + shift] = (a[k + shift] + (p - q) * b[k]) % p;
      }
      trim_mod(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return static_cast<int>(a.size()) - 1;
}

}  // namespace modp

/// True only when gcd(a, b) = 1 is certified by a modular image whose reduction
/// keeps both leading coefficients. False means "not certified", not "shares a factor".
inline bool certified_coprime(const ZPoly& a, const ZPoly& b) {
  static constexpr std::uint64_t kPrimes[] = {2147483647ULL, 2147483629ULL, 2147483587ULL};
  for (const std::uint64_t p : kPrimes) {
    auto ra = modp::reduce(a, p);
    auto rb = modp::reduce(b, p);
    if (ra.size() != a.size() || rb.size() != b.size()) continue;
    if (modp::gcd_degree(std::move(ra), std::move(rb), p) == 0) return true;
  }
  return false;
}

/// Sign of p(num / den) for den > 0, via the homogenized integer Horner sum.
inline int sign_at(const ZPoly& p, const mpz_class& num, const mpz_class& den) {
  if (p.empty()) return 0;
  mpz_class acc = p.back();
  mpz_class den_pow = 1;
  for (int k = degree(p) - 1; k >= 0; --k) {
    den_pow *= den;
    acc *= num;
    acc += p[k] * den_pow;
  }
  return sgn(acc);
}

inline int sign_at(const ZPoly& p, const mpq_class& x) {
  return sign_at(p, x.get_num(), x.get_den());
}

/// Sign of the leading behaviour at +infinity (positive == true) or -infinity.
inline int sign_at_infinity(const ZPoly& p, bool positive) {
  if (p.empty()) return 0;
  const int s = sgn(p.back());
  return (positive || degree(p) % 2 == 0) ? s : -s;
}

}  // namespace hyperop::detail
