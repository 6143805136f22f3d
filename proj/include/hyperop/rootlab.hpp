#pragma once

// Exact real-root isolation, Sturm counting, hyperbolicity and confinement
// verdicts, interlacing classification and the proper-position test.
//
// Isolation runs Descartes' rule of signs with bisection (Vincent-Collins-Akritas)
// on each squarefree factor, then refines by exact sign bisection. Sturm
// sequences give an independent count used for the hyperbolicity verdicts.

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyperop/detail/zpoly.hpp"
#include "hyperop/diffop.hpp"
#include "hyperop/errors.hpp"
#include "hyperop/families.hpp"
#include "hyperop/ratpoly.hpp"

namespace hyperop {

namespace detail {

/// p(x) -> p(x + 1), in place.
inline void taylor_shift_one(ZPoly& p) {
  const int n = degree(p);
  for (int i = 0; i < n; ++i) {
    for (int j = n - 1; j >= i; --j) p[j] += p[j + 1];
  }
}

inline int sign_variations(const ZPoly& p) {
  int v = 0;
  int last = 0;
  for (const auto& c : p) {
    const int s = sgn(c);
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

/// Descartes bound for the number of roots of q in (0, 1).
inline int descartes_unit(const ZPoly& q) {
  ZPoly r(q.rbegin(), q.rend());
  taylor_shift_one(r);
  return sign_variations(r);
}

/// Divides out the largest power of two common to all coefficients.
inline void strip_twos(ZPoly& p) {
  mp_bitcnt_t z = ~mp_bitcnt_t{0};
  for (const auto& c : p) {
    if (c != 0) z = std::min(z, mpz_scan1(c.get_mpz_t(), 0));
  }
  if (z == 0 || z == ~mp_bitcnt_t{0}) return;
  for (auto& c : p) mpz_tdiv_q_2exp(c.get_mpz_t(), c.get_mpz_t(), z);
}

/// 2^deg * q(x / 2), with powers of two stripped.
inline ZPoly halve(const ZPoly& q) {
  ZPoly r(q);
  const int d = degree(r);
  for (int k = 0; k < d; ++k) mpz_mul_2exp(r[k].get_mpz_t(), r[k].get_mpz_t(), static_cast<mp_bitcnt_t>(d - k));
  strip_twos(r);
  return r;
}

/// s with every root of p bounded by 2^s in absolute value (Fujiwara's bound on bit lengths).
inline long root_bound_log2(const ZPoly& p) {
  const int d = degree(p);
  const long bd = static_cast<long>(mpz_sizeinbase(p.back().get_mpz_t(), 2));
  long best = 0;
  for (int k = 0; k < d; ++k) {
    if (p[k] == 0) continue;
    const long bk = static_cast<long>(mpz_sizeinbase(p[k].get_mpz_t(), 2));
    const long num = bk - bd + 1;
    const long den = d - k;
    const long e = num >= 0 ? (num + den - 1) / den : -((-num) / den);
    best = std::max(best, e);
  }
  return best + 2;
}

inline Rational dyadic(const Integer& a, long e) {
  Rational r(a);
  if (e >= 0) {
    mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
  } else {
    mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
  }
  return r;
}

}  // namespace detail

/// Isolating interval (lo, hi) for one distinct real root, or the exact root when lo == hi.
struct RootInterval {
  Rational lo;
  Rational hi;
  unsigned multiplicity = 1;

  bool exact() const { return lo == hi; }
  Rational midpoint() const { return (lo + hi) / 2; }
  double approx() const { return midpoint().get_d(); }
  Rational width() const { return hi - lo; }
};

/// Sorted, pairwise disjoint isolating intervals. Each interval remembers the
/// squarefree integer factor it isolates so that it can be refined later.
class RootSet {
 public:
  using Source = std::shared_ptr<const detail::ZPoly>;

  RootSet() = default;

  std::size_t size() const { return intervals_.size(); }
  bool empty() const { return intervals_.empty(); }
  const RootInterval& operator[](std::size_t i) const { return intervals_[i]; }
  const std::vector<RootInterval>& intervals() const { return intervals_; }
  const Source& source(std::size_t i) const { return sources_[i]; }

  unsigned total_multiplicity() const {
    unsigned s = 0;
    for (const auto& iv : intervals_) s += iv.multiplicity;
    return s;
  }

  /// Halves interval i (no-op once exact).
  void refine(std::size_t i) { bisect(intervals_[i], *sources_[i]); }

  void refine_to(std::size_t i, const Rational& width) {
    while (!intervals_[i].exact() && intervals_[i].width() > width) refine(i);
  }

  std::vector<double> approx() const {
    std::vector<double> out;
    for (const auto& iv : intervals_) out.push_back(iv.approx());
    return out;
  }

  /// Midpoints repeated by multiplicity.
  std::vector<double> approx_with_multiplicity() const {
    std::vector<double> out;
    for (const auto& iv : intervals_) out.insert(out.end(), iv.multiplicity, iv.approx());
    return out;
  }

  void push(RootInterval iv, Source src) {
    intervals_.push_back(std::move(iv));
    sources_.push_back(std::move(src));
  }

  static void bisect(RootInterval& iv, const detail::ZPoly& src) {
    if (iv.exact()) return;
    const Rational mid = iv.midpoint();
    const int sm = detail::sign_at(src, mid);
    // sign just right of lo; lo may itself be a (simple) root of src
    int sl = detail::sign_at(src, iv.lo);
    if (sl == 0) sl = detail::sign_at(detail::derivative(src), iv.lo);
    if (sm == 0) {
      iv.lo = iv.hi = mid;
    } else if (sm == sl) {
      iv.lo = mid;
    } else {
      iv.hi = mid;
    }
  }

  /// Sorts and separates intervals coming from coprime factors.
  void normalize() {
    std::vector<std::size_t> order(intervals_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    for (bool changed = true; changed;) {
      changed = false;
      std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return less(intervals_[a], intervals_[b]);
      });
      for (std::size_t k = 1; k < order.size(); ++k) {
        RootInterval& a = intervals_[order[k - 1]];
        RootInterval& b = intervals_[order[k]];
        if (overlapping(a, b)) {
          bisect(a, *sources_[order[k - 1]]);
          bisect(b, *sources_[order[k]]);
          changed = true;
        }
      }
    }
    std::vector<RootInterval> iv;
    std::vector<Source> src;
    for (const std::size_t i : order) {
      iv.push_back(intervals_[i]);
      src.push_back(sources_[i]);
    }
    intervals_ = std::move(iv);
    sources_ = std::move(src);
  }

  static bool less(const RootInterval& a, const RootInterval& b) {
    if (a.lo != b.lo) return a.lo < b.lo;
    return a.hi < b.hi;
  }

  /// Whether the two intervals could hold the same point.
  static bool overlapping(const RootInterval& a, const RootInterval& b) {
    if (a.exact() && b.exact()) return a.lo == b.lo;
    if (a.exact()) return b.lo < a.lo && a.lo < b.hi;
    if (b.exact()) return a.lo < b.lo && b.lo < a.hi;
    return a.lo < b.hi && b.lo < a.hi;
  }

 private:
  std::vector<RootInterval> intervals_;
  std::vector<Source> sources_;
};

/// Default isolating width 2^-40.
inline Rational default_width() {
  Rational w(1);
  mpq_div_2exp(w.get_mpq_t(), w.get_mpq_t(), 40);
  return w;
}

namespace detail {

/// Positive real roots of a squarefree p with p(0) != 0, appended to `out`.
/// `negate` maps them to the negative axis.
inline void isolate_positive(const ZPoly& p, bool negate, const RootSet::Source& src,
                             std::vector<RootInterval>& out) {
  const long s = root_bound_log2(p);
  // q0(y) = p(2^s y), so the roots of interest are in (0, 1)
  ZPoly q0(p);
  for (int k = 0; k <= degree(q0); ++k) {
    mpz_mul_2exp(q0[k].get_mpz_t(), q0[k].get_mpz_t(), static_cast<mp_bitcnt_t>(s * k));
  }
  strip_twos(q0);

  struct Node {
    ZPoly q;
    long depth;
    Integer a;
  };
  std::vector<Node> stack;
  stack.push_back({std::move(q0), 0, 0});
  auto emit = [&](const Integer& a0, const Integer& a1, long depth, bool exact) {
    Rational lo = dyadic(a0, s - depth);
    Rational hi = exact ? lo : dyadic(a1, s - depth);
    if (negate) {
      Rational t = -hi;
      hi = -lo;
      lo = std::move(t);
    }
    out.push_back({lo, hi, 1});
  };
  (void)src;
  while (!stack.empty()) {
    Node node = std::move(stack.back());
    stack.pop_back();
    if (degree(node.q) <= 0) continue;
    const int v = descartes_unit(node.q);
    if (v == 0) continue;
    if (v == 1) {
      emit(node.a, node.a + 1, node.depth, false);
      continue;
    }
    ZPoly left = halve(node.q);
    mpz_class at_one = 0;
    for (const auto& c : left) at_one += c;
    ZPoly right(left);
    taylor_shift_one(right);
    const Integer a2 = node.a * 2;
    if (at_one == 0) {
      emit(a2 + 1, a2 + 1, node.depth + 1, true);
      right.erase(right.begin());
    }
    strip_twos(right);
    stack.push_back({std::move(right), node.depth + 1, a2 + 1});
    stack.push_back({std::move(left), node.depth + 1, a2});
  }
}

/// Isolating intervals for the distinct real roots of a squarefree integer polynomial.
inline std::vector<RootInterval> isolate_squarefree(const RootSet::Source& src) {
  const ZPoly& p = *src;
  std::vector<RootInterval> out;
  if (degree(p) <= 0) return out;
  ZPoly q(p);
  if (q[0] == 0) {
    out.push_back({Rational(0), Rational(0), 1});
    q.erase(q.begin());
  }
  if (degree(q) <= 0) return out;
  isolate_positive(q, false, src, out);
  ZPoly neg(q);
  for (std::size_t k = 1; k < neg.size(); k += 2) neg[k] = -neg[k];
  isolate_positive(neg, true, src, out);
  return out;
}

}  // namespace detail

/// Isolates every distinct real root of f, refined to width <= `width`.
inline RootSet isolate(const RatPoly& f, const Rational& width = default_width()) {
  detail::require(!f.is_zero(), "isolate: zero polynomial");
  detail::require(width > 0, "isolate: width must be positive");
  RootSet rs;
  const auto factors = squarefree_decomposition(f);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].degree() <= 0) continue;
    auto src = std::make_shared<const detail::ZPoly>(to_primitive_integer(factors[i]));
    for (auto iv : detail::isolate_squarefree(src)) {
      iv.multiplicity = static_cast<unsigned>(i + 1);
      while (!iv.exact() && iv.width() > width) RootSet::bisect(iv, *src);
      rs.push(std::move(iv), src);
    }
  }
  rs.normalize();
  return rs;
}

/// Sturm sequence of a polynomial, built as a primitive remainder sequence with
/// the signs corrected so that it agrees with the Euclidean negated remainders.
class SturmSequence {
 public:
  explicit SturmSequence(const detail::ZPoly& p) {
    detail::ZPoly a = detail::primitive(p);
    if (a.empty()) return;
    seq_.push_back(a);
    if (detail::degree(a) == 0) return;
    seq_.push_back(detail::primitive(detail::derivative(a)));
    for (;;) {
      const detail::ZPoly& x = seq_[seq_.size() - 2];
      const detail::ZPoly& y = seq_.back();
      if (detail::degree(y) == 0) break;
      const int delta = detail::degree(x) - detail::degree(y);
      detail::ZPoly r = detail::prem(x, y);
      if (r.empty()) break;
      const bool flip = !(y.back() < 0 && (delta + 1) % 2 == 1);
      mpz_class g = detail::content(r);
      for (auto& c : r) {
        mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
        if (flip) c = -c;
      }
      seq_.push_back(std::move(r));
    }
  }

  explicit SturmSequence(const RatPoly& f) : SturmSequence(to_primitive_integer(f)) {}

  const std::vector<detail::ZPoly>& polys() const { return seq_; }

  int variations_at(const Rational& x) const {
    std::vector<int> s;
    for (const auto& p : seq_) s.push_back(detail::sign_at(p, x));
    return count(s);
  }

  int variations_at_infinity(bool positive) const {
    std::vector<int> s;
    for (const auto& p : seq_) s.push_back(detail::sign_at_infinity(p, positive));
    return count(s);
  }

  /// Distinct real roots in (a, b].
  int count_in(const Rational& a, const Rational& b) const { return variations_at(a) - variations_at(b); }

  int count_real() const { return variations_at_infinity(false) - variations_at_infinity(true); }

 private:
  static int count(const std::vector<int>& s) {
    int v = 0, last = 0;
    for (const int x : s) {
      if (x == 0) continue;
      if (last != 0 && x != last) ++v;
      last = x;
    }
    return v;
  }

  std::vector<detail::ZPoly> seq_;
};

/// Number of distinct real roots.
inline int count_real_roots(const RatPoly& f) {
  detail::require(!f.is_zero(), "count_real_roots: zero polynomial");
  return SturmSequence(squarefree_part(f)).count_real();
}

/// All roots real, counted with multiplicity. Constants count as hyperbolic.
inline bool is_hyperbolic(const RatPoly& f) {
  detail::require(!f.is_zero(), "is_hyperbolic: zero polynomial");
  if (f.degree() == 0) return true;
  const auto factors = squarefree_decomposition(f);
  int total = 0;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].degree() <= 0) continue;
    total += static_cast<int>(i + 1) * SturmSequence(factors[i]).count_real();
  }
  return total == f.degree();
}

/// Every real root lies strictly inside (0, b).
inline bool confined(const RatPoly& f, const Rational& b) {
  detail::require(!f.is_zero(), "confined: zero polynomial");
  detail::require(b > 0, "confined: b must be positive");
  if (f.degree() == 0) return true;
  const detail::ZPoly g = to_primitive_integer(squarefree_part(f));
  if (detail::sign_at(g, Rational(0)) == 0 || detail::sign_at(g, b) == 0) return false;
  const SturmSequence s(g);
  return s.count_real() == s.count_in(Rational(0), b);
}

enum class InterlaceKind { APattern, BPattern, Fails };

inline std::string to_string(InterlaceKind k) {
  switch (k) {
    case InterlaceKind::APattern: return "A-pattern";
    case InterlaceKind::BPattern: return "B-pattern";
    case InterlaceKind::Fails: return "fails";
  }
  return "?";
}

struct InterlaceVerdict {
  InterlaceKind kind = InterlaceKind::Fails;
  /// Adjacent roots (interval midpoints) where alternation breaks; set whenever kind is Fails.
  std::optional<std::pair<Rational, Rational>> witness;
};

inline constexpr int kInterlaceRounds = 200;

namespace detail {

struct MergedRoot {
  RootInterval where;
  unsigned f_mult = 0;
  unsigned g_mult = 0;
};

/// Some root of the squarefree h lies in both (possibly degenerate) intervals.
inline bool shares_root(const ZPoly& h, const RootInterval& a, const RootInterval& b) {
  if (a.exact()) return sign_at(h, a.lo) == 0;
  if (b.exact()) return sign_at(h, b.lo) == 0;
  const Rational lo = std::max(a.lo, b.lo);
  const Rational hi = std::min(a.hi, b.hi);
  if (!(lo < hi)) return false;
  const SturmSequence s(h);
  return s.count_in(lo, hi) - (sign_at(h, hi) == 0 ? 1 : 0) > 0;
}

/// Separates the two root sets and merges them in ascending order, pairing shared roots.
inline std::vector<MergedRoot> merge_roots(RootSet f, RootSet g) {
  std::map<std::pair<const ZPoly*, const ZPoly*>, std::optional<ZPoly>> common;
  auto common_factor = [&](std::size_t i, std::size_t j) -> const std::optional<ZPoly>& {
    const auto key = std::make_pair(f.source(i).get(), g.source(j).get());
    auto it = common.find(key);
    if (it == common.end()) {
      std::optional<ZPoly> h;
      if (!certified_coprime(*f.source(i), *g.source(j))) {
        ZPoly c = subresultant_gcd(*f.source(i), *g.source(j));
        if (degree(c) >= 1) h = std::move(c);
      }
      it = common.emplace(key, std::move(h)).first;
    }
    return it->second;
  };

  std::vector<int> tie_of(f.size(), -1);
  std::vector<bool> g_tied(g.size(), false);
  bool separated = false;
  for (int round = 0; round <= kInterlaceRounds && !separated; ++round) {
    separated = true;
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (tie_of[i] >= 0) continue;
      for (std::size_t j = 0; j < g.size(); ++j) {
        if (g_tied[j] || !RootSet::overlapping(f[i], g[j])) continue;
        const auto& h = common_factor(i, j);
        if (h && shares_root(*h, f[i], g[j])) {
          tie_of[i] = static_cast<int>(j);
          g_tied[j] = true;
          break;
        }
        separated = false;
        f.refine(i);
        g.refine(j);
      }
    }
    if (!separated && round == kInterlaceRounds) {
      throw IndistinguishableError("interlace: root intervals not separated after " +
                                   std::to_string(kInterlaceRounds) + " refinement rounds");
    }
  }

  std::vector<MergedRoot> out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    MergedRoot m{f[i], f[i].multiplicity, 0};
    if (tie_of[i] >= 0) m.g_mult = g[static_cast<std::size_t>(tie_of[i])].multiplicity;
    out.push_back(m);
  }
  for (std::size_t j = 0; j < g.size(); ++j) {
    if (!g_tied[j]) out.push_back({g[j], 0, g[j].multiplicity});
  }
  std::sort(out.begin(), out.end(),
            [](const MergedRoot& a, const MergedRoot& b) { return RootSet::less(a.where, b.where); });
  return out;
}

inline InterlaceVerdict fails_at(const std::vector<MergedRoot>& m, std::size_t i) {
  if (m.empty()) return {InterlaceKind::Fails, std::make_pair(Rational(0), Rational(0))};
  if (m.size() == 1) return {InterlaceKind::Fails, std::make_pair(m[0].where.midpoint(), m[0].where.midpoint())};
  const std::size_t k = std::clamp<std::size_t>(i, 1, m.size() - 1);
  return {InterlaceKind::Fails, std::make_pair(m[k - 1].where.midpoint(), m[k].where.midpoint())};
}

}  // namespace detail

/// Classifies the relative position of the zeros of f and g.
///   A-pattern: equal counts, f1 < g1 < f2 < g2 < ... < fm < gm
///   B-pattern: g has one more zero, g1 < f1 < g2 < ... < fm < g(m+1)
/// Swapping the arguments turns either pattern into Fails. Non-strict mode lets
/// shared or repeated zeros fill the pattern in any order; strict mode rejects them.
inline InterlaceVerdict interlace(const RootSet& roots_f, const RootSet& roots_g, bool strict) {
  const auto merged = detail::merge_roots(roots_f, roots_g);
  if (strict) {
    for (std::size_t i = 0; i < merged.size(); ++i) {
      const auto& r = merged[i];
      if ((r.f_mult > 0 && r.g_mult > 0) || r.f_mult > 1 || r.g_mult > 1) {
        return {InterlaceKind::Fails, std::make_pair(r.where.midpoint(), r.where.midpoint())};
      }
    }
  }
  unsigned m = 0, k = 0;
  for (const auto& r : merged) {
    m += r.f_mult;
    k += r.g_mult;
  }
  std::string pattern;
  InterlaceKind kind;
  if (k == m) {
    kind = InterlaceKind::APattern;
  } else if (k == m + 1) {
    kind = InterlaceKind::BPattern;
    pattern = "g";
  } else {
    for (std::size_t i = 1; i < merged.size(); ++i) {
      const bool pf = merged[i - 1].g_mult == 0, cf = merged[i].g_mult == 0;
      const bool pg = merged[i - 1].f_mult == 0, cg = merged[i].f_mult == 0;
      if ((pf && cf) || (pg && cg)) return detail::fails_at(merged, i);
    }
    return detail::fails_at(merged, merged.size() - 1);
  }
  for (unsigned i = 0; i < m; ++i) pattern += "fg";

  std::size_t pos = 0;
  for (std::size_t i = 0; i < merged.size(); ++i) {
    const auto& r = merged[i];
    const std::size_t len = r.f_mult + r.g_mult;
    const auto fs = static_cast<unsigned>(std::count(pattern.begin() + pos, pattern.begin() + pos + len, 'f'));
    if (fs != r.f_mult) return detail::fails_at(merged, i);
    pos += len;
  }
  return {kind, std::nullopt};
}

/// Lower and upper ends of the d/c window in which P_1 and P_2 interlace strictly.
inline std::pair<Rational, Rational> threshold_window(Family family) {
  return {family == Family::Xi ? rational(3, 7) : rational(1, 3), Rational(1)};
}

struct ThresholdResult {
  bool predicted = false;  // d/c strictly inside the window
  bool actual = false;     // strict B-pattern of P_1 against P_2
  InterlaceVerdict verdict;
  bool matches() const { return predicted == actual; }
};

inline ThresholdResult threshold_eval(Family family, const Rational& c, const Rational& d) {
  detail::require(c != 0, "c must be nonzero");
  const FamilySpec spec{family, c, d, Scaling::all_ones()};
  const SequenceCache p = iterate_P(spec, 2);
  ThresholdResult r;
  const auto [lo, hi] = threshold_window(family);
  const Rational ratio = d / c;
  r.predicted = lo < ratio && ratio < hi;
  try {
    r.verdict = interlace(isolate(p.at(1)), isolate(p.at(2)), true);
  } catch (const IndistinguishableError&) {
    r.verdict = {InterlaceKind::Fails, std::nullopt};
  }
  r.actual = r.verdict.kind == InterlaceKind::BPattern;
  return r;
}

/// Whether the interlacing of P_1 and P_2 agrees with the threshold prediction at (c, d).
inline bool threshold_check(Family family, const Rational& c, const Rational& d) {
  return threshold_eval(family, c, d).matches();
}

/// Verdicts for (P_n, P_{n+1}), n = 1..n_max.
inline std::vector<InterlaceVerdict> consecutive_interlacing(const FamilySpec& spec, unsigned n_max,
                                                             const Rational& width = default_width()) {
  detail::require(spec.c != 0, "c must be nonzero");
  detail::require(n_max >= 1, "consecutive_interlacing: n_max must be >= 1");
  const SequenceCache p = iterate_P(spec, n_max + 1);
  std::vector<RootSet> roots;
  for (unsigned n = 1; n <= n_max + 1; ++n) roots.push_back(isolate(p.at(n), width));
  std::vector<InterlaceVerdict> out;
  for (unsigned n = 1; n <= n_max; ++n) out.push_back(interlace(roots[n - 1], roots[n], true));
  return out;
}

/// f'g - fg'.
inline RatPoly wronskian(const RatPoly& f, const RatPoly& g) {
  return differentiate(f) * g - f * differentiate(g);
}

/// W <= 0 on the real line: every real root of W has even multiplicity and W is
/// negative away from them.
inline bool wronskian_nonpositive(const RatPoly& w) {
  if (w.is_zero()) return true;
  const auto factors = squarefree_decomposition(w);
  for (std::size_t i = 0; i < factors.size(); i += 2) {
    if (factors[i].degree() > 0 && SturmSequence(factors[i]).count_real() > 0) return false;
  }
  return w.degree() % 2 == 0 && w.leading() < 0;
}

/// f << g: both hyperbolic, zeros interlacing (non-strictly, in either order) and f'g - fg' <= 0.
inline bool proper_position(const RatPoly& f, const RatPoly& g) {
  detail::require(!f.is_zero() && !g.is_zero(), "proper_position: zero polynomial");
  if (!is_hyperbolic(f) || !is_hyperbolic(g)) return false;
  const RootSet rf = f.degree() > 0 ? isolate(f) : RootSet{};
  const RootSet rg = g.degree() > 0 ? isolate(g) : RootSet{};
  const bool ordered = interlace(rf, rg, false).kind != InterlaceKind::Fails ||
                       interlace(rg, rf, false).kind != InterlaceKind::Fails;
  return ordered && wronskian_nonpositive(wronskian(f, g));
}

}  // namespace hyperop
