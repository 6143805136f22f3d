#include <random>

#include "catch_amalgamated.hpp"
#include "hyperop/ratpoly.hpp"

using namespace hyperop;

namespace {

RatPoly random_poly(std::mt19937_64& rng, int degree) {
  std::vector<Rational> v;
  for (int k = 0; k <= degree; ++k) v.push_back(rational(static_cast<long>(rng() % 21) - 10, static_cast<long>(rng() % 7) + 1));
  return RatPoly(std::move(v));
}

}  // namespace

TEST_CASE("rationals parse and print as num/den") {
  CHECK(to_string(parse_rational("3")) == "3/1");
  CHECK(to_string(parse_rational("-6/4")) == "-3/2");
  CHECK(to_string(parse_rational("0/5")) == "0/1");
  CHECK_THROWS_AS(parse_rational("1.5"), PreconditionError);
  CHECK_THROWS_AS(parse_rational("1/0"), PreconditionError);
  CHECK_THROWS_AS(parse_rational(""), PreconditionError);
  CHECK_THROWS_AS(parse_rational("abc"), PreconditionError);
  CHECK_THROWS_AS(rational(1, 0), PreconditionError);
}

TEST_CASE("polynomials are kept normalized") {
  const RatPoly p{1, 2, 0, 0};
  CHECK(p.degree() == 1);
  CHECK(RatPoly{0, 0}.is_zero());
  CHECK(RatPoly{}.degree() == -1);
  CHECK((p - p).is_zero());
  CHECK(RatPoly::from_roots({1, 2}) == RatPoly{2, -3, 1});
}

TEST_CASE("ring laws hold on random polynomials") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 40; ++i) {
    const RatPoly f = random_poly(rng, static_cast<int>(rng() % 8));
    const RatPoly g = random_poly(rng, static_cast<int>(rng() % 8));
    const RatPoly h = random_poly(rng, static_cast<int>(rng() % 8));
    CHECK(f * (g + h) == f * g + f * h);
    CHECK(f * g == g * f);
    CHECK(arith(f, g, ArithKind::Sub) == f - g);
    CHECK(differentiate(f * g) == differentiate(f) * g + f * differentiate(g));
    const Rational x = rational(static_cast<long>(rng() % 11) - 5, 3);
    CHECK(evaluate_rational(f * g, x) == evaluate_rational(f, x) * evaluate_rational(g, x));
  }
}

TEST_CASE("division with remainder reconstructs the dividend") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 30; ++i) {
    const RatPoly f = random_poly(rng, 9);
    RatPoly g = random_poly(rng, static_cast<int>(rng() % 5));
    if (g.is_zero()) g = RatPoly{1};
    const auto [q, r] = divmod(f, g);
    CHECK(q * g + r == f);
    CHECK(r.degree() < g.degree());
  }
  CHECK_THROWS_AS(divmod(RatPoly{1, 1}, RatPoly{}), PreconditionError);
}

TEST_CASE("gcd recovers planted common factors") {
  const RatPoly common = RatPoly::from_roots({rational(1, 3), rational(-2, 5)});
  const RatPoly f = common * RatPoly::from_roots({7});
  const RatPoly g = common * RatPoly::from_roots({rational(1, 2), 3});
  CHECK(gcd(f, g) == primitive_part(common));
  // Knuth's example: coprime despite large intermediate remainders
  const RatPoly a{-5, 2, 8, -3, -3, 0, 1, 0, 1};
  const RatPoly b{21, -9, -4, 0, 5, 0, 3};
  CHECK(gcd(a, b) == RatPoly{1});
  CHECK(detail::certified_coprime(to_primitive_integer(a), to_primitive_integer(b)));
}

TEST_CASE("squarefree part and decomposition") {
  const RatPoly x = RatPoly::x();
  const RatPoly half = RatPoly{rational(-1, 2), 1};
  CHECK(squarefree_part(half * half) == RatPoly{-1, 2});
  const RatPoly f = x * RatPoly{1, -1} * RatPoly{1, -1} * RatPoly{2, 1} * RatPoly{2, 1} * RatPoly{2, 1};
  const auto dec = squarefree_decomposition(f);
  REQUIRE(dec.size() == 3);
  CHECK(dec[0] == RatPoly{0, 1});
  CHECK(dec[1] == RatPoly{-1, 1});
  CHECK(dec[2] == RatPoly{2, 1});
  CHECK(squarefree_decomposition(RatPoly{5}).empty());
}

TEST_CASE("exact and floating complex evaluation agree") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    const RatPoly f = random_poly(rng, 12);
    const Complex z{1.5, -0.25};
    const Complex a = evaluate_complex(f, z);
    const Complex b = evaluate_exact(f, exact_point(z)).to_complex();
    CHECK(std::abs(a - b) <= 1e-12 * (1 + std::abs(b)));
  }
  // coefficients beyond double range, value within it
  const RatPoly big = RatPoly::monomial(Rational(Integer("1" + std::string(320, '0'))), 2);
  const Complex z{1e-100, 0};
  const Complex a = evaluate_complex(big, z);
  const Complex b = evaluate_exact(big, exact_point(z)).to_complex();
  CHECK(std::isfinite(a.real()));
  CHECK(std::abs(a - b) <= 1e-12 * std::abs(b));
}

TEST_CASE("exact quotient signals poles") {
  const RatPoly f{1, 1};
  const RatPoly g{-2, 1};
  CHECK(exact_quotient(f, g, {3, 0}) == Complex(4, 0));
  CHECK_THROWS_AS(exact_quotient(f, g, {2, 0}), PoleError);
  CHECK(log_derivative(RatPoly{0, 1}, {2, 0}) == Complex(0.5, 0));
}

TEST_CASE("compose_square substitutes x^2") {
  const RatPoly f{1, 2, 3};
  CHECK(compose_square(f) == RatPoly{1, 0, 2, 0, 3});
  CHECK(evaluate_rational(compose_square(f), rational(2, 3)) == evaluate_rational(f, rational(4, 9)));
}
