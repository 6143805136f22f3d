#include <cmath>

#include "catch_amalgamated.hpp"
#include "hyperop/eulerian.hpp"

using namespace hyperop;
using Catch::Approx;

TEST_CASE("small Eulerian polynomials") {
  const EulerianTable a = build_table(EulerianType::A, 3);
  CHECK(a.at(0) == RatPoly{1});
  CHECK(a.at(1) == RatPoly{1});
  CHECK(a.at(2) == RatPoly{1, 1});
  CHECK(a.at(3) == RatPoly{1, 4, 1});
  const EulerianTable b = build_table(EulerianType::B, 2);
  CHECK(b.at(0) == RatPoly{1});
  CHECK(b.at(1) == RatPoly{1, 1});
  CHECK(b.at(2) == RatPoly{1, 6, 1});
}

TEST_CASE("recurrences agree with descent enumeration") {
  CHECK(oracle_eulerian(EulerianType::A, 3) == RatPoly{1, 4, 1});
  CHECK(oracle_eulerian(EulerianType::B, 1) == RatPoly{1, 1});
  CHECK(oracle_eulerian(EulerianType::A, 0) == RatPoly{1});
  CHECK_THROWS_AS(oracle_eulerian(EulerianType::A, 9), PreconditionError);
  for (const EulerianType t : {EulerianType::A, EulerianType::B}) {
    const EulerianTable table = build_table(t, 8);
    for (unsigned m = 0; m <= 8; ++m) CHECK(table.at(m) == oracle_eulerian(t, m));
  }
}

TEST_CASE("rows are positive, palindromic, with factorial sums") {
  for (const EulerianType t : {EulerianType::A, EulerianType::B}) {
    const EulerianTable table = build_table(t, 20);
    Integer total = 1;
    for (unsigned m = 0; m <= 20; ++m) {
      if (m > 0) total *= (t == EulerianType::A ? m : 2 * m);
      const auto& c = table.at(m).coeffs();
      for (std::size_t k = 0; k < c.size(); ++k) {
        CHECK(c[k] > 0);
        CHECK(c[k].get_den() == 1);
        CHECK(c[k] == c[c.size() - 1 - k]);
      }
      CHECK(evaluate_rational(table.at(m), 1) == Rational(total));
    }
  }
}

TEST_CASE("Eulerian form of the auxiliary families") {
  for (const Family f : {Family::Xi, Family::Lambda}) {
    const SequenceCache aux = aux_family(f, 12);
    for (unsigned n = 1; n <= 12; ++n) {
      for (const Rational t : {rational(1, 3), rational(1, 2), rational(2, 3), rational(3, 4)}) {
        CHECK(closed_form_eval(f, n, t) == evaluate_rational(aux.at(n), t * t));
      }
    }
  }
  CHECK(closed_form_eval(Family::Xi, 1, rational(2, 9)) == rational(1, 4));
  CHECK(closed_form_eval(Family::Lambda, 1, rational(5, 11)) == rational(1, 7));
  CHECK(closed_form_eval(Family::Xi, 2, rational(1, 2)) == rational(7, 192));
  CHECK_THROWS_AS(closed_form_eval(Family::Xi, 2, 0), PreconditionError);
}

TEST_CASE("u map and the cut") {
  CHECK(u_map({4, 0}).real() == Approx(1.0 / 3));
  CHECK(u_map({9, 0}).real() == Approx(0.5));
  CHECK(std::abs(u_map({2, 3})) < 1);
  CHECK_THROWS_AS(u_map({1, 0}), PreconditionError);
  CHECK_THROWS_AS(u_map({-3, 0}), PreconditionError);
  CHECK_THROWS_AS(limit_R({0.5, 0}), PreconditionError);
  CHECK_NOTHROW(u_map({-3, 1e-9}));
}

TEST_CASE("first ratios") {
  CHECK(ratio_R(Family::Xi, 1, {2, 0}).real() == Approx(-7.0 / 24).epsilon(1e-14));
  CHECK(ratio_R(Family::Lambda, 1, {2, 0}).real() == Approx(-28.0 / 93).epsilon(1e-14));
  const SequenceCache xi = aux_family(Family::Xi, 2);
  CHECK(std::abs(direct_ratio(xi, 1, {2, 0}) - Complex(-7.0 / 24, 0)) < 1e-16);
}

TEST_CASE("Eulerian ratio agrees with the direct quotient") {
  for (const Family f : {Family::Xi, Family::Lambda}) {
    const SequenceCache aux = aux_family(f, 13);
    for (unsigned n = 1; n <= 12; ++n) {
      for (const Complex z : {Complex(2, 0), Complex(4, 0), Complex(1.5, 0.5)}) {
        const Complex a = ratio_R(f, n, z);
        const Complex b = direct_ratio(aux, n, z);
        CHECK(std::abs(a - b) <= 1e-10 * std::abs(b));
      }
    }
  }
}

TEST_CASE("ratios approach the common limit") {
  CHECK(limit_R({9, 0}).real() == Approx(-1.0 / (std::log(0.5) * std::log(0.5))));
  CHECK(limit_R({9, 0}).real() == Approx(-2.0814).margin(1e-4));
  for (const Family f : {Family::Xi, Family::Lambda}) {
    double prev = INFINITY;
    for (const unsigned n : {2u, 4u, 8u, 16u}) {
      const double err = std::abs(ratio_R(f, n, {4, 0}) - limit_R({4, 0}));
      CHECK(err < prev);
      prev = err;
    }
  }
}
