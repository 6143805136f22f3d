#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <algorithm>
#include <cmath>
#include <numbers>

#include "catch_amalgamated.hpp"
#include "hyperop/zerodist.hpp"

using namespace hyperop;
using Catch::Approx;
using quad = boost::multiprecision::cpp_bin_float_quad;

namespace {

const FamilySpec kXi{Family::Xi, 1, rational(1, 2), Scaling::standard()};
const FamilySpec kLambda{Family::Lambda, 1, rational(1, 2), Scaling::standard()};

}  // namespace

TEST_CASE("density is the derivative of the distribution function") {
  for (int i = 1; i <= 99; ++i) {
    const double x = i / 100.0;
    const double h = 1e-6 * std::min(x, 1 - x);
    const double fd = (limit_cdf(x + h) - limit_cdf(x - h)) / (2 * h);
    CHECK(std::abs(limit_density(x) - fd) <= 1e-6 * std::max(1.0, limit_density(x)));
  }
  const double s = std::sqrt(0.5);
  const double l = std::log((1 - s) / (1 + s));
  CHECK(limit_density(0.5) == Approx(2 / (s * 0.5 * (l * l + std::numbers::pi * std::numbers::pi))).epsilon(1e-15));
  CHECK(limit_density(0.5) == Approx(0.4359178306).epsilon(1e-9));
  CHECK_THROWS_AS(limit_density(0), PreconditionError);
  CHECK_THROWS_AS(limit_density(1), PreconditionError);
  CHECK(limit_density(-0.5) == 0);
  CHECK(limit_density(1.5) == 0);
}

TEST_CASE("density integrates to one") {
  // x = tanh^2 v spreads the slowly decaying tail near 1 over the v axis
  auto integrand = [](double v) {
    const double t = std::tanh(v);
    const double sech = 1 / std::cosh(v);
    return limit_density(t * t) * 2 * t * sech * sech;
  };
  const double va = 1e-8, vb = 6.0;
  double err = 0;
  const double core = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(integrand, va, vb, 15, 1e-13, &err);
  const double xa = std::tanh(va) * std::tanh(va), xb = std::tanh(vb) * std::tanh(vb);
  const double total = limit_cdf(xa) + core + (1 - limit_cdf(xb));
  CHECK(std::abs(total - 1) < 1e-8);
  CHECK(std::abs(core - (limit_cdf(xb) - limit_cdf(xa))) < 1e-10);
}

TEST_CASE("distribution function and quantile") {
  const double median = std::pow(std::tanh(std::numbers::pi / 2), 2);
  CHECK(limit_cdf(median) == Approx(0.5).epsilon(1e-14));
  CHECK(limit_quantile(0.5) == Approx(0.8411684068).margin(1e-10));
  CHECK(limit_quantile(0.5) == Approx(median).epsilon(1e-15));
  CHECK(limit_cdf(0) == 0);
  CHECK(limit_cdf(-3) == 0);
  CHECK(limit_cdf(1) == 1);
  CHECK(limit_cdf(7) == 1);
  for (int i = 1; i <= 8; ++i) CHECK(std::abs(limit_cdf(limit_quantile(i / 10.0)) - i / 10.0) < 1e-12);
  for (int i = 1; i <= 85; ++i) CHECK(std::abs(limit_cdf(limit_quantile(i / 100.0)) - i / 100.0) < 1e-12);
  const quad eps("1e-12");
  for (int i = 5; i <= 95; ++i) {
    const quad t = quad(i) / 100;
    CHECK(abs(basic_limit_cdf(basic_limit_quantile(t)) - t) < eps);
  }
}

TEST_CASE("double round trip is limited only by the spacing of doubles") {
  for (int i = 5; i <= 95; ++i) {
    const double t = i / 100.0;
    const double x = limit_quantile(t);
    const double gap = limit_cdf(std::nextafter(x, 2.0)) - limit_cdf(std::nextafter(x, 0.0));
    CHECK(std::abs(limit_cdf(x) - t) <= 1e-12 + gap);
  }
  CHECK(limit_cdf(std::nextafter(1.0, 0.0)) == Approx(0.9475).margin(1e-3));
  double prev = 0;
  for (int i = 1; i < 1000; ++i) {
    const double q = limit_quantile(i / 1000.0);
    // near t = 1 the value rounds to 1.0 in double
    if (i <= 900) CHECK(q > prev);
    CHECK(q >= prev);
    prev = q;
  }
  CHECK(limit_quantile(1e-6) < 1e-9);
  CHECK_THROWS_AS(limit_quantile(0), PreconditionError);
  CHECK_THROWS_AS(limit_quantile(1), PreconditionError);
}

TEST_CASE("distribution function at exact points") {
  CHECK(log_rational(rational(3, 7)) == Approx(std::log(3.0 / 7)).epsilon(1e-15));
  Rational tiny(1);
  mpq_div_2exp(tiny.get_mpq_t(), tiny.get_mpq_t(), 5000);
  CHECK(log_rational(tiny) == Approx(-5000 * std::log(2.0)).epsilon(1e-15));
  CHECK_THROWS_AS(log_rational(0), PreconditionError);
  for (int i = 1; i < 100; ++i) {
    CHECK(limit_cdf(rational(i, 100)) == Approx(limit_cdf(i / 100.0)).epsilon(1e-13));
  }
  CHECK(limit_cdf(Rational(0)) == 0);
  CHECK(limit_cdf(Rational(1)) == 1);
  CHECK(limit_cdf(Rational(-2)) == 0);
  // points closer to 1 than double spacing stay distinct and ordered
  double prev = limit_cdf(rational(1, 2));
  for (int k = 60; k <= 3000; k += 60) {
    Rational gap(1);
    mpq_div_2exp(gap.get_mpq_t(), gap.get_mpq_t(), static_cast<mp_bitcnt_t>(k));
    const double F = limit_cdf(1 - gap);
    CHECK(F > prev);
    CHECK(F < 1);
    // oracle: atanh(sqrt x) ~ (k log 2 + log 4) / 2 once 1 - x is tiny
    const double a = (k * std::log(2.0) + std::log(4.0)) / 2;
    CHECK(F == Approx(2 / std::numbers::pi * std::atan(2 * a / std::numbers::pi)).epsilon(1e-12));
    prev = F;
  }
}

TEST_CASE("degree one report") {
  const DistReport r = compare_distribution({Family::Xi, 1, rational(1, 2), Scaling::standard()}, 1);
  REQUIRE(r.roots.size() == 1);
  CHECK(r.roots[0] == Approx(0.5).margin(1e-10));
  REQUIRE(r.quantile_errors.size() == 1);
  CHECK(r.quantile_errors[0].predicted == 1.0);
  CHECK(r.ks <= std::max(limit_cdf(0.5), 1 - limit_cdf(0.5)) + 1e-12);
  CHECK(r.ks == Approx(std::max(limit_cdf(0.5), 1 - limit_cdf(0.5))));
  CHECK(r.roots_in_unit);
  CHECK_THROWS_AS(compare_distribution({Family::Xi, 0, 1, Scaling::standard()}, 3), PreconditionError);
}

TEST_CASE("reports carry one quantile entry per zero") {
  for (const auto& spec : {kXi, kLambda}) {
    const DistReport r = compare_distribution(spec, 20);
    CHECK(r.real_roots == 20);
    CHECK(std::is_sorted(r.roots.begin(), r.roots.end()));
    CHECK(r.roots_in_unit);
    CHECK(r.quantile_errors.size() == 20);
    CHECK(r.ks >= 0);
    CHECK(r.ks <= 1);
    CHECK(r.s_samples.size() == omega_grid().size());
    for (std::size_t k = 0; k + 1 < r.quantile_errors.size(); ++k) {
      const auto& q = r.quantile_errors[k];
      CHECK(q.k == k + 1);
      CHECK(q.predicted == Approx(limit_quantile((k + 1) / 20.0)));
      CHECK(q.abs_err == Approx(std::abs(q.x_kn - q.predicted)));
    }
  }
}

TEST_CASE("empirical zeros approach the limiting law") {
  for (const auto& spec : {kXi, kLambda}) {
    const DistReport r10 = compare_distribution(spec, 10);
    const DistReport r25 = compare_distribution(spec, 25);
    const DistReport r50 = compare_distribution(spec, 50);
    CHECK(r50.ks < r10.ks);
    CHECK(r50.max_cdf_gap < r10.max_cdf_gap);
    CHECK(r25.ks < r10.ks);
  }
  // the top zeros crowd 1 far below double spacing; the families must still differ there
  CHECK(compare_distribution(kXi, 60).ks != compare_distribution(kLambda, 60).ks);
}

TEST_CASE("normalized logarithmic derivative") {
  CHECK(s_n_eval({Family::Xi, 1, 0, Scaling::standard()}, 1, {2, 0}) == Complex(0.5, 0));
  CHECK_THROWS_AS(s_n_eval(RatPoly{-2, 1}, 1, {2, 0}), PoleError);
  CHECK_THROWS_AS(s_n_eval(kXi, 3, {0.5, 0}), PreconditionError);

  const Complex pinned = 1.0 / 6 + (1.0 / (2 * -1.0)) * (1.0 / 3 + (2.0 / 3) / std::log(1.0 / 3));
  CHECK(std::abs(s_limit({4, 0}) - pinned) < 1e-15);

  for (const Complex z : {Complex(2, 0), Complex(4, 0), Complex(1.5, 0.5)}) {
    for (const auto& spec : {kXi, kLambda}) {
      double prev = INFINITY;
      for (const unsigned n : {5u, 10u, 20u, 40u}) {
        const double err = std::abs(s_n_eval(spec, n, z) - s_limit(z));
        CHECK(err < prev);
        prev = err;
      }
    }
  }
}

TEST_CASE("decomposition identity and its vanishing correction") {
  const std::vector<FamilySpec> specs{kXi, kLambda, {Family::Xi, 3, -2, Scaling::all_ones()},
                                      {Family::Lambda, -1, rational(2, 5), Scaling::all_ones()}};
  for (const auto& spec : specs) {
    for (unsigned n = 2; n <= 10; ++n) {
      for (const Complex z : {Complex(3, 0), Complex(1.5, 0.5), Complex(-1, 2)}) {
        const Decomposition d = log_derivative_decomposition(spec, n, z);
        CHECK(std::abs(d.s_n - d.rhs()) < 1e-9);
      }
    }
  }
  for (const auto& spec : {kXi, kLambda}) {
    double prev = INFINITY;
    for (const unsigned n : {4u, 8u, 16u, 32u}) {
      const double c = std::abs(log_derivative_decomposition(spec, n, {3, 0}).correction);
      CHECK(c < prev);
      prev = c;
    }
  }
}

TEST_CASE("both families share the limit") {
  for (const Complex z : omega_grid()) {
    const double gap5 = std::abs(s_n_eval(kXi, 5, z) - s_n_eval(kLambda, 5, z));
    const double gap40 = std::abs(s_n_eval(kXi, 40, z) - s_n_eval(kLambda, 40, z));
    CHECK(gap40 < gap5);
  }
}
