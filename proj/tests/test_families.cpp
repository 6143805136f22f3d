#include "catch_amalgamated.hpp"
#include "hyperop/families.hpp"
#include "hyperop/rootlab.hpp"

using namespace hyperop;

TEST_CASE("scaling constants") {
  CHECK(scaling_a(1) == rational(-1, 24));
  CHECK(scaling_a(2) == rational(-1, 80));
  CHECK(scaling_b(1) == rational(-7, 372));
  CHECK_THROWS_AS(scaling_a(0), PreconditionError);
  CHECK_THROWS_AS(scaling_b(0), PreconditionError);
}

TEST_CASE("second auxiliary entries") {
  CHECK(aux_family(Family::Xi, 2).at(2) == RatPoly{rational(5, 96), rational(-6, 96)});
  CHECK(aux_family(Family::Lambda, 2).at(2) == RatPoly{rational(2, 93), rational(-3, 93)});
  CHECK(aux_family(Family::Xi, 1).at(1) == RatPoly{rational(1, 4)});
  CHECK(aux_family(Family::Lambda, 1).at(1) == RatPoly{rational(1, 7)});
}

TEST_CASE("degrees grow by one per step") {
  const SequenceCache aux = aux_family(Family::Lambda, 12);
  const SequenceCache p = iterate_P({Family::Xi, 3, 2, Scaling::standard()}, 12);
  for (unsigned n = 1; n <= 12; ++n) {
    CHECK(aux.at(n).degree() == static_cast<int>(n) - 1);
    CHECK(p.at(n).degree() == static_cast<int>(n));
  }
  CHECK_THROWS_AS(p.at(0), PreconditionError);
  CHECK_THROWS_AS(p.at(13), PreconditionError);
  CHECK_THROWS_AS(aux_family(Family::Xi, 0), PreconditionError);
}

TEST_CASE("P_1 and P_2 with unit scaling") {
  const SequenceCache xi = iterate_P({Family::Xi, 2, 1, Scaling::all_ones()}, 2);
  CHECK(xi.at(1) == RatPoly{-1, 2});
  // 20c x^2 - (25c + 6d) x + (6c + 5d)
  CHECK(xi.at(2) == RatPoly{17, -56, 40});
  const SequenceCache la = iterate_P({Family::Lambda, 2, 1, Scaling::all_ones()}, 2);
  // 30c x^2 - (32c + 12d) x + (6c + 8d)
  CHECK(la.at(2) == RatPoly{20, -76, 60});
}

TEST_CASE("closed formula in terms of the auxiliary family") {
  const std::vector<FamilySpec> specs{
      {Family::Xi, 1, rational(1, 2), Scaling::standard()},
      {Family::Xi, 3, 2, Scaling::all_ones()},
      {Family::Xi, -2, rational(5, 7), Scaling::custom({2, -1, rational(1, 3), 5, -7, 1, 2, 3, 4, 5, 6, 7, 8, 9})},
      {Family::Xi, 1, 0, Scaling::standard()},
      {Family::Xi, rational(7, 3), -1, Scaling::all_ones()}};
  for (const Family f : {Family::Xi, Family::Lambda}) {
    for (FamilySpec spec : specs) {
      spec.family = f;
      for (unsigned n = 2; n <= 15; ++n) CHECK(closed_form_check(spec, n));
    }
  }
}

TEST_CASE("closed formula fails with the wrong offset") {
  const FamilySpec xi{Family::Xi, 1, rational(1, 2), Scaling::standard()};
  const FamilySpec la{Family::Lambda, 1, rational(1, 2), Scaling::standard()};
  for (unsigned n = 2; n <= 6; ++n) {
    CHECK_FALSE(closed_form_check(xi, n, rational(2, 3)));
    CHECK_FALSE(closed_form_check(la, n, rational(5, 6)));
  }
}

TEST_CASE("custom scaling validation") {
  CHECK_THROWS_AS(Scaling::custom({1, 0}), PreconditionError);
  const FamilySpec spec{Family::Xi, 1, 1, Scaling::custom({1, 2})};
  CHECK_NOTHROW(iterate_P(spec, 3));
  CHECK_THROWS_AS(iterate_P(spec, 4), PreconditionError);
}

TEST_CASE("zeros do not depend on the scaling") {
  const FamilySpec a{Family::Lambda, 3, 2, Scaling::standard()};
  const FamilySpec b{Family::Lambda, 3, 2, Scaling::custom({-1, 2, -3, 4, -5, 6, -7})};
  const SequenceCache pa = iterate_P(a, 8), pb = iterate_P(b, 8);
  for (unsigned n = 1; n <= 8; ++n) CHECK(primitive_part(pa.at(n)) == primitive_part(pb.at(n)));
}
