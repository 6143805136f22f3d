#include "catch_amalgamated.hpp"
#include "hyperop/serialize.hpp"

using namespace hyperop;

TEST_CASE("polynomials round-trip through JSON") {
  const RatPoly p{rational(-3, 4), 0, 5, rational(7, 9)};
  const Json j = to_json(p);
  CHECK(j.dump() == R"(["-3/4","0/1","5/1","7/9"])");
  CHECK(ratpoly_from_json(Json::parse(j.dump())) == p);
  CHECK(to_json(RatPoly{}).dump() == "[]");
  CHECK_THROWS_AS(ratpoly_from_json(Json::parse("[1, 2]")), PreconditionError);
  CHECK_THROWS_AS(ratpoly_from_json(Json::parse(R"({"a": "1"})")), PreconditionError);
  CHECK_THROWS_AS(ratpoly_from_json(Json::parse(R"(["1/0"])")), PreconditionError);
}

TEST_CASE("operators, roots and verdicts") {
  CHECK(to_json(make_A(1)).dump() == R"({"q2":[],"q1":["-2/1","2/1"],"q0":["1/1"]})");
  const RootSet rs = isolate(RatPoly{0, 0, 1} * RatPoly{-1, 4});
  const Json r = to_json(rs);
  REQUIRE(r.size() == 2);
  CHECK(r[0]["lo"] == "0/1");
  CHECK(r[0]["hi"] == "0/1");
  CHECK(r[0]["mult"] == 2);
  CHECK(parse_rational(r[1]["lo"].get<std::string>()) <= rational(1, 4));
  CHECK(parse_rational(r[1]["hi"].get<std::string>()) >= rational(1, 4));
  CHECK(to_json(InterlaceVerdict{InterlaceKind::BPattern, std::nullopt}).dump() == R"({"kind":"B-pattern","witness":null})");
  const Json w = to_json(InterlaceVerdict{InterlaceKind::Fails, std::pair{rational(1, 2), rational(2, 3)}});
  CHECK(w.dump() == R"({"kind":"fails","witness":["1/2","2/3"]})");
}

TEST_CASE("sequences record their configuration") {
  const FamilySpec spec{Family::Lambda, 2, rational(-1, 3), Scaling::custom({rational(1, 2), 3})};
  const Json j = to_json(spec, iterate_P(spec, 3), false);
  CHECK(j["family"] == "lambda");
  CHECK(j["kind"] == "P");
  CHECK(j["c"] == "2/1");
  CHECK(j["d"] == "-1/3");
  CHECK(j["scaling"] == "custom");
  CHECK(j["scaling_values"].dump() == R"(["1/2","3/1"])");
  REQUIRE(j["entries"].size() == 3);
  CHECK(ratpoly_from_json(j["entries"][0]) == RatPoly{rational(1, 3), 2});

  const Json a = to_json(FamilySpec{}, aux_family(Family::Xi, 2), true);
  CHECK(a["kind"] == "aux");
  CHECK_FALSE(a.contains("c"));
  CHECK(a["entries"][1].dump() == R"(["5/96","-1/16"])");
}

TEST_CASE("distribution reports") {
  const DistReport r = compare_distribution({Family::Xi, 1, rational(1, 2), Scaling::standard()}, 4);
  const Json j = to_json(r);
  CHECK(j["n"] == 4);
  CHECK(j["family"] == "xi");
  CHECK(j["quantile_errors"].size() == 4);
  CHECK(j["s_samples"].size() == omega_grid().size());
  CHECK(j["s_samples"][0]["z"].dump() == "[2.0,0.0]");
  CHECK(j["ks"].get<double>() == r.ks);
}
