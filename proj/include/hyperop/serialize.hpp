#pragma once

// JSON encodings. Rationals travel as "num/den" strings; polynomials as arrays
// of such strings, lowest degree first.

#include <complex>
#include <string>
#include <vector>

#include "json.hpp"

#include "hyperop/diffop.hpp"
#include "hyperop/families.hpp"
#include "hyperop/ratpoly.hpp"
#include "hyperop/rootlab.hpp"
#include "hyperop/zerodist.hpp"

namespace hyperop {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

inline Json to_json(const RatPoly& p) {
  Json a = Json::array();
  for (const auto& c : p.coeffs()) a.push_back(to_string(c));
  return a;
}

inline RatPoly ratpoly_from_json(const Json& j) {
  detail::require(j.is_array(), "polynomial must be a JSON array of rational strings");
  std::vector<Rational> v;
  for (const auto& e : j) {
    detail::require(e.is_string(), "polynomial coefficients must be strings");
    v.push_back(parse_rational(e.get<std::string>()));
  }
  return RatPoly(std::move(v));
}

inline Json to_json(const DiffOp& L) {
  Json j;
  j["q2"] = to_json(L.q2);
  j["q1"] = to_json(L.q1);
  j["q0"] = to_json(L.q0);
  return j;
}

inline Json to_json(const RootSet& rs) {
  Json a = Json::array();
  for (const auto& iv : rs.intervals()) {
    a.push_back({{"lo", to_string(iv.lo)}, {"hi", to_string(iv.hi)}, {"mult", iv.multiplicity}});
  }
  return a;
}

inline Json to_json(const InterlaceVerdict& v) {
  Json j;
  j["kind"] = to_string(v.kind);
  if (v.witness) {
    j["witness"] = {to_string(v.witness->first), to_string(v.witness->second)};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

inline std::string scaling_label(const Scaling& s) { return to_string(s.kind); }

inline Json to_json(const FamilySpec& spec, const SequenceCache& cache, bool aux) {
  Json j;
  j["family"] = to_string(cache.family());
  if (aux) {
    j["kind"] = "aux";
  } else {
    j["kind"] = "P";
    j["c"] = to_string(spec.c);
    j["d"] = to_string(spec.d);
    j["scaling"] = scaling_label(spec.scaling);
    if (spec.scaling.kind == Scaling::Kind::Custom) {
      Json v = Json::array();
      for (const auto& s : spec.scaling.values) v.push_back(to_string(s));
      j["scaling_values"] = v;
    }
  }
  Json e = Json::array();
  for (const auto& p : cache.entries()) e.push_back(to_json(p));
  j["entries"] = e;
  return j;
}

inline Json complex_json(Complex z) { return Json::array({z.real(), z.imag()}); }

inline Json to_json(const DistReport& r) {
  Json j;
  j["n"] = r.n;
  j["family"] = to_string(r.family);
  j["ks"] = r.ks;
  j["max_cdf_gap"] = r.max_cdf_gap;
  j["real_roots"] = r.real_roots;
  j["roots_in_unit"] = r.roots_in_unit;
  Json q = Json::array();
  for (const auto& e : r.quantile_errors) {
    q.push_back({{"k", e.k}, {"x_kn", e.x_kn}, {"predicted", e.predicted}, {"abs_err", e.abs_err}});
  }
  j["quantile_errors"] = q;
  Json s = Json::array();
  for (const auto& e : r.s_samples) {
    s.push_back({{"z", complex_json(e.z)},
                 {"s_n", complex_json(e.s_n)},
                 {"s_limit", complex_json(e.s_limit)},
                 {"abs_err", e.abs_err}});
  }
  j["s_samples"] = s;
  return j;
}

}  // namespace hyperop
