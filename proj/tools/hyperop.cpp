// hyperop: generate the sequences, isolate roots, check interlacing, run the
// identity suites, and report zero distributions and eigenfunction residuals.
//
// Exit codes: 0 success, 1 a verification suite failed, 2 invalid arguments,
// 3 root isolation could not separate intervals.

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hyperop/hyperop.hpp"
#include "hyperop/serialize.hpp"

using namespace hyperop;

namespace {

struct Options {
  std::string family = "xi";
  std::string c = "1";
  std::string d = "1/2";
  std::string scaling = "standard";
  std::string scaling_values;
  unsigned n = 5;
  std::string n_list = "25,100";
  std::string width;
  std::string output = "json";
  std::string out_path;
  std::uint64_t seed = 0;
  bool aux = false;
  std::string suite = "all";
  unsigned n_max = 12;
  std::string poly_f;
  std::string poly_g;
  bool strict = true;
  double exponent = 0.5;
  double c1 = 1.0;
  double c2 = 0.0;
  std::string xs;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) {
    if (!cur.empty()) out.push_back(cur);
  }
  return out;
}

std::vector<Family> families(const std::string& f) {
  if (f == "both") return {Family::Xi, Family::Lambda};
  return {parse_family(f)};
}

Scaling parse_scaling(const Options& o) {
  if (o.scaling == "standard") return Scaling::standard();
  if (o.scaling == "ones") return Scaling::all_ones();
  if (o.scaling == "custom") {
    std::vector<Rational> v;
    for (const auto& s : split(o.scaling_values, ',')) v.push_back(parse_rational(s));
    detail::require(!v.empty(), "custom scaling needs --scaling-values");
    return Scaling::custom(std::move(v));
  }
  throw PreconditionError("unknown scaling '" + o.scaling + "' (expected standard, ones or custom)");
}

FamilySpec make_spec(const Options& o, Family family) {
  FamilySpec spec{family, parse_rational(o.c), parse_rational(o.d), parse_scaling(o)};
  detail::require(spec.c != 0, "c must be nonzero");
  return spec;
}

RatPoly parse_poly(const std::string& s) {
  std::vector<Rational> v;
  for (const auto& part : split(s, ',')) v.push_back(parse_rational(part));
  return RatPoly(std::move(v));
}

Rational parse_width(const Options& o, const Rational& fallback) {
  if (o.width.empty()) return fallback;
  const Rational w = parse_rational(o.width);
  detail::require(w > 0, "width must be positive");
  return w;
}

void require_n(unsigned n) { detail::require(n >= 1, "n must be >= 1"); }

void emit(const Options& o, const std::string& text) {
  if (o.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out_path, std::ios::binary);
  if (!f) throw PreconditionError("cannot open output path '" + o.out_path + "'");
  f << text;
}

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

int cmd_gen(const Options& o) {
  require_n(o.n);
  if (o.n > kDeskScaleCap) {
    std::cerr << "warning: n = " << o.n << " exceeds the desk-scale cap " << kDeskScaleCap << "\n";
  }
  std::vector<Json> seqs;
  for (const Family f : families(o.family)) {
    if (o.aux) {
      seqs.push_back(to_json(FamilySpec{f}, aux_family(f, o.n), true));
    } else {
      const FamilySpec spec = make_spec(o, f);
      seqs.push_back(to_json(spec, iterate_P(spec, o.n), false));
    }
  }
  Json out;
  out["schema"] = kSchemaVersion;
  if (seqs.size() == 1) {
    for (auto& [k, v] : seqs[0].items()) out[k] = v;
  } else {
    out["sequences"] = seqs;
  }
  emit(o, out.dump(2) + "\n");
  return 0;
}

// Identity suites. Each returns a list of failure descriptions (empty on pass)
// and the number of checks performed.
struct SuiteResult {
  int checks = 0;
  std::vector<std::string> failures;
  void check(bool ok, const std::string& what) {
    ++checks;
    if (!ok) failures.push_back(what);
  }
};

RatPoly random_poly(std::mt19937_64& rng, int degree) {
  std::vector<Rational> v;
  for (int k = 0; k <= degree; ++k) {
    const long num = static_cast<long>(rng() % 19) - 9;
    const long den = static_cast<long>(rng() % 9) + 1;
    v.push_back(rational(num, den));
  }
  return RatPoly(std::move(v));
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"factorization", "monomial",        "divergence", "selfadjoint",
                                              "closed-form",   "eulerian-oracle", "thresholds"};
  return names;
}

SuiteResult run_suite(const std::string& name, const Options& o) {
  SuiteResult r;
  const Family fams[] = {Family::Xi, Family::Lambda};
  if (name == "factorization") {
    r.check(compose_AB(1) == make_D(Family::Xi), "A_1 B_1 != D_xi");
    r.check(compose_AB(2) == make_D(Family::Lambda), "A_2 B_2 != D_lambda");
  } else if (name == "monomial") {
    for (const Family f : fams) {
      for (unsigned m = 0; m <= 50; ++m) {
        const MonomialAction a = monomial_action(f, m);
        RatPoly expect = RatPoly::monomial(a.c_plus, m + 1) + RatPoly::monomial(a.c_same, m);
        if (m > 0) expect = expect + RatPoly::monomial(a.c_minus, m - 1);
        r.check(apply(make_D(f), RatPoly::monomial(1, m)) == expect,
                to_string(f) + " monomial m=" + std::to_string(m));
      }
    }
  } else if (name == "divergence") {
    for (const Family f : fams) r.check(divergence_check(f), to_string(f) + " divergence form");
  } else if (name == "selfadjoint") {
    std::mt19937_64 rng(o.seed);
    for (const Family f : fams) {
      for (int i = 0; i < 50; ++i) {
        const RatPoly p = random_poly(rng, static_cast<int>(rng() % 11));
        const RatPoly q = random_poly(rng, static_cast<int>(rng() % 11));
        r.check(selfadjoint_defect(p, q, f) == 0, to_string(f) + " self-adjoint pair " + std::to_string(i));
      }
    }
  } else if (name == "closed-form") {
    for (const Family f : fams) {
      for (unsigned n = 2; n <= o.n_max; ++n) {
        const FamilySpec spec{f, 1, rational(1, 2), Scaling::standard()};
        r.check(closed_form_check(spec, n), to_string(f) + " closed form n=" + std::to_string(n));
      }
    }
  } else if (name == "eulerian-oracle") {
    for (const EulerianType t : {EulerianType::A, EulerianType::B}) {
      const EulerianTable table = build_table(t, 8);
      for (unsigned m = 0; m <= 8; ++m) {
        r.check(table.at(m) == oracle_eulerian(t, m),
                std::string(t == EulerianType::A ? "A" : "B") + " m=" + std::to_string(m));
      }
    }
  } else if (name == "thresholds") {
    for (const Family f : fams) {
      for (int i = 0; i <= 20; ++i) {
        const Rational ratio = rational(i, 20) * rational(3, 2) - rational(1, 4);
        r.check(threshold_check(f, 1, ratio), to_string(f) + " threshold d/c=" + to_string(ratio));
      }
    }
  } else {
    throw PreconditionError("unknown suite '" + name + "'");
  }
  return r;
}

int cmd_verify(const Options& o) {
  std::vector<std::string> names;
  if (o.suite == "all") {
    names = suite_names();
  } else {
    names = split(o.suite, ',');
  }
  Json suites = Json::object();
  Json failures = Json::array();
  bool ok = true;
  for (const auto& name : names) {
    const SuiteResult r = run_suite(name, o);
    const int fail = static_cast<int>(r.failures.size());
    suites[name] = {{"pass", r.checks - fail}, {"fail", fail}};
    for (const auto& f : r.failures) failures.push_back(name + ": " + f);
    ok = ok && fail == 0;
  }
  Json out;
  out["schema"] = kSchemaVersion;
  out["suites"] = suites;
  out["failures"] = failures;
  emit(o, out.dump(2) + "\n");
  return ok ? 0 : 1;
}

int cmd_roots(const Options& o) {
  Json out;
  out["schema"] = kSchemaVersion;
  const Rational width = parse_width(o, default_width());
  auto report = [&](const RatPoly& p) {
    detail::require(!p.is_zero(), "polynomial must be nonzero");
    Json j;
    j["poly"] = to_json(p);
    j["roots"] = to_json(isolate(p, width));
    j["hyperbolic"] = is_hyperbolic(p);
    j["confined_unit"] = confined(p, 1);
    return j;
  };
  if (!o.poly_f.empty()) {
    out["result"] = report(parse_poly(o.poly_f));
  } else {
    require_n(o.n);
    Json all = Json::array();
    for (const Family f : families(o.family)) {
      const RatPoly p = o.aux ? aux_family(f, o.n).at(o.n) : iterate_P(make_spec(o, f), o.n).at(o.n);
      Json j = report(p);
      j["family"] = to_string(f);
      j["n"] = o.n;
      all.push_back(j);
    }
    out["results"] = all;
  }
  emit(o, out.dump(2) + "\n");
  return 0;
}

int cmd_interlace(const Options& o) {
  Json out;
  out["schema"] = kSchemaVersion;
  if (!o.poly_f.empty() || !o.poly_g.empty()) {
    detail::require(!o.poly_f.empty() && !o.poly_g.empty(), "interlace needs both --f and --g");
    const RatPoly f = parse_poly(o.poly_f), g = parse_poly(o.poly_g);
    detail::require(!f.is_zero() && !g.is_zero(), "polynomials must be nonzero");
    out["verdict"] = to_json(interlace(isolate(f), isolate(g), o.strict));
    out["proper_position"] = proper_position(f, g);
  } else {
    Json all = Json::array();
    for (const Family fam : families(o.family)) {
      const FamilySpec spec = make_spec(o, fam);
      Json j;
      j["family"] = to_string(fam);
      Json v = Json::array();
      for (const auto& verdict : consecutive_interlacing(spec, o.n_max)) v.push_back(to_json(verdict));
      j["consecutive"] = v;
      all.push_back(j);
    }
    out["results"] = all;
  }
  emit(o, out.dump(2) + "\n");
  return 0;
}

int cmd_dist(const Options& o) {
  std::vector<unsigned> ns;
  for (const auto& s : split(o.n_list, ',')) {
    const long v = std::stol(s);
    detail::require(v >= 1, "n must be >= 1");
    ns.push_back(static_cast<unsigned>(v));
  }
  detail::require(!ns.empty(), "--n needs at least one value");
  detail::require(o.output == "json" || o.output == "csv", "output must be json or csv");
  const Rational width = parse_width(o, dist_width());
  std::vector<DistReport> reports;
  for (const Family f : families(o.family)) {
    const FamilySpec spec = make_spec(o, f);
    for (const unsigned n : ns) reports.push_back(compare_distribution(spec, n, width));
  }
  if (o.output == "csv") {
    std::string text = "family,n,k,x_kn,predicted,err\n";
    for (const auto& r : reports) {
      for (const auto& q : r.quantile_errors) {
        text += to_string(r.family) + "," + std::to_string(r.n) + "," + std::to_string(q.k) + "," + fmt17(q.x_kn) +
                "," + fmt17(q.predicted) + "," + fmt17(q.abs_err) + "\n";
      }
    }
    emit(o, text);
    return 0;
  }
  Json out;
  out["schema"] = kSchemaVersion;
  Json a = Json::array();
  for (const auto& r : reports) a.push_back(to_json(r));
  out["reports"] = a;
  emit(o, out.dump(2) + "\n");
  return 0;
}

int cmd_eigen(const Options& o) {
  std::vector<double> xs;
  if (o.xs.empty()) {
    for (int i = 1; i <= 12; ++i) xs.push_back(i / 20.0);
  } else {
    for (const auto& s : split(o.xs, ',')) xs.push_back(std::stod(s));
  }
  detail::require(o.output == "json" || o.output == "csv", "output must be json or csv");
  std::string text = o.output == "csv" ? "family,x,f,residual\n" : "";
  Json out;
  out["schema"] = kSchemaVersion;
  Json rows = Json::array();
  for (const Family f : families(o.family)) {
    for (const double x : xs) {
      const double val = eigenfunction(f, o.exponent, o.c1, o.c2, x);
      const double res = eigen_residual(f, o.exponent, o.c1, o.c2, {x});
      if (o.output == "csv") {
        text += to_string(f) + "," + fmt17(x) + "," + fmt17(val) + "," + fmt17(res) + "\n";
      } else {
        rows.push_back({{"family", to_string(f)}, {"x", x}, {"f", val}, {"residual", res}});
      }
    }
  }
  if (o.output == "json") {
    out["exponent"] = o.exponent;
    out["rows"] = rows;
    text = out.dump(2) + "\n";
  }
  emit(o, text);
  return 0;
}

void add_family_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--family", o.family, "xi, lambda or both");
  cmd->add_option("--c", o.c, "leading coefficient of P_1 (rational)");
  cmd->add_option("--d", o.d, "P_1 = c x - d (rational)");
  cmd->add_option("--scaling", o.scaling, "standard, ones or custom");
  cmd->add_option("--scaling-values", o.scaling_values, "comma-separated rationals for custom scaling");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hyperop: sequences generated by two hyperbolicity-preserving operators"};
  app.require_subcommand(1);
  Options o;

  auto* gen = app.add_subcommand("gen", "generate a sequence as JSON");
  add_family_flags(gen, o);
  gen->add_option("--n", o.n, "number of entries");
  gen->add_flag("--aux", o.aux, "the auxiliary family instead of P_n");
  gen->add_option("--out", o.out_path, "output file");

  auto* verify = app.add_subcommand("verify", "run identity suites");
  verify->add_option("--suite", o.suite, "all or a comma-separated list of suites");
  verify->add_option("--n-max", o.n_max, "largest n for the closed-form suite");
  verify->add_option("--seed", o.seed, "seed for randomized suites");
  verify->add_option("--out", o.out_path, "output file");

  auto* roots = app.add_subcommand("roots", "isolate real roots");
  add_family_flags(roots, o);
  roots->add_option("--n", o.n, "index of the sequence entry");
  roots->add_flag("--aux", o.aux, "use the auxiliary family");
  roots->add_option("--poly", o.poly_f, "explicit polynomial, comma-separated rationals, lowest degree first");
  roots->add_option("--width", o.width, "isolation width (rational)");
  roots->add_option("--out", o.out_path, "output file");

  auto* inter = app.add_subcommand("interlace", "classify interlacing");
  add_family_flags(inter, o);
  inter->add_option("--f", o.poly_f, "first polynomial");
  inter->add_option("--g", o.poly_g, "second polynomial");
  inter->add_option("--n-max", o.n_max, "consecutive pairs up to this n");
  inter->add_flag("!--non-strict", o.strict, "allow shared and repeated zeros");
  inter->add_option("--out", o.out_path, "output file");

  auto* dist = app.add_subcommand("dist", "zero distribution reports");
  add_family_flags(dist, o);
  dist->add_option("--n", o.n_list, "comma-separated degrees");
  dist->add_option("--width", o.width, "isolation width (rational)");
  dist->add_option("--output", o.output, "json or csv");
  dist->add_option("--out", o.out_path, "output file");

  auto* eigen = app.add_subcommand("eigen", "eigenfunction values and residuals");
  eigen->add_option("--family", o.family, "xi, lambda or both");
  eigen->add_option("--exponent", o.exponent, "alpha (xi) or beta (lambda)");
  eigen->add_option("--c1", o.c1, "coefficient of the regular solution");
  eigen->add_option("--c2", o.c2, "coefficient of the x^{-1/2} solution");
  eigen->add_option("--x", o.xs, "comma-separated points in [0.05, 0.6]");
  eigen->add_option("--output", o.output, "json or csv");
  eigen->add_option("--out", o.out_path, "output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*gen) return cmd_gen(o);
    if (*verify) return cmd_verify(o);
    if (*roots) return cmd_roots(o);
    if (*inter) return cmd_interlace(o);
    if (*dist) return cmd_dist(o);
    if (*eigen) return cmd_eigen(o);
  } catch (const IndistinguishableError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const PoleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: invalid number: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
