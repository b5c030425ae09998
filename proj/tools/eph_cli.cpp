// eph: command-line front end. JSON results go to stdout, human-readable
// tables and diagnostics to stderr. Exit codes: 0 ok, 1 a verification
// failed, 2 bad usage or input the library rejects.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "eph/eph.hpp"

using nlohmann::json;
using namespace eph;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_verify_failed = 1;
constexpr int exit_usage = 2;

bool exact_mode() {
  const char* e = std::getenv("EPH_EXACT");
  return e && std::string_view(e) == "1";
}

template <scalar T>
json num(const T& x) {
  if constexpr (is_exact_v<T>) return to_string(x);
  else return x;
}

template <scalar T>
json hnum(const HNum<T>& w) {
  return {{"re", num(w.re())}, {"im", num(w.im())}, {"sigma", value(w.sigma())}};
}

template <scalar T>
json point(const HalfPlanePoint<T>& p) {
  return {{"u", num(p.u)}, {"v", num(p.v)}};
}

template <scalar T>
json matrix(const Mat2<T>& m) {
  return json::array({num(m.a), num(m.b), num(m.c), num(m.d)});
}

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');) out.push_back(item);
  if (!s.empty() && s.back() == ',') out.emplace_back();
  return out;
}

template <scalar T>
std::vector<T> parse_list(const std::string& s, std::size_t n, const char* what) {
  auto parts = split(s);
  if (parts.size() != n)
    throw error(errc::domain_error, std::string(what) + " needs " + std::to_string(n) +
                                        " comma-separated entries, got '" + s + "'");
  std::vector<T> out;
  for (auto& p : parts) out.push_back(parse_scalar<T>(p));
  return out;
}

template <scalar T>
Mat2<T> parse_matrix(const std::string& s) {
  auto v = parse_list<T>(s, 4, "--matrix");
  return {v[0], v[1], v[2], v[3]};
}

template <scalar T>
HalfPlanePoint<T> parse_point(const std::string& s) {
  auto v = parse_list<T>(s, 2, "--point");
  return {v[0], v[1]};
}

void print(const json& j) { std::cout << j.dump(2) << '\n'; }

struct Options {
  std::string matrix, point, t = "0", form = "brute", out, format = "csv", suite = "all";
  std::string subgroup, flavor = "complex", param = "1", generator, grid;
  int sigma = 0, figure = 1;
  bool geodesic = false;
};

template <scalar T>
int cmd_classify(const Options& o) {
  Lie<T> x(parse_matrix<T>(o.matrix));
  SubgroupType type = classify(x);
  std::cerr << "classify: " << x << " is " << name(type) << '\n';
  print({{"matrix", matrix(x.mat())}, {"type", name(type)}});
  return exit_ok;
}

template <scalar T>
int cmd_iwasawa(const Options& o) {
  SL2<T> g(parse_matrix<T>(o.matrix));
  IwasawaFactors f = iwasawa_decompose(g);
  print({{"alpha", f.alpha}, {"nu", f.nu}, {"phi", f.phi},
         {"recomposed", matrix(recompose(f))}});
  return exit_ok;
}

template <scalar T>
int cmd_exp(const Options& o) {
  Lie<T> x(parse_matrix<T>(o.matrix));
  T t = parse_scalar<T>(o.t);
  SL2<T> g = exp_traceless(x, t);
  print({{"t", num(t)}, {"exp", matrix(g.mat())}, {"type", name(classify(x))}});
  return exit_ok;
}

template <scalar T>
int cmd_act(const Options& o) {
  SL2<T> g(parse_matrix<T>(o.matrix));
  Sigma s = sigma_from_int(o.sigma);
  HalfPlanePoint<T> p = parse_point<T>(o.point);
  json j{{"sigma", o.sigma}, {"form", o.form}};
  if (o.form == "brute") {
    j["image"] = point(act_brute(g, p, s));
  } else if (o.form == "moebius") {
    ProjPoint<T> w = act_moebius(g, embed(p, s));
    if (w.is_ideal()) j["ideal"] = {{"w1", hnum(w.w1)}, {"w2", hnum(w.w2)}};
    else j["image"] = point(affine(w));
  } else {
    throw error(errc::domain_error, "--form must be brute or moebius");
  }
  print(j);
  return exit_ok;
}

int cmd_orbit(const Options& o) {
  auto curves = figure_curves(o.figure, o.geodesic);
  OutputFormat fmt;
  if (o.format == "csv") fmt = OutputFormat::CSV;
  else if (o.format == "svg") fmt = OutputFormat::SVG;
  else if (o.format == "json") fmt = OutputFormat::JSON;
  else throw error(errc::domain_error, "--format must be csv, svg or json");
  if (o.out.empty() || o.out == "-") {
    std::cout << render(curves, fmt);
    return exit_ok;
  }
  emit(curves, fmt, o.out);
  std::size_t samples = 0;
  for (const auto& c : curves) samples += c.samples.size();
  print({{"figure", o.figure}, {"curves", curves.size()}, {"samples", samples}, {"path", o.out},
         {"format", o.format}, {"geodesic_spokes", o.geodesic}});
  return exit_ok;
}

int cmd_verify(const Options& o) {
  auto results = run_suite(o.suite);
  json rows = json::array();
  std::size_t failed = 0, width = 0;
  for (const auto& r : results) width = std::max(width, r.suite.size() + r.name.size() + 2);
  for (const auto& r : results) {
    if (!r.passed) ++failed;
    std::string label = r.suite + ": " + r.name;
    std::cerr << (r.passed ? "pass  " : "FAIL  ") << label << std::string(width - label.size() + 2, ' ')
              << r.detail << '\n';
    rows.push_back({{"suite", r.suite}, {"name", r.name}, {"status", r.passed ? "pass" : "fail"},
                    {"detail", r.detail}});
  }
  std::cerr << results.size() - failed << " of " << results.size() << " checks pass\n";
  print({{"suite", o.suite}, {"checks", rows}, {"failed", failed}});
  return failed ? exit_verify_failed : exit_ok;
}

CharFlavor parse_flavor(const std::string& s) {
  if (s == "complex") return CharFlavor::complex;
  if (s == "parab-alg") return CharFlavor::parab_alg;
  if (s == "parab-geom") return CharFlavor::parab_geom;
  throw error(errc::domain_error, "--flavor must be complex, parab-alg or parab-geom");
}

template <scalar T>
int cmd_rep_eval(const Options& o) {
  SL2<T> g(parse_matrix<T>(o.matrix));
  HalfPlanePoint<T> w = parse_point<T>(o.point);
  CharacterSpec<T> spec;
  if (o.subgroup == "K") {
    spec = CharacterSpec<T>::K(int(to_double(parse_scalar<T>(o.param))));
    if (T(spec.k) != parse_scalar<T>(o.param)) throw error(errc::domain_error, "K needs an integer --param k");
  } else if (o.subgroup == "Nprime") {
    spec = CharacterSpec<T>::Nprime(parse_flavor(o.flavor), parse_scalar<T>(o.param));
  } else {
    throw error(errc::domain_error, "--subgroup must be K or Nprime");
  }
  RepTerms<T> r = rep_terms(spec, g, w);
  print({{"subgroup", o.subgroup},
         {"flavor", name(spec.flavor)},
         {"param", o.param},
         {"multiplier", hnum(r.multiplier)},
         {"shift", hnum(r.shift)},
         {"image", point(r.image)}});
  return exit_ok;
}

LieTriple<rational> parse_generator(const std::string& g) {
  if (g == "Z") return {0, 0, 1};
  if (g == "B") return {0, 1, 0};
  if (g == "A") return {1, 0, 0};
  // The parabolic generator -B + Z/2, i.e. the matrix [[0, 0], [-1, 0]].
  if (g == "NprimeGen") return {0, -1, rational(1) / 2};
  auto v = parse_list<rational>(g, 3, "--generator");
  return {v[0], v[1], v[2]};
}

template <scalar T>
json ladder_json(const LieTriple<T>& x, Sigma s) {
  json pairs = json::array();
  for (const auto& [lambda, L] : solve_ladder(x, s)) {
    HNum<T> sq = lambda * lambda;
    pairs.push_back({{"lambda", hnum(lambda)},
                     {"lambda_str", str(lambda)},
                     {"lambda_sq", sq.im() == 0 ? to_string(sq.re()) : str(sq)},
                     {"L", {{"A", hnum(L.cA)}, {"B", hnum(L.cB)}, {"Z", hnum(L.cZ)}}},
                     {"eigen_relation", eigen_relation(x, lambda, L)}});
  }
  return pairs;
}

int cmd_ladder(const Options& o) {
  LieTriple<rational> x = parse_generator(o.generator);
  Sigma s = sigma_from_int(o.sigma);
  json j{{"generator", o.generator},
         {"coefficients", {{"A", to_string(x.a)}, {"B", to_string(x.b)}, {"Z", to_string(x.z)}}},
         {"sigma", o.sigma}};
  try {
    j["arithmetic"] = "exact";
    j["pairs"] = ladder_json(x, s);
  } catch (const error& e) {
    if (e.code() != errc::not_exactly_representable) throw;
    LieTriple<double> xf{to_double(x.a), to_double(x.b), to_double(x.z)};
    j["arithmetic"] = "float";
    j["pairs"] = ladder_json(xf, s);
  }
  print(j);
  return exit_ok;
}

// Grid file: {"u_min", "u_max", "v_min", "v_max", "nu", "nv"} plus optional
// "tau" (default 1) and "g" (four entries) to also report the unitarity
// defect. The integrand is a pair of bumps centred in the grid.
int cmd_inner_product(const Options& o) {
  std::ifstream in(o.grid);
  if (!in) throw error(errc::io_error, "cannot read grid file '" + o.grid + "'");
  json spec;
  try {
    spec = json::parse(in);
  } catch (const json::exception& e) {
    throw error(errc::domain_error, std::string("grid file: ") + e.what());
  }
  QuadratureSpec grid;
  try {
    grid = {spec.at("u_min").get<double>(), spec.at("u_max").get<double>(), spec.at("v_min").get<double>(),
            spec.at("v_max").get<double>(), spec.at("nu").get<int>(),      spec.at("nv").get<int>()};
  } catch (const json::exception& e) {
    throw error(errc::domain_error, std::string("grid file: ") + e.what());
  }
  CharFlavor flavor = parse_flavor(o.flavor);
  double tau = spec.value("tau", 1.0);
  auto ch = CharacterSpec<double>::Nprime(flavor, tau);
  Sigma vs = value_sigma(flavor);
  double du = grid.u_max - grid.u_min, dv = grid.v_max - grid.v_min;
  Rect<double> r1{grid.u_min + 0.25 * du, grid.u_max - 0.25 * du, grid.v_min + 0.25 * dv, grid.v_max - 0.3 * dv};
  Rect<double> r2{grid.u_min + 0.3 * du, grid.u_max - 0.2 * du, grid.v_min + 0.3 * dv, grid.v_max - 0.25 * dv};
  auto f1 = bump_function(r1, vs, [vs](const HalfPlanePoint<double>& w) { return HNum<double>(1.0, w.u, vs); });
  auto f2 = bump_function(r2, vs, [vs](const HalfPlanePoint<double>& w) { return HNum<double>(w.v, 0.5, vs); });
  json j{{"flavor", name(flavor)}, {"tau", tau}};
  if (spec.contains("g")) {
    auto g = spec["g"].get<std::vector<double>>();
    if (g.size() != 4) throw error(errc::domain_error, "grid file: g needs four entries");
    UnitarityReport rep = unitarity_report(ch, SL2<double>(g[0], g[1], g[2], g[3]), f1, f2, grid);
    j["value"] = hnum(rep.value);
    j["value_transported"] = hnum(rep.value_transported);
    j["defect"] = rep.defect;
    j["error_estimate"] = rep.error_estimate;
  } else {
    HNum<double> v = inner_product(f1, f2, flavor, grid);
    j["value"] = hnum(v);
    j["error_estimate"] = distance(v, inner_product(f1, f2, flavor, grid.refined()));
  }
  print(j);
  return exit_ok;
}

template <class F>
int dispatch(bool exact, F&& f) {
  return exact ? f(rational{}) : f(double{});
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"eph: elliptic, parabolic and hyperbolic hypercomplex toolkit"};
  app.require_subcommand(1);
  Options o;
  auto* classify_cmd = app.add_subcommand("classify", "subgroup type of a traceless matrix");
  classify_cmd->add_option("--matrix", o.matrix, "a,b,c,d")->required();

  auto* iwasawa_cmd = app.add_subcommand("iwasawa", "alpha, nu, phi of g = A N K");
  iwasawa_cmd->add_option("--matrix", o.matrix, "a,b,c,d with ad - bc = 1")->required();

  auto* exp_cmd = app.add_subcommand("exp", "exp(tX) for traceless X");
  exp_cmd->add_option("--matrix", o.matrix, "a,b,c,d")->required();
  exp_cmd->add_option("--t", o.t, "parameter");

  auto* act_cmd = app.add_subcommand("act", "image of a point under g");
  act_cmd->add_option("--matrix", o.matrix, "a,b,c,d with ad - bc = 1")->required();
  act_cmd->add_option("--sigma", o.sigma, "-1, 0 or 1")->required();
  act_cmd->add_option("--point", o.point, "u,v")->required();
  act_cmd->add_option("--form", o.form, "brute or moebius");

  auto* orbit_cmd = app.add_subcommand("orbit", "curve data of the rotation figures");
  orbit_cmd->add_option("--figure", o.figure, "1 or 2")->required();
  orbit_cmd->add_option("--out", o.out, "output path (stdout if omitted)");
  orbit_cmd->add_option("--format", o.format, "csv, svg or json");
  orbit_cmd->add_flag("--geodesic-spokes", o.geodesic, "experimental half-Cayley families");

  auto* verify_cmd = app.add_subcommand("verify", "run the identity checklist");
  verify_cmd->add_option("--suite", o.suite, "hypercomplex|sl2|homogeneous|dualalg|induced|ladder|orbitgen|all");

  auto* rep_cmd = app.add_subcommand("rep-eval", "multiplier and image of an induced representation");
  rep_cmd->add_option("--subgroup", o.subgroup, "K or Nprime")->required();
  rep_cmd->add_option("--flavor", o.flavor, "complex, parab-alg or parab-geom");
  rep_cmd->add_option("--param", o.param, "k for K, tau for Nprime");
  rep_cmd->add_option("--matrix", o.matrix, "g as a,b,c,d")->required();
  rep_cmd->add_option("--point", o.point, "u,v")->required();

  auto* ladder_cmd = app.add_subcommand("ladder", "ladder operators of a generator");
  ladder_cmd->add_option("--generator", o.generator, "Z, B, NprimeGen, A or a,b,z in the A,B,Z basis")
      ->required();
  ladder_cmd->add_option("--sigma", o.sigma, "-1, 0 or 1")->required();

  auto* ip_cmd = app.add_subcommand("inner-product", "invariant inner product of two bumps");
  ip_cmd->add_option("--flavor", o.flavor, "complex, parab-alg or parab-geom");
  ip_cmd->add_option("--grid", o.grid, "grid spec JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  bool exact = exact_mode();
  try {
    if (classify_cmd->parsed())
      return dispatch(exact, [&]<class T>(T) { return cmd_classify<T>(o); });
    if (iwasawa_cmd->parsed()) return dispatch(exact, [&]<class T>(T) { return cmd_iwasawa<T>(o); });
    if (exp_cmd->parsed()) return dispatch(exact, [&]<class T>(T) { return cmd_exp<T>(o); });
    if (act_cmd->parsed()) return dispatch(exact, [&]<class T>(T) { return cmd_act<T>(o); });
    if (orbit_cmd->parsed()) return cmd_orbit(o);
    if (verify_cmd->parsed()) return cmd_verify(o);
    if (rep_cmd->parsed()) return dispatch(exact, [&]<class T>(T) { return cmd_rep_eval<T>(o); });
    if (ladder_cmd->parsed()) return cmd_ladder(o);
    if (ip_cmd->parsed()) return cmd_inner_product(o);
  } catch (const error& e) {
    std::cerr << "eph: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}
