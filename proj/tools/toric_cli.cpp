// Command-line front end for the toric capacity library.
//
// Exit status: 0 success, 1 computation refused (theorem or precondition does
// not apply), 2 input error. Errors go to stderr as a single "error: ..." line.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "toric/toric.hpp"

namespace {

using namespace toric;

struct Format {
  std::string kind = "table";
  int decimals = -1;  // < 0: exact only

  std::string operator()(const Rational& r) const {
    if (decimals < 0) return to_string(r);
    return to_string(r) + " (~" + to_decimal(r, static_cast<unsigned>(decimals)) + ")";
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open \"" + path + "\"");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ToricDomain load_domain(const std::string& path) { return parse_domain(read_file(path)); }

Polygon2D load_polygon(const std::string& path) {
  ToricDomain d = load_domain(path);
  if (auto p = std::get_if<Polygon2D>(&d)) return *p;
  throw InputError("\"" + path + "\" is not a polygon2d domain");
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream in(s);
  while (std::getline(in, cell, sep)) out.push_back(cell);
  if (out.empty()) throw InputError("empty list");
  return out;
}

std::string point_string(const std::vector<Rational>& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + to_string(p[i]);
  return s + ")";
}

void print_json(const Json& j) { std::cout << j.dump(2) << '\n'; }

// ---- info ------------------------------------------------------------------

int run_info(const std::string& path) {
  ToricDomain d = load_domain(path);
  std::cout << "kind: " << kind_name(d) << '\n' << "n: " << dimension(d) << '\n';
  if (auto s = std::get_if<StandardDomain>(&d)) std::cout << "a: " << to_string(s->size) << '\n';
  if (auto p = std::get_if<Polygon2D>(&d)) {
    std::cout << "vertices:";
    for (const auto& v : p->vertices()) std::cout << " (" << to_string(v.x) << "," << to_string(v.y) << ")";
    std::cout << '\n' << "weakly_convex: " << (is_weakly_convex(*p) ? "true" : "false") << '\n';
    std::cout << "cube_bound_applies: " << (ech::cube_bound_applies(*p) ? "true" : "false") << '\n';
  }
  if (auto r = std::get_if<Rectilinear2D>(&d)) std::cout << "rects: " << r->rects().size() << '\n';
  std::cout << "monotone: " << (is_monotone(d) ? "true" : "false") << '\n';
  std::cout << "delta: " << to_string(delta(d)) << '\n';
  std::cout << "eta: " << to_string(eta(d)) << '\n';
  std::cout << "cube_inclusion: " << to_string(cube_inclusion(d)) << '\n';
  return 0;
}

// ---- report ----------------------------------------------------------------

void print_report_table(const CapacityReport& r, const Format& f) {
  auto interval = [&](const Interval& iv) {
    return "[" + f(iv.lower) + ", " + f(iv.upper) + "]" + (iv.exact ? " exact" : "");
  };
  std::cout << "delta     " << f(r.delta) << '\n';
  std::cout << "eta       " << f(r.eta) << '\n';
  std::cout << "monotone  " << (r.monotone ? "true" : "false") << '\n';
  std::cout << "c_L       ";
  if (r.c_L.value)
    std::cout << f(*r.c_L.value);
  else
    std::cout << "[" << f(r.c_L.lower) << ", " << f(r.c_L.upper) << "]";
  std::cout << "  rule=" << rule_name(r.c_L.rule);
  if (r.c_L.witness) std::cout << " witness=" << point_string(*r.c_L.witness);
  std::cout << '\n';
  std::cout << "c_P       " << interval(r.c_P) << '\n';
  std::cout << "c_N       " << interval(r.c_N) << '\n';
  std::cout << "c_B,c^Z   [" << f(r.ball_lower) << ", " << (r.cylinder_upper ? f(*r.cylinder_upper) : "inf")
            << "] inclusion bracket only\n";
  std::cout << "notes:\n";
  for (const auto& n : r.notes) std::cout << "  - " << n << '\n';
}

int run_report(const std::string& path, const Format& f) {
  CapacityReport r = capacity_report(load_domain(path));
  if (f.kind == "json") {
    print_json(report_to_json(r));
  } else if (f.kind == "csv") {
    std::cout << csv_header() << '\n' << csv_row(std::nullopt, r) << '\n';
  } else {
    print_report_table(r, f);
  }
  return 0;
}

// ---- xa --------------------------------------------------------------------

std::vector<Rational> sweep_values(const std::string& text) {
  auto dots = text.find("..");
  auto colon = text.find(':');
  if (dots == std::string::npos || colon == std::string::npos || colon < dots)
    throw InputError("sweep must look like LO..HI:STEP");
  Rational lo = parse_rational(text.substr(0, dots));
  Rational hi = parse_rational(text.substr(dots + 2, colon - dots - 2));
  Rational step = parse_rational(text.substr(colon + 1));
  if (step <= 0) throw InputError("sweep step must be positive");
  if (hi < lo) throw InputError("sweep upper end is below the lower end");
  std::vector<Rational> out;
  for (Rational a = lo; a <= hi; a += step) out.push_back(a);
  return out;
}

int run_xa(const std::vector<std::string>& values, const std::string& sweep, const Format& f) {
  std::vector<Rational> as;
  for (const auto& v : values)
    for (const auto& s : split(v, ',')) as.push_back(parse_rational(s));
  if (!sweep.empty())
    for (auto& a : sweep_values(sweep)) as.push_back(a);
  if (as.empty()) throw InputError("xa: give --a or --sweep");
  std::sort(as.begin(), as.end());
  as.erase(std::unique(as.begin(), as.end()), as.end());

  std::vector<XaVerification> rows;
  for (const auto& a : as) rows.push_back(verify_xa(a));

  if (f.kind == "csv") {
    std::cout << csv_header() << '\n';
    for (const auto& v : rows) std::cout << csv_row(v.a, v.got) << '\n';
  } else if (f.kind == "json") {
    Json arr = Json::array();
    for (const auto& v : rows)
      arr.push_back(Json{{"a", to_string(v.a)},
                         {"pass", v.pass},
                         {"expected",
                          {{"c_P", to_string(v.expected_c_P)},
                           {"c_L", to_string(v.expected_c_L)},
                           {"c_N", to_string(v.expected_c_N)}}},
                         {"report", report_to_json(v.got)}});
    print_json(arr);
  } else {
    for (const auto& v : rows) {
      const auto& g = v.got;
      auto interval = [&](const Interval& iv) {
        return iv.exact ? f(iv.lower) : "[" + f(iv.lower) + "," + f(iv.upper) + "]";
      };
      std::cout << "a=" << f(v.a) << ", c_P=" << interval(g.c_P)
                << ", c_L=" << (g.c_L.value ? f(*g.c_L.value) : std::string("?")) << ", c_N=" << interval(g.c_N)
                << ", " << (v.pass ? "pass" : "FAIL") << '\n';
    }
  }
  return 0;
}

// ---- bound -----------------------------------------------------------------

int run_bound(const std::string& path, const std::vector<std::int64_t>& ds, const Format& f) {
  ToricDomain d = load_domain(path);
  auto poly = std::get_if<Polygon2D>(&d);
  if (!poly) throw InapplicableError("bound: theorem inapplicable, the cube bound needs a polygon2d domain");
  Rational b = ech::cube_bound(*poly);
  std::cout << "bound=" << f(b) << '\n';
  std::cout << "x(0)+y(1)=" << f(poly->x_intercept() + poly->y_intercept()) << '\n';
  for (auto n : ds) std::cout << "d=" << n << " finite_d_bound=" << f(ech::finite_d_bound(*poly, n)) << '\n';

  Rational lower = cube_inclusion(d);
  if (is_monotone(d)) {
    Rational exact = delta(d);
    if (exact < b)
      std::cout << "note: not tight; c_P=" << f(exact) << " (monotone domain, c_P = delta)\n";
    else
      std::cout << "note: tight; c_P=" << f(exact) << " (monotone domain, c_P = delta)\n";
  } else if (lower == b) {
    std::cout << "note: tight; cube inclusion attains the bound, c_P=" << f(b) << '\n';
  } else {
    std::cout << "note: c_P in [" << f(lower) << ", " << f(b) << "]\n";
  }
  return 0;
}

// ---- obstruct --------------------------------------------------------------

Json witness_json(const ech::SearchWitness& w) {
  Json af = Json::array(), tf = Json::array();
  for (const auto& a : w.alpha_factors) af.push_back(ech::to_string(a));
  for (const auto& t : w.target_factors) tf.push_back(ech::to_string(t));
  return Json{{"alpha", ech::to_string(w.alpha)}, {"alpha_factors", af}, {"target_factors", tf}};
}

int run_obstruct(const std::string& source, const std::string& target, const std::string& alpha_text,
                 const ech::SearchLimits& limits, const Format& f) {
  Polygon2D omega = load_polygon(source);
  Polygon2D omega_target = load_polygon(target);
  ech::CombOrbitSet alpha = ech::parse_orbit_set(alpha_text);
  ech::SearchReport rep = ech::obstruction_search(omega, omega_target, alpha, limits);
  const auto inv = ech::orbit_invariants(alpha);

  if (f.kind == "json") {
    Json j{{"status", ech::status_name(rep.status)},
           {"alpha_target", ech::to_string(alpha)},
           {"index", inv.index},
           {"bounds", {{"vmax", limits.vmax}, {"lmax", limits.lmax}, {"axis_orbits", limits.include_axis_orbits},
                       {"node_limit", limits.node_limit}}},
           {"factorizations", rep.factorizations},
           {"factorizations_refuted", rep.factorizations_refuted},
           {"distinct_factors", rep.distinct_factors},
           {"nodes", rep.nodes},
           {"truncated", rep.truncated},
           {"node_limit_hit", rep.node_limit_hit},
           {"lmax_complete", rep.lmax_complete},
           {"obstructed_a", rep.obstructed_a ? Json(to_string(*rep.obstructed_a)) : Json(nullptr)},
           {"witness", rep.witness ? witness_json(*rep.witness) : Json(nullptr)}};
    print_json(j);
    return 0;
  }
  std::cout << "status: " << ech::status_name(rep.status) << '\n';
  std::cout << "alpha': " << ech::to_string(alpha) << "  (I=" << inv.index << ")\n";
  std::cout << "bounds: vmax=" << limits.vmax << " lmax=" << limits.lmax
            << " axis_orbits=" << (limits.include_axis_orbits ? "included" : "excluded") << '\n';
  std::cout << "factorizations: " << rep.factorizations << " (refuted " << rep.factorizations_refuted << ")\n";
  std::cout << "distinct target factors: " << rep.distinct_factors << '\n';
  std::cout << "nodes: " << rep.nodes << '\n';
  std::cout << "truncated: " << (rep.truncated ? "true" : "false") << '\n';
  std::cout << "lmax covers m(alpha'): " << (rep.lmax_complete ? "true" : "false") << '\n';
  if (rep.node_limit_hit) std::cout << "node limit reached\n";
  if (rep.obstructed_a) std::cout << "obstructed_a: " << f(*rep.obstructed_a) << '\n';
  if (rep.witness) {
    std::cout << "witness alpha: " << ech::to_string(rep.witness->alpha) << '\n';
    for (std::size_t j = 0; j < rep.witness->alpha_factors.size(); ++j)
      std::cout << "  " << ech::to_string(rep.witness->alpha_factors[j]) << "  <=  "
                << ech::to_string(rep.witness->target_factors[j]) << '\n';
  }
  return 0;
}

// ---- amin ------------------------------------------------------------------

int run_amin(const std::string& xs, std::optional<std::int64_t> brute, const Format& f) {
  std::vector<Rational> x;
  for (const auto& s : split(xs, ',')) x.push_back(parse_rational(s));
  Rational closed = a_min_closed(x);
  if (!brute) {
    std::cout << "closed=" << f(closed) << '\n';
    return 0;
  }
  AMinBrute b = a_min_brute(x, *brute);
  std::cout << "closed=" << f(closed) << ", brute=" << f(b.value) << ", " << (closed == b.value ? "agree" : "DISAGREE")
            << '\n';
  std::cout << "k=(";
  for (std::size_t i = 0; i < b.k.size(); ++i) std::cout << (i ? "," : "") << b.k[i];
  std::cout << ")\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact capacity invariants of toric domains"};
  app.require_subcommand(1);
  Format fmt;

  auto add_format = [&](CLI::App* sub, bool csv = true) {
    if (csv)
      sub->add_option("--format", fmt.kind, "table, csv or json")->check(CLI::IsMember({"table", "csv", "json"}));
    else
      sub->add_option("--format", fmt.kind, "table or json")->check(CLI::IsMember({"table", "json"}));
    sub->add_option("--decimal", fmt.decimals, "also print N truncated decimal digits (approximate)")
        ->check(CLI::Range(0, 60));
  };

  std::string path;
  auto* info = app.add_subcommand("info", "summarize a domain file");
  info->add_option("file", path)->required();

  auto* report = app.add_subcommand("report", "capacity report for a domain");
  report->add_option("file", path)->required();
  add_format(report);

  std::vector<std::string> a_values;
  std::string sweep;
  auto* xa = app.add_subcommand("xa", "check the Omega_a family against c_P = min(1-2a, 1/2), c_L = c_N = 1/2");
  xa->add_option("--a", a_values, "value(s) P/Q, comma separated");
  xa->add_option("--sweep", sweep, "LO..HI:STEP in rationals");
  add_format(xa);

  std::vector<std::int64_t> ds{3, 9, 30, 90, 300};
  auto* bound = app.add_subcommand("bound", "cube bound and its finite-d sequence");
  bound->add_option("file", path)->required();
  bound->add_option("--d", ds, "d values for the finite-d bound")->delimiter(',')->check(CLI::PositiveNumber);
  bound->add_option("--decimal", fmt.decimals, "also print N truncated decimal digits (approximate)")
      ->check(CLI::Range(0, 60));

  std::string source, target, alpha;
  ech::SearchLimits limits;
  bool no_axis = false;
  auto* obstruct = app.add_subcommand("obstruct", "bounded search for the orbit-set factorizations forced by an embedding");
  obstruct->add_option("--source", source, "polygon2d file of the embedded domain")->required();
  obstruct->add_option("--target", target, "polygon2d file of the receiving domain")->required();
  obstruct->add_option("--alpha", alpha, "target orbit set, e.g. \"e(1,-1)^3 * e(-1,1)^3 * e(1,1)^2\"")->required();
  obstruct->add_option("--vmax", limits.vmax, "bound on |x_v|, |y_v| for source orbits")->required();
  obstruct->add_option("--lmax", limits.lmax, "maximum number of factors")->required();
  obstruct->add_option("--node-limit", limits.node_limit, "search budget; Inconclusive when exhausted");
  obstruct->add_flag("--no-axis-orbits", no_axis, "exclude e(1,0) and e(0,1) from the source orbit sets");
  add_format(obstruct, false);

  std::string xs;
  std::optional<std::int64_t> brute;
  auto* amin = app.add_subcommand("amin", "minimal area of the fiber torus over a rational point");
  amin->add_option("--x", xs, "P/Q,P/Q,...")->required();
  amin->add_option("--brute", brute, "also run the exhaustive oracle over [-K,K]^n");
  amin->add_option("--decimal", fmt.decimals, "also print N truncated decimal digits (approximate)")
      ->check(CLI::Range(0, 60));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (*info) return run_info(path);
    if (*report) return run_report(path, fmt);
    if (*xa) return run_xa(a_values, sweep, fmt);
    if (*bound) return run_bound(path, ds, fmt);
    if (*obstruct) {
      limits.include_axis_orbits = !no_axis;
      return run_obstruct(source, target, alpha, limits, fmt);
    }
    if (*amin) return run_amin(xs, brute, fmt);
  } catch (const toric::InapplicableError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
