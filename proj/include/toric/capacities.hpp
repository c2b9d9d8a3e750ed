#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "toric/domain.hpp"
#include "toric/domain_io.hpp"
#include "toric/ech/relation.hpp"
#include "toric/errors.hpp"
#include "toric/geometry.hpp"
#include "toric/lagrangian.hpp"
#include "toric/rational.hpp"

namespace toric {

struct Interval {
  Rational lower;
  Rational upper;
  bool exact = false;

  static Interval of(Rational lo, Rational hi) {
    bool ex = lo == hi;
    return {std::move(lo), std::move(hi), ex};
  }
  friend bool operator==(const Interval&, const Interval&) = default;
};

struct CapacityReport {
  Rational delta;
  Rational eta;
  CLCertificate c_L;
  Interval c_P;
  Interval c_N;
  bool monotone = false;
  // Ball-normalized bracket [largest simplex inside, smallest cylinder around];
  // reported for orientation only.
  Rational ball_lower;
  std::optional<Rational> cylinder_upper;
  std::vector<std::string> notes;
};

// Omega_a: corners (0,0), (1-2a,0), (1-a,a), (a,1-a), (0,1-2a); weakly convex, not monotone.
inline Polygon2D omega_a(const Rational& a) {
  if (!(a > 0 && a < Rational(1, 2))) throw InputError("omega_a: parameter a must satisfy 0 < a < 1/2");
  return Polygon2D::from_vertices({{1 - 2 * a, 0}, {1 - a, a}, {a, 1 - a}, {0, 1 - 2 * a}});
}

inline CapacityReport capacity_report(const ToricDomain& domain) {
  CapacityReport r;
  r.delta = delta(domain);
  r.eta = eta(domain);
  r.monotone = is_monotone(domain);
  r.c_L = lagrangian_capacity(domain);
  r.ball_lower = simplex_inclusion(domain);
  r.cylinder_upper = cylinder_cover(domain);

  const Rational cube_lo = cube_inclusion(domain);
  Rational cube_hi = r.eta;
  std::string cube_hi_note = "c_P upper = eta: P(a) -> X -> N(eta) forces a <= eta (cube non-squeezing into the NDUC)";
  if (auto poly = std::get_if<Polygon2D>(&domain)) {
    if (ech::cube_bound_applies(*poly)) {
      Rational b = ech::cube_bound(*poly);
      if (b < cube_hi) {
        cube_hi = b;
        cube_hi_note = "c_P upper = (x(0)+y(1))/2 from the weakly convex cube bound (ECH obstruction)";
      }
    } else {
      r.notes.push_back("cube bound (x(0)+y(1))/2 inapplicable: end-slope condition fails; using eta");
    }
  }
  r.c_P = Interval::of(cube_lo, cube_hi);
  r.c_N = Interval::of(std::max(r.c_L.lower, cube_lo), r.eta);

  if (r.monotone)
    r.notes.push_back("monotone: P_n(delta) in X in N_n(delta), every cube-normalized capacity equals delta");
  r.notes.push_back("c_P lower = sup{a : P_n(a) in X} by inclusion");
  r.notes.push_back(cube_hi_note);
  switch (r.c_L.rule) {
    case CLRule::MonotoneDiagonal: r.notes.push_back("c_L = delta for monotone toric domains"); break;
    case CLRule::LatticeWitness:
      r.notes.push_back("c_L = eta: lattice point (k_1 eta, k_2 eta) on the boundary and on the NDUC boundary");
      break;
    case CLRule::EtaOnBoundary: r.notes.push_back("c_L = eta: (eta,...,eta) lies on the boundary"); break;
    case CLRule::IntervalOnly: r.notes.push_back("c_L bracketed by max A_min over candidate fibers and eta"); break;
  }
  r.notes.push_back("c_N lower = max(c_L, c_P) lower bounds; c_N upper = eta since X in N_n(eta)");
  r.notes.push_back("c_B/c^Z bracket is the trivial inclusion bracket, not computed here");
  return r;
}

struct XaVerification {
  Rational a;
  bool pass = false;
  Rational expected_c_P;
  Rational expected_c_L;
  Rational expected_c_N;
  CapacityReport got;
};

// Exact comparison against c_P = min(1-2a, 1/2), c_L = c^N = 1/2.
inline XaVerification verify_xa(const Rational& a) {
  XaVerification v;
  v.a = a;
  v.got = capacity_report(omega_a(a));
  v.expected_c_P = std::min(Rational(1 - 2 * a), Rational(1, 2));
  v.expected_c_L = Rational(1, 2);
  v.expected_c_N = Rational(1, 2);
  const auto& g = v.got;
  v.pass = g.c_P.exact && g.c_P.lower == v.expected_c_P && g.c_L.value && *g.c_L.value == v.expected_c_L &&
           g.c_N.exact && g.c_N.lower == v.expected_c_N;
  return v;
}

// ---- serialization ---------------------------------------------------------

inline Json report_to_json(const CapacityReport& r) {
  auto interval = [](const Interval& iv) {
    return Json{{"lower", to_string(iv.lower)}, {"upper", to_string(iv.upper)}, {"exact", iv.exact}};
  };
  Json cl{{"value", r.c_L.value ? Json(to_string(*r.c_L.value)) : Json(nullptr)},
          {"rule", rule_name(r.c_L.rule)},
          {"witness", nullptr},
          {"lower", to_string(r.c_L.lower)},
          {"upper", to_string(r.c_L.upper)}};
  if (r.c_L.witness) {
    Json w = Json::array();
    for (const auto& c : *r.c_L.witness) w.push_back(to_string(c));
    cl["witness"] = w;
  }
  Json notes = Json::array();
  for (const auto& n : r.notes) notes.push_back(n);
  return Json{{"delta", to_string(r.delta)},
              {"eta", to_string(r.eta)},
              {"monotone", r.monotone},
              {"c_L", cl},
              {"c_P", interval(r.c_P)},
              {"c_N", interval(r.c_N)},
              {"ball_bracket",
               {{"lower", to_string(r.ball_lower)},
                {"upper", r.cylinder_upper ? Json(to_string(*r.cylinder_upper)) : Json(nullptr)}}},
              {"notes", notes}};
}

inline CapacityReport report_from_json(const Json& j) {
  auto rat = [](const Json& v) { return detail::rational_field(v, "report"); };
  auto interval = [&](const Json& v) {
    return Interval{rat(detail::required(v, "lower")), rat(detail::required(v, "upper")),
                    detail::required(v, "exact").get<bool>()};
  };
  CapacityReport r;
  r.delta = rat(detail::required(j, "delta"));
  r.eta = rat(detail::required(j, "eta"));
  r.monotone = detail::required(j, "monotone").get<bool>();
  const Json& cl = detail::required(j, "c_L");
  if (!cl.at("value").is_null()) r.c_L.value = rat(cl.at("value"));
  const std::string rule = detail::required(cl, "rule").get<std::string>();
  bool known = false;
  for (CLRule c : {CLRule::MonotoneDiagonal, CLRule::LatticeWitness, CLRule::EtaOnBoundary, CLRule::IntervalOnly})
    if (rule == rule_name(c)) {
      r.c_L.rule = c;
      known = true;
    }
  if (!known) throw InputError("report: unknown c_L rule \"" + rule + "\"");
  if (!cl.at("witness").is_null()) {
    std::vector<Rational> w;
    for (const auto& c : cl.at("witness")) w.push_back(rat(c));
    r.c_L.witness = w;
  }
  r.c_L.lower = rat(detail::required(cl, "lower"));
  r.c_L.upper = rat(detail::required(cl, "upper"));
  r.c_P = interval(detail::required(j, "c_P"));
  r.c_N = interval(detail::required(j, "c_N"));
  const Json& bb = detail::required(j, "ball_bracket");
  r.ball_lower = rat(detail::required(bb, "lower"));
  if (!bb.at("upper").is_null()) r.cylinder_upper = rat(bb.at("upper"));
  for (const auto& n : detail::required(j, "notes")) r.notes.push_back(n.get<std::string>());
  return r;
}

inline const char* csv_header() { return "a,delta,eta,cL,cP_lo,cP_hi,cN_lo,cN_hi,monotone"; }

// `a` is empty for reports that are not part of an Omega_a sweep; cL is empty
// when only an interval is known.
inline std::string csv_row(const std::optional<Rational>& a, const CapacityReport& r) {
  std::ostringstream out;
  out << (a ? to_string(*a) : "") << ',' << to_string(r.delta) << ',' << to_string(r.eta) << ','
      << (r.c_L.value ? to_string(*r.c_L.value) : "") << ',' << to_string(r.c_P.lower) << ','
      << to_string(r.c_P.upper) << ',' << to_string(r.c_N.lower) << ',' << to_string(r.c_N.upper) << ','
      << (r.monotone ? "true" : "false");
  return out.str();
}

struct CsvRow {
  std::optional<Rational> a;
  Rational delta, eta;
  std::optional<Rational> c_L;
  Rational cP_lo, cP_hi, cN_lo, cN_hi;
  bool monotone = false;
  friend bool operator==(const CsvRow&, const CsvRow&) = default;
};

inline CsvRow parse_csv_row(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  if (cells.size() != 9) throw InputError("csv row must have 9 columns");
  auto opt = [](const std::string& s) -> std::optional<Rational> {
    if (s.empty()) return std::nullopt;
    return parse_rational(s);
  };
  if (cells[8] != "true" && cells[8] != "false") throw InputError("csv: monotone must be true or false");
  return CsvRow{opt(cells[0]),           parse_rational(cells[1]), parse_rational(cells[2]),
                opt(cells[3]),           parse_rational(cells[4]), parse_rational(cells[5]),
                parse_rational(cells[6]), parse_rational(cells[7]), cells[8] == "true"};
}

}  // namespace toric
