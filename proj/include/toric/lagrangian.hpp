#pragma once

#include <cstdint>
#include <cstdlib>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "toric/domain.hpp"
#include "toric/errors.hpp"
#include "toric/geometry.hpp"
#include "toric/rational.hpp"

namespace toric {

// Smallest positive value of k_1 x_1 + ... + k_n x_n over integer k, for a
// rational fiber position x > 0. The values form the lattice gcd(x) Z, and
// gcd(p_i/q_i) = gcd(p_i) / lcm(q_i) for fractions in lowest terms.
inline Rational a_min_closed(std::span<const Rational> x) {
  if (x.empty()) throw InputError("a_min: empty point");
  Integer g = 0, l = 1;
  for (const auto& c : x) {
    if (c <= 0) throw InputError("a_min: coordinates must be positive (fiber must be a torus)");
    g = boost::multiprecision::gcd(g, num(c));
    l = boost::multiprecision::lcm(l, den(c));
  }
  return Rational(g, l);
}

struct AMinBrute {
  Rational value;
  std::vector<std::int64_t> k;  // a minimizing coefficient vector
};

// Exhaustive minimum of the positive values of sum k_i x_i over k in [-K, K]^n.
// Ties prefer the smallest l1 norm of k, then the first in odometer order.
inline AMinBrute a_min_brute(std::span<const Rational> x, std::int64_t bound) {
  if (bound < 1) throw InputError("a_min_brute: bound K must be >= 1");
  if (x.empty()) throw InputError("a_min: empty point");
  for (const auto& c : x)
    if (c <= 0) throw InputError("a_min: coordinates must be positive (fiber must be a torus)");

  Integer q = 1;
  for (const auto& c : x) q = boost::multiprecision::lcm(q, den(c));
  std::vector<Integer> scaled;
  Integer reach = 0;
  for (const auto& c : x) {
    scaled.push_back(num(c) * (q / den(c)));
    reach += scaled.back() * bound;
  }
  const std::size_t n = x.size();
  std::vector<std::int64_t> k(n, -bound);

  auto l1 = [](const std::vector<std::int64_t>& v) {
    std::int64_t s = 0;
    for (auto c : v) s += std::llabs(c);
    return s;
  };

  auto run = [&](auto zero, const auto& weights) {
    using T = decltype(zero);
    std::optional<T> best;
    std::vector<std::int64_t> best_k;
    for (;;) {
      T sum = zero;
      for (std::size_t i = 0; i < n; ++i) sum += weights[i] * T(k[i]);
      if (sum > 0 && (!best || sum < *best || (sum == *best && l1(k) < l1(best_k)))) {
        best = sum;
        best_k = k;
      }
      std::size_t i = n;
      while (i > 0 && k[i - 1] == bound) k[--i] = -bound;
      if (i == 0) break;
      ++k[i - 1];
    }
    return AMinBrute{Rational(Integer(*best), q), best_k};
  };

  if (reach < Integer(std::numeric_limits<std::int64_t>::max() / 4)) {
    std::vector<std::int64_t> w;
    for (const auto& s : scaled) w.push_back(static_cast<std::int64_t>(s));
    return run(std::int64_t{0}, w);
  }
  return run(Integer(0), scaled);
}

enum class CLRule { MonotoneDiagonal, LatticeWitness, EtaOnBoundary, IntervalOnly };

inline const char* rule_name(CLRule r) {
  switch (r) {
    case CLRule::MonotoneDiagonal: return "MonotoneDiagonal";
    case CLRule::LatticeWitness: return "LatticeWitness";
    case CLRule::EtaOnBoundary: return "EtaOnBoundary";
    case CLRule::IntervalOnly: return "IntervalOnly";
  }
  return "?";
}

// Lagrangian capacity with the rule that justifies it. IntervalOnly carries no
// value, only lower <= c_L <= upper.
struct CLCertificate {
  std::optional<Rational> value;
  CLRule rule = CLRule::IntervalOnly;
  std::optional<std::vector<Rational>> witness;
  Rational lower;
  Rational upper;
};

namespace detail {

inline bool on_free_boundary(const ToricDomain& d, const Point2& p) {
  if (auto poly = std::get_if<Polygon2D>(&d)) return poly->on_chain(p);
  if (auto rect = std::get_if<Rectilinear2D>(&d)) return rect->locate(p) == Rectilinear2D::Location::Boundary;
  return false;
}

inline std::pair<Rational, Rational> extents(const ToricDomain& d) {
  if (auto poly = std::get_if<Polygon2D>(&d)) return {support(*poly, {1, 0}), support(*poly, {0, 1})};
  const auto& r = std::get<Rectilinear2D>(d);
  return {r.xs().back(), r.ys().back()};
}

// Positive-coordinate torus positions tried when no theorem pins c_L down.
inline std::vector<Point2> fiber_candidates(const ToricDomain& d) {
  std::vector<Point2> out;
  if (auto poly = std::get_if<Polygon2D>(&d)) {
    for (const auto& v : poly->vertices())
      if (v.x > 0 && v.y > 0) out.push_back(v);
  } else {
    const auto& r = std::get<Rectilinear2D>(d);
    for (const auto& rc : r.rects())
      for (const Point2& c : {Point2{rc.x1, rc.y1}, Point2{rc.x0, rc.y1}, Point2{rc.x1, rc.y0}})
        if (c.x > 0 && c.y > 0) out.push_back(c);
  }
  try {
    Rational dl = delta(d);
    if (dl > 0) out.push_back({dl, dl});
  } catch (const InapplicableError&) {
  }
  return out;
}

}  // namespace detail

// Decision cascade:
//   1. monotone standard or polygonal domain: c_L = delta;
//   2. a point (k_1 eta, k_2 eta), some k_i >= 2, on the free boundary: c_L = eta;
//   3. (eta, eta) on the boundary: c_L = eta;
//   4. otherwise only max A_min over candidate fibers <= c_L <= eta.
inline CLCertificate lagrangian_capacity(const ToricDomain& domain) {
  const Rational dl_eta = eta(domain);
  const bool rectilinear = std::holds_alternative<Rectilinear2D>(domain);

  if (!rectilinear && is_monotone(domain)) {
    Rational dl = delta(domain);
    return {dl, CLRule::MonotoneDiagonal, std::vector<Rational>(dimension(domain), dl), dl, dl};
  }

  auto [max_x, max_y] = detail::extents(domain);
  for (int axis = 0; axis < 2; ++axis) {
    Integer top = floor_div((axis == 0 ? max_x : max_y) / dl_eta);
    for (Integer k = 2; k <= top; ++k) {
      Rational far = Rational(k) * dl_eta;
      Point2 p = axis == 0 ? Point2{far, dl_eta} : Point2{dl_eta, far};
      if (detail::on_free_boundary(domain, p))
        return {dl_eta, CLRule::LatticeWitness, std::vector<Rational>{p.x, p.y}, dl_eta, dl_eta};
    }
  }

  if (detail::on_free_boundary(domain, {dl_eta, dl_eta}))
    return {dl_eta, CLRule::EtaOnBoundary, std::vector<Rational>{dl_eta, dl_eta}, dl_eta, dl_eta};

  Rational lower = 0;
  std::optional<std::vector<Rational>> best;
  for (const auto& p : detail::fiber_candidates(domain)) {
    std::vector<Rational> x{p.x, p.y};
    Rational a = a_min_closed(x);
    if (a > lower) {
      lower = a;
      best = x;
    }
  }
  return {std::nullopt, CLRule::IntervalOnly, best, lower, dl_eta};
}

// Common value of every cube-normalized capacity; only defined on monotone domains.
inline Rational cube_normalized_value(const ToricDomain& domain) {
  if (!is_monotone(domain))
    throw InapplicableError("cube-normalized value: theorem inapplicable, domain is not monotone");
  return delta(domain);
}

}  // namespace toric
