#pragma once

#include <cstdint>
#include <optional>

#include "toric/domain.hpp"
#include "toric/ech/orbit.hpp"
#include "toric/errors.hpp"
#include "toric/geometry.hpp"
#include "toric/rational.hpp"

namespace toric::ech {

// A_Omega(alpha) = sum_i m_i * support(Omega, v_i)
inline Rational action(const Polygon2D& omega, const CombOrbitSet& alpha) {
  Rational total = 0;
  for (const auto& f : alpha.factors()) total += Rational(f.m) * support(omega, f.orbit.v);
  return total;
}

struct LeqResult {
  bool holds = false;
  std::optional<int> failed;  // 1, 2 or 3 for conditions (i), (ii), (iii)
};

// Condition (iii), x + y - h/2 >= x' + y' + m' - 1, doubled to stay in integers.
inline bool index_gap_condition(const OrbitInvariants& a, const OrbitInvariants& b) {
  return 2 * (a.x + a.y) - a.h >= 2 * (b.x + b.y + b.m - 1);
}

inline LeqResult leq_relation(const Polygon2D& omega, const Polygon2D& omega_target, const CombOrbitSet& alpha,
                              const CombOrbitSet& alpha_target) {
  OrbitInvariants a = orbit_invariants(alpha);
  OrbitInvariants b = orbit_invariants(alpha_target);
  if (a.index != b.index) return {false, 1};
  if (action(omega, alpha) > action(omega_target, alpha_target)) return {false, 2};
  if (!index_gap_condition(a, b)) return {false, 3};
  return {true, std::nullopt};
}

// Edge-wise reading of max(x'(0)/y'(0), y'(1)/x'(1)) <= 1: the edge leaving the
// x-axis has dy > 0 and dx <= dy; the edge reaching the y-axis has dx < 0 and dy >= dx.
inline bool cube_bound_applies(const Polygon2D& omega) {
  Point2 first = omega.first_edge();
  Point2 last = omega.last_edge();
  return first.y > 0 && first.x <= first.y && last.x < 0 && last.y >= last.x;
}

inline void require_cube_bound(const Polygon2D& omega) {
  if (!cube_bound_applies(omega))
    throw InapplicableError("cube bound: theorem inapplicable, end-slope condition fails");
}

// c_P(X_Omega) <= (x(0) + y(1)) / 2
inline Rational cube_bound(const Polygon2D& omega) {
  require_cube_bound(omega);
  return (omega.x_intercept() + omega.y_intercept()) / 2;
}

// Finite-d form of the cube bound: any admissible target factor
// e_{1,-1}^{d_i} e_{-1,1}^{d_i} e_{1,1}^k (k <= 2, d/3 <= d_i <= d) forces
// a < (d_i S + k) / (2 d_i + 3k - 1), S = x(0) + y(1). Only one factor is
// guaranteed, so the certified bound is the largest of these.
inline Rational finite_d_bound(const Polygon2D& omega, std::int64_t d) {
  require_cube_bound(omega);
  if (d < 1) throw InputError("finite_d_bound: d must be >= 1");
  const Rational s = omega.x_intercept() + omega.y_intercept();
  const std::int64_t lo = (d + 2) / 3;
  Rational best = 0;
  for (std::int64_t k = 0; k <= 2; ++k)
    for (std::int64_t di = lo; di <= d; ++di) {
      Rational v = (Rational(di) * s + k) / Rational(2 * di + 3 * k - 1);
      if (v > best) best = v;
    }
  return best;
}

}  // namespace toric::ech
