#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <vector>

#include "toric/domain.hpp"
#include "toric/ech/orbit.hpp"
#include "toric/geometry.hpp"
#include "toric/rational.hpp"

namespace toric::ech {

struct EnumerationOptions {
  std::int64_t vmax = 1;
  // e(1,0) and e(0,1) stand in for the elliptic circles over the axis points.
  bool include_axis_orbits = true;
  // When set, only orbit sets with 2(x + y) - h >= min_gap are produced; this
  // is condition (iii) of the <= relation and drives branch pruning.
  std::optional<std::int64_t> min_gap;
  std::uint64_t node_limit = 0;  // 0 = unlimited
};

struct EnumerationStats {
  std::uint64_t emitted = 0;
  std::uint64_t nodes = 0;
  // Some primitive direction outside the vmax box has 0 < support <= cap, so
  // the box may have hidden admissible orbit sets.
  bool truncated = false;
  bool node_limit_hit = false;
  // The gap bound 2(x+y) - h <= 2 cap / delta excluded every orbit set, in or
  // out of the box; the empty result is then complete.
  bool globally_pruned = false;
};

inline bool is_axis_orbit(const CombOrbit& o) {
  return o.elliptic && ((o.v.x == 1 && o.v.y == 0) || (o.v.x == 0 && o.v.y == 1));
}

// Orbits with |x_v|, |y_v| <= vmax and positive support, in canonical order.
inline std::vector<CombOrbit> candidate_orbits(const Polygon2D& omega, std::int64_t vmax, bool include_axis) {
  std::vector<CombOrbit> out;
  for (std::int64_t x = -vmax; x <= vmax; ++x)
    for (std::int64_t y = -vmax; y <= vmax; ++y) {
      if (std::gcd(x, y) != 1 || (x < 0 && y < 0)) continue;
      if (support(omega, {x, y}) <= 0) continue;
      for (bool elliptic : {false, true}) {
        CombOrbit o{{x, y}, elliptic};
        if (!include_axis && is_axis_orbit(o)) continue;
        out.push_back(o);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

// Whether a primitive direction outside [-vmax, vmax]^2 has 0 < support <= cap.
// Directions (p, -q) with p >= 1 have support >= p x(0) and (1, -q) reaches
// x(0) exactly for large q; symmetrically for (-q, p) and y(1). First-quadrant
// directions are confined to p <= cap / x(0), q <= cap / y(1).
inline bool beyond_box_possible(const Polygon2D& omega, const Rational& cap, std::int64_t vmax) {
  if (cap <= 0) return false;
  if (omega.x_intercept() <= cap || omega.y_intercept() <= cap) return true;
  Integer px = floor_div(cap / omega.x_intercept());
  Integer qy = floor_div(cap / omega.y_intercept());
  for (Integer p = 0; p <= px; ++p)
    for (Integer q = 0; q <= qy; ++q) {
      if (p <= vmax && q <= vmax) continue;
      auto pi = static_cast<std::int64_t>(p), qi = static_cast<std::int64_t>(q);
      if (std::gcd(pi, qi) != 1) continue;
      Rational s = support(omega, {pi, qi});
      if (s > 0 && s <= cap) return true;
    }
  return false;
}

// Streams every orbit set alpha with orbits from candidate_orbits(), 0 < A(alpha)
// <= cap and I(alpha) = index_target, depth-first in canonical orbit order (an
// orbit is skipped before it is taken, multiplicities ascend). visit(alpha)
// returns false to stop early.
template <class Visit>
EnumerationStats enumerate_orbit_sets(const Polygon2D& omega, const Rational& cap, std::int64_t index_target,
                                      const EnumerationOptions& opts, Visit&& visit) {
  EnumerationStats stats;
  if (cap <= 0) return stats;
  if (opts.min_gap && Rational(2) * cap / delta(omega) < *opts.min_gap) {
    stats.globally_pruned = true;
    return stats;
  }
  stats.truncated = beyond_box_possible(omega, cap, opts.vmax);

  const std::vector<CombOrbit> orbits = candidate_orbits(omega, opts.vmax, opts.include_axis_orbits);
  const std::size_t n = orbits.size();
  std::vector<Rational> acts(n);
  std::vector<std::int64_t> xy(n);
  for (std::size_t i = 0; i < n; ++i) {
    acts[i] = support(omega, orbits[i].v);
    xy[i] = orbits[i].v.x + orbits[i].v.y;
  }
  // Best (x+y)/action ratio among orbits i.. ; bounds the attainable gap.
  std::vector<Rational> ratio(n + 1, Rational(0));
  for (std::size_t i = n; i-- > 0;) ratio[i] = std::max(ratio[i + 1], Rational(xy[i]) / acts[i]);

  std::vector<OrbitFactor> current;
  Rational used = 0;
  std::int64_t cur_xy = 0, cur_h = 0;
  bool stop = false;

  auto dfs = [&](auto&& self, std::size_t i) -> void {
    if (stop) return;
    ++stats.nodes;
    if (opts.node_limit && stats.nodes > opts.node_limit) {
      stats.node_limit_hit = true;
      stop = true;
      return;
    }
    if (opts.min_gap && Rational(2 * cur_xy - cur_h) + 2 * ratio[i] * (cap - used) < *opts.min_gap) return;
    if (i == n) {
      if (current.empty()) return;
      CombOrbitSet alpha = CombOrbitSet::from_sorted_unchecked(current);
      if (orbit_invariants(alpha).index != index_target) return;
      if (opts.min_gap && 2 * cur_xy - cur_h < *opts.min_gap) return;
      ++stats.emitted;
      if (!visit(alpha)) stop = true;
      return;
    }
    self(self, i + 1);
    const CombOrbit& o = orbits[i];
    const std::int64_t max_m = o.elliptic ? std::numeric_limits<std::int64_t>::max() : 1;
    current.push_back({o, 0});
    const Rational base_used = used;
    const std::int64_t base_xy = cur_xy, base_h = cur_h;
    for (std::int64_t m = 1; m <= max_m && !stop; ++m) {
      used += acts[i];
      if (used > cap) break;
      current.back().m = m;
      cur_xy = base_xy + m * xy[i];
      cur_h = base_h + (o.elliptic ? 0 : 1);
      self(self, i + 1);
    }
    used = base_used;
    cur_xy = base_xy;
    cur_h = base_h;
    current.pop_back();
  };
  dfs(dfs, 0);
  return stats;
}

inline std::vector<CombOrbitSet> collect_orbit_sets(const Polygon2D& omega, const Rational& cap,
                                                    std::int64_t index_target, const EnumerationOptions& opts,
                                                    EnumerationStats* stats = nullptr) {
  std::vector<CombOrbitSet> out;
  EnumerationStats st = enumerate_orbit_sets(omega, cap, index_target, opts, [&](const CombOrbitSet& a) {
    out.push_back(a);
    return true;
  });
  if (stats) *stats = st;
  return out;
}

}  // namespace toric::ech
