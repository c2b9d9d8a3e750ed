#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "toric/domain.hpp"
#include "toric/ech/enumerate.hpp"
#include "toric/ech/orbit.hpp"
#include "toric/ech/relation.hpp"
#include "toric/errors.hpp"
#include "toric/rational.hpp"

namespace toric::ech {

struct SearchLimits {
  std::int64_t vmax = 0;
  std::int64_t lmax = 0;
  bool include_axis_orbits = true;
  std::uint64_t node_limit = 50'000'000;  // summed over all enumerations and combinations
};

enum class SearchStatus { FeasibleWitness, InfeasibleWithinBounds, Inconclusive };

inline const char* status_name(SearchStatus s) {
  switch (s) {
    case SearchStatus::FeasibleWitness: return "FeasibleWitness";
    case SearchStatus::InfeasibleWithinBounds: return "InfeasibleWithinBounds";
    case SearchStatus::Inconclusive: return "Inconclusive";
  }
  return "?";
}

struct SearchWitness {
  CombOrbitSet alpha;
  std::vector<CombOrbitSet> alpha_factors;
  std::vector<CombOrbitSet> target_factors;
};

struct SearchReport {
  SearchStatus status = SearchStatus::Inconclusive;
  std::optional<SearchWitness> witness;
  SearchLimits bounds_used;
  std::optional<Rational> obstructed_a;  // cube side ruled out when the source is a square
  std::uint64_t factorizations = 0;      // target factorizations passing the target-side index checks
  std::uint64_t factorizations_refuted = 0;
  std::uint64_t distinct_factors = 0;
  std::uint64_t nodes = 0;
  bool truncated = false;
  bool node_limit_hit = false;
  bool lmax_complete = false;  // lmax >= m(alpha'), so no factorization length was cut off
};

namespace detail {

// I(prod_S a_j) == I(prod_S b_j) > 0 for every non-empty S containing `last`
// (or every S when last < 0). Products must be valid orbit sets.
inline bool subset_index_condition(const std::vector<CombOrbitSet>& a, const std::vector<CombOrbitSet>& b, int last) {
  const std::size_t l = a.size();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << l); ++mask) {
    if (last >= 0 && !(mask >> last & 1)) continue;
    CombOrbitSet pa, pb;
    for (std::size_t j = 0; j < l; ++j) {
      if (!(mask >> j & 1)) continue;
      if (!can_multiply(pa, a[j]) || !can_multiply(pb, b[j])) return false;
      pa = product(pa, a[j]);
      pb = product(pb, b[j]);
    }
    auto ia = orbit_invariants(pa).index;
    if (ia != orbit_invariants(pb).index || ia <= 0) return false;
  }
  return true;
}

// Condition (b) between factor i and factor j (i != j).
inline bool no_shared_elliptic_ok(const std::vector<CombOrbitSet>& a, const std::vector<CombOrbitSet>& b, std::size_t i,
                                  std::size_t j) {
  if (a[i] == a[j] || b[i] == b[j]) return !shares_elliptic_orbit(a[i], a[j]);
  return true;
}

inline CombOrbitSet sub_factor(const CombOrbitSet& target, const std::vector<std::int64_t>& counts) {
  std::vector<OrbitFactor> fs;
  for (std::size_t i = 0; i < counts.size(); ++i)
    if (counts[i] > 0) fs.push_back({target.factors()[i].orbit, counts[i]});
  return CombOrbitSet::from_sorted_unchecked(std::move(fs));
}

}  // namespace detail

// Replays conditions (a)-(c) on a candidate witness.
inline bool verify_witness(const Polygon2D& omega, const Polygon2D& omega_target, const CombOrbitSet& alpha_target,
                           const SearchWitness& w) {
  const std::size_t l = w.alpha_factors.size();
  if (l == 0 || l != w.target_factors.size() || l >= 63) return false;
  CombOrbitSet pa, pb;
  for (std::size_t j = 0; j < l; ++j) {
    if (w.alpha_factors[j].empty() || w.target_factors[j].empty()) return false;
    if (!can_multiply(pa, w.alpha_factors[j]) || !can_multiply(pb, w.target_factors[j])) return false;
    pa = product(pa, w.alpha_factors[j]);
    pb = product(pb, w.target_factors[j]);
  }
  if (pa != w.alpha || pb != alpha_target) return false;
  for (std::size_t j = 0; j < l; ++j)
    if (!leq_relation(omega, omega_target, w.alpha_factors[j], w.target_factors[j]).holds) return false;
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j)
      if (i != j && !detail::no_shared_elliptic_ok(w.alpha_factors, w.target_factors, i, j)) return false;
  return detail::subset_index_condition(w.alpha_factors, w.target_factors, -1);
}

// Bounded search for alpha and factorizations alpha = prod alpha_j,
// alpha_target = prod alpha'_j (l <= lmax, orbits of alpha within the vmax box)
// satisfying (a) alpha_j <= alpha'_j, (b) no shared elliptic orbits between
// coinciding factors, (c) equal positive indices on every sub-product.
// Any symplectic embedding X_omega -> X_omega_target forces such data to exist.
inline SearchReport obstruction_search(const Polygon2D& omega, const Polygon2D& omega_target,
                                       const CombOrbitSet& alpha_target, const SearchLimits& limits) {
  if (limits.vmax < 1 || limits.lmax < 1) throw InputError("obstruction_search: invalid limits (vmax and lmax must be >= 1)");
  if (limits.lmax > 16) throw InputError("obstruction_search: lmax must be <= 16");
  const OrbitInvariants target_inv = orbit_invariants(alpha_target);
  if (target_inv.index <= 0 || target_inv.h != 0)
    throw InapplicableError("obstruction_search: hypothesis violated, need I(alpha') > 0 and h(alpha') = 0");
  // alpha' must be an orbit set of the target: every orbit has positive action there
  for (const auto& f : alpha_target.factors())
    if (support(omega_target, f.orbit.v) <= 0)
      throw InapplicableError("obstruction_search: " + to_string(f.orbit) +
                              " has non-positive action on the target, so alpha' is not an orbit set there");

  SearchReport report;
  report.bounds_used = limits;
  report.lmax_complete = limits.lmax >= target_inv.m;

  enum class FactorState { Refuted, EmptyTruncated, HasCandidates };
  struct FactorInfo {
    FactorState state = FactorState::Refuted;
    bool truncated = false;
    CombOrbitSet target;
    std::vector<CombOrbitSet> candidates;
  };
  std::map<std::vector<std::int64_t>, FactorInfo> memo;
  bool budget_gone = false;
  bool uncertain = false;

  auto remaining_budget = [&]() -> std::uint64_t {
    return report.nodes >= limits.node_limit ? 1 : limits.node_limit - report.nodes;
  };

  auto analyze = [&](const std::vector<std::int64_t>& counts) -> const FactorInfo& {
    auto it = memo.find(counts);
    if (it != memo.end()) return it->second;
    FactorInfo info;
    info.target = detail::sub_factor(alpha_target, counts);
    OrbitInvariants inv = orbit_invariants(info.target);
    if (inv.index > 0 && !budget_gone) {
      EnumerationOptions opts;
      opts.vmax = limits.vmax;
      opts.include_axis_orbits = limits.include_axis_orbits;
      opts.min_gap = 2 * (inv.x + inv.y + inv.m - 1);
      opts.node_limit = remaining_budget();
      EnumerationStats stats;
      info.candidates = collect_orbit_sets(omega, action(omega_target, info.target), inv.index, opts, &stats);
      report.nodes += stats.nodes;
      if (stats.node_limit_hit) {
        budget_gone = true;
        report.node_limit_hit = true;
      }
      info.truncated = stats.truncated || stats.node_limit_hit;
      if (!info.candidates.empty())
        info.state = FactorState::HasCandidates;
      else if (info.truncated)
        info.state = FactorState::EmptyTruncated;
    }
    if (inv.index > 0 && budget_gone && info.state == FactorState::Refuted) {
      info.state = FactorState::EmptyTruncated;
      info.truncated = true;
    }
    ++report.distinct_factors;
    return memo.emplace(counts, std::move(info)).first->second;
  };

  std::optional<SearchWitness> found;

  // Picks alpha_j for each target factor, checking (b) and (c) incrementally.
  auto combine = [&](const std::vector<const FactorInfo*>& parts) {
    const std::size_t l = parts.size();
    std::vector<CombOrbitSet> chosen, targets;
    for (auto* p : parts) targets.push_back(p->target);
    auto rec = [&](auto&& self, std::size_t j) -> bool {
      if (++report.nodes > limits.node_limit) {
        budget_gone = true;
        report.node_limit_hit = true;
        return false;
      }
      if (j == l) {
        CombOrbitSet alpha;
        for (const auto& c : chosen) alpha = product(alpha, c);
        found = SearchWitness{alpha, chosen, targets};
        return true;
      }
      for (const auto& cand : parts[j]->candidates) {
        chosen.push_back(cand);
        bool ok = true;
        for (std::size_t i = 0; i < j && ok; ++i)
          ok = detail::no_shared_elliptic_ok(chosen, std::vector<CombOrbitSet>(targets.begin(), targets.begin() + j + 1), i, j);
        if (ok) {
          std::vector<CombOrbitSet> tprefix(targets.begin(), targets.begin() + j + 1);
          ok = detail::subset_index_condition(chosen, tprefix, static_cast<int>(j));
        }
        if (ok && self(self, j + 1)) return true;
        chosen.pop_back();
        if (budget_gone) return false;
      }
      return false;
    };
    rec(rec, 0);
  };

  auto evaluate = [&](const std::vector<std::vector<std::int64_t>>& counts) {
    std::vector<CombOrbitSet> targets;
    for (const auto& c : counts) targets.push_back(detail::sub_factor(alpha_target, c));
    // target-side part of (c): every sub-product has positive index
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << targets.size()); ++mask) {
      CombOrbitSet p;
      for (std::size_t j = 0; j < targets.size(); ++j)
        if (mask >> j & 1) p = product(p, targets[j]);
      if (orbit_invariants(p).index <= 0) return;
    }
    ++report.factorizations;
    std::vector<const FactorInfo*> parts;
    bool truncated = false;
    for (const auto& c : counts) {
      const FactorInfo& info = analyze(c);
      if (info.state == FactorState::Refuted) {
        ++report.factorizations_refuted;
        return;
      }
      truncated = truncated || info.truncated;
      parts.push_back(&info);
    }
    bool all_have = true;
    for (auto* p : parts) all_have = all_have && p->state == FactorState::HasCandidates;
    if (all_have) combine(parts);
    if (found) return;
    if (truncated || budget_gone) {
      report.truncated = report.truncated || truncated;
      uncertain = true;
    } else {
      ++report.factorizations_refuted;
    }
  };

  const std::vector<OrbitFactor>& tf = alpha_target.factors();
  const std::size_t k = tf.size();
  std::vector<std::int64_t> total(k);
  for (std::size_t i = 0; i < k; ++i) total[i] = tf[i].m;

  // Factorizations into exactly `parts` factors, listed in non-decreasing
  // lexicographic order so each unordered factorization appears once.
  std::vector<std::vector<std::int64_t>> chosen;
  auto split = [&](auto&& self, const std::vector<std::int64_t>& rest, const std::vector<std::int64_t>* floor,
                   std::size_t parts) -> void {
    if (found || budget_gone) return;
    if (parts == 1) {
      if (floor && rest < *floor) return;
      chosen.push_back(rest);
      evaluate(chosen);
      chosen.pop_back();
      return;
    }
    std::vector<std::int64_t> piece(k, 0);
    for (;;) {
      // odometer over 0 <= piece <= rest
      std::size_t i = k;
      while (i > 0 && piece[i - 1] == rest[i - 1]) piece[--i] = 0;
      if (i == 0) break;
      ++piece[i - 1];
      if (floor && piece < *floor) continue;
      std::vector<std::int64_t> left(k);
      bool left_zero = true;
      for (std::size_t t = 0; t < k; ++t) {
        left[t] = rest[t] - piece[t];
        left_zero = left_zero && left[t] == 0;
      }
      if (left_zero || left < piece) continue;
      if (analyze(piece).state == FactorState::Refuted) continue;
      chosen.push_back(piece);
      self(self, left, &piece, parts - 1);
      chosen.pop_back();
      if (found || budget_gone) return;
    }
  };

  std::int64_t total_m = target_inv.m;
  for (std::int64_t l = 1; l <= limits.lmax && l <= total_m && !found && !budget_gone; ++l)
    split(split, total, nullptr, static_cast<std::size_t>(l));

  if (found) {
    report.status = SearchStatus::FeasibleWitness;
    report.witness = std::move(found);
  } else if (uncertain || budget_gone) {
    report.status = SearchStatus::Inconclusive;
  } else {
    report.status = SearchStatus::InfeasibleWithinBounds;
    report.obstructed_a = omega.square_side();
  }
  return report;
}

}  // namespace toric::ech
