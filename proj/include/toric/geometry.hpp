#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "toric/domain.hpp"
#include "toric/errors.hpp"
#include "toric/rational.hpp"

namespace toric {

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

// max{ v.p : p on the free boundary }; a linear functional peaks at a vertex.
inline Rational support(const Polygon2D& omega, const LatticeVector& v) {
  if (v.x == 0 && v.y == 0) throw InputError("support: zero direction");
  const auto& chain = omega.vertices();
  Rational best = dot(v, chain.front());
  for (const auto& p : chain) best = std::max(best, dot(v, p));
  return best;
}

namespace detail {

inline Rational polygon_delta(const Polygon2D& omega) {
  // (t,t) stays left of every chain edge P->Q:  t*(dx-dy) >= dx*Py - dy*Px.
  const auto& chain = omega.vertices();
  std::optional<Rational> bound;
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    Point2 d = chain[i + 1] - chain[i];
    Rational slope = d.x - d.y;
    if (slope >= 0) continue;
    Rational t = (d.x * chain[i].y - d.y * chain[i].x) / slope;
    if (!bound || t < *bound) bound = t;
  }
  return *bound;  // some edge always crosses the diagonal ray of a bounded region
}

inline bool origin_cell_filled(const Rectilinear2D& r) {
  return r.xs().front() == 0 && r.ys().front() == 0 && r.filled(0, 0);
}

// Smallest key(x_i, y_j) over empty grid cells, capped by the grid extent:
// the supremum of the family of origin-anchored shapes still covered.
template <class Key>
Rational first_uncovered(const Rectilinear2D& r, Key key) {
  if (!origin_cell_filled(r)) return 0;
  Rational best = std::min(r.xs().back(), r.ys().back());
  for (std::size_t i = 0; i < r.columns(); ++i)
    for (std::size_t j = 0; j < r.rows(); ++j)
      if (!r.filled(i, j)) best = std::min(best, key(r.xs()[i], r.ys()[j]));
  return best;
}

}  // namespace detail

// sup{ a : (a,...,a) in Omega }
inline Rational delta(const ToricDomain& domain) {
  return std::visit(
      overloaded{
          [](const StandardDomain& s) -> Rational {
            return s.kind == StandardKind::Ball ? Rational(s.size / s.n) : s.size;
          },
          [](const Polygon2D& p) { return detail::polygon_delta(p); },
          [](const Rectilinear2D& r) -> Rational {
            std::optional<Rational> best;
            for (const auto& rc : r.rects()) {
              Rational lo = std::max(rc.x0, rc.y0), hi = std::min(rc.x1, rc.y1);
              if (lo <= hi && (!best || hi > *best)) best = hi;
            }
            if (!best) throw InapplicableError("delta: the diagonal does not meet the domain");
            return *best;
          },
      },
      domain);
}

// sup over Omega of the smallest coordinate, i.e. inf{ a : X_Omega in N_n(a) }.
inline Rational eta(const ToricDomain& domain) {
  return std::visit(
      overloaded{
          [](const StandardDomain& s) -> Rational {
            return s.kind == StandardKind::Ball ? Rational(s.size / s.n) : s.size;
          },
          [](const Polygon2D& p) {
            // min(x,y) is concave and piecewise linear: it peaks at a vertex or on the diagonal.
            Rational best = detail::polygon_delta(p);
            for (const auto& v : p.vertices()) best = std::max(best, std::min(v.x, v.y));
            return best;
          },
          [](const Rectilinear2D& r) {
            Rational best = 0;
            for (const auto& rc : r.rects()) best = std::max(best, std::min(rc.x1, rc.y1));
            return best;
          },
      },
      domain);
}

inline bool is_weakly_convex(std::span<const Point2> chain) {
  try {
    Polygon2D::canonicalize(std::vector<Point2>(chain.begin(), chain.end()));
    return true;
  } catch (const InputError&) {
    return false;
  }
}

inline bool is_weakly_convex(const Polygon2D& omega) { return is_weakly_convex(omega.vertices()); }

// Outward normals of the free boundary are componentwise >= 0. The NDUC is
// monotone by convention (it satisfies the cube sandwich with delta = a).
inline bool is_monotone(const ToricDomain& domain) {
  return std::visit(
      overloaded{
          [](const StandardDomain&) { return true; },
          [](const Polygon2D& p) {
            const auto& c = p.vertices();
            for (std::size_t i = 0; i + 1 < c.size(); ++i) {
              Point2 d = c[i + 1] - c[i];
              if (d.x > 0 || d.y < 0) return false;
            }
            return true;
          },
          [](const Rectilinear2D& r) {
            // staircase: the filled cells form a down-set anchored at the origin
            if (!detail::origin_cell_filled(r)) return false;
            for (std::size_t i = 0; i < r.columns(); ++i)
              for (std::size_t j = 0; j < r.rows(); ++j) {
                if (!r.filled(i, j)) continue;
                if (i > 0 && !r.filled(i - 1, j)) return false;
                if (j > 0 && !r.filled(i, j - 1)) return false;
              }
            return true;
          },
      },
      domain);
}

// sup{ a : Omega_{P_n(a)} in Omega }, a lower bound for the cube capacity.
inline Rational cube_inclusion(const ToricDomain& domain) {
  return std::visit(
      overloaded{
          [](const StandardDomain& s) -> Rational {
            return s.kind == StandardKind::Ball ? Rational(s.size / s.n) : s.size;
          },
          [](const Polygon2D& p) {
            // convex: the square is inside iff its corners are
            return std::min({p.x_intercept(), p.y_intercept(), detail::polygon_delta(p)});
          },
          [](const Rectilinear2D& r) {
            return detail::first_uncovered(r, [](const Rational& x, const Rational& y) { return std::max(x, y); });
          },
      },
      domain);
}

// sup{ a : Omega_{B_n(a)} in Omega }, a lower bound for the Gromov width.
inline Rational simplex_inclusion(const ToricDomain& domain) {
  return std::visit(
      overloaded{
          [](const StandardDomain& s) { return s.size; },
          [](const Polygon2D& p) { return std::min(p.x_intercept(), p.y_intercept()); },
          [](const Rectilinear2D& r) {
            return detail::first_uncovered(r, [](const Rational& x, const Rational& y) { return Rational(x + y); });
          },
      },
      domain);
}

// inf{ b : Omega inside {x_i <= b} for some i }; empty for the NDUC.
inline std::optional<Rational> cylinder_cover(const ToricDomain& domain) {
  return std::visit(
      overloaded{
          [](const StandardDomain& s) -> std::optional<Rational> {
            if (s.kind == StandardKind::Nduc && s.n > 1) return std::nullopt;
            return s.size;
          },
          [](const Polygon2D& p) -> std::optional<Rational> {
            return std::min(support(p, {1, 0}), support(p, {0, 1}));
          },
          [](const Rectilinear2D& r) -> std::optional<Rational> { return std::min(r.xs().back(), r.ys().back()); },
      },
      domain);
}

// Membership of a point of R^n_{>=0} in the closed domain.
inline bool contains(const ToricDomain& domain, std::span<const Rational> p) {
  return std::visit(
      overloaded{
          [&](const StandardDomain& s) { return s.contains(p); },
          [&](const Polygon2D& poly) { return p.size() == 2 && poly.contains({p[0], p[1]}); },
          [&](const Rectilinear2D& r) { return p.size() == 2 && r.contains({p[0], p[1]}); },
      },
      domain);
}

}  // namespace toric
