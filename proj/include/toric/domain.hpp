#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "toric/errors.hpp"
#include "toric/rational.hpp"

namespace toric {

enum class StandardKind { Ball, Cylinder, Cube, Nduc };

inline const char* kind_name(StandardKind k) {
  switch (k) {
    case StandardKind::Ball: return "ball";
    case StandardKind::Cylinder: return "cylinder";
    case StandardKind::Cube: return "cube";
    case StandardKind::Nduc: return "nduc";
  }
  return "?";
}

// B_n(a), Z_n(a), P_n(a) or N_n(a). The NDUC and the cylinder are unbounded and
// are only ever handled through closed forms.
struct StandardDomain {
  StandardKind kind = StandardKind::Cube;
  int n = 2;
  Rational size = 1;

  static StandardDomain make(StandardKind kind, int n, Rational size) {
    if (n < 1) throw InputError("dimension n must be >= 1");
    if (size <= 0) throw InputError("size a must be positive");
    return StandardDomain{kind, n, std::move(size)};
  }

  bool contains(std::span<const Rational> p) const {
    if (static_cast<int>(p.size()) != n) return false;
    for (const auto& c : p)
      if (c < 0) return false;
    switch (kind) {
      case StandardKind::Ball: {
        Rational s = 0;
        for (const auto& c : p) s += c;
        return s <= size;
      }
      case StandardKind::Cylinder: return p[0] <= size;
      case StandardKind::Cube:
        return std::all_of(p.begin(), p.end(), [&](const Rational& c) { return c <= size; });
      case StandardKind::Nduc:
        return std::any_of(p.begin(), p.end(), [&](const Rational& c) { return c <= size; });
    }
    return false;
  }

  friend bool operator==(const StandardDomain&, const StandardDomain&) = default;
};

namespace detail {

// Exact angular order on directions, angle measured in [0, 2pi) from +x.
inline int half_plane(const Point2& u) { return (u.y < 0 || (u.y == 0 && u.x < 0)) ? 1 : 0; }

inline bool angle_less(const Point2& u, const Point2& v) {
  int hu = half_plane(u), hv = half_plane(v);
  if (hu != hv) return hu < hv;
  return cross(u, v) > 0;
}

}  // namespace detail

// A 2D moment region given by the vertex chain of its free boundary, from the
// x-axis intercept to the y-axis intercept. The origin and the two axis
// segments are implicit, so the region is conv(chain + origin).
class Polygon2D {
 public:
  // Validates and canonicalizes (collinear interior vertices are dropped).
  static Polygon2D from_vertices(std::vector<Point2> chain) {
    Polygon2D poly;
    poly.chain_ = canonicalize(std::move(chain));
    return poly;
  }

  const std::vector<Point2>& vertices() const { return chain_; }
  const Rational& x_intercept() const { return chain_.front().x; }
  const Rational& y_intercept() const { return chain_.back().y; }
  Point2 first_edge() const { return chain_[1] - chain_[0]; }
  Point2 last_edge() const { return chain_[chain_.size() - 1] - chain_[chain_.size() - 2]; }

  bool contains(const Point2& p) const {
    if (p.x < 0 || p.y < 0) return false;
    for (std::size_t i = 0; i + 1 < chain_.size(); ++i)
      if (cross(chain_[i + 1] - chain_[i], p - chain_[i]) < 0) return false;
    return true;
  }

  // True when p lies on the closure of the free boundary.
  bool on_chain(const Point2& p) const {
    for (std::size_t i = 0; i + 1 < chain_.size(); ++i) {
      const Point2& a = chain_[i];
      const Point2& b = chain_[i + 1];
      if (cross(b - a, p - a) != 0) continue;
      if (std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
          p.y <= std::max(a.y, b.y))
        return true;
    }
    return false;
  }

  // Side a when the chain is exactly (a,0), (a,a), (0,a).
  std::optional<Rational> square_side() const {
    if (chain_.size() != 3) return std::nullopt;
    const Rational& a = chain_[0].x;
    if (chain_[1] == Point2{a, a} && chain_[2] == Point2{0, a}) return a;
    return std::nullopt;
  }

  friend bool operator==(const Polygon2D&, const Polygon2D&) = default;

  // Throws InputError naming the violated invariant.
  static std::vector<Point2> canonicalize(std::vector<Point2> chain) {
    if (chain.size() < 2) throw InputError("polygon2d needs at least two vertices");
    const Point2& first = chain.front();
    const Point2& last = chain.back();
    if (first.y != 0 || first.x <= 0)
      throw InputError("polygon2d: vertex chain not convex/ordered (first vertex must lie on the positive x-axis)");
    if (last.x != 0 || last.y <= 0)
      throw InputError("polygon2d: vertex chain not convex/ordered (last vertex must lie on the positive y-axis)");
    for (std::size_t i = 1; i + 1 < chain.size(); ++i)
      if (chain[i].x <= 0 || chain[i].y <= 0)
        throw InputError("polygon2d: vertex chain not convex/ordered (interior vertices must have positive coordinates)");
    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
      if (chain[i] == chain[i + 1]) throw InputError("polygon2d: repeated vertex");

    std::vector<Point2> out;
    out.reserve(chain.size());
    for (auto& p : chain) {
      if (out.size() >= 2) {
        Point2 e1 = out.back() - out[out.size() - 2];
        Point2 e2 = p - out.back();
        if (cross(e1, e2) == 0) {
          if (e1.x * e2.x + e1.y * e2.y < 0)
            throw InputError("polygon2d: vertex chain not convex/ordered (chain folds back)");
          out.pop_back();
        }
      }
      out.push_back(std::move(p));
    }

    // Edge directions of the closed boundary must turn left with strictly
    // increasing angle, from the x-axis edge (angle 0) to the y-axis edge (3pi/2).
    std::vector<Point2> edges;
    edges.push_back({1, 0});
    for (std::size_t i = 0; i + 1 < out.size(); ++i) edges.push_back(out[i + 1] - out[i]);
    edges.push_back({0, -1});
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
      if (cross(edges[i], edges[i + 1]) <= 0 || !detail::angle_less(edges[i], edges[i + 1]))
        throw InputError("polygon2d: vertex chain not convex/ordered");
    }
    return out;
  }

 private:
  std::vector<Point2> chain_;
};

struct Rect {
  Rational x0, x1, y0, y1;
  friend bool operator==(const Rect&, const Rect&) = default;
};

// Union of closed axis-aligned rectangles. The union is discretized once into
// the grid spanned by all rectangle coordinates.
class Rectilinear2D {
 public:
  enum class Location { Outside, Boundary, Interior };

  static Rectilinear2D from_rects(std::vector<Rect> rects) {
    if (rects.empty()) throw InputError("rectilinear2d needs at least one rectangle");
    bool touches_axis = false;
    for (const auto& r : rects) {
      if (r.x0 < 0 || r.y0 < 0) throw InputError("rectilinear2d: rectangles must lie in the closed positive quadrant");
      if (!(r.x0 < r.x1) || !(r.y0 < r.y1)) throw InputError("rectilinear2d: degenerate rectangle");
      touches_axis = touches_axis || r.x0 == 0 || r.y0 == 0;
    }
    if (!touches_axis) throw InputError("rectilinear2d: union must meet a coordinate axis");

    Rectilinear2D dom;
    dom.rects_ = std::move(rects);
    for (const auto& r : dom.rects_) {
      dom.xs_.push_back(r.x0);
      dom.xs_.push_back(r.x1);
      dom.ys_.push_back(r.y0);
      dom.ys_.push_back(r.y1);
    }
    auto uniq = [](std::vector<Rational>& v) {
      std::sort(v.begin(), v.end());
      v.erase(std::unique(v.begin(), v.end()), v.end());
    };
    uniq(dom.xs_);
    uniq(dom.ys_);
    const std::size_t nx = dom.columns(), ny = dom.rows();
    dom.filled_.assign(nx * ny, 0);
    for (std::size_t i = 0; i < nx; ++i)
      for (std::size_t j = 0; j < ny; ++j)
        for (const auto& r : dom.rects_)
          if (r.x0 <= dom.xs_[i] && dom.xs_[i + 1] <= r.x1 && r.y0 <= dom.ys_[j] && dom.ys_[j + 1] <= r.y1) {
            dom.filled_[i * ny + j] = 1;
            break;
          }
    if (!dom.connected()) throw InputError("rectilinear2d: union is not connected");
    return dom;
  }

  const std::vector<Rect>& rects() const { return rects_; }
  const std::vector<Rational>& xs() const { return xs_; }
  const std::vector<Rational>& ys() const { return ys_; }
  std::size_t columns() const { return xs_.size() - 1; }
  std::size_t rows() const { return ys_.size() - 1; }
  bool filled(std::size_t i, std::size_t j) const { return filled_[i * rows() + j] != 0; }

  Location locate(const Point2& p) const {
    auto column_range = [](const std::vector<Rational>& grid, const Rational& c) {
      // Cell indices whose closed interval contains c; -1 marks the outside.
      std::vector<long> ids;
      const long cells = static_cast<long>(grid.size()) - 1;
      if (c < grid.front() || c > grid.back()) return std::vector<long>{-1};
      auto it = std::lower_bound(grid.begin(), grid.end(), c);
      long k = it - grid.begin();
      if (*it == c) {
        ids.push_back(k - 1 >= 0 ? k - 1 : -1);
        ids.push_back(k < cells ? k : -1);
      } else {
        ids.push_back(k - 1);
      }
      return ids;
    };
    auto cols = column_range(xs_, p.x);
    auto rws = column_range(ys_, p.y);
    bool any = false, all = true;
    for (long i : cols)
      for (long j : rws) {
        bool f = i >= 0 && j >= 0 && filled(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
        any = any || f;
        all = all && f;
      }
    if (!any) return Location::Outside;
    return all ? Location::Interior : Location::Boundary;
  }

  bool contains(const Point2& p) const { return locate(p) != Location::Outside; }

  friend bool operator==(const Rectilinear2D& a, const Rectilinear2D& b) { return a.rects_ == b.rects_; }

 private:
  bool connected() const {
    const std::size_t nx = columns(), ny = rows();
    std::vector<char> seen(nx * ny, 0);
    std::size_t total = 0, start = nx * ny;
    for (std::size_t k = 0; k < nx * ny; ++k)
      if (filled_[k]) {
        ++total;
        if (start == nx * ny) start = k;
      }
    std::queue<std::size_t> todo;
    todo.push(start);
    seen[start] = 1;
    std::size_t reached = 0;
    while (!todo.empty()) {
      std::size_t k = todo.front();
      todo.pop();
      ++reached;
      std::size_t i = k / ny, j = k % ny;
      auto visit = [&](std::size_t ii, std::size_t jj) {
        std::size_t kk = ii * ny + jj;
        if (filled_[kk] && !seen[kk]) {
          seen[kk] = 1;
          todo.push(kk);
        }
      };
      if (i > 0) visit(i - 1, j);
      if (i + 1 < nx) visit(i + 1, j);
      if (j > 0) visit(i, j - 1);
      if (j + 1 < ny) visit(i, j + 1);
    }
    return reached == total;
  }

  std::vector<Rect> rects_;
  std::vector<Rational> xs_, ys_;
  std::vector<char> filled_;
};

using ToricDomain = std::variant<StandardDomain, Polygon2D, Rectilinear2D>;

inline int dimension(const ToricDomain& d) {
  if (auto s = std::get_if<StandardDomain>(&d)) return s->n;
  return 2;
}

inline std::string kind_name(const ToricDomain& d) {
  if (auto s = std::get_if<StandardDomain>(&d)) return kind_name(s->kind);
  if (std::holds_alternative<Polygon2D>(d)) return "polygon2d";
  return "rectilinear2d";
}

}  // namespace toric
