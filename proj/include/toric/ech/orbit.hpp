#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "toric/errors.hpp"
#include "toric/rational.hpp"

namespace toric::ech {

// Combinatorial Reeb orbit (v, s): elliptic e(p,q) has s = 1, hyperbolic h(p,q) has s = 0.
struct CombOrbit {
  LatticeVector v;
  bool elliptic = true;

  static CombOrbit make(std::int64_t x, std::int64_t y, bool elliptic) {
    if (std::gcd(x, y) != 1) throw InputError("orbit direction (" + std::to_string(x) + "," + std::to_string(y) + ") is not primitive");
    if (x < 0 && y < 0) throw InputError("orbit direction (" + std::to_string(x) + "," + std::to_string(y) + ") violates x >= 0 or y >= 0");
    return CombOrbit{{x, y}, elliptic};
  }

  int s() const { return elliptic ? 1 : 0; }

  friend bool operator==(const CombOrbit&, const CombOrbit&) = default;
  friend auto operator<=>(const CombOrbit&, const CombOrbit&) = default;
};

struct OrbitFactor {
  CombOrbit orbit;
  std::int64_t m = 1;

  friend bool operator==(const OrbitFactor&, const OrbitFactor&) = default;
  friend auto operator<=>(const OrbitFactor&, const OrbitFactor&) = default;
};

// Finite formal product of distinct orbits, kept sorted by orbit.
class CombOrbitSet {
 public:
  CombOrbitSet() = default;

  // Rejects repeated orbits, m < 1, and hyperbolic factors with m != 1.
  static CombOrbitSet from_factors(std::vector<OrbitFactor> factors) {
    std::sort(factors.begin(), factors.end());
    for (std::size_t i = 0; i < factors.size(); ++i) {
      const auto& f = factors[i];
      CombOrbit::make(f.orbit.v.x, f.orbit.v.y, f.orbit.elliptic);
      if (f.m < 1) throw InputError("orbit multiplicity must be >= 1");
      if (!f.orbit.elliptic && f.m != 1) throw InputError("hyperbolic orbit must have multiplicity 1");
      if (i > 0 && factors[i - 1].orbit == f.orbit) throw InputError("orbit set repeats an orbit");
    }
    CombOrbitSet out;
    out.factors_ = std::move(factors);
    return out;
  }

  // Caller guarantees sorted, distinct, valid factors.
  static CombOrbitSet from_sorted_unchecked(std::vector<OrbitFactor> factors) {
    CombOrbitSet out;
    out.factors_ = std::move(factors);
    return out;
  }

  const std::vector<OrbitFactor>& factors() const { return factors_; }
  bool empty() const { return factors_.empty(); }

  std::int64_t multiplicity(const CombOrbit& o) const {
    for (const auto& f : factors_)
      if (f.orbit == o) return f.m;
    return 0;
  }

  friend bool operator==(const CombOrbitSet&, const CombOrbitSet&) = default;
  friend auto operator<=>(const CombOrbitSet&, const CombOrbitSet&) = default;

 private:
  std::vector<OrbitFactor> factors_;
};

// Product of orbit sets: multiplicities add. A hyperbolic orbit present in both
// factors makes the product invalid.
inline bool can_multiply(const CombOrbitSet& a, const CombOrbitSet& b) {
  for (const auto& f : a.factors())
    if (!f.orbit.elliptic && b.multiplicity(f.orbit) > 0) return false;
  return true;
}

inline CombOrbitSet product(const CombOrbitSet& a, const CombOrbitSet& b) {
  if (!can_multiply(a, b)) throw InputError("product repeats a hyperbolic orbit");
  std::vector<OrbitFactor> out;
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  std::size_t i = 0, j = 0;
  while (i < fa.size() || j < fb.size()) {
    if (j == fb.size() || (i < fa.size() && fa[i].orbit < fb[j].orbit)) {
      out.push_back(fa[i++]);
    } else if (i == fa.size() || fb[j].orbit < fa[i].orbit) {
      out.push_back(fb[j++]);
    } else {
      out.push_back({fa[i].orbit, fa[i].m + fb[j].m});
      ++i, ++j;
    }
  }
  return CombOrbitSet::from_sorted_unchecked(std::move(out));
}

inline bool shares_elliptic_orbit(const CombOrbitSet& a, const CombOrbitSet& b) {
  for (const auto& f : a.factors())
    if (f.orbit.elliptic && b.multiplicity(f.orbit) > 0) return true;
  return false;
}

struct OrbitInvariants {
  std::int64_t x = 0;
  std::int64_t y = 0;
  std::int64_t index = 0;  // combinatorial ECH index I
  std::int64_t m = 0;
  std::int64_t h = 0;

  friend bool operator==(const OrbitInvariants&, const OrbitInvariants&) = default;
};

// max(x_u y_w, x_w y_u): the pairing in the quadratic part of I.
inline std::int64_t pair_term(const LatticeVector& u, const LatticeVector& w) {
  return std::max(u.x * w.y, w.x * u.y);
}

inline OrbitInvariants orbit_invariants(const CombOrbitSet& alpha) {
  __int128 x = 0, y = 0, quad = 0, s_term = 0, m = 0, h = 0;
  const auto& fs = alpha.factors();
  for (const auto& fi : fs) {
    x += static_cast<__int128>(fi.m) * fi.orbit.v.x;
    y += static_cast<__int128>(fi.m) * fi.orbit.v.y;
    s_term += static_cast<__int128>(fi.orbit.s()) * fi.m;
    m += fi.m;
    h += 1 - fi.orbit.s();
    for (const auto& fj : fs)
      quad += static_cast<__int128>(fi.m) * fj.m * pair_term(fi.orbit.v, fj.orbit.v);
  }
  __int128 index = x + y + quad + s_term;
  constexpr __int128 lim = static_cast<__int128>(1) << 62;
  for (__int128 v : {x, y, index, m})
    if (v > lim || v < -lim) throw InputError("orbit set invariants overflow 64-bit range");
  return {static_cast<std::int64_t>(x), static_cast<std::int64_t>(y), static_cast<std::int64_t>(index),
          static_cast<std::int64_t>(m), static_cast<std::int64_t>(h)};
}

inline std::string to_string(const CombOrbit& o) {
  return std::string(o.elliptic ? "e(" : "h(") + std::to_string(o.v.x) + "," + std::to_string(o.v.y) + ")";
}

// Literal syntax: e(p,q)^m and h(p,q) joined by '*'; "1" is the empty product.
inline std::string to_string(const CombOrbitSet& alpha) {
  if (alpha.empty()) return "1";
  std::string out;
  for (const auto& f : alpha.factors()) {
    if (!out.empty()) out += " * ";
    out += to_string(f.orbit);
    if (f.m != 1) out += "^" + std::to_string(f.m);
  }
  return out;
}

inline CombOrbitSet parse_orbit_set(std::string_view text) {
  std::size_t pos = 0;
  auto fail = [&](const std::string& what) {
    return InputError("orbit literal: " + what + " at offset " + std::to_string(pos) + " in \"" + std::string(text) + "\"");
  };
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto expect = [&](char c) {
    skip();
    if (pos >= text.size() || text[pos] != c) throw fail(std::string("expected '") + c + "'");
    ++pos;
  };
  auto integer = [&]() -> std::int64_t {
    skip();
    std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    std::size_t digits = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == digits) throw fail("expected an integer");
    if (pos - digits > 9) throw fail("integer too large");
    return std::stoll(std::string(text.substr(start, pos - start)));
  };

  skip();
  if (text.substr(pos) == "1") return {};
  std::vector<OrbitFactor> factors;
  for (;;) {
    skip();
    if (pos >= text.size()) throw fail("expected an orbit");
    char tag = text[pos];
    if (tag != 'e' && tag != 'h') throw fail("expected 'e' or 'h'");
    ++pos;
    expect('(');
    std::int64_t p = integer();
    expect(',');
    std::int64_t q = integer();
    expect(')');
    std::int64_t m = 1;
    skip();
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      m = integer();
      if (m < 1) throw fail("multiplicity must be >= 1");
      if (tag == 'h' && m != 1) throw fail("hyperbolic orbit must have multiplicity 1");
    }
    factors.push_back({CombOrbit::make(p, q, tag == 'e'), m});
    skip();
    if (pos == text.size()) break;
    expect('*');
  }
  return CombOrbitSet::from_factors(std::move(factors));
}

}  // namespace toric::ech
