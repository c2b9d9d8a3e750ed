#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>

#include "toric/errors.hpp"

namespace toric {

using Integer = boost::multiprecision::cpp_int;
// Always normalized: positive denominator, lowest terms.
using Rational = boost::multiprecision::cpp_rational;

inline Integer num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline std::string to_string(const Rational& r) {
  Integer d = den(r);
  if (d == 1) return num(r).str();
  return num(r).str() + "/" + d.str();
}

// Accepts "p" or "p/q" with an optional sign on p; surrounding blanks are ignored.
inline Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  auto bad = [&] { return InputError("malformed rational \"" + std::string(text) + "\""); };

  auto digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };

  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view p = body.substr(0, slash);
  std::string_view q = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!digits(p) || !digits(q)) throw bad();

  Integer n{std::string(p)};
  Integer d{std::string(q)};
  if (d == 0) throw InputError("zero denominator in \"" + std::string(text) + "\"");
  if (negative) n = -n;
  return Rational(n, d);
}

inline Integer floor_div(const Rational& r) {
  Integer n = num(r), d = den(r);
  Integer q = n / d;
  if (n < 0 && q * d != n) --q;
  return q;
}

// Fixed-point rendering for human display only; truncates toward zero.
inline std::string to_decimal(const Rational& r, unsigned digits) {
  Integer n = num(r), d = den(r);
  bool negative = n < 0;
  if (negative) n = -n;
  Integer whole = n / d;
  Integer rest = n % d;
  std::string out = (negative ? "-" : "") + whole.str();
  if (digits == 0) return out;
  out += '.';
  for (unsigned i = 0; i < digits; ++i) {
    rest *= 10;
    out += static_cast<char>('0' + static_cast<int>(rest / d));
    rest %= d;
  }
  return out;
}

inline Rational abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

struct Point2 {
  Rational x;
  Rational y;

  friend bool operator==(const Point2&, const Point2&) = default;
};

// Integer direction in Z^2 (orbit directions, support-function arguments).
struct LatticeVector {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
  friend auto operator<=>(const LatticeVector&, const LatticeVector&) = default;
};

inline Rational dot(const LatticeVector& v, const Point2& p) {
  return Rational(v.x) * p.x + Rational(v.y) * p.y;
}

inline Rational cross(const Point2& u, const Point2& v) { return u.x * v.y - u.y * v.x; }

inline Point2 operator-(const Point2& a, const Point2& b) { return {a.x - b.x, a.y - b.y}; }

}  // namespace toric
