#pragma once

#include <string>
#include <string_view>

#include "json.hpp"
#include "toric/domain.hpp"
#include "toric/errors.hpp"
#include "toric/geometry.hpp"
#include "toric/rational.hpp"

namespace toric {

using Json = nlohmann::ordered_json;

namespace detail {

inline Rational rational_field(const Json& j, const char* what) {
  if (!j.is_string()) throw InputError(std::string(what) + ": rationals must be strings \"p/q\"");
  return parse_rational(j.get<std::string>());
}

inline const Json& required(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

}  // namespace detail

inline ToricDomain domain_from_json(const Json& j) {
  const Json& kind_field = detail::required(j, "kind");
  if (!kind_field.is_string()) throw InputError("field \"kind\" must be a string");
  const std::string kind = kind_field.get<std::string>();

  if (kind == "ball" || kind == "cylinder" || kind == "cube" || kind == "nduc") {
    const Json& n = detail::required(j, "n");
    if (!n.is_number_integer()) throw InputError("field \"n\" must be an integer");
    StandardKind k = kind == "ball" ? StandardKind::Ball
                     : kind == "cylinder" ? StandardKind::Cylinder
                     : kind == "cube" ? StandardKind::Cube
                                      : StandardKind::Nduc;
    return StandardDomain::make(k, n.get<int>(), detail::rational_field(detail::required(j, "a"), "a"));
  }
  if (kind == "polygon2d") {
    const Json& vs = detail::required(j, "vertices");
    if (!vs.is_array()) throw InputError("field \"vertices\" must be an array");
    std::vector<Point2> chain;
    for (const auto& v : vs) {
      if (!v.is_array() || v.size() != 2) throw InputError("each vertex must be a pair [\"x\",\"y\"]");
      chain.push_back({detail::rational_field(v[0], "vertex"), detail::rational_field(v[1], "vertex")});
    }
    return Polygon2D::from_vertices(std::move(chain));
  }
  if (kind == "rectilinear2d") {
    const Json& rs = detail::required(j, "rects");
    if (!rs.is_array()) throw InputError("field \"rects\" must be an array");
    std::vector<Rect> rects;
    for (const auto& r : rs)
      rects.push_back({detail::rational_field(detail::required(r, "x0"), "x0"),
                       detail::rational_field(detail::required(r, "x1"), "x1"),
                       detail::rational_field(detail::required(r, "y0"), "y0"),
                       detail::rational_field(detail::required(r, "y1"), "y1")});
    return Rectilinear2D::from_rects(std::move(rects));
  }
  throw InputError("unknown domain kind \"" + kind + "\"");
}

inline ToricDomain parse_domain(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("JSON syntax error: ") + e.what());
  }
  return domain_from_json(j);
}

inline Json domain_to_json(const ToricDomain& domain) {
  return std::visit(
      overloaded{
          [](const StandardDomain& s) {
            return Json{{"kind", kind_name(s.kind)}, {"n", s.n}, {"a", to_string(s.size)}};
          },
          [](const Polygon2D& p) {
            Json vs = Json::array();
            for (const auto& v : p.vertices()) vs.push_back(Json::array({to_string(v.x), to_string(v.y)}));
            return Json{{"kind", "polygon2d"}, {"vertices", vs}};
          },
          [](const Rectilinear2D& r) {
            Json rs = Json::array();
            for (const auto& rc : r.rects())
              rs.push_back(Json{{"x0", to_string(rc.x0)}, {"x1", to_string(rc.x1)},
                                {"y0", to_string(rc.y0)}, {"y1", to_string(rc.y1)}});
            return Json{{"kind", "rectilinear2d"}, {"rects", rs}};
          },
      },
      domain);
}

inline std::string serialize_domain(const ToricDomain& domain) { return domain_to_json(domain).dump(); }

}  // namespace toric
