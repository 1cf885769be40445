#include "lattice_equi/io.hpp"

#include <fstream>
#include <sstream>

namespace lattice_equi {

namespace {

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  return j.at(key);
}

Integer integer_from_json(const Json& j) {
  const Rational r = rational_from_json(j);
  if (r.get_den() != 1) throw InputError("expected an integer, got " + to_string(r));
  return r.get_num();
}

Json points_json(const std::vector<Point>& pts) {
  Json a = Json::array();
  for (const auto& p : pts) a.push_back(to_json(p));
  return a;
}

}  // namespace

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return Json::parse(buf.str());
  } catch (const Json::parse_error& e) {
    throw InputError("malformed JSON in '" + path + "': " + e.what());
  }
}

Json to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<std::int64_t>()));
  throw InputError("expected a fraction string, got " + j.dump());
}

Json to_json(const Point& p) { return Json::array({to_json(p.x), to_json(p.y)}); }

Point point_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw InputError("a point must be a pair [x, y], got " + j.dump());
  return {rational_from_json(j[0]), rational_from_json(j[1])};
}

Json to_json(const Polygon& p) { return Json{{"vertices", points_json(p.vertices())}}; }

Polygon polygon_from_json(const Json& j) {
  const Json& arr = j.is_array() ? j : require(j, "vertices");
  if (!arr.is_array()) throw InputError("'vertices' must be an array");
  std::vector<Point> pts;
  for (const auto& v : arr) pts.push_back(point_from_json(v));
  return Polygon(std::move(pts));
}

Json to_json(const OpenCell& c) { return Json{{"kind", to_string(c.kind())}, {"points", points_json(c.points())}}; }

OpenCell cell_from_json(const Json& j) {
  const std::string kind = require(j, "kind").get<std::string>();
  const Json& pts = require(j, "points");
  if (!pts.is_array()) throw InputError("'points' must be an array");
  std::vector<Point> p;
  for (const auto& v : pts) p.push_back(point_from_json(v));
  auto need = [&](std::size_t n) {
    if (p.size() != n) throw InputError(kind + " cell needs " + std::to_string(n) + " points");
  };
  if (kind == "vertex") {
    need(1);
    return OpenCell::vertex(p[0]);
  }
  if (kind == "segment") {
    need(2);
    return OpenCell::segment(p[0], p[1]);
  }
  if (kind == "triangle") {
    need(3);
    return OpenCell::triangle(p[0], p[1], p[2]);
  }
  throw InputError("unknown cell kind '" + kind + "'");
}

Json to_json(const DeltaComplex& c) {
  Json cells = Json::array();
  for (const auto& cell : c.cells) cells.push_back(to_json(cell));
  return Json{{"cells", cells}};
}

DeltaComplex complex_from_json(const Json& j) {
  DeltaComplex c;
  const Json& cells = require(j, "cells");
  if (!cells.is_array()) throw InputError("'cells' must be an array");
  for (const auto& cell : cells) c.cells.push_back(cell_from_json(cell));
  return c;
}

Region region_from_json(const Json& j) {
  if (j.is_object() && j.contains("cells")) return complex_from_json(j);
  return polygon_from_json(j);
}

Json to_json(const UnimodularMatrix& m) {
  return Json::array({Json::array({to_int64(m.u11()), to_int64(m.u12())}),
                      Json::array({to_int64(m.u21()), to_int64(m.u22())})});
}

Json to_json(const GMap& g) {
  return Json{{"matrix", to_json(g.linear())}, {"translation", Json::array({to_int64(g.tx()), to_int64(g.ty())})}};
}

Json to_json(const QuasiPolynomial& q) {
  Json parts = Json::array();
  for (const auto& c : q.constituents()) parts.push_back(Json::array({to_json(c[0]), to_json(c[1]), to_json(c[2])}));
  return Json{{"period", q.period()}, {"constituents", parts}};
}

QuasiPolynomial quasipolynomial_from_json(const Json& j) {
  const Json& period = require(j, "period");
  if (!period.is_number_integer()) throw InputError("'period' must be an integer");
  std::vector<QuadraticPolynomial> parts;
  for (const auto& c : require(j, "constituents")) {
    if (!c.is_array() || c.size() != 3) throw InputError("each constituent needs three coefficients");
    parts.push_back({rational_from_json(c[0]), rational_from_json(c[1]), rational_from_json(c[2])});
  }
  return QuasiPolynomial(period.get<std::int64_t>(), std::move(parts));
}

Json to_json(const EquiRelation& r) {
  Json pieces = Json::array();
  for (const auto& p : r.pieces) {
    Json g = to_json(p.map);
    pieces.push_back(Json{{"cell", to_json(p.cell)}, {"matrix", g["matrix"]}, {"translation", g["translation"]}});
  }
  return Json{{"pieces", pieces}, {"domain", to_json(r.domain)}, {"codomain", to_json(r.codomain)}};
}

EquiRelation relation_from_json(const Json& j) {
  EquiRelation r;
  for (const auto& p : require(j, "pieces")) {
    const Json& m = require(p, "matrix");
    const Json& t = require(p, "translation");
    if (!m.is_array() || m.size() != 2 || !m[0].is_array() || m[0].size() != 2 || !m[1].is_array() ||
        m[1].size() != 2) {
      throw InputError("'matrix' must be a 2x2 array");
    }
    if (!t.is_array() || t.size() != 2) throw InputError("'translation' must be a pair");
    UnimodularMatrix u(integer_from_json(m[0][0]), integer_from_json(m[0][1]), integer_from_json(m[1][0]),
                       integer_from_json(m[1][1]));
    r.pieces.push_back({cell_from_json(require(p, "cell")), GMap(u, integer_from_json(t[0]), integer_from_json(t[1]))});
  }
  r.domain = complex_from_json(require(j, "domain"));
  r.codomain = complex_from_json(require(j, "codomain"));
  return r;
}

Json to_json(const InfiniteRelation& r, std::int64_t k) {
  Json pieces = Json::array();
  for (std::int64_t i = 1; i <= k; ++i) {
    for (const auto& p : r.piece(i)) {
      Json g = to_json(p.map);
      pieces.push_back(
          Json{{"index", i}, {"cell", to_json(p.cell)}, {"matrix", g["matrix"]}, {"translation", g["translation"]}});
    }
  }
  return Json{{"denominator", to_int64(r.pair().d)},
              {"t", to_int64(r.pair().t)},
              {"deleted_left", to_string(r.deleted_left())},
              {"deleted_right", to_string(r.deleted_right())},
              {"k", k},
              {"domain", to_json(r.domain())},
              {"codomain", to_json(r.codomain())},
              {"pieces", pieces}};
}

Json to_json(const Triangulation& t) {
  Json edges = Json::array();
  for (const auto& e : t.edges) edges.push_back(Json{{"vertices", {e.a, e.b}}, {"facets", e.facets}});
  Json facets = Json::array();
  for (const auto& f : t.facets) {
    facets.push_back(Json{{"vertices", {f.vertices[0], f.vertices[1], f.vertices[2]}},
                          {"edges", {f.edges[0], f.edges[1], f.edges[2]}}});
  }
  return Json{{"denominator", to_int64(t.d)}, {"vertices", points_json(t.vertices)}, {"edges", edges}, {"facets", facets}};
}

}  // namespace lattice_equi
