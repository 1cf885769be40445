#include "lattice_equi/minimal_triangles.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>
#include <utility>

#include "lattice_equi/weights.hpp"

namespace lattice_equi {

namespace {

using IntPoint = std::pair<Integer, Integer>;

int sign_of(const Integer& z) { return sgn(z); }

int int_orientation(const IntPoint& a, const IntPoint& b, const IntPoint& c) {
  const Integer v = (b.first - a.first) * (c.second - a.second) - (b.second - a.second) * (c.first - a.first);
  return sign_of(v);
}

bool int_in_closed_triangle(const IntPoint& a, const IntPoint& b, const IntPoint& c, const IntPoint& p) {
  const int o1 = int_orientation(a, b, p);
  const int o2 = int_orientation(b, c, p);
  const int o3 = int_orientation(c, a, p);
  const bool has_neg = o1 < 0 || o2 < 0 || o3 < 0;
  const bool has_pos = o1 > 0 || o2 > 0 || o3 > 0;
  return !(has_neg && has_pos);
}

IntPoint scale_to_int(const Point& p, const Integer& d) {
  const Rational x = p.x * d;
  const Rational y = p.y * d;
  if (x.get_den() != 1 || y.get_den() != 1) throw InputError("point " + to_string(p) + " is not in L_" + to_string(d));
  return {x.get_num(), y.get_num()};
}

Point from_int(const IntPoint& p, const Integer& d) {
  Rational x(p.first, d);
  Rational y(p.second, d);
  x.canonicalize();
  y.canonicalize();
  return {x, y};
}

/// Integer points of the closed triangle other than its vertices, lexicographic.
std::vector<IntPoint> extra_points(const std::array<IntPoint, 3>& t) {
  Integer x0 = std::min({t[0].first, t[1].first, t[2].first});
  Integer x1 = std::max({t[0].first, t[1].first, t[2].first});
  Integer y0 = std::min({t[0].second, t[1].second, t[2].second});
  Integer y1 = std::max({t[0].second, t[1].second, t[2].second});
  std::vector<IntPoint> out;
  for (Integer x = x0; x <= x1; ++x) {
    for (Integer y = y0; y <= y1; ++y) {
      IntPoint p{x, y};
      if (p == t[0] || p == t[1] || p == t[2]) continue;
      if (int_in_closed_triangle(t[0], t[1], t[2], p)) out.push_back(std::move(p));
    }
  }
  return out;
}

Point min_corner(const Point& a, const Point& b, const Point& c) {
  return {std::min({a.x, b.x, c.x}), std::min({a.y, b.y, c.y})};
}

Point reduce_mod_one(const Point& p, Integer& tx, Integer& ty) {
  tx = -floor_of(p.x);
  ty = -floor_of(p.y);
  return {p.x + tx, p.y + ty};
}

}  // namespace

bool is_d_minimal(const TriangleVertices& t, const Integer& d) {
  if (d < 1) throw InputError("denominator must be positive");
  std::array<IntPoint, 3> s{scale_to_int(t[0], d), scale_to_int(t[1], d), scale_to_int(t[2], d)};
  if (int_orientation(s[0], s[1], s[2]) == 0) return false;
  if (!extra_points(s).empty()) return false;
  const Rational area = abs(signed_area(std::span<const Point>(t.data(), t.size())));
  if (area != Rational(1, 2) / (d * d)) throw std::logic_error("minimal triangle violates the area law");
  return true;
}

bool is_d_minimal_segment(const Point& p, const Point& q, const Integer& d) {
  if (p == q) return false;
  const IntPoint a = scale_to_int(p, d);
  const IntPoint b = scale_to_int(q, d);
  return gcd(Integer(b.first - a.first), Integer(b.second - a.second)) == 1;
}

MinimalTriangle::MinimalTriangle(TriangleVertices vertices, Integer d) : vertices_(std::move(vertices)), d_(std::move(d)) {
  if (!is_d_minimal(vertices_, d_)) throw InputError("triangle is not " + to_string(d_) + "-minimal");
  if (orientation(vertices_[0], vertices_[1], vertices_[2]) < 0) std::swap(vertices_[1], vertices_[2]);
}

bool same_triangle(const TriangleVertices& a, const TriangleVertices& b) {
  TriangleVertices x = a;
  TriangleVertices y = b;
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  return x == y;
}

MinimalTriangle apply(const GMap& g, const MinimalTriangle& t) {
  return MinimalTriangle({g(t[0]), g(t[1]), g(t[2])}, t.d());
}

MinimalTriangle translate_of_t1(const Integer& d, const Point& offset) {
  const Rational step(1, d);
  return MinimalTriangle({offset, offset + Point{step, 0}, offset + Point{0, step}}, d);
}

StandardFormWitness standard_form(const MinimalTriangle& t) {
  const auto& v = t.vertices();
  std::size_t k = 0;
  for (std::size_t i = 1; i < 3; ++i)
    if (v[i] < v[k]) k = i;
  const Point& v0 = v[k];
  const Point& v1 = v[(k + 1) % 3];
  const Point& v2 = v[(k + 2) % 3];
  const IntPoint a = scale_to_int(v1 - v0, t.d());
  const IntPoint b = scale_to_int(v2 - v0, t.d());
  // columns a, b have determinant +1 for a ccw minimal triangle
  const UnimodularMatrix basis(a.first, b.first, a.second, b.second);
  const UnimodularMatrix u = basis.inverse();
  Integer tx;
  Integer ty;
  const Point offset = reduce_mod_one(u.apply(v0), tx, ty);
  return {GMap(u, tx, ty), offset};
}

const std::array<UnimodularMatrix, 6>& dihedral_set() {
  static const std::array<UnimodularMatrix, 6> set{
      UnimodularMatrix(1, 0, 0, 1),   UnimodularMatrix(0, 1, 1, 0),   UnimodularMatrix(0, 1, -1, -1),
      UnimodularMatrix(-1, -1, 1, 0), UnimodularMatrix(1, 0, -1, -1), UnimodularMatrix(-1, -1, 0, 1),
  };
  return set;
}

bool in_dihedral_set(const UnimodularMatrix& m) {
  const auto& set = dihedral_set();
  return std::find(set.begin(), set.end(), m) != set.end();
}

TranslateImage dihedral_act(const UnimodularMatrix& m, const Point& offset, const Integer& d) {
  if (!in_dihedral_set(m)) throw InputError("matrix " + to_string(m) + " is not in the dihedral set");
  const Rational step(1, d);
  const Point origin{0, 0};
  const Point e1 = m.apply(Point{step, 0});
  const Point e2 = m.apply(Point{0, step});
  const Point c = min_corner(origin, e1, e2);
  TriangleVertices image{origin, e1, e2};
  TriangleVertices expected{c, c + Point{step, 0}, c + Point{0, step}};
  if (!same_triangle(image, expected)) throw std::logic_error("dihedral image is not a translate of T1");
  Integer tx;
  Integer ty;
  const Point w = reduce_mod_one(m.apply(offset) + c, tx, ty);
  return {w, GMap(m, tx, ty)};
}

std::vector<MinimalTriangle> enumerate_minimal_translates(const Integer& d) {
  if (d < 1) throw InputError("denominator must be positive");
  std::vector<MinimalTriangle> out;
  for (Integer j = 0; j < d; ++j) {
    for (Integer i = 0; i < d; ++i) {
      Rational x(i, d);
      Rational y(j, d);
      x.canonicalize();
      y.canonicalize();
      out.push_back(translate_of_t1(d, {x, y}));
    }
  }
  return out;
}

std::vector<std::vector<std::size_t>> dihedral_orbits(const Integer& d) {
  const auto translates = enumerate_minimal_translates(d);
  const std::size_t n = translates.size();
  std::vector<std::size_t> parent(n);
  for (std::size_t i = 0; i < n; ++i) parent[i] = i;
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  const std::int64_t dd = to_int64(d);
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& m : dihedral_set()) {
      const Point w = dihedral_act(m, translates[i][0], d).offset;
      const IntPoint s = scale_to_int(w, d);
      const std::size_t j = static_cast<std::size_t>(to_int64(s.second) * dd + to_int64(s.first));
      const std::size_t ri = find(i);
      const std::size_t rj = find(j);
      if (ri != rj) parent[std::max(ri, rj)] = std::min(ri, rj);
    }
  }
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < n; ++i) groups[find(i)].push_back(i);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  return out;
}

std::array<Point, 3> corner_offsets(const Integer& d) {
  Rational last(d - 1, d);
  last.canonicalize();
  return {Point{0, 0}, Point{last, 0}, Point{0, last}};
}

std::optional<GMap> g_orbit_equivalent(const MinimalTriangle& s, const MinimalTriangle& t) {
  if (s.d() != t.d()) throw InputError("triangles have different denominators");
  if (triangle_weight(s) != triangle_weight(t)) return std::nullopt;
  const StandardFormWitness ws = standard_form(s);
  const StandardFormWitness wt = standard_form(t);
  for (const auto& m : dihedral_set()) {
    const TranslateImage img = dihedral_act(m, ws.offset, s.d());
    if (img.offset != wt.offset) continue;
    const GMap g = compose(inverse(wt.g), compose(img.g, ws.g));
    if (!same_triangle({g(s[0]), g(s[1]), g(s[2])}, t.vertices())) throw std::logic_error("orbit witness failed");
    return g;
  }
  throw std::logic_error("equal weights but no dihedral map found");
}

TriangleVertices Triangulation::facet_points(std::size_t f) const {
  const auto& v = facets[f].vertices;
  return {vertices[v[0]], vertices[v[1]], vertices[v[2]]};
}

DeltaComplex Triangulation::cells() const {
  DeltaComplex c;
  for (std::size_t f = 0; f < facets.size(); ++f) {
    const auto p = facet_points(f);
    c.cells.push_back(OpenCell::triangle(p[0], p[1], p[2]));
  }
  for (const auto& e : edges) c.cells.push_back(OpenCell::segment(vertices[e.a], vertices[e.b]));
  for (const auto& v : vertices) c.cells.push_back(OpenCell::vertex(v));
  return c;
}

Triangulation minimal_triangulation(const Polygon& p, const Integer& d, std::uint64_t seed) {
  if (d < 1) throw InputError("denominator must be positive");
  if (d % polygon_denominator(p) != 0) {
    throw InputError("denominator " + to_string(d) + " is not a multiple of the polygon denominator " +
                     to_string(polygon_denominator(p)));
  }
  std::vector<IntPoint> corners;
  for (const auto& v : p.vertices()) corners.push_back(scale_to_int(v, d));

  std::vector<std::array<IntPoint, 3>> pending;
  for (const auto& e : ear_clip(p)) pending.push_back({corners[e[0]], corners[e[1]], corners[e[2]]});

  std::mt19937_64 rng(seed);
  std::vector<std::array<IntPoint, 3>> done;
  while (!pending.empty()) {
    auto t = pending.back();
    pending.pop_back();
    if (int_orientation(t[0], t[1], t[2]) < 0) std::swap(t[1], t[2]);
    const auto extra = extra_points(t);
    if (extra.empty()) {
      done.push_back(t);
      continue;
    }
    const IntPoint q = seed == 0 ? extra.front() : extra[rng() % extra.size()];
    bool on_edge = false;
    for (int k = 0; k < 3; ++k) {
      const IntPoint& a = t[k];
      const IntPoint& b = t[(k + 1) % 3];
      const IntPoint& c = t[(k + 2) % 3];
      if (int_orientation(a, b, q) == 0) {
        pending.push_back({a, q, c});
        pending.push_back({q, b, c});
        on_edge = true;
        break;
      }
    }
    if (!on_edge) {
      pending.push_back({t[0], t[1], q});
      pending.push_back({t[1], t[2], q});
      pending.push_back({t[2], t[0], q});
    }
  }

  Triangulation tri;
  tri.d = d;
  std::map<IntPoint, std::size_t> vertex_index;
  auto index_of = [&](const IntPoint& q) {
    auto [it, inserted] = vertex_index.try_emplace(q, tri.vertices.size());
    if (inserted) tri.vertices.push_back(from_int(q, d));
    return it->second;
  };
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> edge_index;
  std::sort(done.begin(), done.end());
  for (const auto& t : done) {
    Triangulation::Facet f{};
    for (int k = 0; k < 3; ++k) f.vertices[k] = index_of(t[k]);
    const std::size_t fi = tri.facets.size();
    for (int k = 0; k < 3; ++k) {
      std::size_t a = f.vertices[k];
      std::size_t b = f.vertices[(k + 1) % 3];
      auto key = std::minmax(a, b);
      auto [it, inserted] = edge_index.try_emplace({key.first, key.second}, tri.edges.size());
      if (inserted) tri.edges.push_back({key.first, key.second, {}});
      tri.edges[it->second].facets.push_back(fi);
      f.edges[k] = it->second;
    }
    tri.facets.push_back(f);
  }
  for (const auto& e : tri.edges) {
    if (e.facets.size() > 2) throw std::logic_error("edge shared by more than two facets");
  }
  return tri;
}

}  // namespace lattice_equi
