#include "lattice_equi/geometry.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

namespace lattice_equi {

Point make_point(long xn, long xd, long yn, long yd) { return {make_rational(xn, xd), make_rational(yn, yd)}; }

Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
Point operator*(const Rational& s, const Point& p) { return {s * p.x, s * p.y}; }

std::string to_string(const Point& p) { return "(" + to_string(p.x) + ", " + to_string(p.y) + ")"; }

Integer denominator(const Point& p) { return lcm(p.x.get_den(), p.y.get_den()); }

bool in_lattice(const Point& p, const Integer& d) {
  Rational sx = p.x * d;
  Rational sy = p.y * d;
  return sx.get_den() == 1 && sy.get_den() == 1;
}

Rational cross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }
Rational dot(const Point& a, const Point& b) { return a.x * b.x + a.y * b.y; }

int orientation(const Point& a, const Point& b, const Point& c) { return sgn(cross(b - a, c - a)); }

bool on_closed_segment(const Point& a, const Point& b, const Point& p) {
  if (orientation(a, b, p) != 0) return false;
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

bool segments_intersect(const Point& a, const Point& b, const Point& c, const Point& d) {
  const int o1 = orientation(a, b, c);
  const int o2 = orientation(a, b, d);
  const int o3 = orientation(c, d, a);
  const int o4 = orientation(c, d, b);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  return on_closed_segment(a, b, c) || on_closed_segment(a, b, d) || on_closed_segment(c, d, a) ||
         on_closed_segment(c, d, b);
}

// ---------------------------------------------------------------------------

UnimodularMatrix::UnimodularMatrix(Integer u11, Integer u12, Integer u21, Integer u22)
    : m_{std::move(u11), std::move(u12), std::move(u21), std::move(u22)} {
  Integer det = m_[0] * m_[3] - m_[1] * m_[2];
  if (det != 1 && det != -1) {
    throw InputError("matrix determinant must be +1 or -1, got " + to_string(det));
  }
  det_ = static_cast<int>(det.get_si());
}

UnimodularMatrix UnimodularMatrix::identity() { return {1, 0, 0, 1}; }

Point UnimodularMatrix::apply(const Point& p) const {
  return {Rational(m_[0]) * p.x + Rational(m_[1]) * p.y, Rational(m_[2]) * p.x + Rational(m_[3]) * p.y};
}

UnimodularMatrix UnimodularMatrix::operator*(const UnimodularMatrix& r) const {
  return {m_[0] * r.m_[0] + m_[1] * r.m_[2], m_[0] * r.m_[1] + m_[1] * r.m_[3],
          m_[2] * r.m_[0] + m_[3] * r.m_[2], m_[2] * r.m_[1] + m_[3] * r.m_[3]};
}

UnimodularMatrix UnimodularMatrix::inverse() const {
  // adjugate / det, and det = +-1
  const Integer s = det_;
  return {s * m_[3], -s * m_[1], -s * m_[2], s * m_[0]};
}

std::string to_string(const UnimodularMatrix& m) {
  return "[[" + to_string(m.u11()) + ", " + to_string(m.u12()) + "], [" + to_string(m.u21()) + ", " +
         to_string(m.u22()) + "]]";
}

Point GMap::apply(const Point& p) const {
  Point q = linear_.apply(p);
  return {q.x + tx_, q.y + ty_};
}

GMap compose(const GMap& g1, const GMap& g2) {
  // g1(g2(x)) = U1 U2 x + U1 v2 + v1
  Point v2{Rational(g2.tx()), Rational(g2.ty())};
  Point t = g1.apply(v2);
  return {g1.linear() * g2.linear(), t.x.get_num(), t.y.get_num()};
}

GMap inverse(const GMap& g) {
  UnimodularMatrix inv = g.linear().inverse();
  Point t = inv.apply(Point{Rational(-g.tx()), Rational(-g.ty())});
  return {inv, t.x.get_num(), t.y.get_num()};
}

std::string to_string(const GMap& g) {
  return "U=" + to_string(g.linear()) + ", v=(" + to_string(g.tx()) + ", " + to_string(g.ty()) + ")";
}

// ---------------------------------------------------------------------------

Rational signed_area(std::span<const Point> v) {
  Rational twice = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    twice += cross(v[i], v[(i + 1) % v.size()]);
  }
  return twice / 2;
}

std::vector<Point> ensure_ccw(std::vector<Point> vertices) {
  const int s = sgn(signed_area(vertices));
  if (s == 0) throw InputError("degenerate polygon (zero area)");
  if (s < 0) std::reverse(vertices.begin(), vertices.end());
  return vertices;
}

namespace {

std::vector<Point> merge_collinear(std::vector<Point> v) {
  bool changed = true;
  while (changed && v.size() >= 3) {
    changed = false;
    for (std::size_t i = 0; i < v.size(); ++i) {
      const Point& prev = v[(i + v.size() - 1) % v.size()];
      const Point& next = v[(i + 1) % v.size()];
      if (v[i] == prev || v[i] == next) throw InputError("polygon has repeated consecutive vertex " + to_string(v[i]));
      if (orientation(prev, v[i], next) != 0) continue;
      if (sgn(dot(v[i] - prev, next - v[i])) <= 0) {
        throw InputError("polygon boundary doubles back at " + to_string(v[i]));
      }
      v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
      changed = true;
      break;
    }
  }
  return v;
}

void require_simple(const std::vector<Point>& v) {
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool adjacent = j == i + 1 || (i == 0 && j == n - 1);
      if (adjacent) continue;
      if (segments_intersect(v[i], v[(i + 1) % n], v[j], v[(j + 1) % n])) {
        throw InputError("polygon is not simple: edges " + std::to_string(i) + " and " + std::to_string(j) +
                         " intersect");
      }
    }
  }
}

}  // namespace

Polygon::Polygon(std::vector<Point> vertices) {
  if (vertices.size() < 3) throw InputError("polygon needs at least 3 vertices");
  vertices = merge_collinear(std::move(vertices));
  if (vertices.size() < 3) throw InputError("degenerate polygon (all vertices collinear)");
  require_simple(vertices);
  vertices_ = ensure_ccw(std::move(vertices));
}

Rational Polygon::area() const { return signed_area(vertices_); }

bool Polygon::on_boundary(const Point& p) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (on_closed_segment(vertices_[i], vertices_[(i + 1) % vertices_.size()], p)) return true;
  }
  return false;
}

bool Polygon::contains(const Point& p) const {
  if (on_boundary(p)) return true;
  bool inside = false;
  const std::size_t n = vertices_.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = vertices_[i];
    const Point& b = vertices_[(i + 1) % n];
    if ((a.y > p.y) != (b.y > p.y)) {
      Rational xint = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (p.x < xint) inside = !inside;
    }
  }
  return inside;
}

Rational signed_area(const Polygon& p) { return signed_area(p.vertices()); }

Integer polygon_denominator(const Polygon& p) {
  Integer d = 1;
  for (const auto& v : p.vertices()) d = lcm(d, denominator(v));
  return d;
}

Polygon apply(const GMap& g, const Polygon& p) {
  std::vector<Point> out;
  out.reserve(p.size());
  for (const auto& v : p.vertices()) out.push_back(g(v));
  return Polygon(std::move(out));
}

Polygon scaled(const Polygon& p, const Rational& s) {
  std::vector<Point> out;
  out.reserve(p.size());
  for (const auto& v : p.vertices()) out.push_back(s * v);
  return Polygon(std::move(out));
}

// ---------------------------------------------------------------------------

OpenCell OpenCell::vertex(Point p) { return {CellKind::Vertex, {std::move(p)}}; }

OpenCell OpenCell::segment(Point a, Point b) {
  if (a == b) throw InputError("open segment with coincident endpoints " + to_string(a));
  return {CellKind::Segment, {std::move(a), std::move(b)}};
}

OpenCell OpenCell::triangle(Point a, Point b, Point c) {
  if (orientation(a, b, c) == 0) throw InputError("open triangle with collinear vertices");
  return {CellKind::Triangle, {std::move(a), std::move(b), std::move(c)}};
}

bool OpenCell::contains(const Point& p) const {
  switch (kind_) {
    case CellKind::Vertex:
      return p == points_[0];
    case CellKind::Segment: {
      const Point& a = points_[0];
      const Point& b = points_[1];
      return orientation(a, b, p) == 0 && sgn(dot(p - a, b - a)) > 0 && sgn(dot(p - b, a - b)) > 0;
    }
    case CellKind::Triangle: {
      const Point& a = points_[0];
      const Point& b = points_[1];
      const Point& c = points_[2];
      const int o = orientation(a, b, c);
      return orientation(a, b, p) == o && orientation(b, c, p) == o && orientation(c, a, p) == o;
    }
  }
  return false;
}

std::pair<Point, Point> OpenCell::bounds() const {
  Point lo = points_[0];
  Point hi = points_[0];
  for (const auto& p : points_) {
    lo.x = std::min(lo.x, p.x);
    lo.y = std::min(lo.y, p.y);
    hi.x = std::max(hi.x, p.x);
    hi.y = std::max(hi.y, p.y);
  }
  return {lo, hi};
}

OpenCell apply(const GMap& g, const OpenCell& c) {
  const auto& p = c.points();
  switch (c.kind()) {
    case CellKind::Vertex:
      return OpenCell::vertex(g(p[0]));
    case CellKind::Segment:
      return OpenCell::segment(g(p[0]), g(p[1]));
    case CellKind::Triangle:
      return OpenCell::triangle(g(p[0]), g(p[1]), g(p[2]));
  }
  throw std::logic_error("unreachable");
}

OpenCell scaled(const OpenCell& c, const Rational& s) {
  const auto& p = c.points();
  switch (c.kind()) {
    case CellKind::Vertex:
      return OpenCell::vertex(s * p[0]);
    case CellKind::Segment:
      return OpenCell::segment(s * p[0], s * p[1]);
    case CellKind::Triangle:
      return OpenCell::triangle(s * p[0], s * p[1], s * p[2]);
  }
  throw std::logic_error("unreachable");
}

std::string to_string(CellKind k) {
  switch (k) {
    case CellKind::Vertex:
      return "vertex";
    case CellKind::Segment:
      return "segment";
    case CellKind::Triangle:
      return "triangle";
  }
  return "?";
}

bool DeltaComplex::contains(const Point& p) const {
  return std::any_of(cells.begin(), cells.end(), [&](const OpenCell& c) { return c.contains(p); });
}

std::size_t DeltaComplex::multiplicity(const Point& p) const {
  return static_cast<std::size_t>(
      std::count_if(cells.begin(), cells.end(), [&](const OpenCell& c) { return c.contains(p); }));
}

DeltaComplex apply(const GMap& g, const DeltaComplex& c) {
  DeltaComplex out;
  out.cells.reserve(c.cells.size());
  for (const auto& cell : c.cells) out.cells.push_back(apply(g, cell));
  return out;
}

// ---------------------------------------------------------------------------

namespace {

bool in_closed_triangle(const Point& a, const Point& b, const Point& c, const Point& p) {
  // a, b, c counterclockwise
  return orientation(a, b, p) >= 0 && orientation(b, c, p) >= 0 && orientation(c, a, p) >= 0;
}

}  // namespace

std::vector<std::array<std::size_t, 3>> ear_clip(const Polygon& poly) {
  const auto& v = poly.vertices();
  std::vector<std::size_t> ring(v.size());
  for (std::size_t i = 0; i < ring.size(); ++i) ring[i] = i;

  std::vector<std::array<std::size_t, 3>> out;
  while (ring.size() > 3) {
    const std::size_t m = ring.size();
    bool clipped = false;
    for (std::size_t k = 0; k < m && !clipped; ++k) {
      const std::size_t i = ring[(k + m - 1) % m];
      const std::size_t j = ring[k];
      const std::size_t l = ring[(k + 1) % m];
      if (orientation(v[i], v[j], v[l]) <= 0) continue;
      bool blocked = false;
      for (std::size_t q = 0; q < v.size() && !blocked; ++q) {
        if (q == i || q == j || q == l) continue;
        blocked = in_closed_triangle(v[i], v[j], v[l], v[q]);
      }
      if (blocked) continue;
      out.push_back({i, j, l});
      ring.erase(ring.begin() + static_cast<std::ptrdiff_t>(k));
      clipped = true;
    }
    if (!clipped) throw std::logic_error("ear clipping found no ear");
  }
  out.push_back({ring[0], ring[1], ring[2]});
  return out;
}

DeltaComplex complex_of_polygon(const Polygon& p) {
  const auto& v = p.vertices();
  DeltaComplex out;
  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& t : ear_clip(p)) {
    out.cells.push_back(OpenCell::triangle(v[t[0]], v[t[1]], v[t[2]]));
    for (int e = 0; e < 3; ++e) {
      std::size_t a = t[e];
      std::size_t b = t[(e + 1) % 3];
      edges.insert(std::minmax(a, b));
    }
  }
  for (const auto& [a, b] : edges) out.cells.push_back(OpenCell::segment(v[a], v[b]));
  for (const auto& q : v) out.cells.push_back(OpenCell::vertex(q));
  return out;
}

DeltaComplex complex_minus_closed_edge(const Polygon& p, const Point& a, const Point& b) {
  const auto& v = p.vertices();
  bool found = false;
  for (std::size_t i = 0; i < v.size() && !found; ++i) {
    const Point& s = v[i];
    const Point& t = v[(i + 1) % v.size()];
    found = (s == a && t == b) || (s == b && t == a);
  }
  if (!found) throw InputError("segment " + to_string(a) + "-" + to_string(b) + " is not an edge of the polygon");

  DeltaComplex full = complex_of_polygon(p);
  DeltaComplex out;
  for (auto& cell : full.cells) {
    const auto& q = cell.points();
    if (cell.kind() == CellKind::Vertex && (q[0] == a || q[0] == b)) continue;
    if (cell.kind() == CellKind::Segment && ((q[0] == a && q[1] == b) || (q[0] == b && q[1] == a))) continue;
    out.cells.push_back(std::move(cell));
  }
  return out;
}

}  // namespace lattice_equi
