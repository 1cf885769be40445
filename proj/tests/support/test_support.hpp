// Independent oracles and random generators shared by the test binaries.
#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "lattice_equi/equidecomposition.hpp"
#include "lattice_equi/geometry.hpp"
#include "lattice_equi/minimal_triangles.hpp"

namespace lattice_equi::testing {

inline Point P(long xn, long xd, long yn, long yd) { return make_point(xn, xd, yn, yd); }

inline Polygon t12() { return Polygon({P(1, 5, 0, 1), P(0, 1, 1, 5), P(1, 5, 1, 5)}); }
inline Polygon t14() { return Polygon({P(2, 5, 0, 1), P(1, 5, 1, 5), P(2, 5, 1, 5)}); }
inline MinimalTriangle t12_triangle() { return MinimalTriangle({P(1, 5, 0, 1), P(0, 1, 1, 5), P(1, 5, 1, 5)}, 5); }
inline MinimalTriangle t14_triangle() { return MinimalTriangle({P(2, 5, 0, 1), P(1, 5, 1, 5), P(2, 5, 1, 5)}, 5); }

/// Winding-number membership for the closed polygon, written against raw
/// coordinates so it shares no code with Polygon::contains.
inline bool oracle_in_closed_polygon(const std::vector<Point>& v, const Point& p) {
  const std::size_t n = v.size();
  int winding = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = v[i];
    const Point& b = v[(i + 1) % n];
    const Rational c = (b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x);
    const bool between_x = std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x);
    const bool between_y = std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
    if (c == 0 && between_x && between_y) return true;
    if (a.y <= p.y) {
      if (b.y > p.y && c > 0) ++winding;
    } else if (b.y <= p.y && c < 0) {
      --winding;
    }
  }
  return winding != 0;
}

/// |tP ∩ Z²| by scanning a generous integer box.
inline std::int64_t oracle_count(const std::vector<Point>& v, std::int64_t t) {
  Rational lo_x = v[0].x, hi_x = v[0].x, lo_y = v[0].y, hi_y = v[0].y;
  for (const auto& p : v) {
    lo_x = std::min(lo_x, p.x);
    hi_x = std::max(hi_x, p.x);
    lo_y = std::min(lo_y, p.y);
    hi_y = std::max(hi_y, p.y);
  }
  const Rational tt(t);
  std::int64_t n = 0;
  const Integer x0 = floor_of(lo_x * tt) - 1, x1 = floor_of(hi_x * tt) + 1;
  const Integer y0 = floor_of(lo_y * tt) - 1, y1 = floor_of(hi_y * tt) + 1;
  for (Integer x = x0; x <= x1; ++x) {
    for (Integer y = y0; y <= y1; ++y) {
      if (oracle_in_closed_polygon(v, Point{Rational(x) / tt, Rational(y) / tt})) ++n;
    }
  }
  return n;
}

/// Weight via the area rule: twice the area of (0, p, q) in units of the
/// L_d fundamental square, reduced mod d.
inline std::int64_t oracle_edge_weight(const Point& p, const Point& q, std::int64_t d) {
  const Rational twice_area = p.x * q.y - p.y * q.x;
  const Rational scaled = twice_area * Rational(d * d);
  const Integer z = scaled.get_num();
  return to_int64(mod_floor(z, Integer(static_cast<long>(d))));
}

inline Rational random_fraction(std::mt19937_64& rng, std::int64_t d, std::int64_t max_num) {
  std::uniform_int_distribution<std::int64_t> dist(0, max_num);
  Rational r(static_cast<long>(dist(rng)), static_cast<long>(d));
  r.canonicalize();
  return r;
}

/// Random unimodular matrix as a product of elementary shears and swaps.
inline UnimodularMatrix random_unimodular(std::mt19937_64& rng, int steps = 4) {
  UnimodularMatrix m = UnimodularMatrix::identity();
  std::uniform_int_distribution<int> kind(0, 3);
  std::uniform_int_distribution<int> amount(-2, 2);
  for (int i = 0; i < steps; ++i) {
    switch (kind(rng)) {
      case 0: m = UnimodularMatrix(1, amount(rng), 0, 1) * m; break;
      case 1: m = UnimodularMatrix(1, 0, amount(rng), 1) * m; break;
      case 2: m = UnimodularMatrix(0, 1, 1, 0) * m; break;
      default: m = UnimodularMatrix(-1, 0, 0, 1) * m; break;
    }
  }
  return m;
}

inline GMap random_gmap(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> shift(-3, 3);
  return GMap(random_unimodular(rng), shift(rng), shift(rng));
}

/// Convex hull, counterclockwise, without collinear points.
inline std::vector<Point> convex_hull(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<Point> hull(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && orientation(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i > 0; --i) {
    while (k >= lower && orientation(hull[k - 2], hull[k - 1], pts[i - 1]) <= 0) --k;
    hull[k++] = pts[i - 1];
  }
  hull.resize(k - 1);
  return hull;
}

/// Random convex polygon with vertices in L_d inside [0, span]².
inline Polygon random_convex_polygon(std::mt19937_64& rng, std::int64_t d, std::int64_t span = 2, int points = 6) {
  for (;;) {
    std::vector<Point> pts;
    for (int i = 0; i < points; ++i) pts.push_back({random_fraction(rng, d, span * d), random_fraction(rng, d, span * d)});
    auto hull = convex_hull(pts);
    if (hull.size() >= 3) return Polygon(hull);
  }
}

/// Random denominator-d minimal triangle: a translate of T1 moved by a random G-map.
inline MinimalTriangle random_minimal_triangle(std::mt19937_64& rng, std::int64_t d) {
  std::uniform_int_distribution<std::int64_t> cell(0, d - 1);
  const Integer dd(static_cast<long>(d));
  Rational x(static_cast<long>(cell(rng)), static_cast<long>(d));
  Rational y(static_cast<long>(cell(rng)), static_cast<long>(d));
  x.canonicalize();
  y.canonicalize();
  return apply(random_gmap(rng), translate_of_t1(dd, {x, y}));
}

/// Part of a convex polygon with x <= c (keep_left) or x >= c.
inline std::vector<Point> clip_vertical(const std::vector<Point>& v, const Rational& c, bool keep_left) {
  auto inside = [&](const Point& p) { return keep_left ? p.x <= c : p.x >= c; };
  std::vector<Point> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point& a = v[i];
    const Point& b = v[(i + 1) % v.size()];
    if (inside(a)) out.push_back(a);
    if ((a.x < c && b.x > c) || (a.x > c && b.x < c)) {
      const Rational s = (c - a.x) / (b.x - a.x);
      out.push_back({c, a.y + s * (b.y - a.y)});
    }
  }
  return out;
}

struct CutShear {
  EquiRelation relation;
  Polygon source;
  Polygon target;
};

/// Cuts a convex polygon along x = c, shears the left part by
/// (x, y) -> (x, y + k(x - c)) and keeps the right part, then applies a
/// global G-map to everything. The union of the images is again a simple
/// polygon, built here from the two boundary chains.
inline CutShear cut_and_shear(const Polygon& p, const Integer& c, const Integer& k, const GMap& global) {
  const Rational cx(c);
  const std::vector<Point> left = clip_vertical(p.vertices(), cx, true);
  const std::vector<Point> right = clip_vertical(p.vertices(), cx, false);
  const GMap shear = compose(global, GMap(UnimodularMatrix(1, 0, k, 1), 0, -k * c));

  const Polygon lp(left);
  const Polygon rp(right);
  // cut endpoints on x = c
  std::vector<Point> cut;
  for (const auto& v : lp.vertices())
    if (v.x == cx) cut.push_back(v);
  std::sort(cut.begin(), cut.end());
  const Point bottom = cut.front();
  const Point top = cut.back();

  EquiRelation r;
  for (const auto& cell : complex_of_polygon(lp).cells) {
    bool on_cut = true;
    for (const auto& q : cell.points()) on_cut = on_cut && q.x == cx;
    if (!on_cut) r.pieces.push_back({cell, shear});
  }
  for (const auto& cell : complex_of_polygon(rp).cells) r.pieces.push_back({cell, global});
  r.domain = complex_of_polygon(p);

  // boundary of the union: right chain bottom -> top, then sheared left chain top -> bottom
  auto chain = [](const std::vector<Point>& v, const Point& from, const Point& to) {
    std::size_t i = static_cast<std::size_t>(std::find(v.begin(), v.end(), from) - v.begin());
    std::vector<Point> out{v[i]};
    while (v[i] != to) {
      i = (i + 1) % v.size();
      out.push_back(v[i]);
    }
    return out;
  };
  std::vector<Point> boundary;
  for (const auto& q : chain(rp.vertices(), bottom, top)) boundary.push_back(global(q));
  const auto lchain = chain(lp.vertices(), top, bottom);
  for (std::size_t i = 1; i + 1 < lchain.size(); ++i) boundary.push_back(shear(lchain[i]));
  Polygon target(boundary);
  r.codomain = complex_of_polygon(target);
  return {std::move(r), p, std::move(target)};
}

}  // namespace lattice_equi::testing
