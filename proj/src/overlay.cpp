#include "lattice_equi/overlay.hpp"

#include <algorithm>
#include <set>

namespace lattice_equi {

namespace {

struct Segment {
  Point a;
  Point b;
};

void collect_boundary(const OpenCell& c, std::vector<Segment>& segs, std::vector<Point>& points) {
  const auto& p = c.points();
  switch (c.kind()) {
    case CellKind::Vertex:
      points.push_back(p[0]);
      break;
    case CellKind::Segment:
      segs.push_back({p[0], p[1]});
      break;
    case CellKind::Triangle:
      segs.push_back({p[0], p[1]});
      segs.push_back({p[1], p[2]});
      segs.push_back({p[2], p[0]});
      break;
  }
}

/// Intersection point of two non-parallel segments, if they meet.
std::optional<Point> crossing(const Segment& s, const Segment& t) {
  const Point r = s.b - s.a;
  const Point q = t.b - t.a;
  const Rational denom = cross(r, q);
  if (denom == 0) return std::nullopt;
  const Rational u = cross(t.a - s.a, q) / denom;
  const Rational v = cross(t.a - s.a, r) / denom;
  if (u < 0 || u > 1 || v < 0 || v > 1) return std::nullopt;
  return s.a + u * r;
}

/// y values where the segments meet the vertical line x = c; vertical
/// segments on that line contribute both endpoints.
std::vector<Rational> crossings_at(const std::vector<Segment>& segs, const Rational& c) {
  std::vector<Rational> ys;
  for (const auto& s : segs) {
    const Rational& x0 = s.a.x;
    const Rational& x1 = s.b.x;
    if (x0 == x1) {
      if (x0 == c) {
        ys.push_back(s.a.y);
        ys.push_back(s.b.y);
      }
      continue;
    }
    if ((c < x0 && c < x1) || (c > x0 && c > x1)) continue;
    const Rational t = (c - x0) / (x1 - x0);
    ys.push_back(s.a.y + t * (s.b.y - s.a.y));
  }
  return ys;
}

void push_column(const Rational& x, std::vector<Rational> ys, std::vector<Point>& out) {
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
  for (std::size_t i = 0; i < ys.size(); ++i) {
    out.push_back({x, ys[i]});
    if (i + 1 < ys.size()) out.push_back({x, (ys[i] + ys[i + 1]) / 2});
  }
}

}  // namespace

std::vector<Point> arrangement_samples(const std::vector<OpenCell>& cells) {
  std::vector<Segment> segs;
  std::vector<Point> isolated;
  for (const auto& c : cells) collect_boundary(c, segs, isolated);

  std::set<Rational> xs;
  for (const auto& s : segs) {
    xs.insert(s.a.x);
    xs.insert(s.b.x);
  }
  for (const auto& p : isolated) xs.insert(p.x);
  for (std::size_t i = 0; i < segs.size(); ++i) {
    for (std::size_t j = i + 1; j < segs.size(); ++j) {
      if (auto p = crossing(segs[i], segs[j])) xs.insert(p->x);
    }
  }

  std::vector<Point> out;
  const std::vector<Rational> critical(xs.begin(), xs.end());
  for (std::size_t k = 0; k < critical.size(); ++k) {
    std::vector<Rational> ys = crossings_at(segs, critical[k]);
    for (const auto& p : isolated)
      if (p.x == critical[k]) ys.push_back(p.y);
    push_column(critical[k], std::move(ys), out);
    if (k + 1 < critical.size()) {
      const Rational mid = (critical[k] + critical[k + 1]) / 2;
      push_column(mid, crossings_at(segs, mid), out);
    }
  }
  return out;
}

bool cells_intersect(const OpenCell& a, const OpenCell& b) {
  const auto [alo, ahi] = a.bounds();
  const auto [blo, bhi] = b.bounds();
  if (ahi.x < blo.x || bhi.x < alo.x || ahi.y < blo.y || bhi.y < alo.y) return false;
  for (const auto& p : arrangement_samples({a, b})) {
    if (a.contains(p) && b.contains(p)) return true;
  }
  return false;
}

}  // namespace lattice_equi
