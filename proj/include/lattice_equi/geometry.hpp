#pragma once

#include <array>
#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lattice_equi/rational.hpp"

namespace lattice_equi {

struct Point {
  Rational x;
  Rational y;

  friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
  /// Lexicographic (x, then y).
  friend std::strong_ordering operator<=>(const Point& a, const Point& b) {
    if (int c = cmp(a.x, b.x); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    if (int c = cmp(a.y, b.y); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
};

Point make_point(long xn, long xd, long yn, long yd);
Point operator+(const Point& a, const Point& b);
Point operator-(const Point& a, const Point& b);
Point operator*(const Rational& s, const Point& p);
std::string to_string(const Point& p);

/// lcm of the coordinate denominators.
Integer denominator(const Point& p);
bool in_lattice(const Point& p, const Integer& d);

Rational cross(const Point& a, const Point& b);
Rational dot(const Point& a, const Point& b);
/// Sign of the turn a -> b -> c: +1 left (ccw), -1 right, 0 collinear.
int orientation(const Point& a, const Point& b, const Point& c);
/// p lies on the closed segment [a, b].
bool on_closed_segment(const Point& a, const Point& b, const Point& p);
/// Closed segments [a,b] and [c,d] share at least one point.
bool segments_intersect(const Point& a, const Point& b, const Point& c, const Point& d);

class UnimodularMatrix {
 public:
  /// Throws InputError unless the determinant is +1 or -1.
  UnimodularMatrix(Integer u11, Integer u12, Integer u21, Integer u22);
  static UnimodularMatrix identity();

  const Integer& u11() const { return m_[0]; }
  const Integer& u12() const { return m_[1]; }
  const Integer& u21() const { return m_[2]; }
  const Integer& u22() const { return m_[3]; }
  int det() const { return det_; }

  Point apply(const Point& p) const;
  UnimodularMatrix operator*(const UnimodularMatrix& rhs) const;
  UnimodularMatrix inverse() const;

  friend bool operator==(const UnimodularMatrix&, const UnimodularMatrix&) = default;

 private:
  std::array<Integer, 4> m_;
  int det_;
};

std::string to_string(const UnimodularMatrix& m);

/// Element of the affine unimodular group: x -> U x + v with v integral.
class GMap {
 public:
  GMap() : linear_(UnimodularMatrix::identity()), tx_(0), ty_(0) {}
  GMap(UnimodularMatrix linear, Integer tx, Integer ty)
      : linear_(std::move(linear)), tx_(std::move(tx)), ty_(std::move(ty)) {}
  static GMap identity() { return {}; }
  static GMap translation(Integer tx, Integer ty) {
    return {UnimodularMatrix::identity(), std::move(tx), std::move(ty)};
  }

  const UnimodularMatrix& linear() const { return linear_; }
  const Integer& tx() const { return tx_; }
  const Integer& ty() const { return ty_; }
  int det() const { return linear_.det(); }

  Point apply(const Point& p) const;
  Point operator()(const Point& p) const { return apply(p); }

  friend bool operator==(const GMap&, const GMap&) = default;

 private:
  UnimodularMatrix linear_;
  Integer tx_;
  Integer ty_;
};

/// compose(g1, g2) applies g2 first.
GMap compose(const GMap& g1, const GMap& g2);
GMap inverse(const GMap& g);
std::string to_string(const GMap& g);

/// Shoelace area; positive for counterclockwise order.
Rational signed_area(std::span<const Point> vertices);
/// Reverses the vertex order iff the signed area is negative; rejects zero area.
std::vector<Point> ensure_ccw(std::vector<Point> vertices);

/// Simple polygon with counterclockwise vertex order and no three consecutive
/// collinear vertices (such vertices are merged at construction).
class Polygon {
 public:
  explicit Polygon(std::vector<Point> vertices);

  const std::vector<Point>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  const Point& operator[](std::size_t i) const { return vertices_[i]; }

  Rational area() const;
  /// Closed membership (interior or boundary).
  bool contains(const Point& p) const;
  bool on_boundary(const Point& p) const;

  friend bool operator==(const Polygon&, const Polygon&) = default;

 private:
  std::vector<Point> vertices_;
};

Rational signed_area(const Polygon& p);
Integer polygon_denominator(const Polygon& p);
Polygon apply(const GMap& g, const Polygon& p);
Polygon scaled(const Polygon& p, const Rational& s);

enum class CellKind { Vertex, Segment, Triangle };

/// Relatively open simplex: a point, an open segment or an open triangle.
class OpenCell {
 public:
  static OpenCell vertex(Point p);
  static OpenCell segment(Point a, Point b);
  static OpenCell triangle(Point a, Point b, Point c);

  CellKind kind() const { return kind_; }
  const std::vector<Point>& points() const { return points_; }
  bool contains(const Point& p) const;

  /// Axis-aligned bounding box of the closure: {min, max}.
  std::pair<Point, Point> bounds() const;

  friend bool operator==(const OpenCell&, const OpenCell&) = default;

 private:
  OpenCell(CellKind kind, std::vector<Point> points) : kind_(kind), points_(std::move(points)) {}
  CellKind kind_;
  std::vector<Point> points_;
};

OpenCell apply(const GMap& g, const OpenCell& c);
OpenCell scaled(const OpenCell& c, const Rational& s);
std::string to_string(CellKind k);

/// Finite union of open cells, intended to be pairwise disjoint.
struct DeltaComplex {
  std::vector<OpenCell> cells;

  bool contains(const Point& p) const;
  /// Number of cells containing p (0 or 1 for a valid complex).
  std::size_t multiplicity(const Point& p) const;
};

DeltaComplex apply(const GMap& g, const DeltaComplex& c);

/// Ear-clipping triangulation using only polygon vertices; returns ccw index
/// triples. Deterministic: lowest-index valid ear first.
std::vector<std::array<std::size_t, 3>> ear_clip(const Polygon& p);

/// Decomposition of the closed polygon into open triangles, open edges
/// (boundary and diagonals) and vertices.
DeltaComplex complex_of_polygon(const Polygon& p);

/// The closed polygon with one closed boundary edge (both endpoints and the
/// open segment) removed. Throws InputError if [a, b] is not an edge of p.
DeltaComplex complex_minus_closed_edge(const Polygon& p, const Point& a, const Point& b);

}  // namespace lattice_equi
