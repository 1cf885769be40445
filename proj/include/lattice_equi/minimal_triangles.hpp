#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "lattice_equi/geometry.hpp"

namespace lattice_equi {

using TriangleVertices = std::array<Point, 3>;

/// True iff the closed triangle meets L_d = (1/d)Z × (1/d)Z exactly in its
/// three vertices. Decided by exhaustive enumeration of L_d in the bounding
/// box; a degenerate (collinear) triangle is never minimal.
/// Throws InputError if a vertex is not in L_d. Asserts the area law
/// (area 1/(2d²)) on every positive answer.
bool is_d_minimal(const TriangleVertices& t, const Integer& d);

/// Closed segment meets L_d only in its endpoints (both endpoints in L_d).
bool is_d_minimal_segment(const Point& p, const Point& q, const Integer& d);

/// A d-minimal triangle with vertices stored counterclockwise.
class MinimalTriangle {
 public:
  /// Throws InputError if the triangle is not d-minimal.
  MinimalTriangle(TriangleVertices vertices, Integer d);

  const TriangleVertices& vertices() const { return vertices_; }
  const Point& operator[](std::size_t i) const { return vertices_[i]; }
  const Integer& d() const { return d_; }

 private:
  TriangleVertices vertices_;
  Integer d_;
};

/// Same vertex set (order-insensitive).
bool same_triangle(const TriangleVertices& a, const TriangleVertices& b);
MinimalTriangle apply(const GMap& g, const MinimalTriangle& t);

/// T1 + offset where T1 = Conv((0,0), (1/d,0), (0,1/d)); vertices in the
/// order offset, offset+(1/d,0), offset+(0,1/d).
MinimalTriangle translate_of_t1(const Integer& d, const Point& offset);

struct StandardFormWitness {
  GMap g;
  /// g(T) = T1 + offset, offset ∈ L_d ∩ [0,1)².
  Point offset;
};

/// Sends the lexicographically smallest vertex to the origin, changes basis
/// so the two edge vectors from it become (1/d,0), (0,1/d), then reduces the
/// translation mod Z².
StandardFormWitness standard_form(const MinimalTriangle& t);

/// The six linear parts that can carry one translate of T1 to another
/// (modulo integer translation), in the order
/// I, [[0,1],[1,0]], [[0,1],[-1,-1]], [[-1,-1],[1,0]], [[1,0],[-1,-1]], [[-1,-1],[0,1]].
const std::array<UnimodularMatrix, 6>& dihedral_set();
bool in_dihedral_set(const UnimodularMatrix& m);

struct TranslateImage {
  Point offset;  ///< image is T1 + offset, offset ∈ [0,1)²
  GMap g;        ///< linear part m plus the normalizing integer translation
};

/// Action of m ∈ D on the translate T1 + offset in the quotient by Z².
/// Throws InputError if m is not in D.
TranslateImage dihedral_act(const UnimodularMatrix& m, const Point& offset, const Integer& d);

/// The d² translates T1 + (i/d, j/d), 0 <= i, j < d, ordered by (j, i); each
/// is verified d-minimal.
std::vector<MinimalTriangle> enumerate_minimal_translates(const Integer& d);

/// Partition of enumerate_minimal_translates(d) (by index) into orbits of the
/// dihedral action. Each orbit is sorted; orbits are ordered by first index.
std::vector<std::vector<std::size_t>> dihedral_orbits(const Integer& d);

/// Offsets of the translates sitting in the three corners of the half square
/// Conv((0,0),(1,0),(0,1)) reduced mod Z²: at (0,0), (1,0) and (0,1).
std::array<Point, 3> corner_offsets(const Integer& d);

/// If W(s) = W(t), an explicit g with g(s) = t (vertex sets). Throws
/// InputError if the denominators differ.
std::optional<GMap> g_orbit_equivalent(const MinimalTriangle& s, const MinimalTriangle& t);

/// Triangulation of a polygon into open d-minimal triangles, open d-minimal
/// edges and vertices, with facet/edge adjacency.
struct Triangulation {
  struct Edge {
    std::size_t a;
    std::size_t b;
    std::vector<std::size_t> facets;  ///< one for boundary edges, two otherwise
  };
  struct Facet {
    std::array<std::size_t, 3> vertices;  ///< counterclockwise
    std::array<std::size_t, 3> edges;     ///< edges[k] joins vertices[k] and vertices[k+1]
  };

  Integer d;
  std::vector<Point> vertices;
  std::vector<Edge> edges;
  std::vector<Facet> facets;

  bool is_boundary(std::size_t edge) const { return edges[edge].facets.size() == 1; }
  TriangleVertices facet_points(std::size_t f) const;
  /// Open facets, then open edges, then vertices.
  DeltaComplex cells() const;
};

/// Ear-clips p into triangles with vertices in L_d, then splits any triangle
/// whose closure holds an extra L_d point by fanning from that point (an
/// interior point gives three children, an edge point two) until every facet
/// is d-minimal. With seed == 0 the lexicographically smallest extra point is
/// chosen; other seeds pick pseudo-randomly, giving different valid results.
/// Throws InputError unless d is a multiple of the polygon denominator.
Triangulation minimal_triangulation(const Polygon& p, const Integer& d, std::uint64_t seed = 0);

}  // namespace lattice_equi
