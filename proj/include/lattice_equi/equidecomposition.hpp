#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lattice_equi/geometry.hpp"
#include "lattice_equi/minimal_triangles.hpp"
#include "lattice_equi/weights.hpp"

namespace lattice_equi {

struct RelationPiece {
  OpenCell cell;
  GMap map;
};

/// Finite piecewise G-bijection from the union of the domain cells onto the
/// union of the codomain cells.
struct EquiRelation {
  std::vector<RelationPiece> pieces;
  DeltaComplex domain;
  DeltaComplex codomain;
};

struct RelationCheck {
  bool ok = true;
  /// "a" (domain pieces overlap), "b" (images overlap), "c" (unions differ); empty when ok.
  std::string clause;
  std::string diagnostic;
};

/// Checks (a) the pieces are pairwise disjoint, (b) their images are pairwise
/// disjoint and (c) the pieces cover exactly the domain and the images cover
/// exactly the codomain. Exact; the first failure is reported.
RelationCheck verify_relation(const EquiRelation& r);

/// Two-piece relation from Conv((0,0), (1,2/3), (3,0)) onto the integral
/// triangle Conv((0,1), (1,0), (3,0)). The left piece (left of x = 1, plus
/// the part of that line above (1,1/3)) is sheared by (x,y) -> (x, y - x + 1);
/// the rest stays fixed.
EquiRelation mcallister_woods_relation();
Polygon mcallister_woods_triangle();
Polygon mcallister_woods_image();

/// Pair of d-minimal triangles with equal Ehrhart quasi-polynomials and
/// different weights, for a = 1 + t:
/// left  = Conv((a/d, 1/d), (a/d, 0), ((a-1)/d, 1/d)),
/// right = Conv(((a+1)/d, 1/d), ((a+1)/d, 0), (a/d, 1/d)).
struct SimilarNeighborPair {
  Integer d;
  Integer t;
  MinimalTriangle left;
  MinimalTriangle right;
};

/// Throws InputError naming the failed condition: gcd(1+t, d) = 1,
/// gcd(2+t, d) = 1, 3+2t != 0 mod d.
SimilarNeighborPair similar_neighbors(const Integer& d, const Integer& t);
/// All t in [0, d) satisfying the conditions.
std::vector<Integer> valid_neighbor_parameters(const Integer& d);

/// Which closed edge is removed from a neighbor triangle: the hypotenuse or
/// the vertical leg. The two choices are exchanged by (x,y) -> (x+y, y).
enum class DeletedEdge { Hypotenuse, Vertical };
std::string to_string(DeletedEdge e);
DeletedEdge parse_deleted_edge(const std::string& s);

/// Countable relation from left minus one closed edge onto right minus one
/// closed edge. Piece i >= 1 is cut from left by the fan of lines through
/// ((a+1)/d, 0) and the L_d points ((a+1-i)/d, 1/d); its cells are mapped by
/// the shear (x,y) -> (x + i y, y), adjusted by the edge-exchange shear when a
/// vertical leg is deleted.
class InfiniteRelation {
 public:
  InfiniteRelation(SimilarNeighborPair pair, DeletedEdge left, DeletedEdge right);

  const SimilarNeighborPair& pair() const { return pair_; }
  DeletedEdge deleted_left() const { return left_; }
  DeletedEdge deleted_right() const { return right_; }

  /// Cells of piece i (i >= 1) with their maps.
  std::vector<RelationPiece> piece(std::int64_t i) const;
  /// Pieces 1..k flattened.
  std::vector<RelationPiece> pieces(std::int64_t k) const;

  const DeltaComplex& domain() const { return domain_; }
  const DeltaComplex& codomain() const { return codomain_; }

  /// Shear (x,y) -> (x + i y, y).
  static GMap shear(std::int64_t i);

 private:
  SimilarNeighborPair pair_;
  DeletedEdge left_;
  DeletedEdge right_;
  DeltaComplex domain_;
  DeltaComplex codomain_;
};

InfiniteRelation infinite_relation(const SimilarNeighborPair& pair, DeletedEdge left = DeletedEdge::Hypotenuse,
                                   DeletedEdge right = DeletedEdge::Hypotenuse);

struct LatticeBijectionReport {
  bool ok = false;
  std::int64_t pieces_used = 0;
  std::size_t domain_points = 0;
  std::size_t codomain_points = 0;
  std::string diagnostic;
};

/// d·n + d.
std::int64_t default_piece_cap(const InfiniteRelation& r, std::int64_t n);

/// Assigns every point of the domain with coordinates in (1/n)Z to the piece
/// containing it, maps it, and checks the images are distinct and are exactly
/// the codomain points in (1/n)Z. Throws std::runtime_error if some point is
/// unclaimed by pieces 1..cap (cap <= 0 selects default_piece_cap).
LatticeBijectionReport verify_infinite_on_lattice(const InfiniteRelation& r, std::int64_t n, std::int64_t cap = 0);

}  // namespace lattice_equi
