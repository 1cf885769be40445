#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "lattice_equi/geometry.hpp"
#include "lattice_equi/minimal_triangles.hpp"

namespace lattice_equi {

/// Residue class mod d, stored in [0, d).
struct Residue {
  std::int64_t value;
  std::int64_t modulus;

  /// Representative in (-d/2, d/2].
  std::int64_t centered() const;
  friend bool operator==(const Residue&, const Residue&) = default;
};

Residue make_residue(const Integer& value, std::int64_t modulus);

/// Canonical representative of the class {i, -i}: min(i, d - i).
std::int64_t pm_class(std::int64_t residue, std::int64_t modulus);

class WeightMultiset {
 public:
  explicit WeightMultiset(std::int64_t modulus);

  std::int64_t modulus() const { return modulus_; }
  void add(std::int64_t residue, std::int64_t count = 1);
  void add(const Residue& r) { add(r.value, 1); }
  std::int64_t count(std::int64_t residue) const;
  /// Indexed by residue in [0, d).
  const std::vector<std::int64_t>& counts() const { return counts_; }
  std::int64_t size() const;
  /// Elements as centered values, larger magnitude first, positive before negative.
  std::vector<std::int64_t> centered_elements() const;

  friend bool operator==(const WeightMultiset&, const WeightMultiset&) = default;

 private:
  std::int64_t modulus_;
  std::vector<std::int64_t> counts_;
};

/// "{1, 1, -1}"
std::string to_string(const WeightMultiset& w);

/// Integer vector indexed by residues mod d.
class WeightVector {
 public:
  explicit WeightVector(std::int64_t modulus);
  WeightVector(std::int64_t modulus, std::vector<std::int64_t> entries);

  std::int64_t modulus() const { return modulus_; }
  /// Entry for any integer index, taken mod d.
  std::int64_t operator[](std::int64_t residue) const;
  std::int64_t& at(std::int64_t residue);
  const std::vector<std::int64_t>& entries() const { return entries_; }
  /// Entries for indices -floor(d/2) .. ceil(d/2)-1.
  std::vector<std::int64_t> centered_entries() const;

  friend bool operator==(const WeightVector&, const WeightVector&) = default;

 private:
  std::int64_t modulus_;
  std::vector<std::int64_t> entries_;
};

/// "(0,-1,0,1,0)"
std::string to_string(const WeightVector& v);

struct OrientedEdge {
  Point from;
  Point to;
  Integer d;
};

/// det[[w, y], [x, z]] mod d for from = (w/d, x/d), to = (y/d, z/d).
/// Throws InputError unless the edge is d-minimal with endpoints in L_d.
Residue edge_weight(const OrientedEdge& e);

/// Number of L_d lines parallel to e strictly between the origin and the line
/// through e, plus one; the absolute integer determinant of the endpoints.
Integer lattice_distance(const OrientedEdge& e);

/// Weights of the edges v0->v1, v1->v2, v2->v0 (counterclockwise).
std::array<Residue, 3> ordered_edge_weights(const MinimalTriangle& t);
WeightMultiset triangle_weight(const MinimalTriangle& t);

/// The boundary split at every L_d point into oriented d-minimal segments,
/// following the counterclockwise traversal. Throws InputError unless the
/// polygon denominator divides d.
std::vector<OrientedEdge> boundary_segments(const Polygon& p, const Integer& d);

WeightMultiset polygon_weight(const Polygon& p, const Integer& d);
WeightVector signed_weight(const WeightMultiset& w);
WeightVector unsigned_weight(const WeightMultiset& w);
WeightVector signed_weight(const Polygon& p, const Integer& d);
WeightVector unsigned_weight(const Polygon& p, const Integer& d);

/// n_i = (sw_i + uw_i) / 2. Throws InputError on mismatched moduli, odd sums
/// or negative counts.
WeightMultiset weight_from_sw_uw(const WeightVector& sw, const WeightVector& uw);

/// Recovers the weight at d from the weight at a multiple d' = n·d. Throws
/// InputError unless every present residue and every count is divisible by n.
WeightMultiset reconstruct_weight(const WeightMultiset& w, std::int64_t d);

enum class Verdict { DistinctWeights, WeightsAgree };
std::string to_string(Verdict v);

struct ObstructionReport {
  Verdict verdict;
  Integer modulus;
  WeightMultiset left;
  WeightMultiset right;
};

/// Compares the weights of p and q at the lcm of their denominators.
/// DistinctWeights rules out any finite rational relation; WeightsAgree is
/// inconclusive.
ObstructionReport obstruction_verdict(const Polygon& p, const Polygon& q);

/// Compares the unordered classes {w, -w} of two edge weights. Throws
/// InputError if the moduli differ.
Verdict edge_obstruction_check(const OrientedEdge& left, const OrientedEdge& right);

/// Facet and edge counts of a triangulation restricted to one ±i class.
struct PmCensus {
  std::int64_t total_edges = 0;
  std::int64_t boundary_edges = 0;
  /// facets_with[n] = number of facets with exactly n edges in the class.
  std::array<std::int64_t, 4> facets_with{};
};

/// Weight of triangulation edge `edge`, oriented from edges[edge].a to .b.
Residue triangulation_edge_weight(const Triangulation& t, std::size_t edge);
PmCensus pm_census(const Triangulation& t, std::int64_t residue);
/// Componentwise sum of SW over all facets.
WeightVector facet_signed_weight_sum(const Triangulation& t);

}  // namespace lattice_equi
