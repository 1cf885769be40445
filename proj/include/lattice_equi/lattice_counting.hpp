#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "lattice_equi/geometry.hpp"

namespace lattice_equi {

/// Bounded region whose dilates can be counted: a closed polygon or a
/// finite union of open cells.
using Region = std::variant<Polygon, DeltaComplex>;

/// |tS ∩ Z²| by enumerating the integer points of the bounding box of tS.
/// Throws InputError for t < 1.
Integer count_lattice_points(const Region& region, std::int64_t t);

/// Integer points of the dilate scale·S, sorted lexicographically.
std::vector<std::pair<Integer, Integer>> integer_points(const DeltaComplex& complex, const Rational& scale);

/// Counts for t = 1..horizon; entry [t-1] holds the count at t.
std::vector<Integer> count_table(const Region& region, std::int64_t horizon);

/// Coefficients (c0, c1, c2) of c0 + c1 t + c2 t².
using QuadraticPolynomial = std::array<Rational, 3>;

Rational evaluate(const QuadraticPolynomial& q, const Rational& t);

/// Quasi-polynomial of degree <= 2. Constituent k (0-based) applies when
/// t ≡ k+1 (mod period), so the last constituent covers multiples of the period.
class QuasiPolynomial {
 public:
  QuasiPolynomial(std::int64_t period, std::vector<QuadraticPolynomial> constituents);

  std::int64_t period() const { return period_; }
  const std::vector<QuadraticPolynomial>& constituents() const { return constituents_; }
  /// Constituent for residue r in 1..period.
  const QuadraticPolynomial& constituent(std::int64_t residue) const;
  Rational operator()(std::int64_t t) const;

  friend bool operator==(const QuasiPolynomial&, const QuasiPolynomial&) = default;

 private:
  std::int64_t period_;
  std::vector<QuadraticPolynomial> constituents_;
};

/// The claimed period or degree is inconsistent with the counts.
class InterpolationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Fits each constituent through the counts at t = r, r+d, r+2d and checks
/// the fit against t = r+3d and r+4d.
QuasiPolynomial interpolate_quasipolynomial(const Region& region, std::int64_t period);

/// Smallest k dividing the period with constituent(r) == constituent(r+k) for all r.
std::int64_t minimal_period(const QuasiPolynomial& q);

/// Count tables agree on t = 1..horizon. For two rational polygons a horizon of
/// certifying_horizon(d1, d2) proves equality of the quasi-polynomials; for
/// general Δ-complexes the answer is evidence up to the horizon only.
bool ehrhart_equal(const Region& a, const Region& b, std::int64_t horizon);

/// 3·lcm(d1, d2) + 2.
std::int64_t certifying_horizon(const Integer& d1, const Integer& d2);

/// lcm of all point denominators of the region.
Integer region_denominator(const Region& region);

}  // namespace lattice_equi
