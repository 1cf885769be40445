#pragma once

#include <string>
#include <vector>

#include "lattice_equi/geometry.hpp"
#include "lattice_equi/lattice_counting.hpp"
#include "lattice_equi/weights.hpp"

namespace lattice_equi {

/// "t^2/50 + 3t/50 - 2/25"
std::string format_polynomial(const QuadraticPolynomial& q, const std::string& var = "t");
/// "(t+1)^2" when q is the square of a linear polynomial with integer
/// coefficients, otherwise empty.
std::string format_square(const QuadraticPolynomial& q, const std::string& var = "t");

/// One line per constituent: "  <poly>    if t = r mod d", residues 1..d.
std::string format_quasipolynomial(const QuasiPolynomial& q);
/// Case layout with \frac coefficients, variable x, residues 1..d.
std::string format_quasipolynomial_latex(const QuasiPolynomial& q);

/// "W_5 = {1, 1, -1} (mod 5)"
std::string format_weight(const WeightMultiset& w);
/// "SW_5 = (0,-1,0,1,0)"
std::string format_vector(const std::string& name, const WeightVector& v);

/// Minimal SVG canvas in a fixed world box; y grows upward.
class SvgCanvas {
 public:
  SvgCanvas(Point lo, Point hi, int pixels = 480);
  void polygon(const std::vector<Point>& pts, const std::string& fill, const std::string& stroke);
  void segment(const Point& a, const Point& b, const std::string& stroke);
  void dot(const Point& p, const std::string& fill);
  void label(const Point& p, const std::string& text);
  std::string str() const;

 private:
  std::string xy(const Point& p) const;
  Point lo_;
  Point hi_;
  int pixels_;
  std::string body_;
};

}  // namespace lattice_equi
