#include "lattice_equi/format.hpp"

#include <algorithm>
#include <cstdio>

namespace lattice_equi {

namespace {

struct Term {
  bool negative;
  std::string body;
};

std::string xml_escape(const std::string& text) {
  std::string out;
  for (char ch : text) {
    switch (ch) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

Term term(const Rational& c, const std::string& monomial, bool latex) {
  const Integer num = abs(c.get_num());
  const Integer& den = c.get_den();
  std::string top = (num == 1 && !monomial.empty()) ? monomial : to_string(num) + monomial;
  std::string body;
  if (den == 1) {
    body = top;
  } else if (latex) {
    body = "\\frac{" + top + "}{" + to_string(den) + "}";
  } else {
    body = top + "/" + to_string(den);
  }
  return {c < 0, body};
}

std::string join(const QuadraticPolynomial& q, const std::string& var, bool latex) {
  const std::string monomials[3] = {"", var, var + "^2"};
  std::string out;
  for (int k = 2; k >= 0; --k) {
    if (q[k] == 0) continue;
    const Term t = term(q[k], monomials[k], latex);
    if (out.empty()) {
      out = (t.negative ? "-" : "") + t.body;
    } else if (latex) {
      out += (t.negative ? "-" : "+") + t.body;
    } else {
      out += (t.negative ? " - " : " + ") + t.body;
    }
  }
  return out.empty() ? "0" : out;
}

std::string fmt_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace

std::string format_polynomial(const QuadraticPolynomial& q, const std::string& var) { return join(q, var, false); }

std::string format_square(const QuadraticPolynomial& q, const std::string& var) {
  // q = (a t + b)^2 with integers a > 0, b
  if (q[2] <= 0 || q[2].get_den() != 1 || q[1].get_den() != 1 || q[0].get_den() != 1) return {};
  const Integer c2 = q[2].get_num();
  Integer a = sqrt(c2);
  if (a * a != c2) return {};
  const Rational b = q[1] / (2 * Rational(a));
  if (b.get_den() != 1 || b * b != q[0]) return {};
  std::string inner = (a == 1 ? "" : to_string(a)) + var;
  if (b > 0) inner += "+" + to_string(b);
  if (b < 0) inner += to_string(b);
  return b == 0 ? inner + "^2" : "(" + inner + ")^2";
}

std::string format_quasipolynomial(const QuasiPolynomial& q) {
  std::vector<std::string> bodies;
  std::size_t width = 0;
  for (const auto& c : q.constituents()) {
    bodies.push_back(format_polynomial(c));
    width = std::max(width, bodies.back().size());
  }
  std::string out;
  const std::string d = std::to_string(q.period());
  for (std::size_t r = 0; r < bodies.size(); ++r) {
    out += "  " + bodies[r] + std::string(width - bodies[r].size(), ' ') + "  if t = " + std::to_string(r + 1) +
           " mod " + d + "\n";
  }
  return out;
}

std::string format_quasipolynomial_latex(const QuasiPolynomial& q) {
  std::string out = "\\left\\{\n  \\begin{array}{lr}\n";
  const std::string d = std::to_string(q.period());
  for (std::size_t r = 0; r < q.constituents().size(); ++r) {
    out += "    " + join(q.constituents()[r], "x", true) + " & : t \\equiv " + std::to_string(r + 1) + " \\mod " + d +
           " \\\\\n";
  }
  return out + "  \\end{array}\n\\right.\n";
}

std::string format_weight(const WeightMultiset& w) {
  const std::string d = std::to_string(w.modulus());
  return "W_" + d + " = " + to_string(w) + " (mod " + d + ")";
}

std::string format_vector(const std::string& name, const WeightVector& v) {
  return name + "_" + std::to_string(v.modulus()) + " = " + to_string(v);
}

SvgCanvas::SvgCanvas(Point lo, Point hi, int pixels) : lo_(std::move(lo)), hi_(std::move(hi)), pixels_(pixels) {
  if (hi_.x <= lo_.x || hi_.y <= lo_.y) throw InputError("empty SVG viewport");
}

std::string SvgCanvas::xy(const Point& p) const {
  const Rational sx = (p.x - lo_.x) / (hi_.x - lo_.x) * pixels_;
  const Rational sy = (hi_.y - p.y) / (hi_.y - lo_.y) * pixels_;
  return fmt_double(sx.get_d()) + "," + fmt_double(sy.get_d());
}

void SvgCanvas::polygon(const std::vector<Point>& pts, const std::string& fill, const std::string& stroke) {
  std::string s = "  <polygon points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) s += (i ? " " : "") + xy(pts[i]);
  body_ += s + "\" fill=\"" + fill + "\" stroke=\"" + stroke + "\" stroke-width=\"1\"/>\n";
}

void SvgCanvas::segment(const Point& a, const Point& b, const std::string& stroke) {
  const std::string pa = xy(a);
  const std::string pb = xy(b);
  const auto ca = pa.find(',');
  const auto cb = pb.find(',');
  body_ += "  <line x1=\"" + pa.substr(0, ca) + "\" y1=\"" + pa.substr(ca + 1) + "\" x2=\"" + pb.substr(0, cb) +
           "\" y2=\"" + pb.substr(cb + 1) + "\" stroke=\"" + stroke + "\" stroke-width=\"2\"/>\n";
}

void SvgCanvas::dot(const Point& p, const std::string& fill) {
  const std::string q = xy(p);
  const auto c = q.find(',');
  body_ += "  <circle cx=\"" + q.substr(0, c) + "\" cy=\"" + q.substr(c + 1) + "\" r=\"3\" fill=\"" + fill + "\"/>\n";
}

void SvgCanvas::label(const Point& p, const std::string& text) {
  const std::string q = xy(p);
  const auto c = q.find(',');
  body_ += "  <text x=\"" + q.substr(0, c) + "\" y=\"" + q.substr(c + 1) +
           "\" font-size=\"10\" text-anchor=\"middle\">" + xml_escape(text) + "</text>\n";
}

std::string SvgCanvas::str() const {
  const std::string n = std::to_string(pixels_);
  return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + n + "\" height=\"" + n + "\" viewBox=\"0 0 " + n +
         " " + n + "\">\n" + body_ + "</svg>\n";
}

}  // namespace lattice_equi
