#include "lattice_equi/lattice_counting.hpp"

#include <set>
#include <utility>

namespace lattice_equi {

namespace {

using IntPoint = std::pair<Integer, Integer>;

template <typename Pred>
void scan_box(const Point& lo, const Point& hi, Pred&& visit) {
  const Integer x0 = ceil_of(lo.x);
  const Integer x1 = floor_of(hi.x);
  const Integer y0 = ceil_of(lo.y);
  const Integer y1 = floor_of(hi.y);
  for (Integer y = y0; y <= y1; ++y) {
    for (Integer x = x0; x <= x1; ++x) visit(x, y);
  }
}

void collect(const OpenCell& cell, const Rational& scale, std::set<IntPoint>& out) {
  const OpenCell s = scaled(cell, scale);
  if (s.kind() == CellKind::Vertex) {
    const Point& p = s.points()[0];
    if (p.x.get_den() == 1 && p.y.get_den() == 1) out.emplace(p.x.get_num(), p.y.get_num());
    return;
  }
  auto [lo, hi] = s.bounds();
  scan_box(lo, hi, [&](const Integer& x, const Integer& y) {
    if (s.contains(Point{Rational(x), Rational(y)})) out.emplace(x, y);
  });
}

Integer count_polygon(const Polygon& p, std::int64_t t) {
  const Polygon s = scaled(p, Rational(t));
  Point lo = s[0];
  Point hi = s[0];
  for (const auto& v : s.vertices()) {
    lo.x = std::min(lo.x, v.x);
    lo.y = std::min(lo.y, v.y);
    hi.x = std::max(hi.x, v.x);
    hi.y = std::max(hi.y, v.y);
  }
  Integer n = 0;
  scan_box(lo, hi, [&](const Integer& x, const Integer& y) {
    if (s.contains(Point{Rational(x), Rational(y)})) ++n;
  });
  return n;
}

Integer count_complex(const DeltaComplex& c, std::int64_t t) {
  std::set<IntPoint> pts;
  const Rational scale(t);
  for (const auto& cell : c.cells) collect(cell, scale, pts);
  return Integer(static_cast<unsigned long>(pts.size()));
}

}  // namespace

std::vector<std::pair<Integer, Integer>> integer_points(const DeltaComplex& complex, const Rational& scale) {
  std::set<IntPoint> pts;
  for (const auto& cell : complex.cells) collect(cell, scale, pts);
  return {pts.begin(), pts.end()};
}

Integer count_lattice_points(const Region& region, std::int64_t t) {
  if (t < 1) throw InputError("dilation factor must be positive");
  return std::visit(
      [t](const auto& r) -> Integer {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, Polygon>) {
          return count_polygon(r, t);
        } else {
          return count_complex(r, t);
        }
      },
      region);
}

std::vector<Integer> count_table(const Region& region, std::int64_t horizon) {
  std::vector<Integer> out;
  out.reserve(static_cast<std::size_t>(std::max<std::int64_t>(horizon, 0)));
  for (std::int64_t t = 1; t <= horizon; ++t) out.push_back(count_lattice_points(region, t));
  return out;
}

Rational evaluate(const QuadraticPolynomial& q, const Rational& t) { return q[0] + q[1] * t + q[2] * t * t; }

QuasiPolynomial::QuasiPolynomial(std::int64_t period, std::vector<QuadraticPolynomial> constituents)
    : period_(period), constituents_(std::move(constituents)) {
  if (period_ < 1) throw InputError("quasi-polynomial period must be positive");
  if (constituents_.size() != static_cast<std::size_t>(period_)) {
    throw InputError("quasi-polynomial needs exactly one constituent per residue");
  }
}

const QuadraticPolynomial& QuasiPolynomial::constituent(std::int64_t residue) const {
  const std::int64_t r = ((residue - 1) % period_ + period_) % period_;
  return constituents_[static_cast<std::size_t>(r)];
}

Rational QuasiPolynomial::operator()(std::int64_t t) const { return evaluate(constituent(t), Rational(t)); }

QuasiPolynomial interpolate_quasipolynomial(const Region& region, std::int64_t period) {
  if (period < 1) throw InputError("period must be positive");
  std::vector<QuadraticPolynomial> parts;
  parts.reserve(static_cast<std::size_t>(period));
  const Rational d(period);
  for (std::int64_t r = 1; r <= period; ++r) {
    const Rational t0(r);
    const Rational y0(count_lattice_points(region, r));
    const Rational y1(count_lattice_points(region, r + period));
    const Rational y2(count_lattice_points(region, r + 2 * period));
    // Newton form on the equally spaced nodes t0, t0+d, t0+2d
    const Rational c2 = (y2 - 2 * y1 + y0) / (2 * d * d);
    const Rational c1 = (y1 - y0) / d - c2 * (2 * t0 + d);
    const Rational c0 = y0 - c1 * t0 - c2 * t0 * t0;
    QuadraticPolynomial q{c0, c1, c2};
    for (std::int64_t k = 3; k <= 4; ++k) {
      const std::int64_t t = r + k * period;
      if (evaluate(q, Rational(t)) != Rational(count_lattice_points(region, t))) {
        throw InterpolationError("counts at t=" + std::to_string(t) + " do not fit a degree-2 constituent of period " +
                                 std::to_string(period));
      }
    }
    parts.push_back(std::move(q));
  }
  return QuasiPolynomial(period, std::move(parts));
}

std::int64_t minimal_period(const QuasiPolynomial& q) {
  const std::int64_t d = q.period();
  for (std::int64_t k = 1; k < d; ++k) {
    if (d % k != 0) continue;
    bool ok = true;
    for (std::int64_t r = 1; r <= d && ok; ++r) ok = q.constituent(r) == q.constituent(r + k);
    if (ok) return k;
  }
  return d;
}

bool ehrhart_equal(const Region& a, const Region& b, std::int64_t horizon) {
  for (std::int64_t t = 1; t <= horizon; ++t) {
    if (count_lattice_points(a, t) != count_lattice_points(b, t)) return false;
  }
  return true;
}

std::int64_t certifying_horizon(const Integer& d1, const Integer& d2) { return 3 * to_int64(lcm(d1, d2)) + 2; }

Integer region_denominator(const Region& region) {
  return std::visit(
      [](const auto& r) -> Integer {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, Polygon>) {
          return polygon_denominator(r);
        } else {
          Integer d = 1;
          for (const auto& c : r.cells)
            for (const auto& p : c.points()) d = lcm(d, denominator(p));
          return d;
        }
      },
      region);
}

}  // namespace lattice_equi
