#include "lattice_equi/weights.hpp"

#include <algorithm>
#include <cstdlib>

namespace lattice_equi {

namespace {

std::int64_t mod_i64(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

std::pair<Integer, Integer> integerize(const Point& p, const Integer& d) {
  const Rational x = p.x * d;
  const Rational y = p.y * d;
  if (x.get_den() != 1 || y.get_den() != 1) throw InputError("point " + to_string(p) + " is not in L_" + to_string(d));
  return {x.get_num(), y.get_num()};
}

Integer endpoint_det(const OrientedEdge& e) {
  const auto [w, x] = integerize(e.from, e.d);
  const auto [y, z] = integerize(e.to, e.d);
  return w * z - y * x;
}

void require_minimal(const OrientedEdge& e) {
  if (e.d < 1) throw InputError("denominator must be positive");
  if (!is_d_minimal_segment(e.from, e.to, e.d)) {
    throw InputError("segment " + to_string(e.from) + " -> " + to_string(e.to) + " is not " + to_string(e.d) +
                     "-minimal");
  }
}

}  // namespace

std::int64_t Residue::centered() const { return 2 * value > modulus ? value - modulus : value; }

Residue make_residue(const Integer& value, std::int64_t modulus) {
  return {to_int64(mod_floor(value, Integer(static_cast<long>(modulus)))), modulus};
}

std::int64_t pm_class(std::int64_t residue, std::int64_t modulus) {
  const std::int64_t r = mod_i64(residue, modulus);
  return std::min(r, mod_i64(-r, modulus));
}

WeightMultiset::WeightMultiset(std::int64_t modulus) : modulus_(modulus) {
  if (modulus < 1) throw InputError("modulus must be positive");
  counts_.assign(static_cast<std::size_t>(modulus), 0);
}

void WeightMultiset::add(std::int64_t residue, std::int64_t count) {
  counts_[static_cast<std::size_t>(mod_i64(residue, modulus_))] += count;
}

std::int64_t WeightMultiset::count(std::int64_t residue) const {
  return counts_[static_cast<std::size_t>(mod_i64(residue, modulus_))];
}

std::int64_t WeightMultiset::size() const {
  std::int64_t n = 0;
  for (auto c : counts_) n += c;
  return n;
}

std::vector<std::int64_t> WeightMultiset::centered_elements() const {
  std::vector<std::int64_t> out;
  for (std::int64_t r = 0; r < modulus_; ++r) {
    const std::int64_t c = Residue{r, modulus_}.centered();
    for (std::int64_t k = 0; k < counts_[static_cast<std::size_t>(r)]; ++k) out.push_back(c);
  }
  std::sort(out.begin(), out.end(), [](std::int64_t a, std::int64_t b) {
    if (std::llabs(a) != std::llabs(b)) return std::llabs(a) > std::llabs(b);
    return a > b;
  });
  return out;
}

std::string to_string(const WeightMultiset& w) {
  std::string s = "{";
  bool first = true;
  for (auto v : w.centered_elements()) {
    if (!first) s += ", ";
    s += std::to_string(v);
    first = false;
  }
  return s + "}";
}

WeightVector::WeightVector(std::int64_t modulus) : modulus_(modulus) {
  if (modulus < 1) throw InputError("modulus must be positive");
  entries_.assign(static_cast<std::size_t>(modulus), 0);
}

WeightVector::WeightVector(std::int64_t modulus, std::vector<std::int64_t> entries)
    : modulus_(modulus), entries_(std::move(entries)) {
  if (modulus < 1) throw InputError("modulus must be positive");
  if (entries_.size() != static_cast<std::size_t>(modulus)) throw InputError("weight vector length must equal modulus");
}

std::int64_t WeightVector::operator[](std::int64_t residue) const {
  return entries_[static_cast<std::size_t>(mod_i64(residue, modulus_))];
}

std::int64_t& WeightVector::at(std::int64_t residue) {
  return entries_[static_cast<std::size_t>(mod_i64(residue, modulus_))];
}

std::vector<std::int64_t> WeightVector::centered_entries() const {
  std::vector<std::int64_t> out;
  const std::int64_t lo = -(modulus_ / 2);
  for (std::int64_t i = lo; i < lo + modulus_; ++i) out.push_back((*this)[i]);
  return out;
}

std::string to_string(const WeightVector& v) {
  std::string s = "(";
  bool first = true;
  for (auto e : v.centered_entries()) {
    if (!first) s += ",";
    s += std::to_string(e);
    first = false;
  }
  return s + ")";
}

Residue edge_weight(const OrientedEdge& e) {
  require_minimal(e);
  return make_residue(endpoint_det(e), to_int64(e.d));
}

Integer lattice_distance(const OrientedEdge& e) {
  require_minimal(e);
  return abs(endpoint_det(e));
}

std::array<Residue, 3> ordered_edge_weights(const MinimalTriangle& t) {
  return {edge_weight({t[0], t[1], t.d()}), edge_weight({t[1], t[2], t.d()}), edge_weight({t[2], t[0], t.d()})};
}

WeightMultiset triangle_weight(const MinimalTriangle& t) {
  WeightMultiset w(to_int64(t.d()));
  for (const auto& r : ordered_edge_weights(t)) w.add(r);
  return w;
}

std::vector<OrientedEdge> boundary_segments(const Polygon& p, const Integer& d) {
  if (d < 1) throw InputError("modulus must be positive");
  const Integer den = polygon_denominator(p);
  if (d % den != 0) {
    throw InputError("modulus " + to_string(d) + " is not a multiple of the polygon denominator " + to_string(den));
  }
  std::vector<OrientedEdge> out;
  const std::size_t n = p.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = p[i];
    const Point& b = p[(i + 1) % n];
    const auto ia = integerize(a, d);
    const auto ib = integerize(b, d);
    const Integer steps = gcd(Integer(ib.first - ia.first), Integer(ib.second - ia.second));
    const Point delta = Rational(1) / Rational(steps) * (b - a);
    Point cur = a;
    for (Integer k = 0; k < steps; ++k) {
      Point next = k + 1 == steps ? b : cur + delta;
      out.push_back({cur, next, d});
      cur = next;
    }
  }
  return out;
}

WeightMultiset polygon_weight(const Polygon& p, const Integer& d) {
  const auto segs = boundary_segments(p, d);
  WeightMultiset w(to_int64(d));
  for (const auto& e : segs) w.add(edge_weight(e));
  return w;
}

WeightVector signed_weight(const WeightMultiset& w) {
  const std::int64_t d = w.modulus();
  WeightVector v(d);
  for (std::int64_t i = 0; i < d; ++i) v.at(i) = w.count(i) - w.count(-i);
  return v;
}

WeightVector unsigned_weight(const WeightMultiset& w) {
  const std::int64_t d = w.modulus();
  WeightVector v(d);
  for (std::int64_t i = 0; i < d; ++i) v.at(i) = w.count(i) + w.count(-i);
  return v;
}

WeightVector signed_weight(const Polygon& p, const Integer& d) { return signed_weight(polygon_weight(p, d)); }
WeightVector unsigned_weight(const Polygon& p, const Integer& d) { return unsigned_weight(polygon_weight(p, d)); }

WeightMultiset weight_from_sw_uw(const WeightVector& sw, const WeightVector& uw) {
  if (sw.modulus() != uw.modulus()) throw InputError("signed and unsigned weights have different moduli");
  const std::int64_t d = sw.modulus();
  WeightMultiset w(d);
  for (std::int64_t i = 0; i < d; ++i) {
    const std::int64_t s = sw[i] + uw[i];
    if (s % 2 != 0) throw InputError("SW + UW is odd at residue " + std::to_string(i));
    if (s < 0) throw InputError("SW + UW is negative at residue " + std::to_string(i));
    w.add(i, s / 2);
  }
  return w;
}

WeightMultiset reconstruct_weight(const WeightMultiset& w, std::int64_t d) {
  if (d < 1) throw InputError("modulus must be positive");
  const std::int64_t big = w.modulus();
  if (big % d != 0) throw InputError(std::to_string(d) + " does not divide " + std::to_string(big));
  const std::int64_t n = big / d;
  WeightMultiset out(d);
  for (std::int64_t r = 0; r < big; ++r) {
    const std::int64_t c = w.count(r);
    if (c == 0) continue;
    if (r % n != 0) throw InputError("residue " + std::to_string(r) + " is not divisible by " + std::to_string(n));
    if (c % n != 0) {
      throw InputError("multiplicity of residue " + std::to_string(r) + " is not divisible by " + std::to_string(n));
    }
    out.add(r / n, c / n);
  }
  return out;
}

std::string to_string(Verdict v) { return v == Verdict::DistinctWeights ? "DistinctWeights" : "WeightsAgree"; }

ObstructionReport obstruction_verdict(const Polygon& p, const Polygon& q) {
  const Integer m = lcm(polygon_denominator(p), polygon_denominator(q));
  WeightMultiset left = polygon_weight(p, m);
  WeightMultiset right = polygon_weight(q, m);
  const Verdict v = left == right ? Verdict::WeightsAgree : Verdict::DistinctWeights;
  return {v, m, std::move(left), std::move(right)};
}

Verdict edge_obstruction_check(const OrientedEdge& left, const OrientedEdge& right) {
  if (left.d != right.d) throw InputError("edges have different moduli");
  const Residue a = edge_weight(left);
  const Residue b = edge_weight(right);
  return pm_class(a.value, a.modulus) == pm_class(b.value, b.modulus) ? Verdict::WeightsAgree
                                                                      : Verdict::DistinctWeights;
}

Residue triangulation_edge_weight(const Triangulation& t, std::size_t edge) {
  const auto& e = t.edges[edge];
  return edge_weight({t.vertices[e.a], t.vertices[e.b], t.d});
}

PmCensus pm_census(const Triangulation& t, std::int64_t residue) {
  const std::int64_t d = to_int64(t.d);
  const std::int64_t cls = pm_class(residue, d);
  std::vector<bool> in_class(t.edges.size());
  PmCensus c;
  for (std::size_t e = 0; e < t.edges.size(); ++e) {
    in_class[e] = pm_class(triangulation_edge_weight(t, e).value, d) == cls;
    if (!in_class[e]) continue;
    ++c.total_edges;
    if (t.is_boundary(e)) ++c.boundary_edges;
  }
  for (const auto& f : t.facets) {
    int n = 0;
    for (auto e : f.edges) n += in_class[e] ? 1 : 0;
    ++c.facets_with[static_cast<std::size_t>(n)];
  }
  return c;
}

WeightVector facet_signed_weight_sum(const Triangulation& t) {
  const std::int64_t d = to_int64(t.d);
  WeightVector sum(d);
  for (std::size_t f = 0; f < t.facets.size(); ++f) {
    const auto sw = signed_weight(triangle_weight(MinimalTriangle(t.facet_points(f), t.d)));
    for (std::int64_t i = 0; i < d; ++i) sum.at(i) += sw[i];
  }
  return sum;
}

}  // namespace lattice_equi
