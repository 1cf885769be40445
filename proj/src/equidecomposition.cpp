#include "lattice_equi/equidecomposition.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "lattice_equi/lattice_counting.hpp"
#include "lattice_equi/overlay.hpp"

namespace lattice_equi {

namespace {

std::string describe(const OpenCell& c) {
  std::string s = to_string(c.kind()) + "(";
  for (std::size_t i = 0; i < c.points().size(); ++i) {
    if (i) s += ", ";
    s += to_string(c.points()[i]);
  }
  return s + ")";
}

std::optional<std::pair<std::size_t, std::size_t>> first_overlap(const std::vector<OpenCell>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    for (std::size_t j = i + 1; j < cells.size(); ++j) {
      if (cells_intersect(cells[i], cells[j])) return std::make_pair(i, j);
    }
  }
  return std::nullopt;
}

bool any_contains(const std::vector<OpenCell>& cells, const Point& p) {
  return std::any_of(cells.begin(), cells.end(), [&](const OpenCell& c) { return c.contains(p); });
}

/// A point in exactly one of the two unions, if any.
std::optional<Point> union_difference(const std::vector<OpenCell>& a, const std::vector<OpenCell>& b) {
  std::vector<OpenCell> all = a;
  all.insert(all.end(), b.begin(), b.end());
  for (const auto& p : arrangement_samples(all)) {
    if (any_contains(a, p) != any_contains(b, p)) return p;
  }
  return std::nullopt;
}

Point pt(const Rational& x, const Rational& y) { return {x, y}; }

}  // namespace

RelationCheck verify_relation(const EquiRelation& r) {
  std::vector<OpenCell> sources;
  std::vector<OpenCell> images;
  for (const auto& piece : r.pieces) {
    sources.push_back(piece.cell);
    images.push_back(apply(piece.map, piece.cell));
  }
  if (auto hit = first_overlap(sources)) {
    return {false, "a",
            "domain pieces " + std::to_string(hit->first) + " " + describe(sources[hit->first]) + " and " +
                std::to_string(hit->second) + " " + describe(sources[hit->second]) + " overlap"};
  }
  if (auto hit = first_overlap(images)) {
    return {false, "b",
            "images of pieces " + std::to_string(hit->first) + " " + describe(images[hit->first]) + " and " +
                std::to_string(hit->second) + " " + describe(images[hit->second]) + " overlap"};
  }
  if (auto p = union_difference(sources, r.domain.cells)) {
    const bool in_pieces = any_contains(sources, *p);
    return {false, "c",
            "point " + to_string(*p) + (in_pieces ? " is in a piece but not in the domain" : " is in the domain but in no piece")};
  }
  if (auto p = union_difference(images, r.codomain.cells)) {
    const bool in_images = any_contains(images, *p);
    return {false, "c",
            "point " + to_string(*p) +
                (in_images ? " is in an image but not in the codomain" : " is in the codomain but in no image")};
  }
  return {};
}

Polygon mcallister_woods_triangle() {
  return Polygon({make_point(0, 1, 0, 1), make_point(3, 1, 0, 1), make_point(1, 1, 2, 3)});
}

Polygon mcallister_woods_image() {
  return Polygon({make_point(1, 1, 0, 1), make_point(3, 1, 0, 1), make_point(0, 1, 1, 1)});
}

EquiRelation mcallister_woods_relation() {
  const Point o = make_point(0, 1, 0, 1);
  const Point e0 = make_point(1, 1, 0, 1);
  const Point e1 = make_point(1, 1, 1, 3);
  const Point top = make_point(1, 1, 2, 3);
  const Point right = make_point(3, 1, 0, 1);
  const GMap shear(UnimodularMatrix(1, 0, -1, 1), 0, 1);
  const GMap id;

  EquiRelation r;
  for (const auto& c : {OpenCell::triangle(o, e0, top), OpenCell::segment(o, e0), OpenCell::segment(o, top),
                        OpenCell::segment(e1, top), OpenCell::vertex(o), OpenCell::vertex(top)}) {
    r.pieces.push_back({c, shear});
  }
  for (const auto& c : {OpenCell::triangle(e0, right, top), OpenCell::segment(e0, right), OpenCell::segment(right, top),
                        OpenCell::segment(e0, e1), OpenCell::vertex(right), OpenCell::vertex(e0),
                        OpenCell::vertex(e1)}) {
    r.pieces.push_back({c, id});
  }
  r.domain = complex_of_polygon(mcallister_woods_triangle());
  r.codomain = complex_of_polygon(mcallister_woods_image());
  return r;
}

SimilarNeighborPair similar_neighbors(const Integer& d, const Integer& t) {
  if (d < 1) throw InputError("denominator must be positive");
  if (gcd(Integer(1 + t), d) != 1) throw InputError("condition gcd(1+t, d) = 1 fails");
  if (gcd(Integer(2 + t), d) != 1) throw InputError("condition gcd(2+t, d) = 1 fails");
  if (mod_floor(Integer(3 + 2 * t), d) == 0) throw InputError("condition 3+2t != 0 mod d fails");
  const Integer a = 1 + t;
  auto q = [&](const Integer& num) {
    Rational r(num, d);
    r.canonicalize();
    return r;
  };
  MinimalTriangle left({pt(q(a), q(1)), pt(q(a), 0), pt(q(a - 1), q(1))}, d);
  MinimalTriangle right({pt(q(a + 1), q(1)), pt(q(a + 1), 0), pt(q(a), q(1))}, d);
  return {d, t, std::move(left), std::move(right)};
}

std::vector<Integer> valid_neighbor_parameters(const Integer& d) {
  std::vector<Integer> out;
  for (Integer t = 0; t < d; ++t) {
    if (gcd(Integer(1 + t), d) == 1 && gcd(Integer(2 + t), d) == 1 && mod_floor(Integer(3 + 2 * t), d) != 0) {
      out.push_back(t);
    }
  }
  return out;
}

std::string to_string(DeletedEdge e) { return e == DeletedEdge::Hypotenuse ? "hypotenuse" : "vertical"; }

DeletedEdge parse_deleted_edge(const std::string& s) {
  if (s == "hypotenuse") return DeletedEdge::Hypotenuse;
  if (s == "vertical") return DeletedEdge::Vertical;
  throw InputError("deleted edge must be 'hypotenuse' or 'vertical', got '" + s + "'");
}

GMap InfiniteRelation::shear(std::int64_t i) { return GMap(UnimodularMatrix(1, i, 0, 1), 0, 0); }

InfiniteRelation::InfiniteRelation(SimilarNeighborPair pair, DeletedEdge left, DeletedEdge right)
    : pair_(std::move(pair)), left_(left), right_(right) {
  // left = (A, B, C) with A the right-angle corner; right = (A', J, A)
  Rational ax(1 + pair_.t, pair_.d);
  ax.canonicalize();
  const Point a_pt{ax, Rational(1, pair_.d)};
  const Point b_pt{a_pt.x, 0};
  const Point c_pt{a_pt.x - Rational(1, pair_.d), a_pt.y};
  const Point a2{a_pt.x + Rational(1, pair_.d), a_pt.y};
  const Point j_pt{a2.x, 0};

  domain_.cells.push_back(OpenCell::triangle(a_pt, c_pt, b_pt));
  domain_.cells.push_back(OpenCell::segment(c_pt, a_pt));
  if (left_ == DeletedEdge::Hypotenuse) {
    domain_.cells.push_back(OpenCell::segment(a_pt, b_pt));
    domain_.cells.push_back(OpenCell::vertex(a_pt));
  } else {
    domain_.cells.push_back(OpenCell::segment(c_pt, b_pt));
    domain_.cells.push_back(OpenCell::vertex(c_pt));
  }

  codomain_.cells.push_back(OpenCell::triangle(a2, a_pt, j_pt));
  codomain_.cells.push_back(OpenCell::segment(a_pt, a2));
  if (right_ == DeletedEdge::Hypotenuse) {
    codomain_.cells.push_back(OpenCell::segment(a2, j_pt));
    codomain_.cells.push_back(OpenCell::vertex(a2));
  } else {
    codomain_.cells.push_back(OpenCell::segment(a_pt, j_pt));
    codomain_.cells.push_back(OpenCell::vertex(a_pt));
  }
}

std::vector<RelationPiece> InfiniteRelation::piece(std::int64_t i) const {
  if (i < 1) throw InputError("piece index must be at least 1");
  const Rational inv_d(1, pair_.d);
  Rational ax(1 + pair_.t, pair_.d);
  ax.canonicalize();
  auto m_pt = [&](std::int64_t k) { return pt(ax, inv_d / k); };
  auto h_pt = [&](std::int64_t k) { return pt(ax - inv_d / (k - 1), inv_d / (k - 1)); };
  const GMap ui = shear(i);
  const GMap exchange = shear(1);
  const GMap exchange_inv = inverse(exchange);

  std::vector<RelationPiece> out;
  // interior cells and the fan segment on line i
  if (i == 1) {
    out.push_back({OpenCell::triangle(m_pt(1), h_pt(2), m_pt(2)), ui});
    out.push_back({OpenCell::segment(h_pt(2), m_pt(1)), ui});
  } else {
    out.push_back({OpenCell::triangle(m_pt(i), h_pt(i), h_pt(i + 1)), ui});
    out.push_back({OpenCell::triangle(m_pt(i), h_pt(i + 1), m_pt(i + 1)), ui});
    out.push_back({OpenCell::segment(m_pt(i), h_pt(i + 1)), ui});
    GMap g = ui;
    if (right_ == DeletedEdge::Vertical) g = compose(exchange_inv, g);
    out.push_back({OpenCell::segment(h_pt(i), m_pt(i)), g});
  }
  // cells on the vertical leg of the left triangle
  OpenCell leg = OpenCell::segment(m_pt(i + 1), m_pt(i));
  OpenCell corner = OpenCell::vertex(m_pt(i));
  GMap leg_map = ui;
  GMap corner_map = ui;
  if (left_ == DeletedEdge::Vertical) {
    leg = apply(exchange_inv, leg);
    corner = apply(exchange_inv, corner);
    leg_map = compose(ui, exchange);
    corner_map = compose(ui, exchange);
  }
  if (right_ == DeletedEdge::Vertical) corner_map = compose(exchange_inv, corner_map);
  out.push_back({leg, leg_map});
  out.push_back({corner, corner_map});
  return out;
}

std::vector<RelationPiece> InfiniteRelation::pieces(std::int64_t k) const {
  std::vector<RelationPiece> out;
  for (std::int64_t i = 1; i <= k; ++i) {
    auto p = piece(i);
    out.insert(out.end(), p.begin(), p.end());
  }
  return out;
}

InfiniteRelation infinite_relation(const SimilarNeighborPair& pair, DeletedEdge left, DeletedEdge right) {
  return InfiniteRelation(pair, left, right);
}

std::int64_t default_piece_cap(const InfiniteRelation& r, std::int64_t n) {
  const std::int64_t d = to_int64(r.pair().d);
  return d * n + d;
}

LatticeBijectionReport verify_infinite_on_lattice(const InfiniteRelation& r, std::int64_t n, std::int64_t cap) {
  if (n < 1) throw InputError("lattice scale must be positive");
  if (cap <= 0) cap = default_piece_cap(r, n);
  const Rational scale(n);
  const auto domain_pts = integer_points(r.domain(), scale);
  const auto codomain_pts = integer_points(r.codomain(), scale);

  struct Indexed {
    std::int64_t index;
    RelationPiece piece;
  };
  std::vector<Indexed> cells;
  for (std::int64_t i = 1; i <= cap; ++i)
    for (auto& p : r.piece(i)) cells.push_back({i, std::move(p)});

  LatticeBijectionReport rep;
  rep.domain_points = domain_pts.size();
  rep.codomain_points = codomain_pts.size();
  std::set<std::pair<Integer, Integer>> image;
  for (const auto& [x, y] : domain_pts) {
    Rational px(x, n);
    Rational py(y, n);
    px.canonicalize();
    py.canonicalize();
    const Point p{px, py};
    const Indexed* owner = nullptr;
    for (const auto& c : cells) {
      if (!c.piece.cell.contains(p)) continue;
      if (owner) {
        rep.diagnostic = "point " + to_string(p) + " lies in pieces " + std::to_string(owner->index) + " and " +
                         std::to_string(c.index);
        return rep;
      }
      owner = &c;
    }
    if (!owner) throw std::runtime_error("point " + to_string(p) + " not claimed by pieces 1.." + std::to_string(cap));
    rep.pieces_used = std::max(rep.pieces_used, owner->index);
    const Point q = scale * owner->piece.map(p);
    if (q.x.get_den() != 1 || q.y.get_den() != 1) {
      rep.diagnostic = "image of " + to_string(p) + " leaves the lattice";
      return rep;
    }
    if (!image.emplace(q.x.get_num(), q.y.get_num()).second) {
      rep.diagnostic = "two points map to " + to_string(Rational(1, n) * q);
      return rep;
    }
  }
  const std::set<std::pair<Integer, Integer>> expected(codomain_pts.begin(), codomain_pts.end());
  if (image != expected) {
    rep.diagnostic = "image has " + std::to_string(image.size()) + " points, codomain has " +
                     std::to_string(expected.size());
    return rep;
  }
  rep.ok = true;
  return rep;
}

}  // namespace lattice_equi
