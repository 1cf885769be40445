// Command-line front end: lattice counts, weights, orbit classification,
// obstruction verdicts and the two explicit relations.
//
// Exit codes: 0 success, 1 mathematical negative, 2 input error.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "lattice_equi/equidecomposition.hpp"
#include "lattice_equi/format.hpp"
#include "lattice_equi/io.hpp"
#include "lattice_equi/lattice_counting.hpp"
#include "lattice_equi/minimal_triangles.hpp"
#include "lattice_equi/weights.hpp"

using namespace lattice_equi;

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kInputError = 2;

std::string conv(const std::vector<Point>& pts) {
  std::string s = "Conv(";
  for (std::size_t i = 0; i < pts.size(); ++i) s += (i ? ", " : "") + to_string(pts[i]);
  return s + ")";
}

std::string conv(const TriangleVertices& t) { return conv(std::vector<Point>(t.begin(), t.end())); }

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

const char* palette(std::size_t i) {
  static const char* colors[] = {"#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00", "#ffff33",
                                 "#a65628", "#f781bf", "#999999", "#66c2a5", "#fc8d62", "#8da0cb"};
  return colors[i % (sizeof colors / sizeof colors[0])];
}

int run_ehrhart(const std::string& file, std::int64_t period_override, std::int64_t horizon, bool table, bool latex) {
  const Region region = region_from_json(load_json_file(file));
  const std::int64_t period = period_override > 0 ? period_override : to_int64(region_denominator(region));
  const QuasiPolynomial q = interpolate_quasipolynomial(region, period);
  const std::int64_t minimal = minimal_period(q);
  std::cout << "period: " << period << "\n";
  std::cout << "minimal period: " << minimal << "\n";
  if (latex) {
    std::cout << "ehr(t) = " << format_quasipolynomial_latex(q);
  } else if (minimal == 1) {
    const auto& c = q.constituent(1);
    std::cout << "ehr(t) = " << format_polynomial(c);
    if (const std::string sq = format_square(c); !sq.empty()) std::cout << " = " << sq;
    std::cout << "\n";
  } else {
    std::cout << "ehr(t) =\n" << format_quasipolynomial(q);
  }
  if (table) {
    const std::int64_t h = horizon > 0 ? horizon : 3 * period + 2;
    const auto counts = count_table(region, h);
    std::cout << "t count\n";
    for (std::int64_t t = 1; t <= h; ++t) std::cout << t << " " << to_string(counts[static_cast<std::size_t>(t - 1)]) << "\n";
  }
  return kOk;
}

int run_weight(const std::string& file, std::int64_t modulus) {
  const Polygon p = polygon_from_json(load_json_file(file));
  const Integer d = modulus > 0 ? Integer(static_cast<long>(modulus)) : polygon_denominator(p);
  const WeightMultiset w = polygon_weight(p, d);
  std::cout << format_weight(w) << "\n";
  std::cout << format_vector("SW", signed_weight(w)) << "\n";
  std::cout << format_vector("UW", unsigned_weight(w)) << "\n";
  return kOk;
}

std::string classify_svg(const std::vector<MinimalTriangle>& translates,
                         const std::vector<std::vector<std::size_t>>& orbits) {
  SvgCanvas svg({0, 0}, {1, 1});
  for (std::size_t k = 0; k < orbits.size(); ++k) {
    for (auto i : orbits[k]) {
      const auto& v = translates[i].vertices();
      svg.polygon({v[0], v[1], v[2]}, palette(k), "#000000");
    }
  }
  return svg.str();
}

int run_classify(std::int64_t denominator, const std::string& svg_path) {
  if (denominator < 1) throw InputError("denominator must be positive");
  const Integer d(static_cast<long>(denominator));
  const auto translates = enumerate_minimal_translates(d);
  const auto orbits = dihedral_orbits(d);

  std::map<std::vector<std::int64_t>, std::vector<std::size_t>> by_weight;
  for (std::size_t i = 0; i < translates.size(); ++i) by_weight[triangle_weight(translates[i]).counts()].push_back(i);
  std::vector<std::vector<std::size_t>> weight_classes;
  for (auto& [w, members] : by_weight) weight_classes.push_back(members);
  std::sort(weight_classes.begin(), weight_classes.end());
  const bool agree = weight_classes == orbits;

  std::cout << "denominator " << denominator << ": " << translates.size() << " translates, " << orbits.size()
            << " orbits\n";
  for (std::size_t k = 0; k < orbits.size(); ++k) {
    std::cout << "orbit " << (k + 1) << ": " << format_weight(triangle_weight(translates[orbits[k].front()])) << "\n";
    std::cout << "  offsets:";
    for (auto i : orbits[k]) std::cout << " " << to_string(translates[i][0]);
    std::cout << "\n";
  }
  const auto params = valid_neighbor_parameters(d);
  std::cout << "similar neighbor parameters t:";
  if (params.empty()) std::cout << " none";
  for (const auto& t : params) std::cout << " " << to_string(t);
  std::cout << "\n";
  std::cout << "orbit partition equals weight partition: " << (agree ? "yes" : "no") << "\n";
  if (!svg_path.empty()) write_file(svg_path, classify_svg(translates, orbits));
  return agree ? kOk : kNegative;
}

int run_obstruct(const std::string& left, const std::string& right) {
  const Polygon p = polygon_from_json(load_json_file(left));
  const Polygon q = polygon_from_json(load_json_file(right));
  const ObstructionReport r = obstruction_verdict(p, q);
  std::cout << "modulus: " << to_string(r.modulus) << "\n";
  std::cout << "P: " << format_weight(r.left) << "\n";
  std::cout << "Q: " << format_weight(r.right) << "\n";
  if (r.verdict == Verdict::DistinctWeights) {
    std::cout << "verdict: DistinctWeights (no finite rational equidecomposability relation exists)\n";
    return kNegative;
  }
  std::cout << "verdict: WeightsAgree (inconclusive)\n";
  return kOk;
}

int run_neighbors(std::int64_t denominator, std::int64_t t) {
  const SimilarNeighborPair pair = similar_neighbors(Integer(static_cast<long>(denominator)), Integer(static_cast<long>(t)));
  const Polygon left(std::vector<Point>(pair.left.vertices().begin(), pair.left.vertices().end()));
  const Polygon right(std::vector<Point>(pair.right.vertices().begin(), pair.right.vertices().end()));
  const std::int64_t horizon = certifying_horizon(pair.d, pair.d);
  const bool same_counts = ehrhart_equal(left, right, horizon);
  const ObstructionReport r = obstruction_verdict(left, right);
  std::cout << "d = " << denominator << ", t = " << t << "\n";
  std::cout << "left:  " << conv(pair.left.vertices()) << "  " << format_weight(triangle_weight(pair.left)) << "\n";
  std::cout << "right: " << conv(pair.right.vertices()) << "  " << format_weight(triangle_weight(pair.right)) << "\n";
  std::cout << "ehrhart equal for t <= " << horizon << ": " << (same_counts ? "yes" : "no") << "\n";
  std::cout << "verdict: " << to_string(r.verdict) << "\n";
  return same_counts && r.verdict == Verdict::DistinctWeights ? kOk : kNegative;
}

std::int64_t piece_cap_from_env() {
  const char* env = std::getenv("LATTICE_EQUI_MAX_PIECES");
  if (!env || !*env) return 0;
  char* end = nullptr;
  const long long v = std::strtoll(env, &end, 10);
  if (*end != '\0' || v < 1) throw InputError("LATTICE_EQUI_MAX_PIECES must be a positive integer");
  return v;
}

std::string infinite_svg(const InfiniteRelation& r, std::int64_t k) {
  const Rational inv_d(1, r.pair().d);
  Rational ax(1 + r.pair().t, r.pair().d);
  ax.canonicalize();
  SvgCanvas svg({ax - 2 * inv_d, -inv_d / 2}, {ax + 2 * inv_d, inv_d * 7 / 2});
  for (std::int64_t i = 1; i <= k; ++i) {
    for (const auto& p : r.piece(i)) {
      const OpenCell image = apply(p.map, p.cell);
      for (const auto* c : {&p.cell, &image}) {
        const auto& pts = c->points();
        if (c->kind() == CellKind::Triangle) svg.polygon(pts, palette(static_cast<std::size_t>(i - 1)), "none");
        if (c->kind() == CellKind::Segment) svg.segment(pts[0], pts[1], palette(static_cast<std::size_t>(i - 1)));
        if (c->kind() == CellKind::Vertex) svg.dot(pts[0], palette(static_cast<std::size_t>(i - 1)));
      }
    }
  }
  return svg.str();
}

int run_infinite_verify(std::int64_t denominator, std::int64_t t, std::int64_t lattice, const std::string& left,
                        const std::string& right, const std::string& svg_path) {
  if (lattice < 1) throw InputError("--lattice must be positive");
  const SimilarNeighborPair pair = similar_neighbors(Integer(static_cast<long>(denominator)), Integer(static_cast<long>(t)));
  const InfiniteRelation rel = infinite_relation(pair, parse_deleted_edge(left), parse_deleted_edge(right));
  const std::int64_t cap = piece_cap_from_env();
  std::cout << "d = " << denominator << ", t = " << t << ", deleted: left " << left << ", right " << right << "\n";
  std::int64_t used = 0;
  for (std::int64_t n = 1; n <= lattice; ++n) {
    const LatticeBijectionReport rep = verify_infinite_on_lattice(rel, n, cap);
    std::cout << "n=" << n << ": domain " << rep.domain_points << ", codomain " << rep.codomain_points << ", pieces "
              << rep.pieces_used << (rep.ok ? ", ok" : ", FAILED: " + rep.diagnostic) << "\n";
    if (!rep.ok) return kNegative;
    used = std::max(used, rep.pieces_used);
  }
  std::cout << "bijection verified, " << used << " pieces used\n";
  if (!svg_path.empty()) write_file(svg_path, infinite_svg(rel, std::max<std::int64_t>(used, 1)));
  return kOk;
}

int run_mw_demo() {
  const EquiRelation r = mcallister_woods_relation();
  const Polygon source = mcallister_woods_triangle();
  const Polygon target = mcallister_woods_image();
  std::cout << "T  = " << conv(source.vertices()) << ", denominator " << to_string(polygon_denominator(source)) << "\n";
  for (std::size_t i = 0; i < r.pieces.size(); ++i) {
    std::cout << "  piece " << (i + 1) << ": " << to_string(r.pieces[i].cell.kind()) << " "
              << conv(r.pieces[i].cell.points()) << " -> " << to_string(r.pieces[i].map) << "\n";
  }
  std::cout << "T' = " << conv(target.vertices()) << ", denominator " << to_string(polygon_denominator(target)) << "\n";
  const RelationCheck check = verify_relation(r);
  std::cout << "relation verified: " << (check.ok ? "yes" : "no (" + check.clause + ") " + check.diagnostic) << "\n";
  const bool same = ehrhart_equal(source, target, 12);
  std::cout << "ehrhart equal for t <= 12: " << (same ? "yes" : "no") << "\n";
  const QuasiPolynomial q = interpolate_quasipolynomial(source, 3);
  const std::int64_t minimal = minimal_period(q);
  std::cout << "period-3 fit, minimal period " << minimal << ": ehr(t) = " << format_polynomial(q.constituent(1)) << "\n";
  const bool collapse = minimal == 1;
  if (collapse) std::cout << "period collapse 3 -> 1 confirmed\n";
  return check.ok && same && collapse ? kOk : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact lattice-point counts, edge weights and equidecomposability checks for rational polygons"};
  app.require_subcommand(1);

  std::string file;
  std::string file2;
  std::int64_t period_override = 0;
  std::int64_t horizon = 0;
  bool table = false;
  bool latex = false;
  std::int64_t modulus = 0;
  std::int64_t denominator = 0;
  std::int64_t t = 0;
  std::int64_t lattice = 0;
  std::string svg_path;
  std::string left = "hypotenuse";
  std::string right = "hypotenuse";

  auto* ehr = app.add_subcommand("ehrhart", "Fit the Ehrhart quasi-polynomial of a polygon or cell complex");
  ehr->add_option("file", file, "JSON polygon or complex")->required();
  ehr->add_option("--period-override", period_override, "Fit with this period instead of the denominator");
  ehr->add_option("--horizon", horizon, "Last dilation in the count table");
  ehr->add_flag("--table", table, "Print lattice counts");
  ehr->add_flag("--latex", latex, "Print a LaTeX case layout");

  auto* weight = app.add_subcommand("weight", "Print W, SW and UW of a polygon");
  weight->add_option("file", file, "JSON polygon")->required();
  weight->add_option("--modulus", modulus, "Modulus d' (a multiple of the denominator)");

  auto* classify = app.add_subcommand("classify", "Group the minimal translates of T1 into orbits");
  classify->add_option("--denominator", denominator, "Denominator d")->required();
  classify->add_option("--svg", svg_path, "Write an SVG of the orbit coloring");

  auto* obstruct = app.add_subcommand("obstruct", "Compare the weights of two polygons");
  obstruct->add_option("P", file, "JSON polygon")->required();
  obstruct->add_option("Q", file2, "JSON polygon")->required();

  auto* neighbors = app.add_subcommand("neighbors", "Build a similar-neighbor pair");
  neighbors->add_option("--denominator", denominator, "Denominator d")->required();
  neighbors->add_option("--t", t, "Parameter t")->required();

  auto* infinite = app.add_subcommand("infinite-verify", "Check the countable relation on dilated lattices");
  infinite->add_option("--denominator", denominator, "Denominator d")->required();
  infinite->add_option("--t", t, "Parameter t")->required();
  infinite->add_option("--lattice", lattice, "Check scales 1..n")->required();
  infinite->add_option("--left", left, "Deleted edge of the left triangle: hypotenuse or vertical");
  infinite->add_option("--right", right, "Deleted edge of the right triangle: hypotenuse or vertical");
  infinite->add_option("--svg", svg_path, "Write an SVG of the pieces used");

  auto* mw = app.add_subcommand("mw-demo", "Verify the two-piece relation onto an integral triangle");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (ehr->parsed()) return run_ehrhart(file, period_override, horizon, table, latex);
    if (weight->parsed()) return run_weight(file, modulus);
    if (classify->parsed()) return run_classify(denominator, svg_path);
    if (obstruct->parsed()) return run_obstruct(file, file2);
    if (neighbors->parsed()) return run_neighbors(denominator, t);
    if (infinite->parsed()) return run_infinite_verify(denominator, t, lattice, left, right, svg_path);
    if (mw->parsed()) return run_mw_demo();
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const InterpolationError& e) {
    std::cerr << "interpolation error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNegative;
  }
  return kInputError;
}
