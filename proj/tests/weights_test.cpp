#include <gtest/gtest.h>

#include <random>
#include <set>

#include "lattice_equi/weights.hpp"
#include "support/test_support.hpp"

namespace lattice_equi {
namespace {

using testing::P;

WeightMultiset multiset(std::int64_t d, std::initializer_list<std::int64_t> values) {
  WeightMultiset w(d);
  for (auto v : values) w.add(v);
  return w;
}

WeightVector vec(std::initializer_list<std::int64_t> centered) {
  const std::int64_t d = static_cast<std::int64_t>(centered.size());
  WeightVector v(d);
  std::int64_t i = -(d / 2);
  for (auto x : centered) v.at(i++) = x;
  return v;
}

TEST(Residue, CenteredDisplay) {
  EXPECT_EQ((Residue{4, 5}).centered(), -1);
  EXPECT_EQ((Residue{2, 5}).centered(), 2);
  EXPECT_EQ((Residue{3, 6}).centered(), 3);
  EXPECT_EQ((Residue{4, 6}).centered(), -2);
  EXPECT_EQ(pm_class(4, 5), 1);
  EXPECT_EQ(pm_class(3, 6), 3);
}

TEST(EdgeWeight, WorkedExamples) {
  EXPECT_EQ(edge_weight({P(0, 1, 1, 5), P(1, 5, 0, 1), 5}).centered(), -1);
  EXPECT_EQ(edge_weight({P(1, 5, 0, 1), P(1, 5, 1, 5), 5}).value, 1);
  EXPECT_EQ(edge_weight({P(0, 1, 0, 1), P(1, 5, 2, 5), 5}).value, 0);
}

TEST(EdgeWeight, RejectsNonMinimalSegments) {
  EXPECT_THROW(edge_weight({P(0, 1, 0, 1), P(2, 5, 0, 1), 5}), InputError);
  EXPECT_THROW(edge_weight({P(1, 10, 0, 1), P(1, 5, 0, 1), 5}), InputError);
  EXPECT_THROW(edge_weight({P(1, 5, 0, 1), P(1, 5, 0, 1), 5}), InputError);
}

TEST(EdgeWeight, MatchesAreaRuleOracle) {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 500; ++i) {
    const std::int64_t d = 1 + i % 9;
    const MinimalTriangle t = testing::random_minimal_triangle(rng, d);
    for (int k = 0; k < 3; ++k) {
      const Point& p = t[k];
      const Point& q = t[(k + 1) % 3];
      ASSERT_EQ(edge_weight({p, q, t.d()}).value, testing::oracle_edge_weight(p, q, d));
    }
  }
}

TEST(LatticeDistance, ExamplesAndDistanceRule) {
  // 4/5 - 3/5 = 1/5, 2/5: det [[3, 4], [0, 2]] = 6
  EXPECT_EQ(lattice_distance({P(3, 5, 0, 1), P(4, 5, 2, 5), 5}), 6);
  EXPECT_EQ(edge_weight({P(3, 5, 0, 1), P(4, 5, 2, 5), 5}).value, 1);
  EXPECT_EQ(lattice_distance({P(0, 1, 0, 1), P(1, 5, 1, 5), 5}), 0);
}

TEST(LatticeDistance, CountsParallelLatticeLines) {
  // enumerate L_d points in a box and collect the distinct lines parallel to E
  // between the origin's line and E's line
  for (std::int64_t d = 1; d <= 7; ++d) {
    for (const auto& t : enumerate_minimal_translates(d)) {
      for (int k = 0; k < 3; ++k) {
        const OrientedEdge e{t[k], t[(k + 1) % 3], t.d()};
        const Point dir = Rational(d) * (e.to - e.from);
        const Integer a = dir.x.get_num();
        const Integer b = dir.y.get_num();
        auto level = [&](const Integer& x, const Integer& y) { return Integer(a * y - b * x); };
        const Point base = Rational(d) * e.from;
        const Integer target = level(base.x.get_num(), base.y.get_num());
        std::set<Integer> levels;
        for (Integer x = -2 * d; x <= 2 * d; ++x) {
          for (Integer y = -2 * d; y <= 2 * d; ++y) {
            const Integer l = level(x, y);
            if ((target >= 0 && l >= 0 && l <= target) || (target < 0 && l <= 0 && l >= target)) levels.insert(l);
          }
        }
        ASSERT_EQ(lattice_distance(e), Integer(static_cast<long>(levels.size())) - 1);
      }
    }
  }
}

TEST(LatticeDistance, CongruentToWeightOnCounterclockwiseEdges) {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 500; ++i) {
    const std::int64_t d = 1 + i % 9;
    const MinimalTriangle t = testing::random_minimal_triangle(rng, d);
    OrientedEdge e{t[0], t[1], t.d()};
    if (cross(e.from, e.to) < 0) std::swap(e.from, e.to);
    ASSERT_EQ(mod_floor(lattice_distance(e), t.d()), edge_weight(e).value);
  }
}

TEST(TriangleWeight, WorkedExamples) {
  EXPECT_EQ(triangle_weight(testing::t12_triangle()), multiset(5, {1, 1, -1}));
  EXPECT_EQ(triangle_weight(testing::t14_triangle()), multiset(5, {2, -2, 1}));
  EXPECT_EQ(to_string(triangle_weight(testing::t12_triangle())), "{1, 1, -1}");
  EXPECT_EQ(to_string(triangle_weight(testing::t14_triangle())), "{2, -2, 1}");
}

TEST(TriangleWeight, SumIsOneModD) {
  std::mt19937_64 rng(44);
  for (std::int64_t d = 1; d <= 9; ++d) {
    for (const auto& t : enumerate_minimal_translates(d)) {
      std::int64_t s = 0;
      for (const auto& r : ordered_edge_weights(t)) s += r.value;
      ASSERT_EQ(s % d, 1 % d);
    }
  }
}

TEST(TriangleWeight, InvariantUnderAllGMaps) {
  std::mt19937_64 rng(45);
  for (int i = 0; i < 500; ++i) {
    const std::int64_t d = 1 + i % 9;
    const MinimalTriangle t = testing::random_minimal_triangle(rng, d);
    const GMap g = testing::random_gmap(rng);
    ASSERT_EQ(triangle_weight(apply(g, t)), triangle_weight(t));
  }
}

TEST(EdgeWeight, SignRuleUnderGMaps) {
  std::mt19937_64 rng(46);
  for (int i = 0; i < 500; ++i) {
    const std::int64_t d = 1 + i % 9;
    const MinimalTriangle t = testing::random_minimal_triangle(rng, d);
    const GMap g = testing::random_gmap(rng);
    const Residue before = edge_weight({t[0], t[1], t.d()});
    const Residue after = edge_weight({g(t[0]), g(t[1]), t.d()});
    ASSERT_EQ(after.value, mod_floor(g.det() * before.value, d));
  }
}

TEST(PolygonWeight, AgreesWithTriangleWeightAtOwnDenominator) {
  EXPECT_EQ(polygon_weight(testing::t12(), 5), triangle_weight(testing::t12_triangle()));
  EXPECT_EQ(polygon_weight(testing::t14(), 5), triangle_weight(testing::t14_triangle()));
}

TEST(PolygonWeight, UnitSquareHasZeroWeights) {
  const Polygon sq({P(0, 1, 0, 1), P(1, 1, 0, 1), P(1, 1, 1, 1), P(0, 1, 1, 1)});
  EXPECT_EQ(polygon_weight(sq, 1), multiset(1, {0, 0, 0, 0}));
  EXPECT_EQ(polygon_weight(sq, 1).size(), 4);
}

TEST(PolygonWeight, RefinementSplitsEachSegmentEvenly) {
  const WeightMultiset w10 = polygon_weight(testing::t12(), 10);
  EXPECT_EQ(w10.size(), 6);
  // each 5-minimal segment of weight r splits into two 10-minimal segments of weight 2r
  EXPECT_EQ(w10, multiset(10, {2, 2, 2, 2, -2, -2}));
}

TEST(PolygonWeight, RejectsIncompatibleModulus) {
  EXPECT_THROW(polygon_weight(testing::t12(), 3), InputError);
  EXPECT_THROW(polygon_weight(testing::t12(), 0), InputError);
}

TEST(SignedUnsignedWeights, WorkedExamples) {
  EXPECT_EQ(signed_weight(testing::t12(), 5), vec({0, -1, 0, 1, 0}));
  EXPECT_EQ(signed_weight(testing::t14(), 5), vec({0, -1, 0, 1, 0}));
  EXPECT_EQ(signed_weight(testing::t14(), 5)[1], 1);
  EXPECT_EQ(unsigned_weight(testing::t12(), 5), vec({0, 3, 0, 3, 0}));
  EXPECT_EQ(unsigned_weight(testing::t14(), 5), vec({2, 1, 0, 1, 2}));
  EXPECT_EQ(unsigned_weight(testing::t12(), 5)[-1], 3);
  EXPECT_EQ(to_string(signed_weight(testing::t12(), 5)), "(0,-1,0,1,0)");
}

TEST(SignedUnsignedWeights, SymmetryInvariants) {
  std::mt19937_64 rng(47);
  for (int i = 0; i < 100; ++i) {
    const std::int64_t d = 1 + i % 6;
    const Polygon p = testing::random_convex_polygon(rng, d);
    const WeightVector sw = signed_weight(p, d);
    const WeightVector uw = unsigned_weight(p, d);
    for (std::int64_t r = 0; r < d; ++r) {
      ASSERT_EQ(sw[r], -sw[-r]);
      ASSERT_EQ(uw[r], uw[-r]);
      ASSERT_GE(uw[r], 0);
    }
    ASSERT_EQ(sw[0], 0);
  }
}

TEST(WeightFromSwUw, RecoversMultiset) {
  EXPECT_EQ(weight_from_sw_uw(vec({0, -1, 0, 1, 0}), vec({0, 3, 0, 3, 0})), multiset(5, {1, 1, -1}));
  EXPECT_EQ(weight_from_sw_uw(WeightVector(5), WeightVector(5)).size(), 0);
}

TEST(WeightFromSwUw, RejectsInconsistentInput) {
  EXPECT_THROW(weight_from_sw_uw(vec({0, 1, 0, 0, 0}), vec({0, 0, 0, 0, 0})), InputError);
  EXPECT_THROW(weight_from_sw_uw(vec({0, -2, 0, 2, 0}), vec({0, 0, 0, 0, 0})), InputError);
  EXPECT_THROW(weight_from_sw_uw(WeightVector(5), WeightVector(4)), InputError);
}

TEST(WeightFromSwUw, RoundTripOnRandomPolygons) {
  std::mt19937_64 rng(48);
  for (int i = 0; i < 200; ++i) {
    const std::int64_t d = 1 + i % 8;
    const Polygon p = testing::random_convex_polygon(rng, d);
    const WeightMultiset w = polygon_weight(p, d);
    ASSERT_EQ(weight_from_sw_uw(signed_weight(w), unsigned_weight(w)), w);
  }
}

TEST(ReconstructWeight, RefinedWeightsReduceBack) {
  EXPECT_EQ(reconstruct_weight(polygon_weight(testing::t12(), 10), 5), multiset(5, {1, 1, -1}));
  EXPECT_EQ(reconstruct_weight(polygon_weight(testing::t14(), 15), 5), multiset(5, {2, -2, 1}));
  const WeightMultiset w = polygon_weight(testing::t12(), 5);
  EXPECT_EQ(reconstruct_weight(w, 5), w);
}

TEST(ReconstructWeight, RejectsWeightsOfTheWrongShape) {
  EXPECT_THROW(reconstruct_weight(multiset(10, {1, 2}), 5), InputError);
  EXPECT_THROW(reconstruct_weight(multiset(10, {2}), 5), InputError);
  EXPECT_THROW(reconstruct_weight(multiset(10, {2, 2}), 3), InputError);
}

TEST(ReconstructWeight, RoundTripOnRandomPolygons) {
  std::mt19937_64 rng(49);
  for (std::int64_t d : {3, 5, 7}) {
    for (std::int64_t n : {2, 3}) {
      for (int i = 0; i < 10; ++i) {
        Polygon p = testing::random_convex_polygon(rng, d);
        if (polygon_denominator(p) != d) continue;
        ASSERT_EQ(reconstruct_weight(polygon_weight(p, n * d), d), polygon_weight(p, d));
      }
    }
  }
}

TEST(ObstructionVerdict, CanonicalPairIsDistinguished) {
  const ObstructionReport r = obstruction_verdict(testing::t12(), testing::t14());
  EXPECT_EQ(r.verdict, Verdict::DistinctWeights);
  EXPECT_EQ(r.modulus, 5);
  EXPECT_EQ(to_string(r.left), "{1, 1, -1}");
  EXPECT_EQ(to_string(r.right), "{2, -2, 1}");
}

TEST(ObstructionVerdict, GImagesAgree) {
  std::mt19937_64 rng(50);
  for (int i = 0; i < 100; ++i) {
    const Polygon p = testing::random_convex_polygon(rng, 1 + i % 6);
    ASSERT_EQ(obstruction_verdict(p, apply(testing::random_gmap(rng), p)).verdict, Verdict::WeightsAgree);
  }
}

TEST(ObstructionVerdict, DifferentDenominatorsCompareAtLcm) {
  const Polygon half({P(0, 1, 0, 1), P(1, 2, 0, 1), P(0, 1, 1, 2)});
  const ObstructionReport r = obstruction_verdict(testing::t12(), half);
  EXPECT_EQ(r.modulus, 10);
  EXPECT_EQ(r.verdict, Verdict::DistinctWeights);
}

TEST(EdgeObstruction, DistinguishesClasses) {
  const OrientedEdge e1{P(1, 5, 0, 1), P(0, 1, 1, 5), 5};
  const OrientedEdge e2{P(1, 5, 0, 1), P(1, 5, 1, 5), 5};
  const OrientedEdge e3{P(2, 5, 0, 1), P(1, 5, 1, 5), 5};
  EXPECT_EQ(edge_obstruction_check(e1, e3), Verdict::DistinctWeights);
  EXPECT_EQ(edge_obstruction_check(e1, e2), Verdict::WeightsAgree);
  const GMap g(UnimodularMatrix(0, 1, 1, 0), 2, -1);
  EXPECT_EQ(edge_obstruction_check(e3, {g(e3.from), g(e3.to), 5}), Verdict::WeightsAgree);
  EXPECT_THROW(edge_obstruction_check(e1, {P(1, 7, 0, 1), P(0, 1, 1, 7), 7}), InputError);
}

TEST(TriangulationIdentities, SignedWeightIsAdditive) {
  std::mt19937_64 rng(51);
  for (int i = 0; i < 30; ++i) {
    const std::int64_t d = 1 + i % 3;
    const Polygon p = testing::random_convex_polygon(rng, d, 1);
    const Integer dp = Integer(static_cast<long>(d)) * (1 + i % 2);
    const Triangulation t = minimal_triangulation(p, dp, static_cast<std::uint64_t>(i));
    ASSERT_EQ(facet_signed_weight_sum(t), signed_weight(p, dp));
  }
}

TEST(TriangulationIdentities, EdgeCensusAndUnsignedWeight) {
  std::mt19937_64 rng(52);
  for (int i = 0; i < 30; ++i) {
    const std::int64_t d = 1 + i % 3;
    const Polygon p = testing::random_convex_polygon(rng, d, 1);
    const Integer dp = Integer(static_cast<long>(d)) * (1 + i % 3);
    const Triangulation t = minimal_triangulation(p, dp, static_cast<std::uint64_t>(i));
    const WeightVector uw = unsigned_weight(p, dp);
    for (std::int64_t r = 1; r < to_int64(dp); ++r) {
      const PmCensus c = pm_census(t, r);
      const std::int64_t incidences = c.facets_with[1] + 2 * c.facets_with[2] + 3 * c.facets_with[3];
      ASSERT_EQ(2 * c.total_edges, incidences + c.boundary_edges);
      // a self-paired class (2r = 0 mod d') is counted twice by UW
      const std::int64_t boundary = 2 * r % to_int64(dp) == 0 ? uw[r] / 2 : uw[r];
      ASSERT_EQ(boundary, c.boundary_edges);
      ASSERT_EQ(boundary, 2 * c.total_edges - incidences);
    }
  }
}

}  // namespace
}  // namespace lattice_equi
