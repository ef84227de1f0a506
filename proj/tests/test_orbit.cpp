#include <gtest/gtest.h>

#include <numeric>

#include "coc/orbit.hpp"
#include "helpers.hpp"

using namespace coc;
using testutil::rows;

namespace {

const Poly kP4 = Poly::parse(2, "1 1 0 0 1");
const Poly kP6 = Poly::parse(2, "1 1 0 0 0 0 1");
const Poly kP5 = Poly::parse(2, "1 1 1 1 1");

std::vector<Poly> irreducible_of_degree(unsigned q, std::size_t d) {
  const PrimeField F(q);
  std::vector<Poly> out;
  for (std::uint64_t i = 0; i < ipow(q, static_cast<unsigned>(d)); ++i) {
    Poly f = monic_poly(q, d, i);
    if (f.coeff(0) != 0 && is_irreducible(f, F)) out.push_back(std::move(f));
  }
  return out;
}

oracle::OrbitStats oracle_stats(const CyclicOrbitCode& c) {
  return oracle::orbit(testutil::to_m(c.start().basis()), testutil::to_m(c.generator()), static_cast<int>(c.q()));
}

void expect_matches_oracle(const CodeParams& p, const CyclicOrbitCode& c) {
  const auto o = oracle_stats(c);
  EXPECT_EQ(p.cardinality, o.cardinality);
  if (o.min_distance < 0)
    EXPECT_FALSE(p.min_distance.has_value());
  else
    EXPECT_EQ(p.min_distance, static_cast<unsigned>(o.min_distance));
  ASSERT_TRUE(p.distribution.has_value());
  EXPECT_EQ(*p.distribution, o.distribution);
}

CyclicOrbitCode single(const Poly& p, unsigned exp, const Subspace& start) {
  return CyclicOrbitCode(ElementaryDivisorSpec{p.q(), {{p, exp}}}, start);
}

}  // namespace

TEST(CyclicOrbitCode, RegimeTags) {
  EXPECT_EQ(single(kP4, 1, rows(2, 4, {"1000"})).regime(), Regime::primitive);
  EXPECT_EQ(single(kP5, 1, rows(2, 4, {"1000"})).regime(), Regime::irreducible);
  EXPECT_EQ(single(Poly::parse(2, "1 1 1"), 2, rows(2, 4, {"1000"})).regime(), Regime::non_semisimple);
  const CyclicOrbitCode two(ElementaryDivisorSpec{2, {{kP4, 1}, {kP6, 1}}}, rows(2, 10, {"1000000000"}));
  EXPECT_EQ(two.regime(), Regime::completely_reducible);
  const CyclicOrbitCode free(companion_matrix(kP4), rows(2, 4, {"1000"}));
  EXPECT_EQ(free.regime(), Regime::general);
  EXPECT_EQ(to_string(Regime::non_semisimple), "non_semisimple");
}

TEST(CyclicOrbitCode, Errors) {
  EXPECT_THROW(CyclicOrbitCode(companion_matrix(kP4), rows(2, 6, {"100000"})), Error);
  EXPECT_THROW(CyclicOrbitCode(Mat::parse(2, "10\n10"), rows(2, 2, {"10"})), Error);
  EXPECT_THROW(CyclicOrbitCode(companion_matrix(kP4), Subspace::zero(2, 4)), Error);
}

TEST(EnumerateOrbit, Examples) {
  EXPECT_EQ(enumerate_orbit(single(kP6, 1, Subspace::full(2, 6))).size(), 1u);
  const auto spread = single(kP6, 1, rows(2, 6, {"100000", "000110", "111100"}));
  const auto orbit = enumerate_orbit(spread);
  EXPECT_EQ(orbit.size(), 9u);
  EXPECT_EQ(orbit.front(), spread.start());
  for (std::size_t i = 0; i < orbit.size(); ++i)
    for (std::size_t j = i + 1; j < orbit.size(); ++j) EXPECT_FALSE(orbit[i] == orbit[j]);
  EXPECT_THROW(enumerate_orbit(single(kP6, 1, rows(2, 6, {"100000"})), 10), Error);
}

TEST(AnalyzeNaive, GoldenExamples) {
  const auto s3 = single(kP6, 1, rows(2, 6, {"100000", "000110", "111100"}));
  EXPECT_EQ(analyze_naive(s3).cardinality, 9u);
  EXPECT_EQ(analyze_naive(s3).min_distance, 6u);
  const auto u1 = single(kP4, 1, rows(2, 4, {"1000", "0110"}));
  EXPECT_EQ(analyze_naive(u1).cardinality, 5u);
  EXPECT_EQ(analyze_naive(u1).min_distance, 4u);
  const auto one = analyze_naive(single(kP4, 1, Subspace::full(2, 4)));
  EXPECT_EQ(one.cardinality, 1u);
  EXPECT_FALSE(one.min_distance);
  EXPECT_EQ(*one.distribution, (std::vector<std::uint64_t>{1, 0, 0, 0, 0}));
}

TEST(AnalyzeNaive, MatchesSetOracleOnRandomGenerators) {
  std::mt19937_64 rng(101);
  for (unsigned q : {2u, 3u})
    for (int t = 0; t < 60; ++t) {
      const std::size_t n = 2 + rng() % (q == 2 ? 5 : 3);
      const std::size_t k = 1 + rng() % (n - 1);
      const CyclicOrbitCode c(testutil::random_gl(q, n, rng), testutil::random_sub(q, k, n, rng));
      const auto p = analyze_naive(c);
      expect_matches_oracle(p, c);
      EXPECT_EQ(matrix_order(c.generator()) % p.cardinality, 0u);
    }
}

TEST(AnalyzePrimitive, Examples) {
  const auto s3 = single(kP6, 1, rows(2, 6, {"100000", "000110", "111100"}));
  EXPECT_EQ(analyze_primitive(s3), analyze_naive(s3));
  EXPECT_EQ(analyze_primitive(s3).cardinality, 9u);
  const auto u1 = single(kP4, 1, rows(2, 4, {"1000", "0110"}));
  EXPECT_EQ(analyze_primitive(u1).cardinality, 5u);
  EXPECT_EQ(analyze_primitive(u1).min_distance, 4u);
  EXPECT_THROW(analyze_primitive(single(kP5, 1, rows(2, 4, {"1000"}))), Error);
}

TEST(AnalyzePrimitive, MatchesOracleOnRandomStarts) {
  std::mt19937_64 rng(103);
  for (auto [q, n] : std::vector<std::pair<unsigned, std::size_t>>{{2, 4}, {2, 6}, {2, 8}, {3, 3}, {3, 4}}) {
    const Poly p = least_primitive(PrimeField(q), n);
    for (int t = 0; t < 15; ++t) {
      const std::size_t k = 1 + rng() % std::min<std::size_t>(4, n - 1);
      const auto c = single(p, 1, testutil::random_sub(q, k, n, rng));
      expect_matches_oracle(analyze_primitive(c), c);
    }
  }
}

TEST(AnalyzePrimitive, TernaryOrbitsStayBelowProjectiveBound) {
  std::mt19937_64 rng(107);
  for (std::size_t n : {2u, 3u, 4u}) {
    const Poly p = least_primitive(PrimeField(3), n);
    for (int t = 0; t < 20; ++t) {
      const std::size_t k = 1 + rng() % (n - 1);
      const auto r = analyze_primitive(single(p, 1, testutil::random_sub(3, k, n, rng)));
      EXPECT_LE(r.cardinality, (ipow(3, static_cast<unsigned>(n)) - 1) / 2);
    }
  }
}

TEST(AnalyzeIrreducible, Examples) {
  const auto c = single(kP5, 1, rows(2, 4, {"1000", "0011"}));
  EXPECT_EQ(analyze_irreducible(c).cardinality, 5u);
  EXPECT_EQ(analyze_irreducible(c).min_distance, 4u);
  EXPECT_EQ(analyze_irreducible(c), analyze_naive(c));
  EXPECT_THROW(analyze_irreducible(single(Poly::parse(2, "1 1 1"), 2, rows(2, 4, {"1000"}))), Error);
}

TEST(AnalyzeIrreducible, MatchesOracleOnNonPrimitiveGenerators) {
  std::mt19937_64 rng(109);
  const PrimeField F2(2), F3(3);
  std::vector<Poly> gens;
  for (std::size_t d : {4u, 6u, 8u})
    for (const auto& p : irreducible_of_degree(2, d))
      if (!is_primitive(p, F2)) gens.push_back(p);
  for (const auto& p : irreducible_of_degree(3, 2))
    if (!is_primitive(p, F3)) gens.push_back(p);
  for (const auto& p : irreducible_of_degree(3, 4))
    if (!is_primitive(p, F3)) gens.push_back(p);
  for (const auto& p : gens)
    for (int t = 0; t < 3; ++t) {
      const std::size_t n = *p.degree();
      const std::size_t k = 1 + rng() % std::min<std::size_t>(4, n - 1);
      const auto c = single(p, 1, testutil::random_sub(p.q(), k, n, rng));
      expect_matches_oracle(analyze_irreducible(c), c);
    }
}

TEST(AnalyzeIrreducible, AgreesWithPrimitiveAnalyzer) {
  std::mt19937_64 rng(113);
  for (int t = 0; t < 30; ++t) {
    const auto c = single(kP6, 1, testutil::random_sub(2, 1 + rng() % 4, 6, rng));
    EXPECT_EQ(analyze_irreducible(c), analyze_primitive(c));
  }
}

TEST(AnalyzeIrreducible, Order33StartsReachDistanceFour) {
  const Poly p = find_irreducible_with_order(PrimeField(2), 10, 33);
  std::mt19937_64 rng(127);
  bool found = false;
  for (int t = 0; t < 200 && !found; ++t) {
    const auto r = analyze_irreducible(single(p, 1, testutil::random_sub(2, 2, 10, rng)));
    found = r.cardinality == 33 && r.min_distance == 4u;
  }
  EXPECT_TRUE(found);
}

TEST(AnalyzeReducibleBlocks, Examples) {
  const ElementaryDivisorSpec spec{2, {{kP4, 1}, {kP6, 1}}};
  const CyclicOrbitCode diag(spec, rows(2, 10, {"1000000000", "0110000000", "0000100000", "0000010111"}));
  EXPECT_EQ(analyze_reducible_blocks(diag).cardinality, 105u);
  EXPECT_EQ(analyze_reducible_blocks(diag).min_distance, 4u);
  const CyclicOrbitCode concat(spec, rows(2, 10, {"1000100000", "0110010111"}));
  EXPECT_EQ(analyze_reducible_blocks(concat).cardinality, 315u);
  EXPECT_EQ(analyze_reducible_blocks(concat).min_distance, 4u);
  EXPECT_THROW(analyze_reducible_blocks(single(kP4, 1, rows(2, 4, {"1000"}))), Error);
  const CyclicOrbitCode nonprim(ElementaryDivisorSpec{2, {{kP5, 1}, {kP4, 1}}}, rows(2, 8, {"10000000"}));
  EXPECT_THROW(analyze_reducible_blocks(nonprim), Error);
}

TEST(AnalyzeReducibleBlocks, MatchesOracleOnRandomStarts) {
  std::mt19937_64 rng(131);
  const std::vector<std::pair<Poly, Poly>> pairs = {
      {Poly::parse(2, "1 1 1"), Poly::parse(2, "1 1 0 1")},
      {Poly::parse(2, "1 1 0 1"), Poly::parse(2, "1 0 1 1")},
      {Poly::parse(2, "1 1"), kP4},
      {Poly::parse(2, "1 1 1"), kP4},
      {Poly::parse(3, "1 1"), Poly::parse(3, "2 1 1")},
      {Poly::parse(3, "2 1 1"), Poly::parse(3, "1 2 0 1")},
  };
  for (const auto& [a, b] : pairs)
    for (int t = 0; t < 12; ++t) {
      const std::size_t n = *a.degree() + *b.degree();
      const std::size_t k = 1 + rng() % std::min<std::size_t>(4, n - 1);
      const CyclicOrbitCode c(ElementaryDivisorSpec{a.q(), {{a, 1}, {b, 1}}}, testutil::random_sub(a.q(), k, n, rng));
      expect_matches_oracle(analyze_reducible_blocks(c), c);
    }
}

TEST(AnalyzeNonsemisimple, ExhaustiveOverAllTwoDimensionalStarts) {
  const Poly p = Poly::parse(2, "1 1 1");
  std::set<Subspace> seen;
  for (std::uint32_t a = 1; a < 16; ++a)
    for (std::uint32_t b = 1; b < 16; ++b) {
      Vec va(4), vb(4);
      for (int i = 0; i < 4; ++i) {
        va[i] = (a >> i) & 1;
        vb[i] = (b >> i) & 1;
      }
      const Subspace s = Subspace::span(2, 4, {va, vb});
      if (s.dim() == 2) seen.insert(s);
    }
  ASSERT_EQ(seen.size(), 35u);
  for (const auto& s : seen) {
    const auto c = single(p, 2, s);
    expect_matches_oracle(analyze_nonsemisimple(c), c);
  }
}

TEST(AnalyzeNonsemisimple, InvariantKernelHasCardinalityOne) {
  const Poly p = Poly::parse(2, "1 1 1");
  const Mat m = build_generator({2, {{p, 2}}});
  const Mat ker = right_kernel(transpose(poly_eval(p, m)));
  const Subspace u = Subspace::span(ker);
  ASSERT_EQ(u.dim(), 2u);
  EXPECT_EQ(u.transform(m), u);
  EXPECT_EQ(analyze_nonsemisimple(single(p, 2, u)).cardinality, 1u);
}

TEST(AnalyzeNonsemisimple, TrivialStabilizerGivesFullOrder) {
  const Poly p = Poly::parse(2, "1 1 1");
  const auto c = single(p, 2, rows(2, 4, {"1000"}));
  EXPECT_EQ(analyze_nonsemisimple(c).cardinality, matrix_order(c.generator()));
}

TEST(AnalyzeNonsemisimple, MatchesOracleOnRandomStarts) {
  std::mt19937_64 rng(137);
  std::vector<Poly> ps;
  for (std::size_t d : {1u, 2u, 3u}) for (auto& p : irreducible_of_degree(2, d)) ps.push_back(p);
  for (std::size_t d : {1u, 2u}) for (auto& p : irreducible_of_degree(3, d)) ps.push_back(p);
  for (const auto& p : ps)
    for (int t = 0; t < 6; ++t) {
      const std::size_t n = 2 * *p.degree();
      const std::size_t k = 1 + rng() % std::min<std::size_t>(4, n - 1);
      const auto c = single(p, 2, testutil::random_sub(p.q(), k, n, rng));
      Diagnostics diag;
      expect_matches_oracle(analyze_nonsemisimple(c, &diag), c);
    }
  EXPECT_THROW(analyze_nonsemisimple(single(kP4, 1, rows(2, 4, {"1000"}))), Error);
}

TEST(Analyze, DispatchesByRegime) {
  std::string used;
  analyze(single(kP4, 1, rows(2, 4, {"1000"})), &used);
  EXPECT_EQ(used, "primitive");
  analyze(single(kP5, 1, rows(2, 4, {"1000"})), &used);
  EXPECT_EQ(used, "irreducible");
  analyze(single(Poly::parse(2, "1 1 1"), 2, rows(2, 4, {"1000"})), &used);
  EXPECT_EQ(used, "non_semisimple");
  analyze(CyclicOrbitCode(ElementaryDivisorSpec{2, {{kP4, 1}, {kP6, 1}}}, rows(2, 10, {"1000000000"})), &used);
  EXPECT_EQ(used, "reducible_blocks");
  analyze(CyclicOrbitCode(ElementaryDivisorSpec{2, {{kP5, 1}, {kP4, 1}}}, rows(2, 8, {"10000000"})), &used);
  EXPECT_EQ(used, "naive");
}

TEST(ParamsFromCounts, Examples) {
  // q=2, k=2, order 5, U stabilized by g=5 only: all counts below full.
  const std::vector<std::uint64_t> c1 = {3, 0, 1, 1, 0};
  const auto p1 = params_from_counts(2, 2, c1);
  EXPECT_EQ(p1.cardinality, 5u);
  EXPECT_EQ(p1.min_distance, 2u);
  EXPECT_EQ(*p1.distribution, (std::vector<std::uint64_t>{1, 2, 2}));
  // Full count at g=3: orbit of length 3.
  const std::vector<std::uint64_t> c2 = {3, 0, 0, 3, 0, 0};
  const auto p2 = params_from_counts(2, 2, c2);
  EXPECT_EQ(p2.cardinality, 3u);
  EXPECT_EQ(p2.min_distance, 4u);
  const std::vector<std::uint64_t> bad = {3, 2, 0};
  EXPECT_THROW(params_from_counts(2, 2, bad), Error);
  const std::vector<std::uint64_t> over = {3, 7, 0};
  EXPECT_THROW(params_from_counts(2, 2, over), Error);
}

TEST(DifferenceMultisetTest, FoldAndFreeCoordinates) {
  DifferenceMultiset d({3, 5});
  d.add({1, 2});
  d.add({1, 2});
  d.add({0, DifferenceMultiset::kFree});
  d.add({-1, 2});
  EXPECT_EQ(d.multiplicity({1, 2}), 2u);
  EXPECT_EQ(d.multiplicity({0, 4}), 1u);
  EXPECT_EQ(d.max_multiplicity(), 2u);
  const auto f = d.fold(15);
  ASSERT_EQ(f.size(), 15u);
  EXPECT_EQ(f[7], 2u);   // 7 = (1, 2)
  EXPECT_EQ(f[12], 1u);
  EXPECT_EQ(f[3], 1u);
  EXPECT_EQ(f[2], 1u);   // -1 = 2 mod 3 with 2 mod 5
  EXPECT_EQ(f[1], 0u);
  EXPECT_THROW(d.add({1}), Error);
  EXPECT_THROW(DifferenceMultiset({}), Error);
  EXPECT_THROW(DifferenceMultiset({0}), Error);
}

TEST(DifferenceMultisetTest, UnreachablePairKeysAreDropped) {
  DifferenceMultiset d({2, 4});
  d.add({0, 1});  // g = 0 mod 2 and g = 1 mod 4 has no solution
  d.add({1, 1});
  const auto f = d.fold(4);
  EXPECT_EQ(std::accumulate(f.begin(), f.end(), std::uint64_t{0}), 1u);
  EXPECT_EQ(f[1], 1u);
}

TEST(PrimitiveDifferences, MaximumMatchesIntersection) {
  const auto s3 = single(kP6, 1, rows(2, 6, {"100000", "000110", "111100"}));
  const auto d = primitive_differences(s3);
  EXPECT_EQ(d.moduli(), (std::vector<std::uint64_t>{63}));
  EXPECT_EQ(d.multiplicity({9}), 7u);
  EXPECT_EQ(d.max_multiplicity(), 7u);
}

TEST(BlockBounds, DiagonalAndConcatenatedExamples) {
  const ElementaryDivisorSpec spec{2, {{kP4, 1}, {kP6, 1}}};
  const CyclicOrbitCode diag(spec, rows(2, 10, {"1000000000", "0110000000", "0000100000", "0000010111"}));
  EXPECT_EQ(start_shape(diag), StartShape::diagonal);
  std::vector<CodeParams> comps;
  for (const auto& c : component_codes(diag)) comps.push_back(analyze(c));
  ASSERT_EQ(comps.size(), 2u);
  EXPECT_EQ(comps[0].cardinality, 5u);
  EXPECT_EQ(comps[1].cardinality, 21u);
  const auto b = block_bounds(diag, comps);
  EXPECT_EQ(b.cardinality, 105u);
  EXPECT_EQ(b.distance_lower_bound, 4u);
  EXPECT_TRUE(b.distance_is_exact);
  EXPECT_EQ(105u % b.stabilizer_lower, 0u);

  const CyclicOrbitCode concat(spec, rows(2, 10, {"1000100000", "0110010111"}));
  EXPECT_EQ(start_shape(concat), StartShape::concatenated);
  comps.clear();
  for (const auto& c : component_codes(concat)) comps.push_back(analyze(c));
  const auto bc = block_bounds(concat, comps);
  EXPECT_EQ(bc.distance_lower_bound, 4u);
  EXPECT_FALSE(bc.cardinality);
  const auto measured = analyze_naive(concat);
  EXPECT_GE(*measured.min_distance, *bc.distance_lower_bound);
  EXPECT_EQ(measured.cardinality % bc.stabilizer_lower, 0u);

  EXPECT_THROW(block_bounds(diag, std::span<const CodeParams>(comps.data(), 1)), Error);
}

TEST(BlockBounds, SingleBlockCollapses) {
  const auto c = single(kP4, 1, rows(2, 4, {"1000", "0110"}));
  EXPECT_EQ(start_shape(c), StartShape::single);
  const std::vector<CodeParams> comps = {analyze(c)};
  const auto b = block_bounds(c, comps);
  EXPECT_EQ(b.cardinality, 5u);
  EXPECT_EQ(b.distance_lower_bound, 4u);
}

TEST(BlockBounds, ShapeMismatchThrows) {
  const CyclicOrbitCode c(ElementaryDivisorSpec{2, {{kP4, 1}, {kP6, 1}}},
                          rows(2, 10, {"1000100000", "0100000000"}));
  EXPECT_THROW(start_shape(c), Error);
}

TEST(BlockBounds, DiagonalCardinalityIsExactOnRandomStarts) {
  std::mt19937_64 rng(139);
  const Poly a = Poly::parse(2, "1 1 0 1"), b = kP4;
  for (int t = 0; t < 20; ++t) {
    const Subspace u1 = testutil::random_sub(2, 1 + rng() % 2, 3, rng);
    const Subspace u2 = testutil::random_sub(2, 1 + rng() % 3, 4, rng);
    std::vector<Vec> r;
    for (std::size_t i = 0; i < u1.dim(); ++i) {
      Vec v(7, 0);
      std::copy(u1.basis().row(i).begin(), u1.basis().row(i).end(), v.begin());
      r.push_back(v);
    }
    for (std::size_t i = 0; i < u2.dim(); ++i) {
      Vec v(7, 0);
      std::copy(u2.basis().row(i).begin(), u2.basis().row(i).end(), v.begin() + 3);
      r.push_back(v);
    }
    const CyclicOrbitCode c(ElementaryDivisorSpec{2, {{a, 1}, {b, 1}}}, Subspace::span(2, 7, r));
    std::vector<CodeParams> comps;
    for (const auto& x : component_codes(c)) comps.push_back(analyze_naive(x));
    const auto bounds = block_bounds(c, comps);
    const auto real = analyze_naive(c);
    EXPECT_EQ(bounds.cardinality, real.cardinality);
    if (real.min_distance && bounds.distance_lower_bound) EXPECT_GE(*real.min_distance, *bounds.distance_lower_bound);
    if (bounds.distance_is_exact && real.min_distance) EXPECT_EQ(real.min_distance, bounds.distance_lower_bound);
    if (bounds.distance_sum_bound && real.min_distance) EXPECT_GE(*real.min_distance, *bounds.distance_sum_bound);
  }
}

TEST(DistanceDistribution, SpreadAndMacWilliams) {
  const auto s3 = single(kP6, 1, rows(2, 6, {"100000", "000110", "111100"}));
  EXPECT_EQ(*distance_distribution(s3).distribution, (std::vector<std::uint64_t>{1, 0, 0, 8}));
  EXPECT_TRUE(macwilliams_check(s3));
  const auto d = dual_code(s3);
  EXPECT_EQ(d.generator(), transpose(s3.generator()));
  EXPECT_EQ(d.start(), dual(s3.start()));
  EXPECT_THROW(dual_code(single(kP4, 1, Subspace::full(2, 4))), Error);
}

TEST(DistanceDistribution, MacWilliamsOnRandomCodes) {
  std::mt19937_64 rng(149);
  for (unsigned q : {2u, 3u})
    for (int t = 0; t < 30; ++t) {
      const std::size_t n = 2 + rng() % (q == 2 ? 5 : 3);
      const CyclicOrbitCode c(testutil::random_gl(q, n, rng), testutil::random_sub(q, 1 + rng() % (n - 1), n, rng));
      EXPECT_TRUE(macwilliams_check(c));
    }
}
