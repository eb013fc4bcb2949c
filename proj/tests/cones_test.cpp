#include "cyclecone/cones.hpp"

#include <gtest/gtest.h>

#include <random>

#include "cyclecone/numtheory.hpp"
#include "oracles.hpp"

using namespace cyclecone;

namespace {

ClassVector vec(std::vector<long> c, int weight = 0) {
  ClassVector v{weight, {}};
  for (auto x : c) v.coordinates.emplace_back(x);
  return v;
}

ClassVector random_vector(std::mt19937_64& rng, std::size_t d) {
  ClassVector v{0, {}};
  do {
    v.coordinates.clear();
    for (std::size_t i = 0; i < d; ++i) {
      v.coordinates.push_back(make_rational(static_cast<long>(rng() % 41) - 20, 1 + static_cast<long>(rng() % 6)));
    }
  } while (v.is_zero());
  return v;
}

bool is_prime(std::uint64_t p) { return p >= 2 && factorize(p).size() == 1 && factorize(p)[0].exponent == 1; }

}  // namespace

TEST(Canonicalize, Examples) {
  EXPECT_EQ(canonicalize(vec({2, 0})).canonical(), vec({1, 0}));
  EXPECT_EQ(canonicalize(vec({-3, 1})).canonical().coordinates,
            (std::vector<ExactRational>{-1, ExactRational(1, 3)}));
  EXPECT_THROW(canonicalize(vec({0, 0})), std::invalid_argument);
  EXPECT_NE(canonicalize(vec({1, 2})), canonicalize(vec({-1, -2})));
}

TEST(Canonicalize, IdempotentAndPositiveScaleInvariant) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 300; ++trial) {
    const ClassVector v = random_vector(rng, 1 + rng() % 4);
    const ExactRational scale = make_rational(1 + static_cast<long>(rng() % 50), 1 + static_cast<long>(rng() % 50));
    ClassVector scaled = v;
    for (auto& c : scaled.coordinates) c *= scale;
    const Ray r = canonicalize(v);
    ASSERT_EQ(canonicalize(scaled), r);
    ASSERT_EQ(canonicalize(r.canonical()), r);
    ExactRational largest = 0;
    for (const auto& c : r.canonical().coordinates) largest = std::max(largest, abs_value(c));
    ASSERT_EQ(largest, 1);
  }
}

TEST(RayDistance, Examples) {
  const Ray e0 = canonicalize(vec({1, 0}));
  EXPECT_EQ(ray_distance(e0, e0), 0);
  EXPECT_EQ(ray_distance(e0, canonicalize(vec({-1, 0}))), 2);
  for (const auto& eps : {ExactRational(1), ExactRational(1, 2), ExactRational(1, 1000)}) {
    ClassVector v = vec({1, 0});
    v.coordinates[1] = eps;
    EXPECT_EQ(ray_distance(canonicalize(v), e0), eps);
  }
  EXPECT_THROW(ray_distance(e0, canonicalize(vec({1}))), std::invalid_argument);
}

TEST(RayDistance, IsAMetric) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t d = 1 + rng() % 3;
    const Ray a = canonicalize(random_vector(rng, d));
    const Ray b = canonicalize(random_vector(rng, d));
    const Ray c = canonicalize(random_vector(rng, d));
    ASSERT_EQ(ray_distance(a, b), ray_distance(b, a));
    ASSERT_EQ(ray_distance(a, b) == 0, a == b);
    ASSERT_LE(ray_distance(a, c), ray_distance(a, b) + ray_distance(b, c));
  }
}

TEST(OmegaRay, IsMinusE0) {
  EXPECT_EQ(omega_ray(6).canonical().coordinates, (std::vector<ExactRational>{-1}));
  EXPECT_EQ(omega_ray(12).canonical().coordinates, (std::vector<ExactRational>{-1, 0}));
  EXPECT_EQ(omega_ray(18).canonical().coordinates, (std::vector<ExactRational>{-1, 0}));
  EXPECT_THROW(omega_ray(2), std::domain_error);
}

TEST(ConvergenceScan, OneDimensionalSpaceGivesZero) {
  std::vector<std::uint64_t> ms;
  for (std::uint64_t m = 1; m <= 60; ++m) ms.push_back(m);
  for (bool primitive : {true, false}) {
    for (const auto& row : convergence_scan(miller_basis(6, 61), ms, primitive)) EXPECT_EQ(row.distance, 0);
  }
}

TEST(ConvergenceScan, Weight18SmallBeyond100) {
  std::vector<std::uint64_t> ms;
  for (std::uint64_t m = 100; m <= 200; ++m) ms.push_back(m);
  for (const auto& row : convergence_scan(miller_basis(18, 201), ms, true)) {
    EXPECT_LT(row.distance, ExactRational(1, 1'000'000)) << "m = " << row.m;
  }
}

TEST(ConvergenceScan, Weight18PrimesStayUnderCuspEnvelope) {
  // For prime p the ray offset is |a_p(cusp form)| / |c_p(f_0)| with
  // |a_p| <= 2 p^{17/2}, so distance^2 * p^17 stays bounded.
  std::vector<std::uint64_t> primes;
  for (std::uint64_t p = 2; p < 200; ++p) {
    if (is_prime(p)) primes.push_back(p);
  }
  for (const auto& row : convergence_scan(miller_basis(18, 200), primes, true)) {
    BigInt p17;
    mpz_ui_pow_ui(p17.get_mpz_t(), row.m, 17);
    EXPECT_LE(row.distance * row.distance * ExactRational(p17), 16) << "p = " << row.m;
  }
}

TEST(ConvergenceScan, PrecisionShortfallThrows) {
  EXPECT_THROW(convergence_scan(miller_basis(18, 10), {10}, true), std::out_of_range);
}

TEST(AccumulationCone, WeightSixIsASingleRay) {
  const Cone c = accumulation_cone_model(6, 40);
  EXPECT_EQ(c.generators().size(), 41U);
  for (const auto& g : c.generators()) EXPECT_EQ(canonicalize(g), omega_ray(6));
  EXPECT_EQ(span_dimension(c), 1U);
  EXPECT_TRUE(is_pointed(c));
  EXPECT_EQ(extremal_generators(c), (std::vector<std::size_t>{0}));
}

TEST(AccumulationCone, Weight18IsTwoDimensionalAndPointed) {
  const Cone c = accumulation_cone_model(18, 50);
  EXPECT_EQ(c.generators().size(), 51U);
  EXPECT_EQ(span_dimension(c), 2U);
  EXPECT_TRUE(is_pointed(c));
}

TEST(AccumulationCone, SpanDimensionGrowsThenStabilizes) {
  for (int k : {12, 18, 24, 34, 40}) {
    const auto d = static_cast<std::size_t>(dim_mk(k));
    const MillerBasis b = miller_basis(k, 30);
    std::size_t previous = 0;
    for (std::uint64_t m = 0; m < 30; ++m) {
      const std::size_t dim = span_dimension(accumulation_cone_model(b, m));
      ASSERT_GE(dim, previous);
      if (m + 1 >= d) ASSERT_EQ(dim, d) << "k = " << k << " M = " << m;
      previous = dim;
    }
  }
}

TEST(AccumulationCone, EisensteinEvaluationSeparatesPhysicalWeights) {
  for (int k : {6, 10, 14, 18, 22, 26, 34}) {
    const std::uint64_t top = 60;
    const MillerBasis b = miller_basis(k, top + 1);
    const Cone c = accumulation_cone_model(b, top);
    const QSeries e = eisenstein(k, top + 1);

    // y = -(evaluation at E_k) / (smallest generator value) meets <y, g> >= 1.
    std::vector<ExactRational> y;
    for (std::size_t i = 0; i < b.dimension(); ++i) y.emplace_back(-e[i]);
    ExactRational smallest = 0;
    for (const auto& g : c.generators()) {
      const ExactRational value = -evaluate(g, e);
      ASSERT_GT(value, 0);
      if (smallest == 0 || value < smallest) smallest = value;
      ExactRational dot = 0;
      for (std::size_t i = 0; i < y.size(); ++i) dot += y[i] * g.coordinates[i];
      ASSERT_EQ(dot, value);
    }
    EXPECT_TRUE(is_pointed(c));
    const auto witness = pointedness_witness(c);
    ASSERT_TRUE(witness.has_value());
    for (const auto& g : c.generators()) {
      ExactRational dot = 0;
      for (std::size_t i = 0; i < g.dimension(); ++i) dot += (*witness)[i] * g.coordinates[i];
      ASSERT_GE(dot, 1);
    }
  }
}

TEST(Cone, RejectsBadGenerators) {
  EXPECT_THROW(Cone(0, {vec({0, 0})}), std::invalid_argument);
  EXPECT_THROW(Cone(0, {vec({1, 0}), vec({1})}), std::invalid_argument);
}

TEST(IsPointed, Examples) {
  EXPECT_TRUE(is_pointed(Cone(0, {vec({1})})));
  EXPECT_FALSE(is_pointed(Cone(0, {vec({1}), vec({-1})})));
  EXPECT_FALSE(is_pointed(Cone(0, {vec({1, 0}), vec({-1, 1}), vec({0, -1})})));
  EXPECT_TRUE(is_pointed(Cone(0, {vec({1, 0}), vec({-1, 1}), vec({0, 1})})));
  EXPECT_TRUE(is_pointed(accumulation_cone_model(18, 200)));
}

TEST(Member, Examples) {
  const Cone c(0, {vec({1, 0}), vec({1, 1})});
  for (const auto& g : c.generators()) EXPECT_TRUE(member(g, c));
  EXPECT_TRUE(member(vec({0, 0}), c));
  EXPECT_TRUE(member(vec({5, 2}), c));
  EXPECT_FALSE(member(vec({1, 2}), c));
  EXPECT_FALSE(member(vec({1}), Cone(0, {vec({-1})})));
  EXPECT_THROW(member(vec({1}), c), std::invalid_argument);
}

TEST(Member, EveryGeneratorOfAccumulationConesIsMember) {
  const Cone c = accumulation_cone_model(34, 30);
  for (const auto& g : c.generators()) EXPECT_TRUE(member(g, c));
}

TEST(ExtremalGenerators, Examples) {
  EXPECT_EQ(extremal_generators(Cone(0, {vec({1, 0}), vec({0, 1}), vec({1, 1})})),
            (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(extremal_generators(Cone(0, {vec({1})})), (std::vector<std::size_t>{0}));
  EXPECT_EQ(extremal_generators(Cone(0, {vec({1, 0}), vec({2, 0}), vec({0, 3}), vec({1, 1})})),
            (std::vector<std::size_t>{0, 2}));
  EXPECT_THROW(extremal_generators(Cone(0, {vec({1}), vec({-1})})), std::domain_error);
}

TEST(ExtremalGenerators, StableBetweenTruncations) {
  for (int k : {18, 34}) {
    const MillerBasis b = miller_basis(k, 201);
    EXPECT_EQ(extremal_rays(accumulation_cone_model(b, 100)), extremal_rays(accumulation_cone_model(b, 200)))
        << "k = " << k;
  }
}

TEST(SpanDimension, Examples) {
  EXPECT_EQ(span_dimension(Cone(0, {vec({1})})), 1U);
  EXPECT_EQ(span_dimension(accumulation_cone_model(18, 2)), 2U);
  EXPECT_EQ(span_dimension(accumulation_cone_model(34, 3)), 3U);
}

TEST(LpOracle, RandomSmallConesAgreeWithBruteForce) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t d = 1 + rng() % 3;
    const std::size_t count = 1 + rng() % 5;
    std::vector<ClassVector> gens;
    std::vector<oracle::Vec> raw;
    while (gens.size() < count) {
      ClassVector g{0, {}};
      for (std::size_t i = 0; i < d; ++i) g.coordinates.emplace_back(static_cast<long>(rng() % 5) - 2);
      if (g.is_zero()) continue;
      raw.push_back(g.coordinates);
      gens.push_back(std::move(g));
    }
    const Cone c(0, gens);
    ASSERT_EQ(is_pointed(c), oracle::pointed(raw, d)) << "trial " << trial;
    for (int probe = 0; probe < 5; ++probe) {
      ClassVector v{0, {}};
      for (std::size_t i = 0; i < d; ++i) v.coordinates.emplace_back(static_cast<long>(rng() % 5) - 2);
      ASSERT_EQ(member(v, c), oracle::member(v.coordinates, raw)) << "trial " << trial;
    }
  }
}
