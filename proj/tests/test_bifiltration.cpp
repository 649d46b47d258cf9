#include <gtest/gtest.h>

#include <memory>

#include "cliffilt/bifiltration.hpp"
#include "cliffilt/error.hpp"
#include "support/generators.hpp"

namespace cliffilt {
namespace {

std::shared_ptr<const CliffordAlgebra> cl(std::size_t n) { return std::make_shared<const CliffordAlgebra>(n); }

std::vector<std::pair<std::size_t, std::size_t>> small_pairs() {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t p = 1; p <= 3; ++p)
    for (std::size_t q = 1; p + q <= 4; ++q) out.emplace_back(p, q);
  return out;
}

BiGradedRep with_sigma(const BiGradedRep& r, BiGradedRep::Table sigma) {
  return BiGradedRep(r.plus_ptr(), r.minus_ptr(), r.stored_dims(), std::move(sigma), r.stored_tau(), r.stored_qp(),
                     r.stored_qm());
}

TEST(TwistedTensor, Cl2Cl3SatisfiesCl5Relations) {
  const TwistedTensor t(cl(2), cl(3));
  EXPECT_EQ(t.dimension(), 32u);
  const Certificate c = check_twisted_clifford(t);
  EXPECT_TRUE(c) << c.witness.dump();
  for (std::size_t a = 1; a <= 5; ++a)
    for (std::size_t b = 1; b <= 5; ++b) {
      const Vector ga = t.generator(a), gb = t.generator(b);
      Vector anti = t.product(ga, gb);
      const Vector other = t.product(gb, ga);
      for (std::size_t k = 0; k < anti.size(); ++k) anti[k] += other[k];
      Vector expected(32);
      if (a == b) expected[0] = Rational(2);
      EXPECT_EQ(anti, expected) << a << "," << b;
    }
}

TEST(TwistedTensor, KoszulSign) {
  const TwistedTensor t(cl(1), cl(1));
  // (1 (x) g1)(g1 (x) 1) = -(g1 (x) g1), while (g1 (x) 1)(1 (x) g1) = +(g1 (x) g1).
  const auto left = t.pair_product(0, 1, 1, 0);
  const auto right = t.pair_product(1, 0, 0, 1);
  ASSERT_EQ(left.size(), 1u);
  ASSERT_EQ(right.size(), 1u);
  EXPECT_EQ(left[0].first, t.pair_blade(1, 1));
  EXPECT_EQ(left[0].second, Rational(-1));
  EXPECT_EQ(right[0].second, Rational(1));
  EXPECT_EQ(t.split(t.pair_blade(1, 1)), (std::pair<Blade, Blade>{1, 1}));
}

TEST(TwistedTensor, OtherShapes) {
  for (auto [p, q] : std::vector<std::pair<std::size_t, std::size_t>>{{1, 1}, {3, 2}, {1, 4}})
    EXPECT_TRUE(check_twisted_clifford(TwistedTensor(cl(p), cl(q)))) << p << "," << q;
}

TEST(TwistedTensor, LevelsAreProducts) {
  const TwistedTensor t(cl(2), cl(2));
  EXPECT_EQ(t.level(0, 0).dim(), 1u);
  EXPECT_EQ(t.level(1, 1).dim(), 4u);
  EXPECT_EQ(t.level(2, 1).dim(), 4u);
  EXPECT_EQ(t.level(3, 3).dim(), 4u);
  EXPECT_TRUE(t.level(-1, 0).is_zero());
}

TEST(Bifiltration, RegularModuleWorkflow) {
  const Bifiltration f = regular_bifiltered_module(2, 2);
  EXPECT_TRUE(check_bimodule(f.module()));
  EXPECT_TRUE(check_bifiltration(f));
  const BiGradedRep r = bideform(f);
  const Certificate v = verify_2d(r);
  EXPECT_TRUE(v) << v.witness.dump();
  EXPECT_EQ(two_stage_dims(f), f.dims());
  EXPECT_TRUE(bifiltered_roundtrip(f));
  const Bifiltration back = biquotient(r);
  EXPECT_EQ(back.dims(), f.dims());
}

TEST(Bifiltration, HelicityAndStabilization) {
  const BiGradedRep r = bideform(regular_bifiltered_module(1, 1));
  EXPECT_EQ(r.helicity(3, 1), Matrix::scalar(r.dim(3, 1), 2));
  EXPECT_EQ(r.dim(r.top_plus() + 2, 0), r.dim(r.top_plus(), 0));
  const Matrix far = r.sigma(r.top_plus() + 3, 0);
  EXPECT_EQ(far, Matrix::identity(far.rows()));
}

TEST(Bifiltration, CorruptedLevelRejected) {
  const Bifiltration f = regular_bifiltered_module(1, 2);
  auto levels = f.levels();
  levels[0][0] = Subspace::zero(levels[0][0].ambient_dim());
  levels[1][0] = Subspace::full(levels[1][0].ambient_dim());
  levels[1][1] = Subspace::zero(levels[1][1].ambient_dim());
  const Certificate c = check_bifiltration(Bifiltration(f.module_ptr(), levels));
  EXPECT_FALSE(c);
  EXPECT_TRUE(c.witness.contains("condition"));
}

TEST(Bifiltration, BrokenBimoduleRejected) {
  const Bifiltration f = regular_bifiltered_module(1, 1);
  const BiSupermodule& m = f.module();
  std::vector<BiSupermodule::Blocks> plus, minus;
  for (std::size_t i = 0; i < m.plus_generators(); ++i)
    plus.push_back({m.gamma_plus(i, 0, 0), m.gamma_plus(i, 0, 1), m.gamma_plus(i, 1, 0), m.gamma_plus(i, 1, 1)});
  for (std::size_t j = 0; j < m.minus_generators(); ++j)
    minus.push_back({m.gamma_minus(j, 0, 0), m.gamma_minus(j, 0, 1), m.gamma_minus(j, 1, 0), m.gamma_minus(j, 1, 1)});
  // Flipping the sign of one block of the minus family breaks anticommutation with the plus family.
  minus[0][0] = minus[0][0] * Rational(-1);
  const BiSupermodule bad(m.plus_ptr(), m.minus_ptr(), m.dims(), plus, minus);
  const Certificate c = check_bimodule(bad);
  EXPECT_FALSE(c);
  EXPECT_TRUE(c.witness.contains("family"));
}

TEST(Bifiltration, MutatedRepRejected) {
  const BiGradedRep r = bideform(regular_bifiltered_module(2, 1));
  BiGradedRep::Table sigma = r.stored_sigma();
  Matrix* target = nullptr;
  for (auto& row : sigma)
    for (auto& m : row)
      if (!target && !m.empty()) target = &m;
  ASSERT_NE(target, nullptr);
  Matrix zeroed(target->rows(), target->cols());
  (*target)(0, 0) += Rational(1);
  EXPECT_FALSE(verify_2d(with_sigma(r, sigma)));
  *target = zeroed;
  EXPECT_FALSE(verify_2d(with_sigma(r, sigma)));
  EXPECT_THROW((void)biquotient(with_sigma(r, sigma)), ContractError);
}

TEST(BifiltrationProperties, RandomSuite) {
  Rng rng(testing::kSuiteSeed);
  const auto pairs = small_pairs();
  for (int t = 0; t < 50; ++t) {
    const auto [p, q] = pairs[static_cast<std::size_t>(t) % pairs.size()];
    const Bifiltration f = random_bifiltration(p, q, rng);
    ASSERT_LE(f.module().dim_total(), 16u);
    ASSERT_TRUE(check_bifiltration(f)) << t;
    const BiGradedRep r = bideform(f);
    const Certificate v = verify_2d(r);
    ASSERT_TRUE(v) << t << v.witness.dump();
    EXPECT_TRUE(bifiltered_roundtrip(f)) << t;
    EXPECT_EQ(two_stage_dims(f), f.dims()) << t;
  }
}

// sigma tau z - z and sigma z - tau z vanish in the (sigma - 1, tau - 1) quotient.
TEST(BifiltrationProperties, MembershipIdentities) {
  Rng rng(testing::kSuiteSeed + 1);
  for (int t = 0; t < 20; ++t) {
    const auto [p, q] = small_pairs()[rng.index(small_pairs().size())];
    const BiGradedRep r = bideform(random_bifiltration(p, q, rng));
    const int m = static_cast<int>(rng.index(static_cast<std::size_t>(r.top_plus()) + 1));
    const int n = static_cast<int>(rng.index(static_cast<std::size_t>(r.top_minus()) + 1));
    if (r.dim(m, n) == 0) continue;
    const Vector z = rng.vector(r.dim(m, n), 3);
    const Vector st = cliffilt::apply(cliffilt::apply(z, r.sigma(m, n)), r.tau(m + 2, n));
    const Vector s = cliffilt::apply(z, r.sigma(m, n));
    const Vector tz = cliffilt::apply(z, r.tau(m, n));
    EXPECT_EQ(r.quotient_class(m + 2, n + 2, st), r.quotient_class(m, n, z));
    EXPECT_EQ(r.quotient_class(m + 2, n, s), r.quotient_class(m, n + 2, tz));
  }
}

TEST(BifiltrationProperties, TwistedAssociativity) {
  Rng rng(testing::kSuiteSeed + 2);
  for (std::size_t p = 1; p <= 4; ++p)
    for (std::size_t q = 1; p + q <= 5; ++q) {
      const TwistedTensor t(cl(p), cl(q));
      for (int k = 0; k < 3; ++k) {
        const Vector x = rng.vector(t.dimension(), 2), y = rng.vector(t.dimension(), 2),
                     z = rng.vector(t.dimension(), 2);
        EXPECT_EQ(t.product(t.product(x, y), z), t.product(x, t.product(y, z)));
      }
    }
}

}  // namespace
}  // namespace cliffilt
