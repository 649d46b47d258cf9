#include <gtest/gtest.h>

#include <memory>

#include "cliffilt/clifford.hpp"
#include "cliffilt/error.hpp"
#include "cliffilt/random.hpp"
#include "support/generators.hpp"

namespace cliffilt {
namespace {

using AlgebraPtr = std::shared_ptr<const CliffordAlgebra>;

// Orthonormal reordering sign, counted directly from the bitmasks.
int swap_sign(Blade a, Blade b) {
  int swaps = 0;
  for (Blade rest = a >> 1; rest != 0; rest >>= 1) swaps += blade_grade(rest & b);
  return swaps % 2 == 0 ? 1 : -1;
}

std::size_t binomial(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

CliffordElement random_element(const AlgebraPtr& a, Rng& rng) {
  return CliffordElement::from_vector(a, rng.vector(a->dimension(), 2));
}

TEST(Clifford, BasisOrderIsCardinalityThenLex) {
  const CliffordAlgebra a(3);
  const std::vector<Blade> expected{0b000, 0b001, 0b010, 0b100, 0b011, 0b101, 0b110, 0b111};
  EXPECT_EQ(a.basis(), expected);
  for (std::size_t k = 0; k < expected.size(); ++k) EXPECT_EQ(a.index_of(expected[k]), k);
  EXPECT_EQ(blade_indices(0b101), (std::vector<int>{1, 3}));
  EXPECT_EQ(blade_from_indices({2, 3}), Blade{0b110});
}

TEST(Clifford, MonomialProductsMatchSignOracle) {
  for (std::size_t n = 1; n <= 5; ++n) {
    const CliffordAlgebra a(n);
    for (Blade x : a.basis())
      for (Blade y : a.basis()) {
        const BladeCombination p = a.monomial_product(x, y);
        ASSERT_EQ(p.size(), 1u);
        EXPECT_EQ(p[0].first, x ^ y);
        EXPECT_EQ(p[0].second, Rational(swap_sign(x, y)));
      }
  }
}

TEST(Clifford, SmallProductsByHand) {
  auto a = std::make_shared<const CliffordAlgebra>(2);
  const auto g1 = CliffordElement::generator(a, 1), g2 = CliffordElement::generator(a, 2);
  EXPECT_EQ(g1 * g1, CliffordElement::scalar(a, 1));
  EXPECT_EQ(g2 * g1, CliffordElement::monomial(a, 0b11, Rational(-1)));
  const auto e12 = g1 * g2;
  EXPECT_EQ(e12 * e12, CliffordElement::scalar(a, -1));
}

TEST(Clifford, NonDiagonalGramMatchesRewritingOracle) {
  const Matrix gram{{2, 1, 0}, {1, 2, Rational(1, 2)}, {0, Rational(1, 2), 1}};
  const CliffordAlgebra a(gram);
  EXPECT_FALSE(a.is_diagonal());
  for (Blade x : a.basis())
    for (Blade y : a.basis()) {
      auto lhs = a.monomial_product(x, y), rhs = product_by_rewriting(gram, x, y);
      std::sort(lhs.begin(), lhs.end());
      std::sort(rhs.begin(), rhs.end());
      EXPECT_EQ(lhs, rhs) << x << " * " << y;
    }
}

TEST(Clifford, RejectsBadGram) {
  EXPECT_THROW(CliffordAlgebra(Matrix{{1, 2}, {3, 1}}), Error);
  EXPECT_THROW(CliffordAlgebra(Matrix{{1, 0}, {0, -1}}), Error);
  EXPECT_THROW(CliffordAlgebra(Matrix(2, 3)), Error);
}

TEST(Clifford, MixedAlgebrasRejected) {
  auto a = std::make_shared<const CliffordAlgebra>(2);
  auto b = std::make_shared<const CliffordAlgebra>(3);
  EXPECT_THROW((void)(CliffordElement::generator(a, 1) * CliffordElement::generator(b, 1)), DimensionError);
}

TEST(Clifford, FilteredSuperalgebra) {
  for (std::size_t n = 1; n <= 4; ++n) EXPECT_TRUE(check_filtered_superalgebra(CliffordAlgebra(n))) << n;
  // The grade filtration without the parity constraint is not a super filtration.
  const CliffordAlgebra a(3);
  auto wrong = [&](int p) {
    if (p < 0) return Subspace::zero(a.dimension());
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < a.basis().size(); ++k)
      if (blade_grade(a.basis()[k]) == p) idx.push_back(k);
    return Subspace::coordinate(a.dimension(), idx);
  };
  EXPECT_FALSE(check_filtered_superalgebra(a, wrong, 4));
}

TEST(CliffordProperties, Associativity) {
  Rng rng(testing::kSuiteSeed);
  for (std::size_t n = 1; n <= 5; ++n) {
    auto a = std::make_shared<const CliffordAlgebra>(n);
    for (int t = 0; t < 8; ++t) {
      const auto x = random_element(a, rng), y = random_element(a, rng), z = random_element(a, rng);
      EXPECT_EQ((x * y) * z, x * (y * z));
    }
  }
  auto skew = std::make_shared<const CliffordAlgebra>(Matrix{{1, Rational(1, 3)}, {Rational(1, 3), 2}});
  for (int t = 0; t < 8; ++t) {
    const auto x = random_element(skew, rng), y = random_element(skew, rng), z = random_element(skew, rng);
    EXPECT_EQ((x * y) * z, x * (y * z));
  }
}

TEST(CliffordProperties, AnticommutatorsMatchGram) {
  const std::vector<Matrix> grams{Matrix::identity(4), Matrix{{2, 1, 0}, {1, 2, 1}, {0, 1, 2}},
                                  Matrix{{3, Rational(-1, 2)}, {Rational(-1, 2), 1}}};
  for (const Matrix& gram : grams) {
    auto a = std::make_shared<const CliffordAlgebra>(gram);
    for (std::size_t i = 1; i <= a->generators(); ++i)
      for (std::size_t j = 1; j <= a->generators(); ++j) {
        const auto gi = CliffordElement::generator(a, i), gj = CliffordElement::generator(a, j);
        EXPECT_EQ(gi * gj + gj * gi, CliffordElement::scalar(a, Rational(2) * gram(i - 1, j - 1)));
      }
  }
}

TEST(CliffordProperties, FiltrationLevelDimensions) {
  for (std::size_t n = 1; n <= 6; ++n) {
    const CliffordAlgebra a(n);
    for (int p = -1; p <= static_cast<int>(n) + 2; ++p) {
      std::size_t expected = 0;
      for (int j = p % 2 == 0 ? 0 : 1; j <= std::min(p, static_cast<int>(n)); j += 2)
        expected += binomial(n, static_cast<std::size_t>(j));
      EXPECT_EQ(filtration_level(a, p).dim(), expected) << "N=" << n << " p=" << p;
    }
  }
}

CliffordElement random_homogeneous(const AlgebraPtr& a, int parity, Rng& rng) {
  CliffordElement e(a);
  for (Blade b : a->basis())
    if (blade_grade(b) % 2 == parity && rng.coin(0.4)) e += CliffordElement::monomial(a, b, rng.small_rational());
  return e;
}

TEST(CliffordProperties, GradingRespected) {
  Rng rng(testing::kSuiteSeed + 1);
  for (std::size_t n = 1; n <= 5; ++n) {
    auto a = std::make_shared<const CliffordAlgebra>(n);
    for (int t = 0; t < 10; ++t) {
      const int px = static_cast<int>(rng.index(2)), py = static_cast<int>(rng.index(2));
      const auto prod = random_homogeneous(a, px, rng) * random_homogeneous(a, py, rng);
      if (prod.is_zero()) continue;
      EXPECT_EQ(prod.parity(), (px + py) % 2);
    }
  }
}

TEST(CliffordProperties, MultiplicationMatricesRepresentProduct) {
  Rng rng(testing::kSuiteSeed + 2);
  auto a = std::make_shared<const CliffordAlgebra>(3);
  for (Blade b : a->basis()) {
    const Matrix l = left_multiplication(*a, b), r = right_multiplication(*a, b);
    const auto x = random_element(a, rng);
    const auto e = CliffordElement::monomial(a, b);
    EXPECT_EQ(cliffilt::apply(x.to_vector(), l), (e * x).to_vector());
    EXPECT_EQ(cliffilt::apply(x.to_vector(), r), (x * e).to_vector());
  }
}

}  // namespace
}  // namespace cliffilt
