#include <gtest/gtest.h>

#include <memory>

#include "cliffilt/constructions.hpp"
#include "cliffilt/error.hpp"
#include "cliffilt/io.hpp"
#include "cliffilt/supermodule.hpp"
#include "support/generators.hpp"

namespace cliffilt {
namespace {

std::vector<Subspace> drop_top(const SuperFiltration& f) {
  std::vector<Subspace> levels = f.levels();
  levels.pop_back();
  return levels;
}

TEST(Supermodule, ExteriorDimensionsAndRelations) {
  for (std::size_t n = 1; n <= 5; ++n) {
    const ModulePtr m = exterior_module(n);
    EXPECT_EQ(m->dim_even(), std::size_t{1} << (n - 1));
    EXPECT_EQ(m->dim_odd(), std::size_t{1} << (n - 1));
    EXPECT_TRUE(check_supermodule(*m)) << n;
  }
}

TEST(Supermodule, IrreducibleDimensions) {
  const std::vector<std::size_t> half{1, 2, 4, 4, 8};
  for (std::size_t n = 1; n <= 5; ++n) {
    const ModulePtr m = irreducible_module(n);
    EXPECT_EQ(m->dim_even(), half[n - 1]);
    EXPECT_EQ(m->dim_odd(), half[n - 1]);
    EXPECT_TRUE(check_supermodule(*m)) << n;
  }
  EXPECT_TRUE(check_supermodule(*irreducible_cl5()));
  EXPECT_THROW((void)irreducible_module(0), ContractError);
  EXPECT_THROW((void)irreducible_module(6), ContractError);
}

TEST(Supermodule, Cl5GeneratorsAreSignedPermutations) {
  const ModulePtr m = irreducible_cl5();
  for (std::size_t i = 0; i < 5; ++i)
    for (Parity p : {Parity::Even, Parity::Odd}) {
      const Matrix& g = m->gamma(i, p);
      for (std::size_t r = 0; r < g.rows(); ++r) {
        int nonzero = 0;
        for (std::size_t c = 0; c < g.cols(); ++c)
          if (!g(r, c).is_zero()) {
            ++nonzero;
            EXPECT_EQ(abs(g(r, c)), Rational(1));
          }
        EXPECT_EQ(nonzero, 1);
      }
    }
}

TEST(Supermodule, MutationRejectedWithWitness) {
  const ModulePtr m = exterior_module(3);
  std::vector<Matrix> eo, oe;
  for (std::size_t i = 0; i < 3; ++i) {
    eo.push_back(m->gamma_eo(i));
    oe.push_back(m->gamma_oe(i));
  }
  eo[1](2, 1) += Rational(1);
  const CliffordSupermodule bad(m->algebra_ptr(), m->dim_even(), m->dim_odd(), eo, oe);
  const Certificate c = check_supermodule(bad);
  EXPECT_FALSE(c);
  EXPECT_EQ(c.check, "clifford_relations");
  EXPECT_TRUE(c.witness.contains("defect"));
}

TEST(Supermodule, ConstructorRejectsShapes) {
  auto a = std::make_shared<const CliffordAlgebra>(1);
  EXPECT_THROW(CliffordSupermodule(a, 1, 1, {Matrix(1, 2)}, {Matrix(1, 1)}), DimensionError);
  EXPECT_THROW(CliffordSupermodule(a, 1, 1, {}, {}), DimensionError);
}

TEST(Supermodule, DirectSumAndRestriction) {
  const ModulePtr a = exterior_module(2), b = irreducible_module(2);
  const ModulePtr s = direct_sum(*a, *b);
  EXPECT_EQ(s->dim_even(), 4u);
  EXPECT_TRUE(check_supermodule(*s));
  const Matrix even = hstack(Matrix::identity(2), Matrix(2, 2));
  const Matrix odd = hstack(Matrix::identity(2), Matrix(2, 2));
  EXPECT_EQ(*restrict_module(*s, even, odd), *a);
  // A non-invariant pair is refused.
  EXPECT_THROW((void)restrict_module(*a, Matrix{{1, 0}}, Matrix{{1, 0}}), ContractError);
}

TEST(Filtration, DegreeFiltrationOfExterior4) {
  const SuperFiltration f = degree_filtration(4);
  EXPECT_TRUE(check_filtration(f));
  EXPECT_EQ(f.level_dims(), (std::vector<std::size_t>{1, 4, 7, 8, 8}));
  EXPECT_TRUE(f.level(5).is_full());
  EXPECT_TRUE(f.level(-1).is_zero());
}

TEST(Filtration, HodgeFiltrationOfExterior4) {
  const SuperFiltration f = hodge_filtration();
  EXPECT_TRUE(check_filtration(f));
  EXPECT_EQ(f.level_dims(), (std::vector<std::size_t>{1, 4, 7, 8, 8}));
  EXPECT_NE(f, degree_filtration(4));
  // F_0 is spanned by 1 + vol.
  const ModulePtr m = exterior_module(4);
  Vector one_plus_vol(8);
  one_plus_vol[0] = Rational(1);
  one_plus_vol[7] = Rational(1);
  EXPECT_EQ(f.level(0), Subspace::span(std::span<const Vector>(&one_plus_vol, 1), 8));
}

TEST(Filtration, TwistedHodgeStarCommutesWithGenerators) {
  const ModulePtr m = exterior_module(4);
  const Matrix se = twisted_hodge_star(4, Parity::Even), so = twisted_hodge_star(4, Parity::Odd);
  EXPECT_EQ(se * se, Matrix::identity(8));
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(se * m->gamma_eo(i), m->gamma_eo(i) * so);
    EXPECT_EQ(so * m->gamma_oe(i), m->gamma_oe(i) * se);
  }
  EXPECT_EQ(hodge_star(4, Parity::Even) * hodge_star(4, Parity::Even), Matrix::identity(8));
}

TEST(Filtration, ViolationsCarryWitnesses) {
  const ModulePtr m = exterior_module(2);
  // gamma F_0 not inside F_1.
  const SuperFiltration f(m, {Subspace::full(2), Subspace::zero(2), Subspace::full(2), Subspace::full(2)});
  const Certificate c = check_filtration(f);
  EXPECT_FALSE(c);
  EXPECT_EQ(c.witness["condition"], "gamma_compatibility");
  // Nesting failure.
  const Vector a{1, 0}, b{0, 1};
  const SuperFiltration g(m, {Subspace::span(std::span<const Vector>(&a, 1), 2), Subspace::full(2),
                              Subspace::span(std::span<const Vector>(&b, 1), 2), Subspace::full(2),
                              Subspace::full(2), Subspace::full(2)});
  EXPECT_EQ(check_filtration(g).witness["condition"], "nesting");
}

TEST(Filtration, ConstructorContracts) {
  const ModulePtr m = exterior_module(2);
  EXPECT_THROW(SuperFiltration(m, {Subspace::full(2)}), ContractError);
  EXPECT_THROW(SuperFiltration(m, {Subspace::full(3), Subspace::full(2)}), DimensionError);
  EXPECT_THROW((void)degree_filtration(irreducible_module(4)), ContractError);
}

TEST(Filtration, FromFlagsAndConventional) {
  const SuperFiltration f = degree_filtration(3);
  EXPECT_EQ(SuperFiltration::from_flags(f.module_ptr(), f.even_flags(), f.odd_flags()), f);
  const Subspace conv = f.conventional_level(1);
  EXPECT_EQ(conv.ambient_dim(), 8u);
  EXPECT_EQ(conv.dim(), f.level(0).dim() + f.level(1).dim());
}

TEST(Filtration, NormalizeShiftsByEvenAmount) {
  const ModulePtr m = exterior_module(1);
  const SuperFiltration f(m, {Subspace::zero(1), Subspace::zero(1), Subspace::zero(1), Subspace::full(1),
                              Subspace::full(1)});
  const SuperFiltration n = normalize(f);
  EXPECT_TRUE(check_filtration(n));
  EXPECT_EQ(n.level(0).dim(), 0u);
  EXPECT_EQ(n.level(1).dim(), 1u);
}

TEST(Filtration, GeneratedFiltrationIsMinimal) {
  const ModulePtr m = exterior_module(3);
  const SuperFiltration f = generated_filtration(m, {{0, Vector{1, 0, 0, 0}}}, 3);
  EXPECT_EQ(f, degree_filtration(3));
  EXPECT_THROW((void)generated_filtration(m, {{0, Vector{1, 0}}}, 4), DimensionError);
}

TEST(SupermoduleProperties, ConstructedModulesAndFiltrationsPass) {
  for (const ModulePtr& m : testing::sample_modules()) EXPECT_TRUE(check_supermodule(*m));
  Rng rng(testing::kSuiteSeed);
  for (int t = 0; t < 60; ++t) {
    const SuperFiltration f = testing::random_sample_filtration(rng);
    ASSERT_TRUE(check_filtration(f));
    // Removing the top flag breaks exhaustiveness whenever the next one down is not full.
    const SuperFiltration n = normalize(f);
    if (n.top() >= 2 && !n.level(n.top() - 2).is_full()) {
      const Certificate c = check_filtration(SuperFiltration(n.module_ptr(), drop_top(n)));
      EXPECT_FALSE(c);
      EXPECT_EQ(c.witness["condition"], "exhaustive");
    }
  }
  for (std::size_t n = 2; n <= 4; ++n) {
    const SuperFiltration d = degree_filtration(n);
    const Certificate c = check_filtration(SuperFiltration(d.module_ptr(), drop_top(d)));
    EXPECT_FALSE(c);
    EXPECT_EQ(c.witness["condition"], "exhaustive");
  }
}

TEST(SupermoduleProperties, ExteriorGeneratorsAreInvolutions) {
  for (std::size_t n = 1; n <= 5; ++n) {
    const ModulePtr m = exterior_module(n);
    for (std::size_t i = 0; i < n; ++i) {
      const Matrix g = m->total_gamma(i);
      EXPECT_EQ(g * g, Matrix::identity(m->dim_total()));
    }
  }
}

TEST(SupermoduleProperties, FiltrationsRoundTripByteIdentically) {
  Rng rng(testing::kSuiteSeed + 1);
  for (int t = 0; t < 30; ++t) {
    const SuperFiltration f = testing::random_sample_filtration(rng);
    const std::string text = io::document("filtration", io::to_json(f)).dump();
    const SuperFiltration back = io::filtration_from_json(io::parse(text));
    EXPECT_EQ(back, f);
    EXPECT_EQ(io::document("filtration", io::to_json(back)).dump(), text);
  }
}

}  // namespace
}  // namespace cliffilt
