#include <gtest/gtest.h>

#include <algorithm>

#include "cliffilt/constructions.hpp"
#include "cliffilt/endomorphisms.hpp"
#include "cliffilt/error.hpp"
#include "cliffilt/invariants.hpp"
#include "support/generators.hpp"

namespace cliffilt {
namespace {

using Dims = DimSequence;

std::vector<Dims> summand_gr_dims(const Decomposition& d) {
  std::vector<Dims> out;
  for (const auto& s : d.summands) {
    Dims g = gr_dimensions(s.filtration);
    while (!g.empty() && g.back() == 0) g.pop_back();
    out.push_back(std::move(g));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Dimension of the even commutant from one dense system over all unknown
// entries (X_e g_eo = g_eo X_o and X_o g_oe = g_oe X_e), independent of the library solver.
std::size_t commutant_dim_oracle(const CliffordSupermodule& m) {
  const std::size_t de = m.dim_even(), dn = m.dim_odd();
  const std::size_t unknowns = de * de + dn * dn;
  auto xe = [&](std::size_t r, std::size_t c) { return r * de + c; };
  auto xo = [&](std::size_t r, std::size_t c) { return de * de + r * dn + c; };
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < m.generators(); ++i) {
    const Matrix& a = m.gamma_eo(i);
    const Matrix& b = m.gamma_oe(i);
    for (std::size_t r = 0; r < de; ++r)
      for (std::size_t c = 0; c < dn; ++c) {
        Vector eq(unknowns);
        for (std::size_t k = 0; k < de; ++k) eq[xe(r, k)] += a(k, c);
        for (std::size_t k = 0; k < dn; ++k) eq[xo(k, c)] -= a(r, k);
        rows.push_back(std::move(eq));
      }
    for (std::size_t r = 0; r < dn; ++r)
      for (std::size_t c = 0; c < de; ++c) {
        Vector eq(unknowns);
        for (std::size_t k = 0; k < dn; ++k) eq[xo(r, k)] += b(k, c);
        for (std::size_t k = 0; k < de; ++k) eq[xe(k, c)] -= b(r, k);
        rows.push_back(std::move(eq));
      }
  }
  return unknowns - rank(Matrix::from_rows(rows, unknowns));
}

// Image of f under an even automorphism a of its module that commutes with the generators.
SuperFiltration transport(const SuperFiltration& f, const EvenMap& a) {
  std::vector<Subspace> levels;
  for (int p = 0; p <= f.top(); ++p) levels.push_back(image(p % 2 == 0 ? a.even : a.odd, f.level(p)));
  return SuperFiltration(f.module_ptr(), std::move(levels));
}

// The same filtration written in a new basis of the module.
SuperFiltration change_basis(const SuperFiltration& f, const Matrix& te, const Matrix& to) {
  const auto& m = f.module();
  const Matrix ie = inverse(te), io = inverse(to);
  std::vector<Matrix> eo, oe;
  for (std::size_t i = 0; i < m.generators(); ++i) {
    eo.push_back(ie * m.gamma_eo(i) * to);
    oe.push_back(io * m.gamma_oe(i) * te);
  }
  auto moved = std::make_shared<const CliffordSupermodule>(m.algebra_ptr(), m.dim_even(), m.dim_odd(), eo, oe);
  std::vector<Subspace> levels;
  for (int p = 0; p <= f.top(); ++p) levels.push_back(image(p % 2 == 0 ? te : to, f.level(p)));
  return SuperFiltration(moved, std::move(levels));
}

TEST(Invariants, Exterior4PaperValues) {
  EXPECT_EQ(gr_dimensions(degree_filtration(4)), (Dims{1, 4, 6, 4, 1}));
  EXPECT_EQ(gr_dimensions(hodge_filtration()), (Dims{1, 4, 6, 4, 1}));
  EXPECT_EQ(source_dimensions(degree_filtration(4)), (Dims{1, 0, 0, 0, 0}));
  EXPECT_EQ(source_dimensions(hodge_filtration()), (Dims{1, 0, 3, 0, 0}));
}

TEST(Invariants, HodgeSplitsIntoSelfDualHalves) {
  const Decomposition d = decompose(hodge_filtration());
  EXPECT_TRUE(d.certificate) << d.certificate.witness.dump();
  ASSERT_EQ(d.summands.size(), 2u);
  EXPECT_EQ(summand_gr_dims(d), (std::vector<Dims>{{0, 0, 3, 4, 1}, {1, 4, 3}}));
  for (const auto& s : d.summands) EXPECT_EQ(s.status, SummandStatus::Certified);
}

TEST(Invariants, DegreeFiltrationIsIndecomposable) {
  const Decomposition d = decompose(degree_filtration(4));
  ASSERT_EQ(d.summands.size(), 1u);
  EXPECT_EQ(d.summands[0].status, SummandStatus::Certified);
  EXPECT_EQ(d.summands[0].certificate.witness["kind"], "local");
  EXPECT_EQ(to_string(SummandStatus::Certified), "indecomposable (certified)");
}

TEST(Invariants, VerdictsAreThreeValued) {
  const Verdict v = invariant_equal(degree_filtration(4), hodge_filtration());
  EXPECT_TRUE(v.distinguished);
  EXPECT_EQ(v.reason, "source_dims");
  const Verdict g = invariant_equal(degree_filtration(4), hodge_filtration(), InvariantSet::GrDims);
  EXPECT_FALSE(g.distinguished);
  EXPECT_TRUE(g.reason.empty());
  EXPECT_FALSE(invariant_equal(hodge_filtration(), hodge_filtration()).distinguished);
  EXPECT_EQ(invariant_equal(degree_filtration(2), degree_filtration(3)).reason, "gr_dims");
}

TEST(Invariants, ReportMatchesDecomposition) {
  const InvariantReport r = invariant_report(hodge_filtration());
  EXPECT_EQ(r.gr_dims, (Dims{1, 4, 6, 4, 1}));
  ASSERT_EQ(r.summands.size(), 2u);
  std::vector<Dims> sources;
  for (const auto& s : r.summands) {
    Dims d = s.source_dims;
    while (!d.empty() && d.back() == 0) d.pop_back();
    sources.push_back(d);
  }
  std::sort(sources.begin(), sources.end());
  EXPECT_EQ(sources, (std::vector<Dims>{{0, 0, 3}, {1}}));
}

TEST(Invariants, DirectSumsSplit) {
  const SuperFiltration t = trivial_filtration(irreducible_module(1));
  const Decomposition d = decompose(direct_sum(t, t));
  EXPECT_EQ(d.summands.size(), 2u);
  EXPECT_TRUE(d.certificate);
  const Decomposition e = decompose(direct_sum(degree_filtration(3), degree_filtration(3)));
  EXPECT_EQ(e.summands.size(), 2u);
}

TEST(Endomorphisms, CommutantMatchesDenseOracle) {
  for (const ModulePtr& m : testing::sample_modules()) {
    const auto basis = graded_commutant(*m);
    EXPECT_EQ(basis.size(), commutant_dim_oracle(*m));
    for (const EvenMap& x : basis)
      for (std::size_t i = 0; i < m->generators(); ++i) {
        EXPECT_EQ(x.even * m->gamma_eo(i), m->gamma_eo(i) * x.odd);
        EXPECT_EQ(x.odd * m->gamma_oe(i), m->gamma_oe(i) * x.even);
      }
  }
  EXPECT_EQ(graded_commutant(*irreducible_cl5()).size(), commutant_dim_oracle(*irreducible_cl5()));
}

TEST(Endomorphisms, Cl5IsDivisionAlgebra) {
  const ModulePtr m = irreducible_cl5();
  const auto e = filtered_endomorphisms(trivial_filtration(m));
  EXPECT_EQ(e.size(), 4u);
  EXPECT_EQ(e.front(), EvenMap::identity(*m));
  const IdempotentResult r = find_idempotent(e);
  EXPECT_EQ(r.status, IdempotentSearch::Certified);
  EXPECT_EQ(r.certificate.witness["kind"], "division");
}

TEST(Endomorphisms, IdempotentFoundInSplitAlgebra) {
  const SuperFiltration f = direct_sum(degree_filtration(2), degree_filtration(2));
  const auto e = filtered_endomorphisms(f);
  const IdempotentResult r = find_idempotent(e);
  ASSERT_EQ(r.status, IdempotentSearch::Found);
  const EvenMap& x = *r.idempotent;
  EXPECT_EQ(x * x, x);
  EXPECT_FALSE(x.is_zero());
  EXPECT_NE(x, EvenMap::identity(f.module()));
  EXPECT_TRUE(is_filtered_endomorphism(f, x));
}

TEST(Endomorphisms, FilteredCutsDownCommutant) {
  const ModulePtr m = exterior_module(4);
  const auto all = graded_commutant(*m);
  const auto deg = filtered_endomorphisms(degree_filtration(4));
  EXPECT_LT(deg.size(), all.size());
  for (const auto& x : deg) EXPECT_TRUE(is_filtered_endomorphism(degree_filtration(4), x));
  std::size_t outside = 0;
  for (const auto& x : all) outside += is_filtered_endomorphism(degree_filtration(4), x) ? 0 : 1;
  EXPECT_GT(outside, 0u);
}

TEST(Search, Cl5FamilyTarget) {
  Rng rng(1);
  const SearchResult s = filtration_search(irreducible_cl5(), {2, 8, 6}, 1000, rng);
  ASSERT_GE(s.found.size(), 1u);
  for (const SuperFiltration& f : s.found) {
    EXPECT_TRUE(check_filtration(f));
    EXPECT_EQ(gr_dimensions(f), (Dims{2, 8, 6}));
    EXPECT_EQ(source_dimensions(f)[0], 2u);
  }
  EXPECT_EQ(s.attempts, 1000u);
  EXPECT_GE(s.hits, s.found.size());
}

TEST(Search, DeterministicUnderSeed) {
  Rng a(5), b(5);
  const SearchResult x = filtration_search(exterior_module(3), {1, 3, 3, 1}, 100, a);
  const SearchResult y = filtration_search(exterior_module(3), {1, 3, 3, 1}, 100, b);
  ASSERT_EQ(x.found.size(), y.found.size());
  for (std::size_t k = 0; k < x.found.size(); ++k) EXPECT_EQ(x.found[k], y.found[k]);
}

TEST(Search, RejectsImpossibleTargets) {
  Rng rng(1);
  EXPECT_THROW((void)filtration_search(irreducible_cl5(), {2, 8, 7}, 10, rng), ContractError);
  EXPECT_THROW((void)filtration_search(irreducible_cl5(), {}, 10, rng), ContractError);
}

TEST(InvariantProperties, DimensionIdentities) {
  Rng rng(testing::kSuiteSeed);
  for (int t = 0; t < 60; ++t) {
    const SuperFiltration f = testing::random_sample_filtration(rng);
    const Dims g = gr_dimensions(f);
    std::size_t total = 0;
    for (auto x : g) total += x;
    EXPECT_EQ(total, f.module().dim_total());
    EXPECT_EQ(source_dimensions(f)[0], f.level(0).dim());
  }
}

TEST(InvariantProperties, DecompositionReassembles) {
  Rng rng(testing::kSuiteSeed + 1);
  for (int t = 0; t < 30; ++t) {
    const SuperFiltration f = testing::random_sample_filtration(rng);
    const Decomposition d = decompose(f);
    ASSERT_TRUE(d.certificate) << d.certificate.witness.dump();
    for (int p = 0; p <= f.top(); ++p) {
      Subspace sum = Subspace::zero(f.module().dim(parity_of(p)));
      for (const auto& s : d.summands) {
        const Matrix& emb = p % 2 == 0 ? s.even_embedding : s.odd_embedding;
        sum = subspace_sum(sum, image(emb, s.filtration.level(p)));
      }
      EXPECT_EQ(sum, f.level(p)) << t << " p=" << p;
    }
    // Idempotent: every summand decomposes into itself.
    for (const auto& s : d.summands) {
      if (s.status != SummandStatus::Certified) continue;
      EXPECT_EQ(decompose(s.filtration).summands.size(), 1u);
    }
  }
}

TEST(InvariantProperties, IsomorphismInvariance) {
  Rng rng(testing::kSuiteSeed + 2);
  for (int t = 0; t < 30; ++t) {
    const SuperFiltration f = testing::random_sample_filtration(rng);
    const InvariantReport base = invariant_report(f);
    // Automorphism built from the module's commutant (moves the flags).
    const auto basis = graded_commutant(f.module());
    EvenMap a = EvenMap::identity(f.module());
    for (std::size_t k = 1; k < basis.size(); ++k) a = a + rng.small_rational(2) * basis[k];
    if (rank(a.total()) == f.module().dim_total()) {
      const SuperFiltration moved = transport(f, a);
      ASSERT_TRUE(check_filtration(moved));
      EXPECT_FALSE(invariant_equal(base, invariant_report(moved)).distinguished) << t;
    }
    // Random change of basis of the underlying module.
    const SuperFiltration g = change_basis(f, rng.invertible(f.module().dim_even(), 2),
                                           rng.invertible(f.module().dim_odd(), 2));
    ASSERT_TRUE(check_supermodule(g.module()));
    ASSERT_TRUE(check_filtration(g));
    EXPECT_EQ(gr_dimensions(g), base.gr_dims);
    EXPECT_EQ(source_dimensions(g), base.source_dims);
  }
}

}  // namespace
}  // namespace cliffilt
