#include <gtest/gtest.h>

#include <map>
#include <set>

#include "cliffilt/constructions.hpp"
#include "cliffilt/error.hpp"
#include "cliffilt/graph.hpp"
#include "support/generators.hpp"

namespace cliffilt {
namespace {

// Every height function with matching parity, unit steps along edges and
// minimum 0 or 1, by exhaustive product over 0..|V|. Graph must be connected.
std::set<std::vector<int>> brute_force_heights(const ModulePtr& m, const AdinkraGraph& g) {
  const std::size_t n = g.vertices.size();
  const int hmax = static_cast<int>(n);
  std::set<std::vector<int>> out;
  std::vector<int> h(n);
  for (std::size_t k = 0; k < n; ++k) h[k] = static_cast<int>(g.vertices[k].parity);
  while (true) {
    bool ok = true;
    for (const auto& e : g.edges)
      if (std::abs(h[e.from] - h[e.to]) != 1) ok = false;
    const int lo = *std::min_element(h.begin(), h.end());
    if (ok && lo <= 1 && check_filtration(flags_from_heights(m, g, h))) out.insert(h);
    std::size_t k = 0;
    while (k < n && (h[k] += 2) > hmax) {
      h[k] = static_cast<int>(g.vertices[k].parity);
      ++k;
    }
    if (k == n) break;
  }
  return out;
}

AdinkraGraph cl1_graph() { return to_graph(trivial_filtration(exterior_module(1))); }

TEST(Graph, TrivialCl1) {
  const AdinkraGraph g = cl1_graph();
  ASSERT_EQ(g.vertices.size(), 2u);
  ASSERT_EQ(g.edges.size(), 1u);
  EXPECT_EQ(g.heights(), (std::vector<int>{0, 1}));
  EXPECT_EQ(g.edges[0].sign, 1);
  const HeightEnumeration e = enumerate_heights(exterior_module(1), g, 1000);
  EXPECT_FALSE(e.budget_exhausted);
  EXPECT_EQ(e.heights, (std::vector<std::vector<int>>{{0, 1}, {2, 1}}));
}

TEST(Graph, DegreeFiltrationHeightCounts) {
  const SuperFiltration f = degree_filtration(4);
  const AdinkraGraph g = to_graph(f);
  EXPECT_EQ(g.vertices.size(), 16u);
  EXPECT_EQ(g.edges.size(), 32u);
  EXPECT_EQ(g.height_counts(), (std::vector<std::size_t>{1, 4, 6, 4, 1}));
  EXPECT_EQ(flags_from_heights(f.module_ptr(), g, g.heights()), f);
  EXPECT_EQ(g.components().size(), 1u);
}

TEST(Graph, AdaptedBasisContract) {
  // Hodge flags are not spanned by monomials.
  try {
    (void)to_graph(hodge_filtration());
    FAIL() << "expected ContractError";
  } catch (const ContractError& e) {
    EXPECT_NE(std::string(e.what()).find("basis not filtration-homogeneous"), std::string::npos);
  }
  // gamma_1 sends 1 + e12 to e1 + e2 in the trivial filtration.
  const SuperFiltration t = trivial_filtration(exterior_module(2));
  try {
    (void)to_graph(t, Matrix{{1, 1}, {0, 1}}, Matrix::identity(2));
    FAIL() << "expected ContractError";
  } catch (const ContractError& e) {
    EXPECT_NE(std::string(e.what()).find("basis not adapted"), std::string::npos);
  }
  EXPECT_THROW((void)to_graph(t, Matrix{{1, 1}, {1, 1}}, Matrix::identity(2)), ContractError);
}

TEST(Graph, HeightParityEnforced) {
  const AdinkraGraph g = cl1_graph();
  EXPECT_THROW((void)flags_from_heights(exterior_module(1), g, {1, 2}), ContractError);
  EXPECT_THROW((void)flags_from_heights(exterior_module(1), g, {0}), DimensionError);
}

TEST(Graph, BruteForceCountsForDegreeGraphs) {
  const std::vector<std::size_t> expected{2, 6, 38};
  for (std::size_t n = 1; n <= 3; ++n) {
    const SuperFiltration f = degree_filtration(n);
    const AdinkraGraph g = to_graph(f);
    const HeightEnumeration e = enumerate_heights(f.module_ptr(), g, 1000000);
    ASSERT_FALSE(e.budget_exhausted);
    const auto oracle = brute_force_heights(f.module_ptr(), g);
    EXPECT_EQ(std::set<std::vector<int>>(e.heights.begin(), e.heights.end()), oracle) << n;
    EXPECT_EQ(e.heights.size(), expected[n - 1]);
  }
}

TEST(Graph, Exterior4EnumerationIncludesInput) {
  const SuperFiltration f = degree_filtration(4);
  const AdinkraGraph g = to_graph(f);
  const HeightEnumeration e = enumerate_heights(f.module_ptr(), g, 1000000);
  ASSERT_FALSE(e.budget_exhausted);
  EXPECT_EQ(e.heights.size(), 990u);
  EXPECT_NE(std::find(e.heights.begin(), e.heights.end(), g.heights()), e.heights.end());
}

TEST(Graph, BudgetReportedDistinctly) {
  const SuperFiltration f = degree_filtration(3);
  const HeightEnumeration e = enumerate_heights(f.module_ptr(), to_graph(f), 5);
  EXPECT_TRUE(e.budget_exhausted);
}

// Source sets alone determine the heights on the small graphs; on Lambda(R^3)
// and Lambda(R^4), distinct assignments can share a source set, and the sources
// together with their heights are what tell them apart.
TEST(Graph, SourceSetCorrespondence) {
  const std::vector<std::size_t> bare{2, 6, 34, 742};
  for (std::size_t n = 1; n <= 4; ++n) {
    const SuperFiltration f = degree_filtration(n);
    const AdinkraGraph g = to_graph(f);
    const HeightEnumeration e = enumerate_heights(f.module_ptr(), g, 1000000);
    std::set<std::vector<std::size_t>> sets;
    std::set<std::vector<std::pair<std::size_t, int>>> pinned;
    for (const auto& h : e.heights) {
      const auto s = sources(g, h);
      sets.insert(s);
      std::vector<std::pair<std::size_t, int>> with_heights;
      for (std::size_t v : s) with_heights.emplace_back(v, h[v]);
      pinned.insert(with_heights);
    }
    EXPECT_EQ(sets.size(), bare[n - 1]) << n;
    EXPECT_EQ(pinned.size(), e.heights.size()) << n;
    if (n <= 2) EXPECT_EQ(sets.size(), e.heights.size());
  }
}

TEST(Graph, DotIsStable) {
  const std::string dot = to_dot(cl1_graph());
  EXPECT_EQ(dot,
            "graph adinkra {\n"
            "  rankdir=BT;\n"
            "  node [shape=circle, style=filled, fontsize=10];\n"
            "  v0 [label=\"b1\", fillcolor=white];\n"
            "  v1 [label=\"f1\", fillcolor=black, fontcolor=white];\n"
            "  { rank=same; v0; }  // height 0\n"
            "  { rank=same; v1; }  // height 1\n"
            "  v0 -- v1 [label=\"1\"];\n"
            "}\n");
  const std::string cl5 = to_dot(to_graph(trivial_filtration(irreducible_cl5())));
  EXPECT_NE(cl5.find("style=dashed"), std::string::npos);
}

TEST(GraphProperties, StructureAndRoundTrip) {
  std::vector<SuperFiltration> inputs;
  for (std::size_t n = 1; n <= 4; ++n) inputs.push_back(degree_filtration(n));
  inputs.push_back(trivial_filtration(irreducible_cl5()));
  for (std::size_t n = 1; n <= 5; ++n) inputs.push_back(trivial_filtration(irreducible_module(n)));
  for (const SuperFiltration& f : inputs) {
    const AdinkraGraph g = to_graph(f);
    const std::size_t nv = g.vertices.size();
    // One i-edge per vertex for every generator.
    std::map<std::pair<std::size_t, std::size_t>, int> degree;
    for (const auto& e : g.edges) {
      EXPECT_NE(g.vertices[e.from].parity, g.vertices[e.to].parity);
      EXPECT_EQ(std::abs(g.vertices[e.from].height - g.vertices[e.to].height), 1);
      EXPECT_LT(e.from, e.to);
      ++degree[{e.from, e.generator}];
      ++degree[{e.to, e.generator}];
    }
    EXPECT_EQ(degree.size(), nv * f.module().generators());
    for (const auto& [key, count] : degree) EXPECT_EQ(count, 1);
    EXPECT_EQ(flags_from_heights(f.module_ptr(), g, g.heights()), f);
    const HeightEnumeration e = enumerate_heights(f.module_ptr(), g, 200000);
    for (const auto& h : e.heights) {
      const SuperFiltration rebuilt = flags_from_heights(f.module_ptr(), g, h);
      ASSERT_TRUE(check_filtration(rebuilt));
      EXPECT_EQ(to_graph(rebuilt).heights(), h);
    }
  }
}

}  // namespace
}  // namespace cliffilt
