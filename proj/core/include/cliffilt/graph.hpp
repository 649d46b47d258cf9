#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cliffilt/matrix.hpp"
#include "cliffilt/supermodule.hpp"

namespace cliffilt {

struct GraphVertex {
  Parity parity = Parity::Even;
  /// Coordinates inside the part of that parity.
  Vector vector;
  int height = 0;
};

/// g_i (0-based `generator`) maps vertex `from` to sign * vertex `to`.
/// Each unordered pair is stored once with from < to.
struct GraphEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  std::size_t generator = 0;
  int sign = 1;
};

struct AdinkraGraph {
  std::vector<GraphVertex> vertices;
  std::vector<GraphEdge> edges;

  [[nodiscard]] std::vector<int> heights() const;
  /// Number of vertices at each height 0..max.
  [[nodiscard]] std::vector<std::size_t> height_counts() const;
  /// Vertex sets of the connected components, each sorted.
  [[nodiscard]] std::vector<std::vector<std::size_t>> components() const;
};

/// Builds the graph of f on an adapted basis (rows of each matrix, which must
/// be bases of the even and odd parts). Adapted means each g_i sends each basis
/// vector to plus or minus one basis vector and every F_p is spanned by the
/// basis vectors it contains. Throws ContractError naming the violation otherwise.
[[nodiscard]] AdinkraGraph to_graph(const SuperFiltration& f, const Matrix& even_basis, const Matrix& odd_basis);

/// Monomial basis of each part, for modules whose generators are signed permutations.
[[nodiscard]] AdinkraGraph to_graph(const SuperFiltration& f);

/// Filtration with F_p spanned by the vertices of parity p and height at most p.
/// Levels run to max(1, max height). Heights must match vertex parities.
[[nodiscard]] SuperFiltration flags_from_heights(const ModulePtr& m, const AdinkraGraph& g, const std::vector<int>& heights);

struct HeightEnumeration {
  /// Height functions, each component shifted so its minimum is 0 or 1.
  std::vector<std::vector<int>> heights;
  /// True when the budget ran out before the enumeration finished.
  bool budget_exhausted = false;
  std::size_t explored = 0;
};

/// All height functions with |h(u) - h(v)| = 1 along edges and h matching
/// vertex parity, validated through flags_from_heights and check_filtration.
/// `budget` caps the number of search nodes visited.
[[nodiscard]] HeightEnumeration enumerate_heights(const ModulePtr& m, const AdinkraGraph& g, std::size_t budget);

/// Vertices below all their neighbours.
[[nodiscard]] std::vector<std::size_t> sources(const AdinkraGraph& g, const std::vector<int>& heights);

/// Ranked DOT layout: rank = height, dashed edges for sign -1, label = 1-based generator.
[[nodiscard]] std::string to_dot(const AdinkraGraph& g);

}  // namespace cliffilt
