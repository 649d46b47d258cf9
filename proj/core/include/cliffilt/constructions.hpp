#pragma once

#include <cstddef>
#include <vector>

#include "cliffilt/clifford.hpp"
#include "cliffilt/supermodule.hpp"

namespace cliffilt {

/// Basis monomials e_I of one parity of the exterior algebra on n generators,
/// in the canonical Clifford basis order (cardinality, then lexicographic).
[[nodiscard]] std::vector<Blade> exterior_basis(std::size_t n, Parity p);

/// Exterior multiplication and contraction by e_i (1-based) on the whole of
/// the exterior algebra, in canonical basis order.
[[nodiscard]] Matrix exterior_wedge(std::size_t n, std::size_t i);
[[nodiscard]] Matrix exterior_contraction(std::size_t n, std::size_t i);

/// The exterior algebra on R^n with g_i = e_i wedge + contraction by e_i,
/// as a module over Cl(n).
[[nodiscard]] ModulePtr exterior_module(std::size_t n);

/// F_p = sum of the exterior powers of degree k <= p, k = p (mod 2).
/// Throws ContractError if the module is not an exterior module.
[[nodiscard]] SuperFiltration degree_filtration(const ModulePtr& module);
[[nodiscard]] SuperFiltration degree_filtration(std::size_t n);

/// Hodge star (Euclidean metric, orientation e_1 ^ ... ^ e_n) on one parity
/// part of the exterior algebra, for even n.
[[nodiscard]] Matrix hodge_star(std::size_t n, Parity p);
/// The star composed with reversion, x -> x * vol. It squares to the
/// identity and commutes with every g_i.
[[nodiscard]] Matrix twisted_hodge_star(std::size_t n, Parity p);

/// Self-dual / anti-self-dual filtration on the exterior algebra of R^4:
/// L0+ within L0+ + L2+ + L2- within everything, and L1+ within everything.
[[nodiscard]] SuperFiltration hodge_filtration(const ModulePtr& module);
[[nodiscard]] SuperFiltration hodge_filtration();

/// The 8|8 graded irreducible Cl(5)-module, with signed-permutation generators.
[[nodiscard]] ModulePtr irreducible_cl5();

/// Graded irreducible module over Cl(N) for 1 <= N <= 5 (dims 1|1, 2|2, 4|4, 4|4, 8|8).
[[nodiscard]] ModulePtr irreducible_module(std::size_t n);

}  // namespace cliffilt
