#include "cliffilt/constructions.hpp"

#include <algorithm>
#include <string>

#include "cliffilt/error.hpp"

namespace cliffilt {

namespace {

int sign_below(Blade set, std::size_t i) {
  const Blade below = set & ((Blade{1} << i) - 1);
  return blade_grade(below) % 2 == 0 ? 1 : -1;
}

std::vector<std::size_t> parity_indices(const CliffordAlgebra& alg, Parity p) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < alg.dimension(); ++k) {
    if (blade_grade(alg.basis()[k]) % 2 == static_cast<int>(p)) out.push_back(k);
  }
  return out;
}

Matrix pick(const Matrix& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
  Matrix out(rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c) out(r, c) = m(rows[r], cols[c]);
  return out;
}

// Splits odd operators on an exterior algebra (canonical basis order of
// `space`) into parity blocks.
ModulePtr module_from_total(std::shared_ptr<const CliffordAlgebra> alg, const CliffordAlgebra& space,
                            const std::vector<Matrix>& total) {
  const auto ev = parity_indices(space, Parity::Even);
  const auto od = parity_indices(space, Parity::Odd);
  std::vector<Matrix> eo, oe;
  for (const auto& g : total) {
    eo.push_back(pick(g, ev, od));
    oe.push_back(pick(g, od, ev));
  }
  return std::make_shared<const CliffordSupermodule>(std::move(alg), ev.size(), od.size(), std::move(eo),
                                                     std::move(oe));
}

void require_exterior(const ModulePtr& module, std::size_t n) {
  if (!module || n == 0 || module->generators() != n || !(*module == *exterior_module(n)))
    throw ContractError("expected the exterior algebra module on " + std::to_string(n) + " generators");
}

}  // namespace

std::vector<Blade> exterior_basis(std::size_t n, Parity p) {
  const CliffordAlgebra alg(n);
  std::vector<Blade> out;
  for (std::size_t k : parity_indices(alg, p)) out.push_back(alg.basis()[k]);
  return out;
}

Matrix exterior_wedge(std::size_t n, std::size_t i) {
  const CliffordAlgebra alg(n);
  if (i < 1 || i > n) throw ContractError("exterior_wedge: index out of range");
  const Blade bit = Blade{1} << (i - 1);
  Matrix m(alg.dimension(), alg.dimension());
  for (std::size_t k = 0; k < alg.dimension(); ++k) {
    const Blade b = alg.basis()[k];
    if (b & bit) continue;
    m(k, alg.index_of(b | bit)) = Rational(sign_below(b, i - 1));
  }
  return m;
}

Matrix exterior_contraction(std::size_t n, std::size_t i) {
  const CliffordAlgebra alg(n);
  if (i < 1 || i > n) throw ContractError("exterior_contraction: index out of range");
  const Blade bit = Blade{1} << (i - 1);
  Matrix m(alg.dimension(), alg.dimension());
  for (std::size_t k = 0; k < alg.dimension(); ++k) {
    const Blade b = alg.basis()[k];
    if (!(b & bit)) continue;
    m(k, alg.index_of(b ^ bit)) = Rational(sign_below(b, i - 1));
  }
  return m;
}

ModulePtr exterior_module(std::size_t n) {
  if (n < 1) throw ContractError("exterior_module: n must be positive");
  auto alg = std::make_shared<const CliffordAlgebra>(n);
  std::vector<Matrix> total;
  for (std::size_t i = 1; i <= n; ++i) total.push_back(exterior_wedge(n, i) + exterior_contraction(n, i));
  return module_from_total(alg, *alg, total);
}

SuperFiltration degree_filtration(const ModulePtr& module) {
  if (!module) throw ContractError("degree_filtration: null module");
  const std::size_t n = module->generators();
  require_exterior(module, n);
  std::vector<Subspace> levels;
  for (int p = 0; p <= static_cast<int>(n); ++p) {
    const auto basis = exterior_basis(n, parity_of(p));
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < basis.size(); ++k)
      if (blade_grade(basis[k]) <= p) idx.push_back(k);
    levels.push_back(Subspace::coordinate(basis.size(), idx));
  }
  return SuperFiltration(module, std::move(levels));
}

SuperFiltration degree_filtration(std::size_t n) { return degree_filtration(exterior_module(n)); }

Matrix hodge_star(std::size_t n, Parity p) {
  if (n % 2 != 0) throw ContractError("hodge_star: the star preserves parity only in even dimension");
  const CliffordAlgebra alg(n);
  const auto basis = exterior_basis(n, p);
  const Blade full = static_cast<Blade>(alg.dimension() - 1);
  Matrix m(basis.size(), basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const Blade complement = full ^ basis[k];
    // e_I ^ e_{I^c} = sign vol; for disjoint sets the Clifford product is the wedge.
    const auto prod = alg.monomial_product(basis[k], complement);
    const auto it = std::find(basis.begin(), basis.end(), complement);
    m(k, static_cast<std::size_t>(it - basis.begin())) = prod.front().second;
  }
  return m;
}

Matrix twisted_hodge_star(std::size_t n, Parity p) {
  if (n % 2 != 0) throw ContractError("twisted_hodge_star: even dimension required");
  const CliffordAlgebra alg(n);
  const auto idx = parity_indices(alg, p);
  return pick(right_multiplication(alg, static_cast<Blade>(alg.dimension() - 1)), idx, idx);
}

SuperFiltration hodge_filtration(const ModulePtr& module) {
  require_exterior(module, 4);
  const auto even = exterior_basis(4, Parity::Even);
  const Matrix star_even = twisted_hodge_star(4, Parity::Even);
  const Matrix star_odd = twisted_hodge_star(4, Parity::Odd);
  const Subspace plus_even = Subspace::span(left_kernel(star_even - Matrix::identity(8)));
  const Subspace plus_odd = Subspace::span(left_kernel(star_odd - Matrix::identity(8)));

  std::vector<std::size_t> deg04, deg2;
  for (std::size_t k = 0; k < even.size(); ++k) (blade_grade(even[k]) == 2 ? deg2 : deg04).push_back(k);
  const Subspace l0_plus = subspace_intersect(plus_even, Subspace::coordinate(8, deg04));
  const Subspace l2 = Subspace::coordinate(8, deg2);

  std::vector<Subspace> levels{l0_plus, plus_odd, subspace_sum(l0_plus, l2), Subspace::full(8), Subspace::full(8)};
  return SuperFiltration(module, std::move(levels));
}

SuperFiltration hodge_filtration() { return hodge_filtration(exterior_module(4)); }

ModulePtr irreducible_cl5() {
  const CliffordAlgebra cl4(4);
  const std::size_t dim = cl4.dimension();
  std::vector<Matrix> total;
  for (std::size_t i = 1; i <= 4; ++i) total.push_back(left_multiplication(cl4, Blade{1} << (i - 1)));
  // rho_j(x) = (-1)^|x| x e_j anticommutes with the left actions and squares
  // to -1, so rho_1 rho_2 rho_3 is a fifth anticommuting involution.
  Matrix grade_sign(dim, dim);
  for (std::size_t k = 0; k < dim; ++k) grade_sign(k, k) = Rational(blade_grade(cl4.basis()[k]) % 2 == 0 ? 1 : -1);
  auto rho = [&](std::size_t j) { return grade_sign * right_multiplication(cl4, Blade{1} << (j - 1)); };
  total.push_back(rho(3) * rho(2) * rho(1));
  return module_from_total(std::make_shared<const CliffordAlgebra>(5), cl4, total);
}

ModulePtr irreducible_module(std::size_t n) {
  if (n >= 1 && n <= 3) return exterior_module(n);
  if (n == 5) return irreducible_cl5();
  if (n != 4) throw ContractError("irreducible_module: only 1 <= N <= 5 is provided");
  // +1 eigenspace of x -> x vol, with basis b + b vol over blades of grade <= 1
  // and the grade-2 blades containing e_1; the generators act by signed permutations.
  const auto module = exterior_module(4);
  Matrix even_rows(0, 8), odd_rows(0, 8);
  for (Parity p : {Parity::Even, Parity::Odd}) {
    const auto basis = exterior_basis(4, p);
    const Matrix proj = twisted_hodge_star(4, p) + Matrix::identity(8);
    std::vector<Vector> rows;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      const int g = blade_grade(basis[k]);
      if (g <= 1 || (g == 2 && (basis[k] & 1u))) rows.push_back(proj.row_vector(k));
    }
    (p == Parity::Even ? even_rows : odd_rows) = Matrix::from_rows(rows, 8);
  }
  return restrict_module(*module, even_rows, odd_rows);
}

}  // namespace cliffilt
