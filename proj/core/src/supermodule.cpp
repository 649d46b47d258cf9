#include "cliffilt/supermodule.hpp"

#include <algorithm>

#include "cliffilt/error.hpp"

namespace cliffilt {

CliffordSupermodule::CliffordSupermodule(std::shared_ptr<const CliffordAlgebra> algebra, std::size_t dim_even,
                                         std::size_t dim_odd, std::vector<Matrix> gamma_eo,
                                         std::vector<Matrix> gamma_oe)
    : algebra_(std::move(algebra)),
      dim_even_(dim_even),
      dim_odd_(dim_odd),
      gamma_eo_(std::move(gamma_eo)),
      gamma_oe_(std::move(gamma_oe)) {
  if (!algebra_) throw ContractError("CliffordSupermodule: null algebra");
  const std::size_t n = algebra_->generators();
  if (gamma_eo_.size() != n || gamma_oe_.size() != n)
    throw DimensionError("CliffordSupermodule: one action matrix per generator and parity is required");
  for (std::size_t i = 0; i < n; ++i) {
    if (gamma_eo_[i].rows() != dim_even_ || gamma_eo_[i].cols() != dim_odd_)
      throw DimensionError("CliffordSupermodule: gamma_eo has the wrong shape");
    if (gamma_oe_[i].rows() != dim_odd_ || gamma_oe_[i].cols() != dim_even_)
      throw DimensionError("CliffordSupermodule: gamma_oe has the wrong shape");
  }
}

Matrix CliffordSupermodule::total_gamma(std::size_t i) const {
  Matrix m(dim_total(), dim_total());
  m.set_block(0, dim_even_, gamma_eo(i));
  m.set_block(dim_even_, 0, gamma_oe(i));
  return m;
}

namespace {

nlohmann::json matrix_witness(const Matrix& m) {
  auto rows = nlohmann::json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto row = nlohmann::json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

Certificate check_supermodule(const CliffordSupermodule& m) {
  const std::size_t n = m.generators();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const Rational two_g = Rational(2) * m.algebra().gram()(i, j);
      for (Parity p : {Parity::Even, Parity::Odd}) {
        const Matrix& a = m.gamma(i, p);
        const Matrix& b = m.gamma(j, p);
        const Matrix& a_back = m.gamma(i, flip(p));
        const Matrix& b_back = m.gamma(j, flip(p));
        Matrix defect = a * b_back + b * a_back - Matrix::scalar(m.dim(p), two_g);
        if (!defect.is_zero()) {
          return Certificate::fail("clifford_relations",
                                   {{"i", i + 1},
                                    {"j", j + 1},
                                    {"parity", p == Parity::Even ? "even" : "odd"},
                                    {"defect", matrix_witness(defect)}});
        }
      }
    }
  }
  return Certificate::ok("clifford_relations", {{"generators", n}, {"dim_even", m.dim_even()}, {"dim_odd", m.dim_odd()}});
}

ModulePtr restrict_module(const CliffordSupermodule& m, const Matrix& even_basis, const Matrix& odd_basis) {
  if (even_basis.cols() != m.dim_even() || odd_basis.cols() != m.dim_odd())
    throw DimensionError("restrict_module: basis lives in the wrong space");
  std::vector<Matrix> eo, oe;
  for (std::size_t i = 0; i < m.generators(); ++i) {
    eo.push_back(express_in_basis(odd_basis, even_basis * m.gamma_eo(i)));
    oe.push_back(express_in_basis(even_basis, odd_basis * m.gamma_oe(i)));
  }
  return std::make_shared<const CliffordSupermodule>(m.algebra_ptr(), even_basis.rows(), odd_basis.rows(),
                                                     std::move(eo), std::move(oe));
}

ModulePtr direct_sum(const CliffordSupermodule& a, const CliffordSupermodule& b) {
  if (!(a.algebra() == b.algebra())) throw DimensionError("direct_sum: modules over different algebras");
  std::vector<Matrix> eo, oe;
  for (std::size_t i = 0; i < a.generators(); ++i) {
    eo.push_back(direct_sum(a.gamma_eo(i), b.gamma_eo(i)));
    oe.push_back(direct_sum(a.gamma_oe(i), b.gamma_oe(i)));
  }
  return std::make_shared<const CliffordSupermodule>(a.algebra_ptr(), a.dim_even() + b.dim_even(),
                                                     a.dim_odd() + b.dim_odd(), std::move(eo), std::move(oe));
}

SuperFiltration::SuperFiltration(ModulePtr module, std::vector<Subspace> levels)
    : module_(std::move(module)), levels_(std::move(levels)) {
  if (!module_) throw ContractError("SuperFiltration: null module");
  if (levels_.size() < 2) throw ContractError("SuperFiltration: at least levels 0 and 1 are required");
  for (std::size_t p = 0; p < levels_.size(); ++p) {
    if (levels_[p].ambient_dim() != module_->dim(parity_of(static_cast<int>(p))))
      throw DimensionError("SuperFiltration: level in the wrong parity part");
  }
}

SuperFiltration SuperFiltration::from_flags(ModulePtr module, std::vector<Subspace> even, std::vector<Subspace> odd) {
  if (even.empty() || odd.empty()) throw ContractError("SuperFiltration: both flags need at least one level");
  const std::size_t top = std::max(2 * even.size() - 2, 2 * odd.size() - 1);
  std::vector<Subspace> levels;
  for (std::size_t p = 0; p <= top; ++p) {
    const auto& flag = p % 2 == 0 ? even : odd;
    const std::size_t k = p / 2;
    levels.push_back(k < flag.size() ? flag[k] : flag.back());
  }
  return SuperFiltration(std::move(module), std::move(levels));
}

Subspace SuperFiltration::level(int p) const {
  const Parity par = parity_of(p);
  if (p < 0) return Subspace::zero(module_->dim(par));
  if (p > top()) return Subspace::full(module_->dim(par));
  return levels_[static_cast<std::size_t>(p)];
}

std::vector<Subspace> SuperFiltration::even_flags() const {
  std::vector<Subspace> out;
  for (int p = 0; p <= top(); p += 2) out.push_back(levels_[static_cast<std::size_t>(p)]);
  return out;
}

std::vector<Subspace> SuperFiltration::odd_flags() const {
  std::vector<Subspace> out;
  for (int p = 1; p <= top(); p += 2) out.push_back(levels_[static_cast<std::size_t>(p)]);
  return out;
}

std::vector<std::size_t> SuperFiltration::level_dims() const {
  std::vector<std::size_t> out;
  for (const auto& s : levels_) out.push_back(s.dim());
  return out;
}

Subspace SuperFiltration::conventional_level(int p) const {
  const Subspace a = level(p);
  const Subspace b = level(p - 1);
  const std::size_t de = module_->dim_even();
  const std::size_t n = module_->dim_total();
  const Subspace& ev = parity_of(p) == Parity::Even ? a : b;
  const Subspace& od = parity_of(p) == Parity::Even ? b : a;
  Matrix rows(ev.dim() + od.dim(), n);
  rows.set_block(0, 0, ev.basis());
  rows.set_block(ev.dim(), de, od.basis());
  return Subspace::span(rows);
}

Subspace gamma_image(const CliffordSupermodule& m, const Subspace& s, Parity from) {
  const std::size_t target = m.dim(flip(from));
  if (s.is_zero() || m.generators() == 0) return Subspace::zero(target);
  Matrix stacked(0, target);
  for (std::size_t i = 0; i < m.generators(); ++i) stacked = vstack(stacked, s.basis() * m.gamma(i, from));
  return Subspace::span(stacked);
}

Certificate check_filtration(const SuperFiltration& f) {
  const auto& m = f.module();
  const int top = f.top();
  for (int p = 0; p + 2 <= top; ++p) {
    if (!f.level(p + 2).contains(f.level(p)))
      return Certificate::fail("super_filtration", {{"condition", "nesting"}, {"p", p}});
  }
  for (int p : {top - 1, top}) {
    if (!f.level(p).is_full())
      return Certificate::fail("super_filtration", {{"condition", "exhaustive"}, {"p", p}});
  }
  for (int p = 0; p < top; ++p) {
    const Subspace fp = f.level(p);
    const Subspace next = f.level(p + 1);
    for (std::size_t i = 0; i < m.generators(); ++i) {
      for (std::size_t r = 0; r < fp.dim(); ++r) {
        if (!next.contains(apply(fp.basis().row(r), m.gamma(i, parity_of(p))))) {
          return Certificate::fail("super_filtration",
                                   {{"condition", "gamma_compatibility"}, {"i", i + 1}, {"p", p}, {"basis_vector", r}});
        }
      }
    }
  }
  return Certificate::ok("super_filtration", {{"top", top}, {"level_dims", f.level_dims()}});
}

SuperFiltration normalize(const SuperFiltration& f) {
  int lowest = 0;
  while (lowest <= f.top() && f.level(lowest).is_zero()) ++lowest;
  const int shift = 2 * (lowest / 2);
  std::vector<Subspace> levels;
  for (int p = shift; p <= f.top(); ++p) levels.push_back(f.level(p));
  while (levels.size() < 2) levels.push_back(f.level(shift + static_cast<int>(levels.size())));
  while (levels.size() > 2 && levels[levels.size() - 2].is_full() && levels[levels.size() - 3].is_full())
    levels.pop_back();
  return SuperFiltration(f.module_ptr(), std::move(levels));
}

SuperFiltration generated_filtration(ModulePtr module, const std::vector<FiltrationSeed>& seeds, int top) {
  if (top < 1) throw ContractError("generated_filtration: top must be at least 1");
  std::vector<Subspace> levels;
  for (int p = 0; p <= top; ++p) {
    const Parity par = parity_of(p);
    const std::size_t d = module->dim(par);
    if (p >= top - 1) {
      levels.push_back(Subspace::full(d));
      continue;
    }
    std::vector<Vector> rows;
    for (const auto& s : seeds) {
      if (s.level < 0 || s.level % 2 != p % 2 || s.level > p) continue;
      if (s.vector.size() != d) throw DimensionError("generated_filtration: seed in the wrong parity part");
      rows.push_back(s.vector);
    }
    Subspace level = Subspace::span(rows, d);
    if (p >= 2) level = subspace_sum(level, levels[static_cast<std::size_t>(p - 2)]);
    if (p >= 1) level = subspace_sum(level, gamma_image(*module, levels[static_cast<std::size_t>(p - 1)], flip(par)));
    levels.push_back(std::move(level));
  }
  return SuperFiltration(std::move(module), std::move(levels));
}

SuperFiltration direct_sum(const SuperFiltration& a, const SuperFiltration& b) {
  auto module = direct_sum(a.module(), b.module());
  const int top = std::max(a.top(), b.top());
  std::vector<Subspace> levels;
  for (int p = 0; p <= top; ++p) {
    const Subspace x = a.level(p), y = b.level(p);
    Matrix rows(x.dim() + y.dim(), x.ambient_dim() + y.ambient_dim());
    rows.set_block(0, 0, x.basis());
    rows.set_block(x.dim(), x.ambient_dim(), y.basis());
    levels.push_back(Subspace::span(rows));
  }
  return SuperFiltration(std::move(module), std::move(levels));
}

SuperFiltration trivial_filtration(ModulePtr module) {
  std::vector<Subspace> levels{Subspace::full(module->dim_even()), Subspace::full(module->dim_odd())};
  return SuperFiltration(std::move(module), std::move(levels));
}

}  // namespace cliffilt
