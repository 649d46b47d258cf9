#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "cliffilt/certificate.hpp"
#include "cliffilt/clifford.hpp"
#include "cliffilt/matrix.hpp"
#include "cliffilt/subspace.hpp"

namespace cliffilt {

enum class Parity { Even = 0, Odd = 1 };

[[nodiscard]] inline Parity parity_of(int p) { return (p % 2 + 2) % 2 == 0 ? Parity::Even : Parity::Odd; }
[[nodiscard]] inline Parity flip(Parity p) { return p == Parity::Even ? Parity::Odd : Parity::Even; }

/// Finite-dimensional Z2-graded module over a Clifford algebra, given by the
/// odd generator actions split into even->odd and odd->even blocks.
/// Maps act on the right of row vectors: x_even * gamma_eo(i) lies in the odd part.
class CliffordSupermodule {
 public:
  CliffordSupermodule(std::shared_ptr<const CliffordAlgebra> algebra, std::size_t dim_even, std::size_t dim_odd,
                      std::vector<Matrix> gamma_eo, std::vector<Matrix> gamma_oe);

  [[nodiscard]] const CliffordAlgebra& algebra() const { return *algebra_; }
  [[nodiscard]] const std::shared_ptr<const CliffordAlgebra>& algebra_ptr() const { return algebra_; }
  [[nodiscard]] std::size_t generators() const { return algebra_->generators(); }
  [[nodiscard]] std::size_t dim_even() const { return dim_even_; }
  [[nodiscard]] std::size_t dim_odd() const { return dim_odd_; }
  [[nodiscard]] std::size_t dim(Parity p) const { return p == Parity::Even ? dim_even_ : dim_odd_; }
  [[nodiscard]] std::size_t dim_total() const { return dim_even_ + dim_odd_; }

  /// 0-based generator index.
  [[nodiscard]] const Matrix& gamma_eo(std::size_t i) const { return gamma_eo_.at(i); }
  [[nodiscard]] const Matrix& gamma_oe(std::size_t i) const { return gamma_oe_.at(i); }
  /// The block of generator i leaving the given parity.
  [[nodiscard]] const Matrix& gamma(std::size_t i, Parity from) const {
    return from == Parity::Even ? gamma_eo(i) : gamma_oe(i);
  }
  /// Generator i on the total space, even coordinates first.
  [[nodiscard]] Matrix total_gamma(std::size_t i) const;

  friend bool operator==(const CliffordSupermodule& a, const CliffordSupermodule& b) {
    return *a.algebra_ == *b.algebra_ && a.dim_even_ == b.dim_even_ && a.dim_odd_ == b.dim_odd_ &&
           a.gamma_eo_ == b.gamma_eo_ && a.gamma_oe_ == b.gamma_oe_;
  }

 private:
  std::shared_ptr<const CliffordAlgebra> algebra_;
  std::size_t dim_even_ = 0;
  std::size_t dim_odd_ = 0;
  std::vector<Matrix> gamma_eo_;
  std::vector<Matrix> gamma_oe_;
};

using ModulePtr = std::shared_ptr<const CliffordSupermodule>;

/// Exact check of {g_i, g_j} = 2 gram(i, j) Id on both parities.
[[nodiscard]] Certificate check_supermodule(const CliffordSupermodule& m);

/// Submodule spanned by the given rows of each parity (which must form a
/// g-invariant pair), expressed in those rows as a basis.
[[nodiscard]] ModulePtr restrict_module(const CliffordSupermodule& m, const Matrix& even_basis, const Matrix& odd_basis);
[[nodiscard]] ModulePtr direct_sum(const CliffordSupermodule& a, const CliffordSupermodule& b);

/// Increasing super filtration: levels F_0, ..., F_top with F_p inside the part
/// of parity p mod 2. Levels above top stabilize to the full parity part and
/// levels below 0 are zero.
class SuperFiltration {
 public:
  /// Throws DimensionError when a level lives in the wrong ambient space, and
  /// ContractError when top < 1.
  SuperFiltration(ModulePtr module, std::vector<Subspace> levels);
  /// even[k] = F_{2k}, odd[k] = F_{2k+1}; top = max(2 len(even) - 2, 2 len(odd) - 1).
  static SuperFiltration from_flags(ModulePtr module, std::vector<Subspace> even, std::vector<Subspace> odd);

  [[nodiscard]] const CliffordSupermodule& module() const { return *module_; }
  [[nodiscard]] const ModulePtr& module_ptr() const { return module_; }
  [[nodiscard]] int top() const { return static_cast<int>(levels_.size()) - 1; }
  [[nodiscard]] Subspace level(int p) const;
  [[nodiscard]] const std::vector<Subspace>& levels() const { return levels_; }
  [[nodiscard]] std::vector<Subspace> even_flags() const;
  [[nodiscard]] std::vector<Subspace> odd_flags() const;
  [[nodiscard]] std::vector<std::size_t> level_dims() const;
  /// Conventional form F'_p = F_p + F_{p-1} inside the total space.
  [[nodiscard]] Subspace conventional_level(int p) const;

  friend bool operator==(const SuperFiltration& a, const SuperFiltration& b) {
    return *a.module_ == *b.module_ && a.levels_ == b.levels_;
  }

 private:
  ModulePtr module_;
  std::vector<Subspace> levels_;
};

/// Nesting, exhaustiveness at the top two levels, and g_i F_p inside F_{p+1}.
[[nodiscard]] Certificate check_filtration(const SuperFiltration& f);

/// Shifts by an even amount so the lowest nonzero level is 0 or 1, and drops
/// redundant top levels.
[[nodiscard]] SuperFiltration normalize(const SuperFiltration& f);

/// Smallest filtration with top level `top` containing each seed vector at its
/// level: F_p = span(seeds at p) + F_{p-2} + sum_i g_i F_{p-1}, with the top two
/// levels forced full. Seeds are (level, vector in the part of that parity).
struct FiltrationSeed {
  int level = 0;
  Vector vector;
};
[[nodiscard]] SuperFiltration generated_filtration(ModulePtr module, const std::vector<FiltrationSeed>& seeds, int top);

/// g-closure helper: sum_i g_i S for S inside the part of parity `from`.
[[nodiscard]] Subspace gamma_image(const CliffordSupermodule& m, const Subspace& s, Parity from);

[[nodiscard]] SuperFiltration direct_sum(const SuperFiltration& a, const SuperFiltration& b);

/// Filtration with F_0 = V_even and F_1 = V_odd.
[[nodiscard]] SuperFiltration trivial_filtration(ModulePtr module);

}  // namespace cliffilt
