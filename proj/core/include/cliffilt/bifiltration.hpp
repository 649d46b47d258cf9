#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

#include "cliffilt/certificate.hpp"
#include "cliffilt/clifford.hpp"
#include "cliffilt/matrix.hpp"
#include "cliffilt/random.hpp"
#include "cliffilt/subspace.hpp"

namespace cliffilt {

/// Z2 x Z2 bidegree (a, b) of a component V_ab.
struct Bidegree {
  int plus = 0;
  int minus = 0;
};

/// Module over Cl(p) (x) Cl(q) (twisted) split into four components V_ab.
/// gamma_plus(i) sends V_ab to V_{1-a,b}; gamma_minus(j) sends V_ab to V_{a,1-b}.
/// Blocks are indexed by the source component, 2 a + b.
class BiSupermodule {
 public:
  using Blocks = std::array<Matrix, 4>;

  BiSupermodule(std::shared_ptr<const CliffordAlgebra> plus, std::shared_ptr<const CliffordAlgebra> minus,
                std::array<std::size_t, 4> dims, std::vector<Blocks> gamma_plus, std::vector<Blocks> gamma_minus);

  [[nodiscard]] const CliffordAlgebra& plus_algebra() const { return *plus_; }
  [[nodiscard]] const CliffordAlgebra& minus_algebra() const { return *minus_; }
  [[nodiscard]] const std::shared_ptr<const CliffordAlgebra>& plus_ptr() const { return plus_; }
  [[nodiscard]] const std::shared_ptr<const CliffordAlgebra>& minus_ptr() const { return minus_; }
  [[nodiscard]] std::size_t plus_generators() const { return plus_->generators(); }
  [[nodiscard]] std::size_t minus_generators() const { return minus_->generators(); }
  [[nodiscard]] std::size_t dim(int a, int b) const { return dims_[index(a, b)]; }
  [[nodiscard]] const std::array<std::size_t, 4>& dims() const { return dims_; }
  [[nodiscard]] std::size_t dim_total() const { return dims_[0] + dims_[1] + dims_[2] + dims_[3]; }
  /// Block of gamma_plus(i) (0-based) leaving V_ab.
  [[nodiscard]] const Matrix& gamma_plus(std::size_t i, int a, int b) const { return gamma_plus_.at(i)[index(a, b)]; }
  [[nodiscard]] const Matrix& gamma_minus(std::size_t j, int a, int b) const { return gamma_minus_.at(j)[index(a, b)]; }

  static std::size_t index(int a, int b) { return static_cast<std::size_t>(2 * (a & 1) + (b & 1)); }

  friend bool operator==(const BiSupermodule& x, const BiSupermodule& y) {
    return *x.plus_ == *y.plus_ && *x.minus_ == *y.minus_ && x.dims_ == y.dims_ && x.gamma_plus_ == y.gamma_plus_ &&
           x.gamma_minus_ == y.gamma_minus_;
  }

 private:
  std::shared_ptr<const CliffordAlgebra> plus_;
  std::shared_ptr<const CliffordAlgebra> minus_;
  std::array<std::size_t, 4> dims_{};
  std::vector<Blocks> gamma_plus_;
  std::vector<Blocks> gamma_minus_;
};

using BiModulePtr = std::shared_ptr<const BiSupermodule>;

/// Each family satisfies its Clifford relations and the two families anticommute.
[[nodiscard]] Certificate check_bimodule(const BiSupermodule& m);

/// First-quadrant bifiltration F_{m,n} inside V_{m mod 2, n mod 2}, stored for
/// 0 <= m <= M+ and 0 <= n <= M-. Beyond the stored range a level equals the
/// stored one of the same parity at the edge.
class Bifiltration {
 public:
  /// levels[m][n]; needs M+, M- >= 1.
  Bifiltration(BiModulePtr module, std::vector<std::vector<Subspace>> levels);

  [[nodiscard]] const BiSupermodule& module() const { return *module_; }
  [[nodiscard]] const BiModulePtr& module_ptr() const { return module_; }
  [[nodiscard]] int top_plus() const { return static_cast<int>(levels_.size()) - 1; }
  [[nodiscard]] int top_minus() const { return static_cast<int>(levels_.front().size()) - 1; }
  [[nodiscard]] Subspace level(int m, int n) const;
  [[nodiscard]] const std::vector<std::vector<Subspace>>& levels() const { return levels_; }
  [[nodiscard]] std::vector<std::vector<std::size_t>> dims() const;

  friend bool operator==(const Bifiltration& a, const Bifiltration& b) {
    return *a.module_ == *b.module_ && a.levels_ == b.levels_;
  }

 private:
  BiModulePtr module_;
  std::vector<std::vector<Subspace>> levels_;
};

/// Module relations, nesting in both directions, the four corners full, and
/// g+ F_{m,n} in F_{m+1,n}, g- F_{m,n} in F_{m,n+1} (including the stabilized edge).
[[nodiscard]] Certificate check_bifiltration(const Bifiltration& f);

/// Z x Z graded representation over R[H+P, H-P] in bidegrees [0, M+] x [0, M-].
/// sigma = H+P and tau = H-P; Q+ wraps at m = M+ and Q- at n = M-, exactly as
/// the one-variable OffShellRep wraps at its top degree.
class BiGradedRep {
 public:
  using Table = std::vector<std::vector<Matrix>>;  // [m][n]

  /// sigma[m][n] for m <= M+ - 2; tau[m][n] for n <= M- - 2;
  /// qp[i][m][n] for m <= M+ (wrap at M+); qm[j][m][n] for n <= M- (wrap at M-).
  BiGradedRep(std::shared_ptr<const CliffordAlgebra> plus, std::shared_ptr<const CliffordAlgebra> minus,
              std::vector<std::vector<std::size_t>> dims, Table sigma, Table tau, std::vector<Table> qp,
              std::vector<Table> qm);

  [[nodiscard]] const CliffordAlgebra& plus_algebra() const { return *plus_; }
  [[nodiscard]] const CliffordAlgebra& minus_algebra() const { return *minus_; }
  [[nodiscard]] const std::shared_ptr<const CliffordAlgebra>& plus_ptr() const { return plus_; }
  [[nodiscard]] const std::shared_ptr<const CliffordAlgebra>& minus_ptr() const { return minus_; }
  [[nodiscard]] int top_plus() const { return static_cast<int>(dims_.size()) - 1; }
  [[nodiscard]] int top_minus() const { return static_cast<int>(dims_.front().size()) - 1; }
  [[nodiscard]] const std::vector<std::vector<std::size_t>>& stored_dims() const { return dims_; }
  [[nodiscard]] const Table& stored_sigma() const { return sigma_; }
  [[nodiscard]] const Table& stored_tau() const { return tau_; }
  [[nodiscard]] const std::vector<Table>& stored_qp() const { return qp_; }
  [[nodiscard]] const std::vector<Table>& stored_qm() const { return qm_; }

  /// Accessors valid for every m, n >= 0 (stabilized beyond the stored range).
  [[nodiscard]] std::size_t dim(int m, int n) const;
  [[nodiscard]] Matrix sigma(int m, int n) const;
  [[nodiscard]] Matrix tau(int m, int n) const;
  [[nodiscard]] Matrix qp(std::size_t i, int m, int n) const;
  [[nodiscard]] Matrix qm(std::size_t j, int m, int n) const;
  /// Helicity L on V_{m,n}: (m - n) Id.
  [[nodiscard]] Matrix helicity(int m, int n) const;

  /// Class of z in V_{m,n} in (sigma - 1, tau - 1) quotient, as a vector of the corner component.
  [[nodiscard]] Vector quotient_class(int m, int n, const Vector& z) const;

  friend bool operator==(const BiGradedRep& a, const BiGradedRep& b) {
    return *a.plus_ == *b.plus_ && *a.minus_ == *b.minus_ && a.dims_ == b.dims_ && a.sigma_ == b.sigma_ &&
           a.tau_ == b.tau_ && a.qp_ == b.qp_ && a.qm_ == b.qm_;
  }

 private:
  [[nodiscard]] int stab_plus(int m) const;
  [[nodiscard]] int stab_minus(int n) const;

  std::shared_ptr<const CliffordAlgebra> plus_;
  std::shared_ptr<const CliffordAlgebra> minus_;
  std::vector<std::vector<std::size_t>> dims_;
  Table sigma_;
  Table tau_;
  std::vector<Table> qp_;
  std::vector<Table> qm_;
};

/// Shift injectivity and commutation, {Q+-_i, Q+-_j} = 2 delta_ij (H +- P),
/// {Q+_i, Q-_j} = 0, [shift, Q] = 0, [L, Q+-] = +-Q+-, [L, H +- P] = +-2 (H +- P)
/// and h = deg (mod 2), on every bidegree up to one past the stored range.
[[nodiscard]] Certificate verify_2d(const BiGradedRep& r);

/// V_{m,n} := F_{m,n} V with inclusions as shifts and restricted generators.
[[nodiscard]] BiGradedRep bideform(const Bifiltration& f);
/// Bigraded dimension table of Def_t(Def_s V), computed in two stages: first the
/// plus-graded components F+_m V, then the minus filtration inside each of them.
[[nodiscard]] std::vector<std::vector<std::size_t>> two_stage_dims(const Bifiltration& f);

/// V / (sigma - 1, tau - 1) V realized on the corner components, with levels
/// sigma^j tau^l V_{m,n}. Throws ContractError when shifts are not injective or do not commute.
[[nodiscard]] Bifiltration biquotient(const BiGradedRep& r);

/// Verifies the explicit identification of f with biquotient(bideform(f)).
[[nodiscard]] Certificate bifiltered_roundtrip(const Bifiltration& f);

/// Cl(p) (x) Cl(q) with (a1 (x) b1)(a2 (x) b2) = (-1)^{|b1||a2|} a1 a2 (x) b1 b2.
/// Basis pairs (a, b) are ordered as the Cl(p+q) monomials a b' (b shifted past the p generators).
class TwistedTensor {
 public:
  TwistedTensor(std::shared_ptr<const CliffordAlgebra> a, std::shared_ptr<const CliffordAlgebra> b);

  [[nodiscard]] const CliffordAlgebra& left() const { return *a_; }
  [[nodiscard]] const CliffordAlgebra& right() const { return *b_; }
  [[nodiscard]] const CliffordAlgebra& combined() const { return *combined_; }
  [[nodiscard]] const std::shared_ptr<const CliffordAlgebra>& combined_ptr() const { return combined_; }
  [[nodiscard]] std::size_t dimension() const { return combined_->dimension(); }

  /// Blade of Cl(p+q) corresponding to a (x) b.
  [[nodiscard]] Blade pair_blade(Blade a, Blade b) const { return a | (b << a_->generators()); }
  [[nodiscard]] std::pair<Blade, Blade> split(Blade c) const;

  /// Product of the basis pairs by the sign rule, as a combination of pairs encoded by pair_blade.
  [[nodiscard]] BladeCombination pair_product(Blade a1, Blade b1, Blade a2, Blade b2) const;
  /// Product of two coefficient vectors (in the combined basis order) by the sign rule.
  [[nodiscard]] Vector product(const Vector& x, const Vector& y) const;
  /// Gamma_k = g_k (x) 1 for k <= p, 1 (x) g_{k-p} after that (1-based).
  [[nodiscard]] Vector generator(std::size_t k) const;

  /// F_m A (x) F_n B inside the combined coefficient space.
  [[nodiscard]] Subspace level(int m, int n) const;

 private:
  std::shared_ptr<const CliffordAlgebra> a_;
  std::shared_ptr<const CliffordAlgebra> b_;
  std::shared_ptr<const CliffordAlgebra> combined_;
};

/// {Gamma_a, Gamma_b} = 2 delta_ab under the twisted product, plus agreement of
/// the twisted product with the Cl(p+q) product on all basis pairs.
[[nodiscard]] Certificate check_twisted_clifford(const TwistedTensor& t);

/// The twisted tensor acting on itself by left multiplication, bifiltered by F_m A (x) F_n B.
/// Requires identity-gram factors with p, q >= 1.
[[nodiscard]] Bifiltration regular_bifiltered_module(std::size_t p, std::size_t q);

/// Bifiltration of the regular module generated by random homogeneous vectors at
/// random bidegrees, with the four corners forced full.
[[nodiscard]] Bifiltration random_bifiltration(std::size_t p, std::size_t q, Rng& rng);

}  // namespace cliffilt
