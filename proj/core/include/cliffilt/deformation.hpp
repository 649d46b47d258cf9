#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

#include "cliffilt/certificate.hpp"
#include "cliffilt/clifford.hpp"
#include "cliffilt/matrix.hpp"
#include "cliffilt/supermodule.hpp"

namespace cliffilt {

/// Z-graded representation of the graded super Poincare algebra on a free
/// R[H]-module, stored in degrees 0..m.
///
/// Above m the grading stabilizes: V_p is identified with V_{p-2} through H,
/// so H is the identity from degree m-1 on, and Q_i on V_m (which lands in
/// V_{m+1} = H V_{m-1}) is stored as the "wrap" H^-1 Q_i : V_m -> V_{m-1}.
class OffShellRep {
 public:
  /// dims[p] for p = 0..m; shifts[p] : V_p -> V_{p+2} for p = 0..m-2;
  /// q[i][p] : V_p -> V_{p+1} for p = 0..m-1 and q[i][m] the wrap.
  OffShellRep(std::shared_ptr<const CliffordAlgebra> algebra, std::vector<std::size_t> dims,
              std::vector<Matrix> shifts, std::vector<std::vector<Matrix>> q);

  [[nodiscard]] const CliffordAlgebra& algebra() const { return *algebra_; }
  [[nodiscard]] const std::shared_ptr<const CliffordAlgebra>& algebra_ptr() const { return algebra_; }
  [[nodiscard]] std::size_t generators() const { return algebra_->generators(); }
  [[nodiscard]] int top() const { return static_cast<int>(dims_.size()) - 1; }
  [[nodiscard]] const std::vector<std::size_t>& stored_dims() const { return dims_; }

  /// Degree-p component dimension for any p (0 below 0, stabilized above m).
  [[nodiscard]] std::size_t dim(int p) const;
  /// H : V_p -> V_{p+2} for any p >= 0.
  [[nodiscard]] Matrix shift(int p) const;
  /// Q_i : V_p -> V_{p+1} for any p >= 0, 0-based i, in stabilized coordinates.
  [[nodiscard]] Matrix q(std::size_t i, int p) const;

  [[nodiscard]] const std::vector<Matrix>& stored_shifts() const { return shifts_; }
  [[nodiscard]] const std::vector<std::vector<Matrix>>& stored_q() const { return q_; }
  /// Lowest degree with a nonzero component (top + 1 if all are zero).
  [[nodiscard]] int lowest_degree() const;

  friend bool operator==(const OffShellRep& a, const OffShellRep& b) {
    return *a.algebra_ == *b.algebra_ && a.dims_ == b.dims_ && a.shifts_ == b.shifts_ && a.q_ == b.q_;
  }

 private:
  std::shared_ptr<const CliffordAlgebra> algebra_;
  std::vector<std::size_t> dims_;
  std::vector<Matrix> shifts_;
  std::vector<std::vector<Matrix>> q_;
};

/// H injective, {Q_i, Q_j} = 2 gram(i, j) H and [H, Q_i] = 0 on every degree
/// up to the first two stabilized ones.
[[nodiscard]] Certificate verify_offshell(const OffShellRep& r);

/// V_p := F_p V with its canonical basis; H = inclusions, Q_i = g_i restricted.
[[nodiscard]] OffShellRep deform(const SuperFiltration& f);

/// Truncated formal deformation of a filtered module, elements sum_p v_p s^p
/// with v_p in F_p V (held as vectors of the parity part of V).
class FormalDeformation {
 public:
  explicit FormalDeformation(SuperFiltration f) : filtration_(std::move(f)) {}

  [[nodiscard]] const SuperFiltration& filtration() const { return filtration_; }
  /// (Def_s V)_p = F_p V.
  [[nodiscard]] Subspace component(int p) const { return filtration_.level(p); }
  /// ev_1: (even part, odd part) of sum_p v_p.
  [[nodiscard]] std::pair<Vector, Vector> ev1(const std::vector<Vector>& element) const;
  /// y with (s^2 - 1) y = x, given ev_1(x) = 0; y has degree at most deg x - 2.
  /// Throws ContractError when x is not in the kernel of ev_1 or not in Def_s V.
  [[nodiscard]] std::vector<Vector> kernel_preimage(const std::vector<Vector>& element) const;
  [[nodiscard]] bool contains(const std::vector<Vector>& element) const;

 private:
  SuperFiltration filtration_;
};

/// Result of specializing H to k > 0: a module over Cl with gram k * gram.
struct ShellQuotient {
  Rational shell;
  SuperFiltration filtration;
};

/// V (x)_{R[H]} R_k realized on the stable space V_{m-1} + V_m. Requires k > 0;
/// throws ContractError otherwise (use graded_quotient for k = 0).
[[nodiscard]] ShellQuotient quotient_at(const OffShellRep& r, const Rational& k);

/// V / H V with the induced square-zero maps, components in degrees 0..m.
struct GradedSpace {
  std::vector<std::size_t> dims;
  /// maps[i][p] : component p -> component p + 1, for p = 0..m-1.
  std::vector<std::vector<Matrix>> maps;
};
[[nodiscard]] GradedSpace graded_quotient(const OffShellRep& r);

/// Even and odd components of a filtered isomorphism between two filtered
/// modules over the same algebra, with its verification.
struct FilteredIso {
  Matrix even;
  Matrix odd;
  Certificate certificate;
};

/// Checks that (even, odd) is bijective, intertwines every generator and maps
/// each F_p(a) onto F_p(b).
[[nodiscard]] Certificate verify_filtered_iso(const SuperFiltration& a, const SuperFiltration& b, const Matrix& even,
                                              const Matrix& odd);

/// The explicit isomorphism V -> quotient_at(deform(f), 1), built from ev_1 and
/// the stable-space identification, and verified.
[[nodiscard]] FilteredIso canonical_roundtrip_iso(const SuperFiltration& f);

struct EnvelopeOptions {
  std::size_t kernel_samples = 100;
  std::uint64_t seed = 1;
};

/// Builds Def_s Cl(N) up to max_degree and checks the relations of
/// Q_i = g_i s and H = s^2, the PBW spanning of each degree, that ev_1 is a
/// surjective filtered algebra map, and that sampled kernel elements lie in (s^2 - 1) Def_s Cl(N).
[[nodiscard]] Certificate enveloping_quotient_check(std::size_t n, std::size_t max_degree,
                                                    const EnvelopeOptions& options = {});

}  // namespace cliffilt
