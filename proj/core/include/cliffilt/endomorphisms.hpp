#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cliffilt/certificate.hpp"
#include "cliffilt/matrix.hpp"
#include "cliffilt/random.hpp"
#include "cliffilt/supermodule.hpp"

namespace cliffilt {

/// Parity-preserving linear map of a supermodule, one block per parity.
struct EvenMap {
  Matrix even;
  Matrix odd;

  [[nodiscard]] static EvenMap identity(const CliffordSupermodule& m);
  [[nodiscard]] Matrix total() const { return direct_sum(even, odd); }
  [[nodiscard]] bool is_zero() const { return even.is_zero() && odd.is_zero(); }
  friend EvenMap operator+(const EvenMap& a, const EvenMap& b) { return {a.even + b.even, a.odd + b.odd}; }
  friend EvenMap operator-(const EvenMap& a, const EvenMap& b) { return {a.even - b.even, a.odd - b.odd}; }
  friend EvenMap operator*(const EvenMap& a, const EvenMap& b) { return {a.even * b.even, a.odd * b.odd}; }
  friend EvenMap operator*(const Rational& s, const EvenMap& a) { return {s * a.even, s * a.odd}; }
  friend bool operator==(const EvenMap& a, const EvenMap& b) = default;
};

/// Basis of the even maps commuting with every generator.
[[nodiscard]] std::vector<EvenMap> graded_commutant(const CliffordSupermodule& m);

/// Basis of the even maps commuting with every generator and preserving every
/// level of f. The first element is always the identity.
[[nodiscard]] std::vector<EvenMap> filtered_endomorphisms(const SuperFiltration& f);
/// Same, reusing graded_commutant(f.module()).
[[nodiscard]] std::vector<EvenMap> filtered_endomorphisms(const SuperFiltration& f, const std::vector<EvenMap>& commutant);

/// True when x commutes with every generator and preserves every level of f.
[[nodiscard]] bool is_filtered_endomorphism(const SuperFiltration& f, const EvenMap& x);

enum class IdempotentSearch { Found, Certified, Exhausted };

struct IdempotentResult {
  IdempotentSearch status = IdempotentSearch::Exhausted;
  /// Set when status == Found; satisfies e^2 = e, e != 0, e != Id.
  std::optional<EvenMap> idempotent;
  /// Why the algebra has no nontrivial idempotent (Certified) or what was tried.
  Certificate certificate;
};

struct IdempotentOptions {
  std::size_t random_trials = 64;
  /// Cap on {-1, 0, 1} coefficient combinations tried after the random phase.
  std::size_t combination_budget = 729;
  std::uint64_t seed = Rng::kDefaultSeed;
};

/// Looks for a nontrivial idempotent in the algebra spanned by `basis` (which
/// must contain the identity and be closed under products). Candidates come
/// from splitting minimal polynomials of algebra elements; every idempotent is
/// checked exactly. When none is found the algebra is certified local
/// (dim E / rad E = 1, radical taken from the trace form) or a quadratic
/// division algebra (trace-free part squares into Q Id with definite norm).
[[nodiscard]] IdempotentResult find_idempotent(const std::vector<EvenMap>& basis, const IdempotentOptions& options = {});

}  // namespace cliffilt
