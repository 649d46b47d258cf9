#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "cliffilt/certificate.hpp"
#include "cliffilt/endomorphisms.hpp"
#include "cliffilt/random.hpp"
#include "cliffilt/supermodule.hpp"

namespace cliffilt {

using DimSequence = std::vector<std::size_t>;

/// dim F_p - dim F_{p-2} for p = 0..top.
[[nodiscard]] DimSequence gr_dimensions(const SuperFiltration& f);
/// dim of F_p modulo sum_i g_i F_{p-1}, for p = 0..top.
[[nodiscard]] DimSequence source_dimensions(const SuperFiltration& f);

enum class SummandStatus { Certified, Exhausted };
[[nodiscard]] std::string to_string(SummandStatus s);

struct Summand {
  /// Induced flags, in the coordinates of the embedding rows; not shifted.
  SuperFiltration filtration;
  /// Rows spanning the summand inside the even and odd parts of the input.
  Matrix even_embedding;
  Matrix odd_embedding;
  SummandStatus status = SummandStatus::Exhausted;
  /// Why no further idempotent exists (or what was tried).
  Certificate certificate;
};

struct Decomposition {
  std::vector<Summand> summands;
  /// Summand flags sum back to the input flags and each summand is g-invariant.
  Certificate certificate;
};

/// Splits f along idempotents of its filtered endomorphism algebra until every
/// summand is certified idempotent-free or the search budget runs out.
/// `commutant`, when given, must be graded_commutant(f.module()).
[[nodiscard]] Decomposition decompose(const SuperFiltration& f, const IdempotentOptions& options = {},
                                      const std::vector<EvenMap>* commutant = nullptr);

/// Summand with the induced flags on the row spans (which must be a g-invariant,
/// filtration-split pair).
[[nodiscard]] SuperFiltration restrict_filtration(const SuperFiltration& f, const Matrix& even_rows, const Matrix& odd_rows);

struct SummandInvariants {
  DimSequence gr_dims;
  DimSequence source_dims;
  SummandStatus status = SummandStatus::Exhausted;
};

struct InvariantReport {
  DimSequence gr_dims;
  DimSequence source_dims;
  std::vector<SummandInvariants> summands;
};

[[nodiscard]] InvariantReport invariant_report(const SuperFiltration& f, const IdempotentOptions& options = {},
                                               const std::vector<EvenMap>* commutant = nullptr);

enum class InvariantSet { GrDims, GrAndSource, All };

struct Verdict {
  bool distinguished = false;
  /// Name of the first differing invariant, empty when indistinguishable.
  std::string reason;
};

/// Three-valued screening: a difference proves the filtrations are not
/// isomorphic; agreement makes no isomorphism claim.
[[nodiscard]] Verdict invariant_equal(const SuperFiltration& a, const SuperFiltration& b,
                                      InvariantSet which = InvariantSet::All);
[[nodiscard]] Verdict invariant_equal(const InvariantReport& a, const InvariantReport& b,
                                      InvariantSet which = InvariantSet::All);

struct SearchResult {
  /// Valid filtrations achieving the target, pairwise distinguished by invariants.
  std::vector<SuperFiltration> found;
  std::size_t attempts = 0;
  std::size_t hits = 0;
};

/// Randomized greedy search for filtrations of m with the given gr dimensions.
/// Throws ContractError when the target cannot match the parity split of m.
[[nodiscard]] SearchResult filtration_search(const ModulePtr& m, const DimSequence& target, std::size_t budget, Rng& rng);

}  // namespace cliffilt
