#include "cliffilt/invariants.hpp"

#include <algorithm>
#include <optional>
#include <tuple>

#include "cliffilt/error.hpp"

namespace cliffilt {

DimSequence gr_dimensions(const SuperFiltration& f) {
  DimSequence out;
  for (int p = 0; p <= f.top(); ++p) out.push_back(f.level(p).dim() - f.level(p - 2).dim());
  return out;
}

DimSequence source_dimensions(const SuperFiltration& f) {
  DimSequence out;
  for (int p = 0; p <= f.top(); ++p) {
    const Subspace fp = f.level(p);
    const Subspace generated = gamma_image(f.module(), f.level(p - 1), parity_of(p - 1));
    out.push_back(quotient_dim(fp, generated));
  }
  return out;
}

std::string to_string(SummandStatus s) {
  return s == SummandStatus::Certified ? "indecomposable (certified)" : "no decomposition found (budget exhausted)";
}

SuperFiltration restrict_filtration(const SuperFiltration& f, const Matrix& even_rows, const Matrix& odd_rows) {
  const ModulePtr sub = restrict_module(f.module(), even_rows, odd_rows);
  const Subspace we = Subspace::span(even_rows), wo = Subspace::span(odd_rows);
  std::vector<Subspace> levels;
  for (int p = 0; p <= f.top(); ++p) {
    const bool even = p % 2 == 0;
    const Matrix& rows = even ? even_rows : odd_rows;
    const Subspace meet = subspace_intersect(f.level(p), even ? we : wo);
    levels.push_back(Subspace::span(express_in_basis(rows, meet.basis())));
  }
  return SuperFiltration(sub, std::move(levels));
}

namespace {

void split_recursive(const SuperFiltration& f, const Matrix& even_emb, const Matrix& odd_emb,
                     const IdempotentOptions& options, const std::vector<EvenMap>* commutant,
                     std::vector<Summand>& out) {
  const IdempotentResult r =
      find_idempotent(commutant ? filtered_endomorphisms(f, *commutant) : filtered_endomorphisms(f), options);
  if (r.status != IdempotentSearch::Found) {
    out.push_back({f, even_emb, odd_emb,
                   r.status == IdempotentSearch::Certified ? SummandStatus::Certified : SummandStatus::Exhausted,
                   r.certificate});
    return;
  }
  const EvenMap& e = *r.idempotent;
  const EvenMap rest = EvenMap::identity(f.module()) - e;
  for (const EvenMap* part : {&e, &rest}) {
    const Matrix er = Subspace::span(part->even).basis();
    const Matrix orows = Subspace::span(part->odd).basis();
    split_recursive(restrict_filtration(f, er, orows), er * even_emb, orows * odd_emb, options, nullptr, out);
  }
}

}  // namespace

Decomposition decompose(const SuperFiltration& f, const IdempotentOptions& options,
                        const std::vector<EvenMap>* commutant) {
  Decomposition d;
  split_recursive(f, Matrix::identity(f.module().dim_even()), Matrix::identity(f.module().dim_odd()), options,
                  commutant, d.summands);
  const char* name = "decomposition";
  std::size_t total = 0;
  for (const auto& s : d.summands) total += s.filtration.module().dim_total();
  if (total != f.module().dim_total()) {
    d.certificate = Certificate::fail(name, {{"condition", "dimension"}, {"summand_total", total}});
    return d;
  }
  for (int p = 0; p <= f.top(); ++p) {
    Subspace sum = Subspace::zero(f.level(p).ambient_dim());
    for (const auto& s : d.summands)
      sum = subspace_sum(sum, image(p % 2 == 0 ? s.even_embedding : s.odd_embedding, s.filtration.level(p)));
    if (sum != f.level(p)) {
      d.certificate = Certificate::fail(name, {{"condition", "levels"}, {"p", p}});
      return d;
    }
  }
  // Embedded summands must be g-invariant: the restricted action is the ambient one.
  for (const auto& s : d.summands) {
    const auto& sub = s.filtration.module();
    for (std::size_t i = 0; i < sub.generators(); ++i)
      if (s.even_embedding * f.module().gamma_eo(i) != sub.gamma_eo(i) * s.odd_embedding ||
          s.odd_embedding * f.module().gamma_oe(i) != sub.gamma_oe(i) * s.even_embedding) {
        d.certificate = Certificate::fail(name, {{"condition", "invariance"}, {"i", i + 1}});
        return d;
      }
  }
  d.certificate = Certificate::ok(name, {{"summands", d.summands.size()}});
  return d;
}

InvariantReport invariant_report(const SuperFiltration& f, const IdempotentOptions& options,
                                 const std::vector<EvenMap>* commutant) {
  InvariantReport r{gr_dimensions(f), source_dimensions(f), {}};
  for (const auto& s : decompose(f, options, commutant).summands)
    r.summands.push_back({gr_dimensions(s.filtration), source_dimensions(s.filtration), s.status});
  return r;
}

namespace {

DimSequence padded(DimSequence v, std::size_t n) {
  v.resize(std::max(v.size(), n), 0);
  return v;
}

}  // namespace

Verdict invariant_equal(const InvariantReport& a, const InvariantReport& b, InvariantSet which) {
  std::size_t len = std::max(a.gr_dims.size(), b.gr_dims.size());
  if (padded(a.gr_dims, len) != padded(b.gr_dims, len)) return {true, "gr_dims"};
  if (which == InvariantSet::GrDims) return {};
  if (padded(a.source_dims, len) != padded(b.source_dims, len)) return {true, "source_dims"};
  if (which == InvariantSet::GrAndSource) return {};
  for (const auto* r : {&a, &b})
    for (const auto& s : r->summands) len = std::max({len, s.gr_dims.size(), s.source_dims.size()});
  auto key = [&](const InvariantReport& r) {
    std::vector<std::pair<DimSequence, DimSequence>> out;
    for (const auto& s : r.summands) out.emplace_back(padded(s.gr_dims, len), padded(s.source_dims, len));
    std::sort(out.begin(), out.end());
    return out;
  };
  if (key(a) != key(b)) return {true, "summands"};
  return {};
}

Verdict invariant_equal(const SuperFiltration& a, const SuperFiltration& b, InvariantSet which) {
  if (which == InvariantSet::All) return invariant_equal(invariant_report(a), invariant_report(b), which);
  InvariantReport ra{gr_dimensions(a), source_dimensions(a), {}};
  InvariantReport rb{gr_dimensions(b), source_dimensions(b), {}};
  return invariant_equal(ra, rb, which);
}

namespace {

// Random vector of the part of parity p; occasionally a product of two
// generators applied to an earlier level vector, which tends to keep
// generated spans small.
Vector candidate(const CliffordSupermodule& m, int p, const Subspace& current, Rng& rng) {
  const Parity par = parity_of(p);
  const std::size_t n = m.dim(par);
  const std::size_t mode = rng.index(4);
  if (mode == 0 && !current.is_zero() && m.generators() >= 2) {
    const Vector v = current.basis().row_vector(rng.index(current.dim()));
    const std::size_t i = rng.index(m.generators());
    std::size_t j = rng.index(m.generators() - 1);
    if (j >= i) ++j;
    return cliffilt::apply(cliffilt::apply(v, m.gamma(i, par)), m.gamma(j, flip(par)));
  }
  if (mode == 1) return rng.vector(n, 2);
  return rng.sparse_vector(n, mode == 2 ? 0.15 : 0.35);
}

}  // namespace

SearchResult filtration_search(const ModulePtr& m, const DimSequence& target, std::size_t budget, Rng& rng) {
  if (!m) throw ContractError("filtration_search: null module");
  if (target.size() < 2) throw ContractError("filtration_search: target needs at least two levels");
  std::size_t even = 0, odd = 0;
  for (std::size_t p = 0; p < target.size(); ++p) (p % 2 == 0 ? even : odd) += target[p];
  if (even != m->dim_even() || odd != m->dim_odd())
    throw ContractError("filtration_search: target does not match the parity split " + std::to_string(m->dim_even()) +
                        "|" + std::to_string(m->dim_odd()));
  const int top = static_cast<int>(target.size()) - 1;
  SearchResult result;
  std::vector<InvariantReport> cheap, full;
  std::vector<bool> have_full;
  std::optional<std::vector<EvenMap>> commutant;
  auto report = [&](const SuperFiltration& f) {
    if (!commutant) commutant = graded_commutant(*m);
    return invariant_report(f, {}, &*commutant);
  };
  for (; result.attempts < budget; ++result.attempts) {
    std::vector<Subspace> levels;
    bool ok = true;
    for (int p = 0; p <= top && ok; ++p) {
      const Subspace below = p >= 2 ? levels[static_cast<std::size_t>(p - 2)] : Subspace::zero(m->dim(parity_of(p)));
      const Subspace gamma =
          p >= 1 ? gamma_image(*m, levels[static_cast<std::size_t>(p - 1)], parity_of(p - 1)) : Subspace::zero(below.ambient_dim());
      Subspace s = subspace_sum(below, gamma);
      const std::size_t need = below.dim() + target[static_cast<std::size_t>(p)];
      if (s.dim() > need) {
        ok = false;
        break;
      }
      for (std::size_t tries = 0; s.dim() < need && tries < 64; ++tries) {
        const Vector v = candidate(*m, p, s, rng);
        if (!s.contains(v)) s = subspace_sum(s, Subspace::span(std::span<const Vector>(&v, 1), s.ambient_dim()));
      }
      if (s.dim() != need) ok = false;
      levels.push_back(std::move(s));
    }
    if (!ok) continue;
    SuperFiltration f(m, std::move(levels));
    if (!check_filtration(f)) continue;
    ++result.hits;
    InvariantReport c{gr_dimensions(f), source_dimensions(f), {}};
    bool fresh = true;
    std::optional<InvariantReport> mine;
    for (std::size_t k = 0; k < result.found.size() && fresh; ++k) {
      if (invariant_equal(c, cheap[k], InvariantSet::GrAndSource).distinguished) continue;
      if (!have_full[k]) {
        full[k] = report(result.found[k]);
        have_full[k] = true;
      }
      if (!mine) mine = report(f);
      if (!invariant_equal(*mine, full[k]).distinguished) fresh = false;
    }
    if (!fresh) continue;
    result.found.push_back(std::move(f));
    cheap.push_back(std::move(c));
    have_full.push_back(mine.has_value());
    full.push_back(mine ? *mine : InvariantReport{});
  }
  return result;
}

}  // namespace cliffilt
