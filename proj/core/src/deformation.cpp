#include "cliffilt/deformation.hpp"

#include <algorithm>
#include <map>

#include "cliffilt/error.hpp"
#include "cliffilt/random.hpp"

namespace cliffilt {

OffShellRep::OffShellRep(std::shared_ptr<const CliffordAlgebra> algebra, std::vector<std::size_t> dims,
                         std::vector<Matrix> shifts, std::vector<std::vector<Matrix>> q)
    : algebra_(std::move(algebra)), dims_(std::move(dims)), shifts_(std::move(shifts)), q_(std::move(q)) {
  if (!algebra_) throw ContractError("OffShellRep: null algebra");
  if (dims_.size() < 2) throw ContractError("OffShellRep: top degree must be at least 1");
  const int m = top();
  if (shifts_.size() != static_cast<std::size_t>(m - 1)) throw DimensionError("OffShellRep: need shifts for degrees 0..m-2");
  for (int p = 0; p + 2 <= m; ++p) {
    const auto& h = shifts_[static_cast<std::size_t>(p)];
    if (h.rows() != dim(p) || h.cols() != dim(p + 2)) throw DimensionError("OffShellRep: shift has the wrong shape");
  }
  if (q_.size() != generators()) throw DimensionError("OffShellRep: one Q family per generator is required");
  for (const auto& family : q_) {
    if (family.size() != static_cast<std::size_t>(m + 1)) throw DimensionError("OffShellRep: need Q for degrees 0..m");
    for (int p = 0; p <= m; ++p) {
      const auto& a = family[static_cast<std::size_t>(p)];
      const std::size_t target = p < m ? dim(p + 1) : dim(m - 1);
      if (a.rows() != dim(p) || a.cols() != target) throw DimensionError("OffShellRep: Q has the wrong shape");
    }
  }
}

std::size_t OffShellRep::dim(int p) const {
  if (p < 0) return 0;
  const int m = top();
  if (p <= m) return dims_[static_cast<std::size_t>(p)];
  return dims_[static_cast<std::size_t>((p - m) % 2 == 0 ? m : m - 1)];
}

Matrix OffShellRep::shift(int p) const {
  if (p < 0) return Matrix(0, dim(p + 2));
  if (p + 2 <= top()) return shifts_[static_cast<std::size_t>(p)];
  return Matrix::identity(dim(p));
}

Matrix OffShellRep::q(std::size_t i, int p) const {
  if (i >= generators()) throw ContractError("OffShellRep::q: generator out of range");
  if (p < 0) return Matrix(0, dim(p + 1));
  const int m = top();
  const auto& family = q_[i];
  if (p < m) return family[static_cast<std::size_t>(p)];
  return (p - m) % 2 == 0 ? family[static_cast<std::size_t>(m)] : family[static_cast<std::size_t>(m - 1)];
}

int OffShellRep::lowest_degree() const {
  int p = 0;
  while (p <= top() && dims_[static_cast<std::size_t>(p)] == 0) ++p;
  return p;
}

Certificate verify_offshell(const OffShellRep& r) {
  const int last = r.top() + 1;
  const std::size_t n = r.generators();
  for (int p = 0; p <= last; ++p) {
    if (!is_injective(r.shift(p))) return Certificate::fail("offshell_relations", {{"condition", "H_injective"}, {"p", p}});
  }
  for (int p = 0; p <= last; ++p) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        const Matrix lhs = r.q(i, p) * r.q(j, p + 1) + r.q(j, p) * r.q(i, p + 1);
        const Matrix rhs = r.shift(p) * (Rational(2) * r.algebra().gram()(i, j));
        if (lhs != rhs)
          return Certificate::fail("offshell_relations",
                                   {{"condition", "anticommutator"}, {"i", i + 1}, {"j", j + 1}, {"p", p}});
      }
      if (r.shift(p) * r.q(i, p + 2) != r.q(i, p) * r.shift(p + 1))
        return Certificate::fail("offshell_relations", {{"condition", "H_Q_commutator"}, {"i", i + 1}, {"p", p}});
    }
  }
  return Certificate::ok("offshell_relations", {{"top", r.top()}, {"dims", r.stored_dims()}});
}

OffShellRep deform(const SuperFiltration& f) {
  if (const auto c = check_filtration(f); !c) throw ContractError("deform: invalid filtration: " + c.witness.dump());
  const auto& mod = f.module();
  const int m = f.top();
  std::vector<std::size_t> dims;
  for (int p = 0; p <= m; ++p) dims.push_back(f.level(p).dim());
  std::vector<Matrix> shifts;
  for (int p = 0; p + 2 <= m; ++p) shifts.push_back(f.level(p + 2).coordinates(f.level(p).basis()));
  std::vector<std::vector<Matrix>> q(mod.generators());
  for (std::size_t i = 0; i < mod.generators(); ++i) {
    for (int p = 0; p <= m; ++p) {
      const Subspace src = f.level(p);
      const Subspace dst = f.level(p < m ? p + 1 : m - 1);
      q[i].push_back(dst.coordinates(src.basis() * mod.gamma(i, parity_of(p))));
    }
  }
  return OffShellRep(mod.algebra_ptr(), std::move(dims), std::move(shifts), std::move(q));
}

std::pair<Vector, Vector> FormalDeformation::ev1(const std::vector<Vector>& element) const {
  const auto& mod = filtration_.module();
  Vector even(mod.dim_even()), odd(mod.dim_odd());
  for (std::size_t p = 0; p < element.size(); ++p) {
    Vector& target = p % 2 == 0 ? even : odd;
    if (element[p].size() != target.size()) throw DimensionError("FormalDeformation: component in the wrong part");
    for (std::size_t k = 0; k < target.size(); ++k) target[k] += element[p][k];
  }
  return {std::move(even), std::move(odd)};
}

bool FormalDeformation::contains(const std::vector<Vector>& element) const {
  for (std::size_t p = 0; p < element.size(); ++p) {
    if (!component(static_cast<int>(p)).contains(element[p])) return false;
  }
  return true;
}

std::vector<Vector> FormalDeformation::kernel_preimage(const std::vector<Vector>& element) const {
  if (!contains(element)) throw ContractError("kernel_preimage: element is not in the deformation");
  const auto [even, odd] = ev1(element);
  if (!is_zero(even) || !is_zero(odd)) throw ContractError("kernel_preimage: element is not in the kernel of ev_1");
  // x_p = y_{p-2} - y_p, so y_p = -(x_p + x_{p-2} + ...); y vanishes in the top two degrees.
  const std::size_t d = element.size();
  std::vector<Vector> y;
  for (std::size_t p = 0; p + 2 < d; ++p) {
    Vector w = element[p];
    if (p >= 2) {
      for (std::size_t k = 0; k < w.size(); ++k) w[k] -= y[p - 2][k];
    }
    for (auto& c : w) c = -c;
    y.push_back(std::move(w));
  }
  // Verify (s^2 - 1) y = x degree by degree.
  for (std::size_t p = 0; p < d; ++p) {
    Vector lhs(element[p].size());
    if (p >= 2 && p - 2 < y.size())
      for (std::size_t k = 0; k < lhs.size(); ++k) lhs[k] += y[p - 2][k];
    if (p < y.size())
      for (std::size_t k = 0; k < lhs.size(); ++k) lhs[k] -= y[p][k];
    if (lhs != element[p]) throw Error("kernel_preimage: reconstruction does not reproduce the element");
  }
  if (!contains(y)) throw Error("kernel_preimage: preimage left the deformation");
  return y;
}

ShellQuotient quotient_at(const OffShellRep& r, const Rational& k) {
  if (k.sign() <= 0)
    throw ContractError("quotient_at: the shell value must be positive (k = 0 is the graded quotient)");
  const int m = r.top();
  const std::size_t n = r.generators();
  const int even_top = m % 2 == 0 ? m : m - 1;
  const int odd_top = m % 2 == 0 ? m - 1 : m;
  std::vector<Matrix> eo, oe;
  for (std::size_t i = 0; i < n; ++i) {
    // From V_{m-1}: Q_i lands in V_m. From V_m: Q_i lands in H V_{m-1}, and H acts as k.
    const Matrix low = r.q(i, m - 1);
    const Matrix high = r.q(i, m) * k;
    eo.push_back(even_top == m ? high : low);
    oe.push_back(odd_top == m ? high : low);
  }
  auto algebra = std::make_shared<const CliffordAlgebra>(r.algebra().gram() * k);
  auto module = std::make_shared<const CliffordSupermodule>(algebra, r.dim(even_top), r.dim(odd_top), std::move(eo),
                                                            std::move(oe));
  std::vector<Subspace> levels;
  for (int p = 0; p <= m; ++p) {
    Matrix lift = Matrix::identity(r.dim(p));
    for (int t = p; t + 2 <= m; t += 2) lift = lift * r.shift(t);
    levels.push_back(Subspace::span(lift));
  }
  return {k, SuperFiltration(std::move(module), std::move(levels))};
}

namespace {

// Coordinates of v modulo s on the non-pivot columns of s.
Vector reduce_mod(const Subspace& s, std::span<const Rational> v) {
  Vector residual(v.begin(), v.end());
  for (std::size_t k = 0; k < s.pivots().size(); ++k) {
    const Rational c = residual[s.pivots()[k]];
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < residual.size(); ++j) residual[j].sub_mul(c, s.basis()(k, j));
  }
  std::vector<bool> pivot(v.size(), false);
  for (std::size_t c : s.pivots()) pivot[c] = true;
  Vector out;
  for (std::size_t j = 0; j < residual.size(); ++j)
    if (!pivot[j]) out.push_back(residual[j]);
  return out;
}

std::vector<std::size_t> non_pivots(const Subspace& s) {
  std::vector<bool> pivot(s.ambient_dim(), false);
  for (std::size_t c : s.pivots()) pivot[c] = true;
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < s.ambient_dim(); ++j)
    if (!pivot[j]) out.push_back(j);
  return out;
}

}  // namespace

GradedSpace graded_quotient(const OffShellRep& r) {
  const int m = r.top();
  std::vector<Subspace> shifted;
  for (int p = 0; p <= m; ++p) {
    shifted.push_back(p >= 2 ? Subspace::span(r.shift(p - 2)) : Subspace::zero(r.dim(p)));
  }
  GradedSpace out;
  for (int p = 0; p <= m; ++p) out.dims.push_back(r.dim(p) - shifted[static_cast<std::size_t>(p)].dim());
  out.maps.resize(r.generators());
  for (std::size_t i = 0; i < r.generators(); ++i) {
    for (int p = 0; p < m; ++p) {
      const auto comp = non_pivots(shifted[static_cast<std::size_t>(p)]);
      const Matrix q = r.q(i, p);
      Matrix mapped(comp.size(), out.dims[static_cast<std::size_t>(p + 1)]);
      for (std::size_t k = 0; k < comp.size(); ++k)
        mapped.set_row(k, reduce_mod(shifted[static_cast<std::size_t>(p + 1)], q.row(comp[k])));
      out.maps[i].push_back(std::move(mapped));
    }
  }
  return out;
}

Certificate verify_filtered_iso(const SuperFiltration& a, const SuperFiltration& b, const Matrix& even,
                                const Matrix& odd) {
  const auto& ma = a.module();
  const auto& mb = b.module();
  if (!(ma.algebra() == mb.algebra())) return Certificate::fail("filtered_iso", {{"condition", "algebra"}});
  if (even.rows() != ma.dim_even() || even.cols() != mb.dim_even() || odd.rows() != ma.dim_odd() ||
      odd.cols() != mb.dim_odd())
    return Certificate::fail("filtered_iso", {{"condition", "shape"}});
  if (!even.is_square() || !odd.is_square() || rank(even) != even.rows() || rank(odd) != odd.rows())
    return Certificate::fail("filtered_iso", {{"condition", "bijective"}});
  for (std::size_t i = 0; i < ma.generators(); ++i) {
    if (even * mb.gamma_eo(i) != ma.gamma_eo(i) * odd || odd * mb.gamma_oe(i) != ma.gamma_oe(i) * even)
      return Certificate::fail("filtered_iso", {{"condition", "intertwining"}, {"i", i + 1}});
  }
  const int top = std::max(a.top(), b.top());
  for (int p = 0; p <= top; ++p) {
    const Matrix& phi = p % 2 == 0 ? even : odd;
    if (image(phi, a.level(p)) != b.level(p))
      return Certificate::fail("filtered_iso", {{"condition", "filtration"}, {"p", p}});
  }
  return Certificate::ok("filtered_iso", {{"dim_even", even.rows()}, {"dim_odd", odd.rows()}});
}

FilteredIso canonical_roundtrip_iso(const SuperFiltration& f) {
  if (const auto c = check_filtration(f); !c)
    throw ContractError("canonical_roundtrip_iso: invalid filtration: " + c.witness.dump());
  const OffShellRep r = deform(f);
  const ShellQuotient q = quotient_at(r, Rational(1));
  const int m = f.top();
  // ev_1 sends v s^t (t = top level of the parity) to v; on the stable
  // component V_t = F_t V the class of v is its coordinate vector.
  const int even_top = m % 2 == 0 ? m : m - 1;
  const int odd_top = m % 2 == 0 ? m - 1 : m;
  const auto& mod = f.module();
  Matrix even = f.level(even_top).coordinates(Matrix::identity(mod.dim_even()));
  Matrix odd = f.level(odd_top).coordinates(Matrix::identity(mod.dim_odd()));
  Certificate cert = verify_filtered_iso(f, q.filtration, even, odd);
  cert.check = "roundtrip_iso";
  return {std::move(even), std::move(odd), std::move(cert)};
}

namespace {

// Truncated Def_s Cl(N): element = per-degree map blade -> coefficient.
class TruncatedDeformation {
 public:
  TruncatedDeformation(std::shared_ptr<const CliffordAlgebra> alg, int max_degree)
      : alg_(std::move(alg)), max_degree_(max_degree) {
    for (int p = 0; p <= max_degree; ++p) {
      std::vector<Blade> comp;
      for (Blade b : alg_->basis()) {
        const int g = blade_grade(b);
        if (g <= p && (p - g) % 2 == 0) comp.push_back(b);
      }
      offsets_.push_back(total_);
      total_ += comp.size();
      components_.push_back(std::move(comp));
    }
  }

  using Element = std::vector<std::map<Blade, Rational>>;

  [[nodiscard]] Element zero() const { return Element(static_cast<std::size_t>(max_degree_ + 1)); }
  [[nodiscard]] Element monomial(Blade b, int p, const Rational& c = Rational(1)) const {
    Element e = zero();
    if (!c.is_zero()) e[static_cast<std::size_t>(p)][b] = c;
    return e;
  }
  [[nodiscard]] Element multiply(const Element& a, const Element& b) const {
    Element out = zero();
    for (int p = 0; p <= max_degree_; ++p)
      for (int q = 0; p + q <= max_degree_; ++q)
        for (const auto& [x, c] : a[static_cast<std::size_t>(p)])
          for (const auto& [y, d] : b[static_cast<std::size_t>(q)])
            for (const auto& [z, e] : alg_->monomial_product(x, y)) add(out, p + q, z, c * d * e);
    return out;
  }
  static void add(Element& e, int p, Blade b, const Rational& c) {
    if (c.is_zero()) return;
    auto& slot = e[static_cast<std::size_t>(p)];
    auto [it, inserted] = slot.try_emplace(b, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) slot.erase(it);
    }
  }
  [[nodiscard]] Element combine(const Element& a, const Element& b, const Rational& s = Rational(1)) const {
    Element out = a;
    for (int p = 0; p <= max_degree_; ++p)
      for (const auto& [x, c] : b[static_cast<std::size_t>(p)]) add(out, p, x, s * c);
    return out;
  }
  [[nodiscard]] bool well_formed(const Element& e) const {
    for (int p = 0; p <= max_degree_; ++p)
      for (const auto& [x, c] : e[static_cast<std::size_t>(p)]) {
        const int g = blade_grade(x);
        if (g > p || (p - g) % 2 != 0) return false;
      }
    return true;
  }
  [[nodiscard]] Vector ev1(const Element& e) const {
    Vector v(alg_->dimension());
    for (const auto& slot : e)
      for (const auto& [x, c] : slot) v[alg_->index_of(x)] += c;
    return v;
  }
  [[nodiscard]] Vector flatten(const Element& e) const {
    Vector v(total_);
    for (int p = 0; p <= max_degree_; ++p)
      for (const auto& [x, c] : e[static_cast<std::size_t>(p)]) v[offsets_[static_cast<std::size_t>(p)] + position(p, x)] = c;
    return v;
  }
  [[nodiscard]] Element unflatten(const Vector& v) const {
    Element e = zero();
    for (int p = 0; p <= max_degree_; ++p) {
      const auto& comp = components_[static_cast<std::size_t>(p)];
      for (std::size_t k = 0; k < comp.size(); ++k) add(e, p, comp[k], v[offsets_[static_cast<std::size_t>(p)] + k]);
    }
    return e;
  }
  [[nodiscard]] std::size_t position(int p, Blade b) const {
    const auto& comp = components_[static_cast<std::size_t>(p)];
    return static_cast<std::size_t>(std::find(comp.begin(), comp.end(), b) - comp.begin());
  }
  [[nodiscard]] const std::vector<Blade>& component(int p) const { return components_[static_cast<std::size_t>(p)]; }
  [[nodiscard]] std::size_t total() const { return total_; }
  [[nodiscard]] int max_degree() const { return max_degree_; }

 private:
  std::shared_ptr<const CliffordAlgebra> alg_;
  int max_degree_;
  std::vector<std::vector<Blade>> components_;
  std::vector<std::size_t> offsets_;
  std::size_t total_ = 0;
};

}  // namespace

Certificate enveloping_quotient_check(std::size_t n, std::size_t max_degree, const EnvelopeOptions& options) {
  const char* name = "enveloping_quotient";
  if (n < 1) throw ContractError("enveloping_quotient_check: N must be positive");
  auto alg = std::make_shared<const CliffordAlgebra>(n);
  const int d = static_cast<int>(max_degree);
  const TruncatedDeformation def(alg, d);
  using Element = TruncatedDeformation::Element;

  std::vector<std::size_t> dims;
  for (int p = 0; p <= d; ++p) {
    dims.push_back(def.component(p).size());
    if (def.component(p).size() != filtration_level(*alg, p).dim())
      return Certificate::fail(name, {{"condition", "degree_is_filtration"}, {"p", p}});
  }

  std::vector<Element> q;
  for (std::size_t i = 0; i < n; ++i) q.push_back(def.monomial(Blade{1} << i, 1));
  const Element h = def.monomial(0, 2);

  // Relations as elements.
  if (d >= 2) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        const Element anti = def.combine(def.multiply(q[i], q[j]), def.multiply(q[j], q[i]));
        const Element expected = i == j ? def.combine(def.zero(), h, Rational(2)) : def.zero();
        if (anti != expected)
          return Certificate::fail(name, {{"condition", "anticommutator"}, {"i", i + 1}, {"j", j + 1}});
      }
  }
  if (d >= 3) {
    for (std::size_t i = 0; i < n; ++i) {
      const Element comm = def.combine(def.multiply(h, q[i]), def.multiply(q[i], h), Rational(-1));
      if (comm != def.zero()) return Certificate::fail(name, {{"condition", "H_Q_commutator"}, {"i", i + 1}});
    }
  }
  // Relations as operators, degree by degree.
  for (int p = 0; p <= d; ++p) {
    for (const Blade b : def.component(p)) {
      const Element x = def.monomial(b, p);
      for (std::size_t i = 0; i < n && p + 2 <= d; ++i)
        for (std::size_t j = i; j < n; ++j) {
          const Element lhs = def.combine(def.multiply(q[i], def.multiply(q[j], x)), def.multiply(q[j], def.multiply(q[i], x)));
          const Element rhs = i == j ? def.combine(def.zero(), def.multiply(h, x), Rational(2)) : def.zero();
          if (lhs != rhs)
            return Certificate::fail(name, {{"condition", "operator_anticommutator"}, {"i", i + 1}, {"j", j + 1}, {"p", p}});
        }
      for (std::size_t i = 0; i < n && p + 3 <= d; ++i) {
        if (def.multiply(h, def.multiply(q[i], x)) != def.multiply(q[i], def.multiply(h, x)))
          return Certificate::fail(name, {{"condition", "operator_H_Q_commutator"}, {"i", i + 1}, {"p", p}});
      }
    }
  }

  // PBW: H^a Q_{i1} ... Q_{ik} (i1 < ... < ik, 2a + k = p) is a basis of degree p.
  for (int p = 0; p <= d; ++p) {
    RowReducer reducer(def.total());
    std::size_t count = 0;
    for (Blade set = 0; set < alg->dimension(); ++set) {
      const int k = blade_grade(set);
      if (k > p || (p - k) % 2 != 0) continue;
      Element mono = def.monomial(0, 0);
      for (int a = 0; a < (p - k) / 2; ++a) mono = def.multiply(mono, h);
      for (int i : blade_indices(set)) mono = def.multiply(mono, q[static_cast<std::size_t>(i - 1)]);
      ++count;
      if (!reducer.add(def.flatten(mono)))
        return Certificate::fail(name, {{"condition", "pbw_independent"}, {"p", p}, {"monomial", blade_indices(set)}});
    }
    if (count != def.component(p).size()) return Certificate::fail(name, {{"condition", "pbw_spanning"}, {"p", p}});
  }

  // ev_1 on the whole truncation, as a matrix.
  Matrix ev(def.total(), alg->dimension());
  for (int p = 0, row = 0; p <= d; ++p)
    for (const Blade b : def.component(p)) ev.set_row(static_cast<std::size_t>(row++), def.ev1(def.monomial(b, p)));
  for (int p = 0; p <= d; ++p) {
    std::vector<Vector> images;
    for (const Blade b : def.component(p)) images.push_back(def.ev1(def.monomial(b, p)));
    if (Subspace::span(images, alg->dimension()) != filtration_level(*alg, p))
      return Certificate::fail(name, {{"condition", "ev1_filtered"}, {"p", p}});
  }
  if (rank(ev) != alg->dimension())
    return Certificate::fail(name, {{"condition", "ev1_surjective"}, {"max_degree", d}, {"needed", n}});

  Rng rng(options.seed);
  auto random_element = [&](int max_p) {
    Element e = def.zero();
    for (int p = 0; p <= std::min(max_p, d); ++p)
      for (const Blade b : def.component(p)) TruncatedDeformation::add(e, p, b, Rational(rng.uniform(-3, 3)));
    return e;
  };
  for (std::size_t t = 0; t < options.kernel_samples; ++t) {
    const Element a = random_element(d / 2);
    const Element b = random_element(d - d / 2);
    const Vector lhs = def.ev1(def.multiply(a, b));
    const Vector rhs = clifford_product(CliffordElement::from_vector(alg, def.ev1(a)),
                                        CliffordElement::from_vector(alg, def.ev1(b)))
                           .to_vector();
    if (lhs != rhs) return Certificate::fail(name, {{"condition", "ev1_multiplicative"}, {"sample", t}});
  }

  // Kernel of ev_1 is exactly (s^2 - 1) times the degree <= d-2 part.
  const Matrix kernel = left_kernel(ev);
  std::size_t shifted_dim = 0;
  for (int p = 0; p + 2 <= d; ++p) shifted_dim += def.component(p).size();
  if (kernel.rows() != shifted_dim)
    return Certificate::fail(name, {{"condition", "kernel_dimension"}, {"kernel", kernel.rows()}, {"expected", shifted_dim}});
  const Element s2_minus_1 = def.combine(h, def.monomial(0, 0), Rational(-1));
  for (std::size_t t = 0; t < options.kernel_samples; ++t) {
    Vector combo(def.total());
    for (std::size_t r = 0; r < kernel.rows(); ++r) {
      const Rational c(rng.uniform(-3, 3));
      if (c.is_zero()) continue;
      for (std::size_t k = 0; k < combo.size(); ++k) combo[k] += c * kernel(r, k);
    }
    const Element x = def.unflatten(combo);
    if (!is_zero(def.ev1(x))) return Certificate::fail(name, {{"condition", "kernel_sample"}, {"sample", t}});
    // y_p = -(x_p + x_{p-2} + ...), vanishing in the top two degrees.
    Element y = def.zero();
    for (int p = 0; p + 2 <= d; ++p) {
      if (p >= 2)
        for (const auto& [b, c] : y[static_cast<std::size_t>(p - 2)]) TruncatedDeformation::add(y, p, b, c);
      for (const auto& [b, c] : x[static_cast<std::size_t>(p)]) TruncatedDeformation::add(y, p, b, -c);
    }
    if (!def.well_formed(y) || def.multiply(s2_minus_1, y) != x)
      return Certificate::fail(name, {{"condition", "kernel_preimage"}, {"sample", t}});
  }
  return Certificate::ok(name, {{"n", n}, {"max_degree", d}, {"degree_dims", dims}, {"kernel_dim", kernel.rows()},
                               {"kernel_samples", options.kernel_samples}});
}

}  // namespace cliffilt
