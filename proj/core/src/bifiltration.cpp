#include "cliffilt/bifiltration.hpp"

#include <map>

#include "cliffilt/error.hpp"

namespace cliffilt {

BiSupermodule::BiSupermodule(std::shared_ptr<const CliffordAlgebra> plus, std::shared_ptr<const CliffordAlgebra> minus,
                             std::array<std::size_t, 4> dims, std::vector<Blocks> gamma_plus,
                             std::vector<Blocks> gamma_minus)
    : plus_(std::move(plus)),
      minus_(std::move(minus)),
      dims_(dims),
      gamma_plus_(std::move(gamma_plus)),
      gamma_minus_(std::move(gamma_minus)) {
  if (!plus_ || !minus_) throw ContractError("BiSupermodule: null algebra");
  if (gamma_plus_.size() != plus_->generators() || gamma_minus_.size() != minus_->generators())
    throw DimensionError("BiSupermodule: one block family per generator is required");
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      for (const auto& g : gamma_plus_) {
        const auto& m = g[index(a, b)];
        if (m.rows() != dim(a, b) || m.cols() != dim(1 - a, b)) throw DimensionError("BiSupermodule: gamma+ block shape");
      }
      for (const auto& g : gamma_minus_) {
        const auto& m = g[index(a, b)];
        if (m.rows() != dim(a, b) || m.cols() != dim(a, 1 - b)) throw DimensionError("BiSupermodule: gamma- block shape");
      }
    }
}

Certificate check_bimodule(const BiSupermodule& m) {
  const char* name = "bimodule_relations";
  auto gp = [&](std::size_t i, int a, int b) -> const Matrix& { return m.gamma_plus(i, a, b); };
  auto gm = [&](std::size_t j, int a, int b) -> const Matrix& { return m.gamma_minus(j, a, b); };
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      const std::size_t d = m.dim(a, b);
      for (std::size_t i = 0; i < m.plus_generators(); ++i)
        for (std::size_t j = i; j < m.plus_generators(); ++j) {
          const Matrix lhs = gp(i, a, b) * gp(j, 1 - a, b) + gp(j, a, b) * gp(i, 1 - a, b);
          if (lhs != Matrix::scalar(d, Rational(2) * m.plus_algebra().gram()(i, j)))
            return Certificate::fail(name, {{"family", "plus"}, {"i", i + 1}, {"j", j + 1}, {"component", {a, b}}});
        }
      for (std::size_t i = 0; i < m.minus_generators(); ++i)
        for (std::size_t j = i; j < m.minus_generators(); ++j) {
          const Matrix lhs = gm(i, a, b) * gm(j, a, 1 - b) + gm(j, a, b) * gm(i, a, 1 - b);
          if (lhs != Matrix::scalar(d, Rational(2) * m.minus_algebra().gram()(i, j)))
            return Certificate::fail(name, {{"family", "minus"}, {"i", i + 1}, {"j", j + 1}, {"component", {a, b}}});
        }
      for (std::size_t i = 0; i < m.plus_generators(); ++i)
        for (std::size_t j = 0; j < m.minus_generators(); ++j) {
          const Matrix lhs = gp(i, a, b) * gm(j, 1 - a, b) + gm(j, a, b) * gp(i, a, 1 - b);
          if (!lhs.is_zero())
            return Certificate::fail(name, {{"family", "mixed"}, {"i", i + 1}, {"j", j + 1}, {"component", {a, b}}});
        }
    }
  return Certificate::ok(name, {{"dims", m.dims()}});
}

Bifiltration::Bifiltration(BiModulePtr module, std::vector<std::vector<Subspace>> levels)
    : module_(std::move(module)), levels_(std::move(levels)) {
  if (!module_) throw ContractError("Bifiltration: null module");
  if (levels_.size() < 2 || levels_.front().size() < 2)
    throw ContractError("Bifiltration: both directions need levels 0 and 1");
  for (std::size_t m = 0; m < levels_.size(); ++m) {
    if (levels_[m].size() != levels_.front().size()) throw DimensionError("Bifiltration: ragged level table");
    for (std::size_t n = 0; n < levels_[m].size(); ++n)
      if (levels_[m][n].ambient_dim() != module_->dim(static_cast<int>(m), static_cast<int>(n)))
        throw DimensionError("Bifiltration: level in the wrong component");
  }
}

Subspace Bifiltration::level(int m, int n) const {
  if (m < 0 || n < 0) return Subspace::zero(module_->dim(m & 1, n & 1));
  const int tp = top_plus(), tm = top_minus();
  const int sm = m <= tp ? m : tp - (m - tp) % 2;
  const int sn = n <= tm ? n : tm - (n - tm) % 2;
  return levels_[static_cast<std::size_t>(sm)][static_cast<std::size_t>(sn)];
}

std::vector<std::vector<std::size_t>> Bifiltration::dims() const {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& row : levels_) {
    out.emplace_back();
    for (const auto& s : row) out.back().push_back(s.dim());
  }
  return out;
}

namespace {

bool maps_into(const Subspace& src, const Matrix& map, const Subspace& dst) {
  for (std::size_t r = 0; r < src.dim(); ++r)
    if (!dst.contains(cliffilt::apply(src.basis().row(r), map))) return false;
  return true;
}

}  // namespace

Certificate check_bifiltration(const Bifiltration& f) {
  const char* name = "bifiltration";
  if (auto c = check_bimodule(f.module()); !c) {
    c.check = name;
    return c;
  }
  const auto& mod = f.module();
  const int tp = f.top_plus(), tm = f.top_minus();
  for (int m = 0; m <= tp; ++m)
    for (int n = 0; n <= tm; ++n) {
      const Subspace s = f.level(m, n);
      if (m + 2 <= tp && !f.level(m + 2, n).contains(s))
        return Certificate::fail(name, {{"condition", "nesting_plus"}, {"m", m}, {"n", n}});
      if (n + 2 <= tm && !f.level(m, n + 2).contains(s))
        return Certificate::fail(name, {{"condition", "nesting_minus"}, {"m", m}, {"n", n}});
    }
  for (int m : {tp - 1, tp})
    for (int n : {tm - 1, tm})
      if (!f.level(m, n).is_full()) return Certificate::fail(name, {{"condition", "exhaustive"}, {"m", m}, {"n", n}});
  for (int m = 0; m <= tp; ++m)
    for (int n = 0; n <= tm; ++n) {
      const Subspace s = f.level(m, n);
      for (std::size_t i = 0; i < mod.plus_generators(); ++i)
        if (!maps_into(s, mod.gamma_plus(i, m & 1, n & 1), f.level(m + 1, n)))
          return Certificate::fail(name, {{"condition", "gamma_plus"}, {"i", i + 1}, {"m", m}, {"n", n}});
      for (std::size_t j = 0; j < mod.minus_generators(); ++j)
        if (!maps_into(s, mod.gamma_minus(j, m & 1, n & 1), f.level(m, n + 1)))
          return Certificate::fail(name, {{"condition", "gamma_minus"}, {"j", j + 1}, {"m", m}, {"n", n}});
    }
  return Certificate::ok(name, {{"top_plus", tp}, {"top_minus", tm}, {"dims", f.dims()}});
}

BiGradedRep::BiGradedRep(std::shared_ptr<const CliffordAlgebra> plus, std::shared_ptr<const CliffordAlgebra> minus,
                         std::vector<std::vector<std::size_t>> dims, Table sigma, Table tau, std::vector<Table> qp,
                         std::vector<Table> qm)
    : plus_(std::move(plus)),
      minus_(std::move(minus)),
      dims_(std::move(dims)),
      sigma_(std::move(sigma)),
      tau_(std::move(tau)),
      qp_(std::move(qp)),
      qm_(std::move(qm)) {
  if (!plus_ || !minus_) throw ContractError("BiGradedRep: null algebra");
  if (dims_.size() < 2 || dims_.front().size() < 2) throw ContractError("BiGradedRep: both tops must be at least 1");
  for (const auto& row : dims_)
    if (row.size() != dims_.front().size()) throw DimensionError("BiGradedRep: ragged dimension table");
  const int tp = top_plus(), tm = top_minus();
  auto check_table = [&](const Table& t, int rows, int cols, int dm, int dn, const char* what) {
    if (static_cast<int>(t.size()) != rows) throw DimensionError(std::string("BiGradedRep: ") + what + " table size");
    for (int m = 0; m < rows; ++m) {
      if (static_cast<int>(t[static_cast<std::size_t>(m)].size()) != cols)
        throw DimensionError(std::string("BiGradedRep: ") + what + " table size");
      for (int n = 0; n < cols; ++n) {
        const auto& a = t[static_cast<std::size_t>(m)][static_cast<std::size_t>(n)];
        if (a.rows() != dim(m, n) || a.cols() != dim(m + dm, n + dn))
          throw DimensionError(std::string("BiGradedRep: ") + what + " has the wrong shape");
      }
    }
  };
  check_table(sigma_, tp - 1, tm + 1, 2, 0, "sigma");
  check_table(tau_, tp + 1, tm - 1, 0, 2, "tau");
  if (qp_.size() != plus_->generators() || qm_.size() != minus_->generators())
    throw DimensionError("BiGradedRep: one Q table per generator is required");
  for (const auto& t : qp_) check_table(t, tp + 1, tm + 1, 1, 0, "Q+");
  for (const auto& t : qm_) check_table(t, tp + 1, tm + 1, 0, 1, "Q-");
}

int BiGradedRep::stab_plus(int m) const { return m <= top_plus() ? m : top_plus() - (m - top_plus()) % 2; }
int BiGradedRep::stab_minus(int n) const { return n <= top_minus() ? n : top_minus() - (n - top_minus()) % 2; }

std::size_t BiGradedRep::dim(int m, int n) const {
  if (m < 0 || n < 0) return 0;
  return dims_[static_cast<std::size_t>(stab_plus(m))][static_cast<std::size_t>(stab_minus(n))];
}

Matrix BiGradedRep::sigma(int m, int n) const {
  if (m < 0 || n < 0) return Matrix(0, dim(m + 2, n));
  if (m + 2 <= top_plus()) return sigma_[static_cast<std::size_t>(m)][static_cast<std::size_t>(stab_minus(n))];
  return Matrix::identity(dim(m, n));
}

Matrix BiGradedRep::tau(int m, int n) const {
  if (m < 0 || n < 0) return Matrix(0, dim(m, n + 2));
  if (n + 2 <= top_minus()) return tau_[static_cast<std::size_t>(stab_plus(m))][static_cast<std::size_t>(n)];
  return Matrix::identity(dim(m, n));
}

Matrix BiGradedRep::qp(std::size_t i, int m, int n) const {
  if (m < 0 || n < 0) return Matrix(0, dim(m + 1, n));
  return qp_.at(i)[static_cast<std::size_t>(stab_plus(m))][static_cast<std::size_t>(stab_minus(n))];
}

Matrix BiGradedRep::qm(std::size_t j, int m, int n) const {
  if (m < 0 || n < 0) return Matrix(0, dim(m, n + 1));
  return qm_.at(j)[static_cast<std::size_t>(stab_plus(m))][static_cast<std::size_t>(stab_minus(n))];
}

Matrix BiGradedRep::helicity(int m, int n) const { return Matrix::scalar(dim(m, n), Rational(m - n)); }

Vector BiGradedRep::quotient_class(int m, int n, const Vector& z) const {
  if (m < 0 || n < 0) throw ContractError("quotient_class: negative bidegree");
  if (z.size() != dim(m, n)) throw DimensionError("quotient_class: vector length mismatch");
  int a = stab_plus(m), b = stab_minus(n);
  Vector v = z;
  for (; a + 2 <= top_plus(); a += 2) v = cliffilt::apply(v, sigma(a, b));
  for (; b + 2 <= top_minus(); b += 2) v = cliffilt::apply(v, tau(a, b));
  return v;
}

Certificate verify_2d(const BiGradedRep& r) {
  const char* name = "offshell_2d_relations";
  const int tp = r.top_plus() + 1, tm = r.top_minus() + 1;
  const std::size_t np = r.plus_algebra().generators(), nm = r.minus_algebra().generators();
  const auto& gp = r.plus_algebra().gram();
  const auto& gm = r.minus_algebra().gram();
  auto fail = [&](const char* cond, int m, int n, nlohmann::json extra = nlohmann::json::object()) {
    extra["condition"] = cond;
    extra["m"] = m;
    extra["n"] = n;
    return Certificate::fail(name, std::move(extra));
  };
  for (int m = 0; m <= tp; ++m)
    for (int n = 0; n <= tm; ++n) {
      const Matrix s = r.sigma(m, n), t = r.tau(m, n);
      if (!is_injective(s)) return fail("sigma_injective", m, n);
      if (!is_injective(t)) return fail("tau_injective", m, n);
      if (s * r.tau(m + 2, n) != t * r.sigma(m, n + 2)) return fail("shifts_commute", m, n);
      if (s * r.helicity(m + 2, n) - r.helicity(m, n) * s != s * Rational(2)) return fail("L_sigma", m, n);
      if (t * r.helicity(m, n + 2) - r.helicity(m, n) * t != t * Rational(-2)) return fail("L_tau", m, n);
      if (((m - n) - (m + n)) % 2 != 0) return fail("spin_statistics", m, n);
      for (std::size_t i = 0; i < np; ++i) {
        const Matrix qi = r.qp(i, m, n);
        for (std::size_t j = i; j < np; ++j) {
          const Matrix lhs = qi * r.qp(j, m + 1, n) + r.qp(j, m, n) * r.qp(i, m + 1, n);
          if (lhs != s * (Rational(2) * gp(i, j))) return fail("plus_anticommutator", m, n, {{"i", i + 1}, {"j", j + 1}});
        }
        for (std::size_t j = 0; j < nm; ++j) {
          const Matrix lhs = qi * r.qm(j, m + 1, n) + r.qm(j, m, n) * r.qp(i, m, n + 1);
          if (!lhs.is_zero()) return fail("mixed_anticommutator", m, n, {{"i", i + 1}, {"j", j + 1}});
        }
        if (s * r.qp(i, m + 2, n) != qi * r.sigma(m + 1, n)) return fail("sigma_Qplus", m, n, {{"i", i + 1}});
        if (t * r.qp(i, m, n + 2) != qi * r.tau(m + 1, n)) return fail("tau_Qplus", m, n, {{"i", i + 1}});
        if (qi * r.helicity(m + 1, n) - r.helicity(m, n) * qi != qi) return fail("L_Qplus", m, n, {{"i", i + 1}});
      }
      for (std::size_t j = 0; j < nm; ++j) {
        const Matrix qj = r.qm(j, m, n);
        for (std::size_t k = j; k < nm; ++k) {
          const Matrix lhs = qj * r.qm(k, m, n + 1) + r.qm(k, m, n) * r.qm(j, m, n + 1);
          if (lhs != t * (Rational(2) * gm(j, k))) return fail("minus_anticommutator", m, n, {{"i", j + 1}, {"j", k + 1}});
        }
        if (s * r.qm(j, m + 2, n) != qj * r.sigma(m, n + 1)) return fail("sigma_Qminus", m, n, {{"j", j + 1}});
        if (t * r.qm(j, m, n + 2) != qj * r.tau(m, n + 1)) return fail("tau_Qminus", m, n, {{"j", j + 1}});
        if (qj * r.helicity(m, n + 1) - r.helicity(m, n) * qj != qj * Rational(-1))
          return fail("L_Qminus", m, n, {{"j", j + 1}});
      }
    }
  return Certificate::ok(name, {{"top_plus", r.top_plus()}, {"top_minus", r.top_minus()}, {"dims", r.stored_dims()}});
}

BiGradedRep bideform(const Bifiltration& f) {
  if (const auto c = check_bifiltration(f); !c) throw ContractError("bideform: invalid bifiltration: " + c.witness.dump());
  const auto& mod = f.module();
  const int tp = f.top_plus(), tm = f.top_minus();
  std::vector<std::vector<std::size_t>> dims = f.dims();
  BiGradedRep::Table sigma, tau;
  for (int m = 0; m + 2 <= tp; ++m) {
    sigma.emplace_back();
    for (int n = 0; n <= tm; ++n) sigma.back().push_back(f.level(m + 2, n).coordinates(f.level(m, n).basis()));
  }
  for (int m = 0; m <= tp; ++m) {
    tau.emplace_back();
    for (int n = 0; n + 2 <= tm; ++n) tau.back().push_back(f.level(m, n + 2).coordinates(f.level(m, n).basis()));
  }
  std::vector<BiGradedRep::Table> qp(mod.plus_generators()), qm(mod.minus_generators());
  for (std::size_t i = 0; i < qp.size(); ++i)
    for (int m = 0; m <= tp; ++m) {
      qp[i].emplace_back();
      for (int n = 0; n <= tm; ++n)
        qp[i].back().push_back(f.level(m + 1, n).coordinates(f.level(m, n).basis() * mod.gamma_plus(i, m & 1, n & 1)));
    }
  for (std::size_t j = 0; j < qm.size(); ++j)
    for (int m = 0; m <= tp; ++m) {
      qm[j].emplace_back();
      for (int n = 0; n <= tm; ++n)
        qm[j].back().push_back(f.level(m, n + 1).coordinates(f.level(m, n).basis() * mod.gamma_minus(j, m & 1, n & 1)));
    }
  return BiGradedRep(mod.plus_ptr(), mod.minus_ptr(), std::move(dims), std::move(sigma), std::move(tau), std::move(qp),
                     std::move(qm));
}

std::vector<std::vector<std::size_t>> two_stage_dims(const Bifiltration& f) {
  const int tp = f.top_plus(), tm = f.top_minus();
  const int corner_even = tm % 2 == 0 ? tm : tm - 1;
  const int corner_odd = tm % 2 == 0 ? tm - 1 : tm;
  std::vector<std::vector<std::size_t>> out;
  for (int m = 0; m <= tp; ++m) {
    // Stage one: (Def_s V)_m = F+_m V = F_{m, corner} in both minus parities.
    const Subspace c_even = f.level(m, corner_even);
    const Subspace c_odd = f.level(m, corner_odd);
    out.emplace_back();
    for (int n = 0; n <= tm; ++n) {
      // Stage two: the minus filtration inside the stage-one component, in its coordinates.
      const Subspace& c = n % 2 == 0 ? c_even : c_odd;
      out.back().push_back(rank(c.coordinates(f.level(m, n).basis())));
    }
  }
  return out;
}

Bifiltration biquotient(const BiGradedRep& r) {
  const int tp = r.top_plus(), tm = r.top_minus();
  for (int m = 0; m <= tp + 1; ++m)
    for (int n = 0; n <= tm + 1; ++n) {
      if (!is_injective(r.sigma(m, n)) || !is_injective(r.tau(m, n)))
        throw ContractError("biquotient: shifts must be injective");
      if (r.sigma(m, n) * r.tau(m + 2, n) != r.tau(m, n) * r.sigma(m, n + 2))
        throw ContractError("biquotient: shifts must commute");
    }
  auto corner_plus = [&](int a) { return tp % 2 == a ? tp : tp - 1; };
  auto corner_minus = [&](int b) { return tm % 2 == b ? tm : tm - 1; };
  std::array<std::size_t, 4> dims{};
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) dims[BiSupermodule::index(a, b)] = r.dim(corner_plus(a), corner_minus(b));
  std::vector<BiSupermodule::Blocks> gp(r.plus_algebra().generators()), gm(r.minus_algebra().generators());
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      for (std::size_t i = 0; i < gp.size(); ++i) gp[i][BiSupermodule::index(a, b)] = r.qp(i, corner_plus(a), corner_minus(b));
      for (std::size_t j = 0; j < gm.size(); ++j) gm[j][BiSupermodule::index(a, b)] = r.qm(j, corner_plus(a), corner_minus(b));
    }
  auto module = std::make_shared<const BiSupermodule>(r.plus_ptr(), r.minus_ptr(), dims, std::move(gp), std::move(gm));
  std::vector<std::vector<Subspace>> levels;
  for (int m = 0; m <= tp; ++m) {
    levels.emplace_back();
    for (int n = 0; n <= tm; ++n) {
      Matrix lift = Matrix::identity(r.dim(m, n));
      int a = m, b = n;
      for (; a + 2 <= tp; a += 2) lift = lift * r.sigma(a, b);
      for (; b + 2 <= tm; b += 2) lift = lift * r.tau(a, b);
      levels.back().push_back(Subspace::span(lift));
    }
  }
  return Bifiltration(std::move(module), std::move(levels));
}

Certificate bifiltered_roundtrip(const Bifiltration& f) {
  const char* name = "bifiltered_roundtrip";
  const BiGradedRep r = bideform(f);
  if (auto c = verify_2d(r); !c) {
    c.check = name;
    return c;
  }
  const Bifiltration g = biquotient(r);
  if (auto c = check_bifiltration(g); !c) {
    c.check = name;
    return c;
  }
  const auto& a = f.module();
  const auto& b = g.module();
  const int tp = f.top_plus(), tm = f.top_minus();
  // The class of v in V_ab is its coordinate vector in the full corner level.
  std::array<Matrix, 4> phi;
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) {
      const int cm = tp % 2 == x ? tp : tp - 1;
      const int cn = tm % 2 == y ? tm : tm - 1;
      phi[BiSupermodule::index(x, y)] = f.level(cm, cn).coordinates(Matrix::identity(a.dim(x, y)));
      const Matrix& p = phi[BiSupermodule::index(x, y)];
      if (p.rows() != b.dim(x, y) || rank(p) != p.rows())
        return Certificate::fail(name, {{"condition", "bijective"}, {"component", {x, y}}});
    }
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) {
      const Matrix& src = phi[BiSupermodule::index(x, y)];
      for (std::size_t i = 0; i < a.plus_generators(); ++i)
        if (src * b.gamma_plus(i, x, y) != a.gamma_plus(i, x, y) * phi[BiSupermodule::index(1 - x, y)])
          return Certificate::fail(name, {{"condition", "intertwining_plus"}, {"i", i + 1}, {"component", {x, y}}});
      for (std::size_t j = 0; j < a.minus_generators(); ++j)
        if (src * b.gamma_minus(j, x, y) != a.gamma_minus(j, x, y) * phi[BiSupermodule::index(x, 1 - y)])
          return Certificate::fail(name, {{"condition", "intertwining_minus"}, {"j", j + 1}, {"component", {x, y}}});
    }
  for (int m = 0; m <= tp + 1; ++m)
    for (int n = 0; n <= tm + 1; ++n)
      if (image(phi[BiSupermodule::index(m, n)], f.level(m, n)) != g.level(m, n))
        return Certificate::fail(name, {{"condition", "bifiltration"}, {"m", m}, {"n", n}});
  return Certificate::ok(name, {{"dims", f.dims()}});
}

TwistedTensor::TwistedTensor(std::shared_ptr<const CliffordAlgebra> a, std::shared_ptr<const CliffordAlgebra> b)
    : a_(std::move(a)), b_(std::move(b)) {
  if (!a_ || !b_) throw ContractError("TwistedTensor: null algebra");
  if (!a_->is_standard() || !b_->is_standard())
    throw ContractError("TwistedTensor: only identity-gram factors are supported");
  if (a_->generators() + b_->generators() > CliffordAlgebra::kMaxGenerators)
    throw ContractError("TwistedTensor: too many generators");
  combined_ = std::make_shared<const CliffordAlgebra>(a_->generators() + b_->generators());
}

std::pair<Blade, Blade> TwistedTensor::split(Blade c) const {
  const Blade mask = static_cast<Blade>(a_->dimension() - 1);
  return {c & mask, c >> a_->generators()};
}

BladeCombination TwistedTensor::pair_product(Blade a1, Blade b1, Blade a2, Blade b2) const {
  const bool negative = (blade_grade(b1) % 2) * (blade_grade(a2) % 2) == 1;
  std::map<Blade, Rational> acc;
  for (const auto& [x, c] : a_->monomial_product(a1, a2))
    for (const auto& [y, d] : b_->monomial_product(b1, b2)) {
      Rational v = c * d;
      if (negative) v = -v;
      acc[pair_blade(x, y)] += v;
    }
  BladeCombination out;
  for (const auto& [k, v] : acc)
    if (!v.is_zero()) out.emplace_back(k, v);
  return out;
}

Vector TwistedTensor::product(const Vector& x, const Vector& y) const {
  const auto& basis = combined_->basis();
  if (x.size() != basis.size() || y.size() != basis.size()) throw DimensionError("TwistedTensor::product: length mismatch");
  Vector out(basis.size());
  for (std::size_t s = 0; s < basis.size(); ++s) {
    if (x[s].is_zero()) continue;
    const auto [a1, b1] = split(basis[s]);
    for (std::size_t t = 0; t < basis.size(); ++t) {
      if (y[t].is_zero()) continue;
      const auto [a2, b2] = split(basis[t]);
      for (const auto& [c, v] : pair_product(a1, b1, a2, b2)) out[combined_->index_of(c)] += x[s] * y[t] * v;
    }
  }
  return out;
}

Vector TwistedTensor::generator(std::size_t k) const {
  if (k < 1 || k > combined_->generators()) throw ContractError("TwistedTensor::generator: index out of range");
  Vector v(dimension());
  v[combined_->index_of(Blade{1} << (k - 1))] = Rational(1);
  return v;
}

Subspace TwistedTensor::level(int m, int n) const {
  std::vector<std::size_t> idx;
  for (std::size_t k = 0; k < dimension(); ++k) {
    const auto [a, b] = split(combined_->basis()[k]);
    const int ga = blade_grade(a), gb = blade_grade(b);
    if (m >= 0 && n >= 0 && ga <= m && (m - ga) % 2 == 0 && gb <= n && (n - gb) % 2 == 0) idx.push_back(k);
  }
  return Subspace::coordinate(dimension(), idx);
}

Certificate check_twisted_clifford(const TwistedTensor& t) {
  const char* name = "twisted_clifford";
  const std::size_t n = t.combined().generators();
  Vector one(t.dimension());
  one[0] = Rational(1);
  for (std::size_t a = 1; a <= n; ++a)
    for (std::size_t b = a; b <= n; ++b) {
      Vector anti = t.product(t.generator(a), t.generator(b));
      const Vector other = t.product(t.generator(b), t.generator(a));
      for (std::size_t k = 0; k < anti.size(); ++k) anti[k] += other[k];
      Vector expected(t.dimension());
      if (a == b) expected[0] = Rational(2);
      if (anti != expected) return Certificate::fail(name, {{"condition", "anticommutator"}, {"a", a}, {"b", b}});
    }
  const auto& basis = t.combined().basis();
  for (Blade x : basis)
    for (Blade y : basis) {
      const auto [a1, b1] = t.split(x);
      const auto [a2, b2] = t.split(y);
      if (t.pair_product(a1, b1, a2, b2) != t.combined().monomial_product(x, y))
        return Certificate::fail(name, {{"condition", "isomorphism"}, {"left", blade_indices(x)}, {"right", blade_indices(y)}});
    }
  return Certificate::ok(name, {{"p", t.left().generators()}, {"q", t.right().generators()}});
}

namespace {

struct RegularModule {
  BiModulePtr module;
  // Combined-basis indices of each component, in canonical order.
  std::array<std::vector<std::size_t>, 4> members;
  std::shared_ptr<const TwistedTensor> tensor;
};

RegularModule regular_module(std::size_t p, std::size_t q) {
  if (p < 1 || q < 1) throw ContractError("regular_bifiltered_module: p and q must be positive");
  auto tensor = std::make_shared<const TwistedTensor>(std::make_shared<const CliffordAlgebra>(p),
                                                      std::make_shared<const CliffordAlgebra>(q));
  const auto& comb = tensor->combined();
  RegularModule out;
  out.tensor = tensor;
  std::vector<std::size_t> position(comb.dimension());
  for (std::size_t k = 0; k < comb.dimension(); ++k) {
    const auto [a, b] = tensor->split(comb.basis()[k]);
    auto& list = out.members[BiSupermodule::index(blade_grade(a), blade_grade(b))];
    position[k] = list.size();
    list.push_back(k);
  }
  std::array<std::size_t, 4> dims{};
  for (std::size_t c = 0; c < 4; ++c) dims[c] = out.members[c].size();
  auto blocks_for = [&](std::size_t k, bool plus) {
    const Matrix left = left_multiplication(comb, Blade{1} << (k - 1));
    BiSupermodule::Blocks blocks;
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) {
        const int ta = plus ? 1 - a : a, tb = plus ? b : 1 - b;
        const auto& src = out.members[BiSupermodule::index(a, b)];
        const auto& dst = out.members[BiSupermodule::index(ta, tb)];
        Matrix m(src.size(), dst.size());
        for (std::size_t r = 0; r < src.size(); ++r)
          for (std::size_t c = 0; c < dst.size(); ++c) m(r, c) = left(src[r], dst[c]);
        blocks[BiSupermodule::index(a, b)] = std::move(m);
      }
    return blocks;
  };
  std::vector<BiSupermodule::Blocks> gp, gm;
  for (std::size_t i = 1; i <= p; ++i) gp.push_back(blocks_for(i, true));
  for (std::size_t j = 1; j <= q; ++j) gm.push_back(blocks_for(p + j, false));
  out.module = std::make_shared<const BiSupermodule>(std::make_shared<const CliffordAlgebra>(p),
                                                     std::make_shared<const CliffordAlgebra>(q), dims, std::move(gp),
                                                     std::move(gm));
  return out;
}

}  // namespace

Bifiltration regular_bifiltered_module(std::size_t p, std::size_t q) {
  const RegularModule reg = regular_module(p, q);
  const int tp = static_cast<int>(p), tm = static_cast<int>(q);
  std::vector<std::vector<Subspace>> levels;
  for (int m = 0; m <= tp; ++m) {
    levels.emplace_back();
    for (int n = 0; n <= tm; ++n) {
      const Subspace full = reg.tensor->level(m, n);
      const auto& members = reg.members[BiSupermodule::index(m, n)];
      std::vector<std::size_t> idx;
      for (std::size_t k = 0; k < members.size(); ++k) {
        Vector e(reg.tensor->dimension());
        e[members[k]] = Rational(1);
        if (full.contains(e)) idx.push_back(k);
      }
      levels.back().push_back(Subspace::coordinate(members.size(), idx));
    }
  }
  return Bifiltration(reg.module, std::move(levels));
}

Bifiltration random_bifiltration(std::size_t p, std::size_t q, Rng& rng) {
  const RegularModule reg = regular_module(p, q);
  const auto& mod = *reg.module;
  struct Seed {
    int m, n;
    Vector v;
  };
  std::vector<Seed> seeds;
  const std::size_t count = 1 + rng.index(3);
  int max_m = 0, max_n = 0;
  for (std::size_t k = 0; k < count; ++k) {
    const int m = static_cast<int>(rng.uniform(0, 2)), n = static_cast<int>(rng.uniform(0, 2));
    const std::size_t d = mod.dim(m, n);
    if (d == 0) continue;
    Vector v = rng.coin() ? rng.sparse_vector(d, 0.3) : rng.vector(d, 2);
    if (is_zero(v)) v[0] = Rational(1);
    seeds.push_back({m, n, std::move(v)});
    max_m = std::max(max_m, m);
    max_n = std::max(max_n, n);
  }
  const int tp = max_m + static_cast<int>(p) + 1, tm = max_n + static_cast<int>(q) + 1;
  std::vector<std::vector<Subspace>> levels(static_cast<std::size_t>(tp + 1));
  auto at = [&](int m, int n) -> Subspace {
    if (m < 0 || n < 0) return Subspace::zero(mod.dim(m & 1, n & 1));
    return levels[static_cast<std::size_t>(m)][static_cast<std::size_t>(n)];
  };
  for (int m = 0; m <= tp; ++m)
    for (int n = 0; n <= tm; ++n) {
      const std::size_t d = mod.dim(m, n);
      const bool corner = m >= tp - 1 && n >= tm - 1;
      Subspace s = corner ? Subspace::full(d) : Subspace::zero(d);
      if (!corner) {
        std::vector<Vector> rows;
        for (const auto& seed : seeds)
          if (seed.m <= m && seed.n <= n && (m - seed.m) % 2 == 0 && (n - seed.n) % 2 == 0) rows.push_back(seed.v);
        Matrix stacked = vstack(Matrix::from_rows(rows, d), vstack(at(m - 2, n).basis(), at(m, n - 2).basis()));
        const Subspace left = at(m - 1, n), below = at(m, n - 1);
        for (std::size_t i = 0; i < mod.plus_generators(); ++i)
          stacked = vstack(stacked, left.basis() * mod.gamma_plus(i, (m - 1) & 1, n & 1));
        for (std::size_t j = 0; j < mod.minus_generators(); ++j)
          stacked = vstack(stacked, below.basis() * mod.gamma_minus(j, m & 1, (n - 1) & 1));
        s = Subspace::span(stacked);
      }
      levels[static_cast<std::size_t>(m)].push_back(std::move(s));
    }
  return Bifiltration(reg.module, std::move(levels));
}

}  // namespace cliffilt
