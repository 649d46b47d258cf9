#include "cliffilt/endomorphisms.hpp"

#include <gmpxx.h>

#include "cliffilt/error.hpp"
#include "cliffilt/polynomial.hpp"

namespace cliffilt {

EvenMap EvenMap::identity(const CliffordSupermodule& m) {
  return {Matrix::identity(m.dim_even()), Matrix::identity(m.dim_odd())};
}

namespace {

// Unknown layout: A_even row-major, then A_odd row-major.
EvenMap decode(std::span<const Rational> y, std::size_t de, std::size_t dd) {
  EvenMap out{Matrix(de, de), Matrix(dd, dd)};
  for (std::size_t r = 0; r < de; ++r)
    for (std::size_t c = 0; c < de; ++c) out.even(r, c) = y[r * de + c];
  for (std::size_t r = 0; r < dd; ++r)
    for (std::size_t c = 0; c < dd; ++c) out.odd(r, c) = y[de * de + r * dd + c];
  return out;
}

Vector flatten(const EvenMap& x) {
  Vector v;
  v.reserve(x.even.rows() * x.even.cols() + x.odd.rows() * x.odd.cols());
  for (std::size_t r = 0; r < x.even.rows(); ++r)
    for (const auto& e : x.even.row(r)) v.push_back(e);
  for (std::size_t r = 0; r < x.odd.rows(); ++r)
    for (const auto& e : x.odd.row(r)) v.push_back(e);
  return v;
}

bool maps_into(const Subspace& s, const Matrix& a) {
  for (std::size_t r = 0; r < s.dim(); ++r)
    if (!s.contains(cliffilt::apply(s.basis().row(r), a))) return false;
  return true;
}

bool is_scalar(const Matrix& m, Rational* value = nullptr) {
  if (!m.is_square()) return false;
  const Rational c = m.rows() == 0 ? Rational(0) : m(0, 0);
  if (m != Matrix::scalar(m.rows(), c)) return false;
  if (value) *value = c;
  return true;
}

bool positive_definite(Matrix a) {
  const std::size_t n = a.rows();
  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k) <= Rational(0)) return false;
    for (std::size_t i = k + 1; i < n; ++i) {
      const Rational f = a(i, k) / a(k, k);
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return true;
}

EvenMap from_total(const Matrix& t, std::size_t de) {
  const std::size_t dd = t.rows() - de;
  return {t.block(0, 0, de, de), t.block(de, de, dd, dd)};
}

// Scales a so its entries are integers, keeping minimal polynomials integral.
Matrix integral(const Matrix& a) {
  mpz_class l = 1;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (const auto& e : a.row(r)) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.raw().get_den_mpz_t());
  return a * Rational(mpq_class(l));
}

std::optional<Matrix> split_idempotent(const Matrix& a) {
  const Polynomial mu = minimal_polynomial(a);
  if (mu.degree() < 2) return std::nullopt;
  std::vector<Polynomial> primary;
  const auto sqf = squarefree_decomposition(mu);
  for (std::size_t k = 0; k < sqf.size(); ++k) {
    if (sqf[k].degree() < 1) continue;
    for (const auto& f : factor_squarefree_integer(sqf[k].monic())) {
      Polynomial power = Polynomial::constant(Rational(1));
      for (std::size_t j = 0; j <= k; ++j) power = power * f;
      primary.push_back(power);
    }
  }
  if (primary.size() < 2) return std::nullopt;
  const Polynomial& g1 = primary.front();
  const Polynomial g2 = divmod(mu, g1).quotient;
  const ExtendedGcd eg = extended_gcd(g1, g2);
  if (eg.g.degree() != 0) return std::nullopt;
  // t g2 is 1 modulo g1 and 0 modulo g2.
  const Matrix e = (eg.t * g2)(a);
  if (e * e != e || e.is_zero() || e == Matrix::identity(e.rows())) return std::nullopt;
  return e;
}

}  // namespace

std::vector<EvenMap> graded_commutant(const CliffordSupermodule& m) {
  const std::size_t de = m.dim_even(), dd = m.dim_odd();
  const std::size_t unknowns = de * de + dd * dd;
  RowReducer eq(unknowns);
  auto odd = [&](std::size_t r, std::size_t c) { return de * de + r * dd + c; };
  auto even = [&](std::size_t r, std::size_t c) { return r * de + c; };
  for (std::size_t i = 0; i < m.generators(); ++i) {
    const Matrix& eo = m.gamma_eo(i);
    const Matrix& oe = m.gamma_oe(i);
    // A_e eo - eo A_o = 0
    for (std::size_t r = 0; r < de; ++r)
      for (std::size_t c = 0; c < dd; ++c) {
        Vector row(unknowns);
        for (std::size_t k = 0; k < de; ++k) row[even(r, k)] += eo(k, c);
        for (std::size_t k = 0; k < dd; ++k) row[odd(k, c)] -= eo(r, k);
        eq.add(std::move(row));
      }
    // A_o oe - oe A_e = 0
    for (std::size_t r = 0; r < dd; ++r)
      for (std::size_t c = 0; c < de; ++c) {
        Vector row(unknowns);
        for (std::size_t k = 0; k < dd; ++k) row[odd(r, k)] += oe(k, c);
        for (std::size_t k = 0; k < de; ++k) row[even(k, c)] -= oe(r, k);
        eq.add(std::move(row));
      }
  }
  const Matrix sol = eq.solution_space();
  std::vector<EvenMap> out;
  for (std::size_t r = 0; r < sol.rows(); ++r) out.push_back(decode(sol.row(r), de, dd));
  return out;
}

std::vector<EvenMap> filtered_endomorphisms(const SuperFiltration& f) {
  return filtered_endomorphisms(f, graded_commutant(f.module()));
}

std::vector<EvenMap> filtered_endomorphisms(const SuperFiltration& f, const std::vector<EvenMap>& comm) {
  const auto& m = f.module();
  RowReducer eq(comm.size());
  for (int p = 0; p <= f.top(); ++p) {
    const Subspace s = f.level(p);
    if (s.is_zero() || s.is_full()) continue;
    const Matrix ann = s.annihilator();
    std::vector<Matrix> images;
    for (const auto& c : comm) images.push_back(s.basis() * (p % 2 == 0 ? c.even : c.odd) * ann);
    for (std::size_t r = 0; r < s.dim(); ++r)
      for (std::size_t k = 0; k < ann.cols(); ++k) {
        Vector row(comm.size());
        for (std::size_t t = 0; t < comm.size(); ++t) row[t] = images[t](r, k);
        eq.add(std::move(row));
      }
  }
  const Matrix sol = eq.solution_space();
  std::vector<EvenMap> candidates{EvenMap::identity(m)};
  for (std::size_t r = 0; r < sol.rows(); ++r) {
    EvenMap x{Matrix(m.dim_even(), m.dim_even()), Matrix(m.dim_odd(), m.dim_odd())};
    for (std::size_t t = 0; t < comm.size(); ++t)
      if (!sol(r, t).is_zero()) x = x + sol(r, t) * comm[t];
    candidates.push_back(std::move(x));
  }
  RowReducer independent(m.dim_even() * m.dim_even() + m.dim_odd() * m.dim_odd());
  std::vector<EvenMap> out;
  for (auto& c : candidates)
    if (independent.add(flatten(c))) out.push_back(std::move(c));
  return out;
}

bool is_filtered_endomorphism(const SuperFiltration& f, const EvenMap& x) {
  const auto& m = f.module();
  if (x.even.rows() != m.dim_even() || x.even.cols() != m.dim_even() || x.odd.rows() != m.dim_odd() ||
      x.odd.cols() != m.dim_odd())
    return false;
  for (std::size_t i = 0; i < m.generators(); ++i) {
    if (x.even * m.gamma_eo(i) != m.gamma_eo(i) * x.odd) return false;
    if (x.odd * m.gamma_oe(i) != m.gamma_oe(i) * x.even) return false;
  }
  for (int p = 0; p <= f.top(); ++p)
    if (!maps_into(f.level(p), p % 2 == 0 ? x.even : x.odd)) return false;
  return true;
}

IdempotentResult find_idempotent(const std::vector<EvenMap>& basis, const IdempotentOptions& options) {
  if (basis.empty()) throw ContractError("find_idempotent: empty basis");
  const std::size_t de = basis.front().even.rows();
  std::vector<Matrix> totals;
  for (const auto& b : basis) totals.push_back(b.total());
  const std::size_t n = totals.front().rows();
  const std::size_t d = basis.size();

  auto attempt = [&](const Matrix& a) -> std::optional<IdempotentResult> {
    if (is_scalar(a)) return std::nullopt;
    if (auto e = split_idempotent(integral(a)))
      return IdempotentResult{IdempotentSearch::Found, from_total(*e, de),
                              Certificate::ok("idempotent", {{"rank", rank(*e)}, {"algebra_dim", d}})};
    return std::nullopt;
  };

  // A proof that no nontrivial idempotent exists makes the search unnecessary.
  nlohmann::json info;
  auto certify = [&]() -> std::optional<IdempotentResult> {
    Matrix form(d, d);
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t l = k; l < d; ++l) form(k, l) = form(l, k) = (totals[k] * totals[l]).trace();
    const std::size_t radical = left_kernel(form).rows();
    info = {{"algebra_dim", d}, {"radical_dim", radical}};
    if (d - radical == 1) {
      info["kind"] = "local";
      return IdempotentResult{IdempotentSearch::Certified, std::nullopt, Certificate::ok("no_idempotent", info)};
    }
    if (radical == 0) {
      // Trace-free part E0; E is a division algebra when x^2 is a negative
      // multiple of Id for every nonzero x in E0.
      Matrix traces(d, 1);
      for (std::size_t k = 0; k < d; ++k) traces(k, 0) = totals[k].trace();
      const Matrix coeffs = left_kernel(traces);
      std::vector<Matrix> e0;
      for (std::size_t r = 0; r < coeffs.rows(); ++r) {
        Matrix y(n, n);
        for (std::size_t k = 0; k < d; ++k)
          if (!coeffs(r, k).is_zero()) y += totals[k] * coeffs(r, k);
        e0.push_back(std::move(y));
      }
      Matrix norm(e0.size(), e0.size());
      bool quadratic = true;
      for (std::size_t k = 0; k < e0.size() && quadratic; ++k)
        for (std::size_t l = k; l < e0.size() && quadratic; ++l) {
          Rational c;
          if (!is_scalar(e0[k] * e0[l] + e0[l] * e0[k], &c)) quadratic = false;
          norm(k, l) = norm(l, k) = -c / Rational(2);
        }
      if (quadratic && positive_definite(norm)) {
        info["kind"] = "division";
        return IdempotentResult{IdempotentSearch::Certified, std::nullopt, Certificate::ok("no_idempotent", info)};
      }
    }
    return std::nullopt;
  };
  if (auto c = certify()) return *c;

  std::size_t tried = 0;
  if (d > 1) {
    for (const auto& t : totals) {
      ++tried;
      if (auto r = attempt(t)) return *r;
    }
    Rng rng(options.seed);
    for (std::size_t k = 0; k < options.random_trials; ++k) {
      Matrix a(n, n);
      for (const auto& t : totals) a += t * Rational(rng.uniform(-3, 3));
      ++tried;
      if (auto r = attempt(a)) return *r;
    }
    // Bounded sweep over {-1, 0, 1} combinations, in mixed-radix order.
    std::vector<int> digits(d, -1);
    for (std::size_t k = 0; k < options.combination_budget; ++k) {
      Matrix a(n, n);
      for (std::size_t t = 0; t < d; ++t)
        if (digits[t] != 0) a += totals[t] * Rational(digits[t]);
      ++tried;
      if (auto r = attempt(a)) return *r;
      std::size_t pos = 0;
      while (pos < d && digits[pos] == 1) digits[pos++] = -1;
      if (pos == d) break;
      ++digits[pos];
    }
  }

  info["candidates_tried"] = tried;
  return {IdempotentSearch::Exhausted, std::nullopt, Certificate::fail("no_idempotent", info)};
}

}  // namespace cliffilt
