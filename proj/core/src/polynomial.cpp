#include "cliffilt/polynomial.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <complex>
#include <functional>
#include <sstream>
#include <utility>

#include "cliffilt/error.hpp"

namespace cliffilt {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::x() { return Polynomial({Rational(0), Rational(1)}); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Polynomial::coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(); }

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Polynomial p = *this;
  const Rational inv = Rational(1) / leading();
  for (auto& c : p.coeffs_) c *= inv;
  return p;
}

Polynomial Polynomial::derivative() const {
  std::vector<Rational> d;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d.push_back(coeffs_[k] * Rational(static_cast<long>(k)));
  return Polynomial(std::move(d));
}

Rational Polynomial::operator()(const Rational& at) const {
  Rational acc;
  for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * at + coeffs_[k];
  return acc;
}

Matrix Polynomial::operator()(const Matrix& a) const {
  if (!a.is_square()) throw DimensionError("Polynomial: evaluation at non-square matrix");
  Matrix acc(a.rows(), a.cols());
  for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * a + Matrix::scalar(a.rows(), coeffs_[k]);
  return acc;
}

std::string Polynomial::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    if (coeffs_[k].is_zero()) continue;
    if (!first) os << " + ";
    os << "(" << coeffs_[k] << ")";
    if (k > 0) os << "x^" << k;
    first = false;
  }
  return os.str();
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coefficient(k) + b.coefficient(k);
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coefficient(k) - b.coefficient(k);
  return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(c));
}

DivMod divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw ContractError("divmod: division by zero polynomial");
  std::vector<Rational> rem = a.coefficients();
  const int db = b.degree();
  if (a.degree() < db) return {Polynomial(), a};
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db + 1));
  const Rational inv = Rational(1) / b.leading();
  for (int k = a.degree(); k >= db; --k) {
    const Rational c = rem[static_cast<std::size_t>(k)] * inv;
    quot[static_cast<std::size_t>(k - db)] = c;
    if (c.is_zero()) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k - db + j)].sub_mul(c, b.coefficients()[static_cast<std::size_t>(j)]);
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    Polynomial r = divmod(x, y).remainder;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

ExtendedGcd extended_gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial r0 = a, r1 = b;
  Polynomial s0 = Polynomial::constant(1), s1;
  Polynomial t0, t1 = Polynomial::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::exchange(r1, r);
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const Polynomial scale = Polynomial::constant(Rational(1) / r0.leading());
  return {r0 * scale, s0 * scale, t0 * scale};
}

std::vector<Polynomial> squarefree_decomposition(const Polynomial& p) {
  if (p.degree() <= 0) return {};
  const Polynomial f = p.monic();
  const Polynomial fp = f.derivative();
  Polynomial a = gcd(f, fp);
  Polynomial b = divmod(f, a).quotient;
  Polynomial c = divmod(fp, a).quotient;
  Polynomial d = c - b.derivative();
  std::vector<Polynomial> out;
  while (b.degree() > 0) {
    const Polynomial g = gcd(b, d);
    out.push_back(g);
    b = divmod(b, g).quotient;
    c = divmod(d, g).quotient;
    d = c - b.derivative();
  }
  return out;
}

namespace {

using Complex = std::complex<double>;

std::vector<Complex> numeric_roots(const Polynomial& monic) {
  const int n = monic.degree();
  if (n <= 0) return {};
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) companion(i, n - 1) = -monic.coefficients()[static_cast<std::size_t>(i)].to_double();
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  std::vector<Complex> roots;
  for (int i = 0; i < n; ++i) roots.push_back(solver.eigenvalues()[i]);
  return roots;
}

// Monic integer polynomial with the given roots, or nothing if the rounded
// coefficients are not close to integers.
bool round_product(const std::vector<Complex>& roots, Polynomial& out) {
  std::vector<Complex> c{Complex(1.0)};
  for (const auto& r : roots) {
    std::vector<Complex> next(c.size() + 1, Complex(0.0));
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= r * c[i];
    }
    c = std::move(next);
  }
  std::vector<Rational> coeffs;
  for (const auto& z : c) {
    const double re = std::round(z.real());
    const double tol = 1e-6 * std::max(1.0, std::abs(z.real()));
    if (std::abs(z.imag()) > 1e-5 * std::max(1.0, std::abs(z)) || std::abs(z.real() - re) > tol + 1e-4) return false;
    if (std::abs(re) > 9.0e15) return false;
    coeffs.emplace_back(static_cast<long>(re));
  }
  out = Polynomial(std::move(coeffs));
  return true;
}

// Smallest-degree monic integer factor of p (degree < deg p), if one is found.
bool find_factor(const Polynomial& p, Polynomial& factor) {
  const auto roots = numeric_roots(p);
  const int n = p.degree();
  constexpr std::size_t kSubsetCap = 200000;
  std::size_t visited = 0;
  for (int k = 1; k <= n / 2; ++k) {
    std::vector<int> pick;
    bool found = false;
    std::function<void(int)> rec = [&](int start) {
      if (found || visited > kSubsetCap) return;
      if (static_cast<int>(pick.size()) == k) {
        ++visited;
        std::vector<Complex> chosen;
        for (int i : pick) chosen.push_back(roots[static_cast<std::size_t>(i)]);
        Polynomial candidate;
        if (round_product(chosen, candidate) && candidate.degree() == k &&
            divmod(p, candidate).remainder.is_zero()) {
          factor = candidate;
          found = true;
        }
        return;
      }
      for (int i = start; i < n; ++i) {
        pick.push_back(i);
        rec(i + 1);
        pick.pop_back();
        if (found) return;
      }
    };
    rec(0);
    if (found) return true;
    if (visited > kSubsetCap) return false;
  }
  return false;
}

}  // namespace

std::vector<Polynomial> factor_squarefree_integer(const Polynomial& p) {
  std::vector<Polynomial> factors;
  Polynomial rest = p.monic();
  while (rest.degree() > 1) {
    Polynomial f;
    if (!find_factor(rest, f)) break;
    factors.push_back(f);
    rest = divmod(rest, f).quotient;
  }
  if (rest.degree() >= 1) factors.push_back(rest);
  return factors;
}

Polynomial minimal_polynomial(const Matrix& a) {
  if (!a.is_square()) throw DimensionError("minimal_polynomial: non-square matrix");
  const std::size_t n = a.rows();
  auto flatten = [n](const Matrix& m) {
    Vector v;
    v.reserve(n * n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) v.push_back(m(r, c));
    return v;
  };
  RowReducer reducer(n * n);
  std::vector<Vector> powers;
  Matrix power = Matrix::identity(n);
  while (true) {
    Vector flat = flatten(power);
    powers.push_back(flat);
    if (!reducer.add(std::move(flat))) break;
    power = power * a;
  }
  // The last power is dependent on the previous ones; read off the relation.
  const Matrix stacked = Matrix::from_rows(powers, n * n);
  const Matrix relation = left_kernel(stacked);
  if (relation.rows() != 1) throw Error("minimal_polynomial: unexpected kernel dimension");
  return Polynomial(relation.row_vector(0)).monic();
}

}  // namespace cliffilt
