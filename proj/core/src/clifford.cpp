#include "cliffilt/clifford.hpp"

#include <algorithm>

#include "cliffilt/error.hpp"

namespace cliffilt {

std::vector<int> blade_indices(Blade b) {
  std::vector<int> out;
  for (int i = 0; b != 0; ++i, b >>= 1) {
    if (b & 1u) out.push_back(i + 1);
  }
  return out;
}

Blade blade_from_indices(const std::vector<int>& one_based) {
  Blade b = 0;
  for (int i : one_based) {
    if (i < 1 || i > static_cast<int>(CliffordAlgebra::kMaxGenerators)) throw ContractError("blade index out of range");
    const Blade bit = Blade{1} << (i - 1);
    if (b & bit) throw ContractError("blade with repeated generator");
    b |= bit;
  }
  return b;
}

namespace {

bool is_positive_definite(const Matrix& gram) {
  // Gaussian elimination without pivoting: all pivots positive iff all leading minors positive.
  Matrix a = gram;
  const std::size_t n = a.rows();
  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k).sign() <= 0) return false;
    for (std::size_t r = k + 1; r < n; ++r) {
      const Rational f = a(r, k) / a(k, k);
      for (std::size_t c = k; c < n; ++c) a(r, c).sub_mul(f, a(k, c));
    }
  }
  return true;
}

void accumulate(std::map<Blade, Rational>& acc, Blade b, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = acc.try_emplace(b, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) acc.erase(it);
  }
}

BladeCombination to_combination(const std::map<Blade, Rational>& m) { return {m.begin(), m.end()}; }

int highest_bit(Blade b) { return 31 - __builtin_clz(b); }

}  // namespace

CliffordAlgebra::CliffordAlgebra(std::size_t n) : CliffordAlgebra(Matrix::identity(n)) {}

CliffordAlgebra::CliffordAlgebra(Matrix gram) : n_(gram.rows()), gram_(std::move(gram)) {
  if (!gram_.is_square()) throw DimensionError("CliffordAlgebra: gram matrix must be square");
  if (n_ > kMaxGenerators) throw ContractError("CliffordAlgebra: too many generators");
  if (gram_ != gram_.transpose()) throw ContractError("CliffordAlgebra: gram matrix must be symmetric");
  if (!is_positive_definite(gram_)) throw ContractError("CliffordAlgebra: gram matrix must be positive definite");
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (i != j && !gram_(i, j).is_zero()) diagonal_ = false;
  build_basis();
  if (!diagonal_) build_rewrite_table();
}

bool CliffordAlgebra::is_standard() const { return gram_ == Matrix::identity(n_); }

void CliffordAlgebra::build_basis() {
  const std::size_t dim = dimension();
  // Lexicographic order on sorted index lists within each cardinality.
  std::vector<Blade> all(dim);
  for (Blade b = 0; b < dim; ++b) all[b] = b;
  std::sort(all.begin(), all.end(), [](Blade x, Blade y) {
    const int gx = blade_grade(x), gy = blade_grade(y);
    if (gx != gy) return gx < gy;
    return blade_indices(x) < blade_indices(y);
  });
  basis_ = std::move(all);
  index_.assign(dim, 0);
  for (std::size_t k = 0; k < dim; ++k) index_[basis_[k]] = k;
}

void CliffordAlgebra::build_rewrite_table() {
  const std::size_t dim = dimension();
  right_mul_.assign(dim * n_, {});
  // Blades are processed in increasing numeric order, so the prefix of a blade
  // (the blade without its highest generator) is always already tabulated.
  for (Blade x = 0; x < dim; ++x) {
    for (std::size_t g = 0; g < n_; ++g) {
      const Blade gbit = Blade{1} << g;
      std::map<Blade, Rational> acc;
      if (x == 0) {
        accumulate(acc, gbit, Rational(1));
      } else {
        const int last = highest_bit(x);
        const Blade lbit = Blade{1} << last;
        const Blade prefix = x ^ lbit;
        if (last < static_cast<int>(g)) {
          accumulate(acc, x | gbit, Rational(1));
        } else if (last == static_cast<int>(g)) {
          accumulate(acc, prefix, gram_(g, g));
        } else {
          // prefix g_last g_g = -(prefix g_g) g_last + 2 <last, g> prefix
          for (const auto& [b, c] : right_mul_[prefix * n_ + g]) accumulate(acc, b | lbit, -c);
          accumulate(acc, prefix, Rational(2) * gram_(static_cast<std::size_t>(last), g));
        }
      }
      right_mul_[x * n_ + g] = to_combination(acc);
    }
  }
}

BladeCombination CliffordAlgebra::monomial_product(Blade a, Blade b) const {
  if (diagonal_) {
    int swaps = 0;
    Rational coeff(1);
    for (std::size_t j = 0; j < n_; ++j) {
      if (!(b & (Blade{1} << j))) continue;
      const Blade above = a & ~((Blade{2} << j) - 1);
      swaps += blade_grade(above);
      if (a & (Blade{1} << j)) coeff *= gram_(j, j);
    }
    if (swaps % 2) coeff = -coeff;
    return {{a ^ b, coeff}};
  }
  std::map<Blade, Rational> current{{a, Rational(1)}};
  for (std::size_t j = 0; j < n_; ++j) {
    if (!(b & (Blade{1} << j))) continue;
    std::map<Blade, Rational> next;
    for (const auto& [x, c] : current)
      for (const auto& [y, d] : right_mul_[x * n_ + j]) accumulate(next, y, c * d);
    current = std::move(next);
  }
  return to_combination(current);
}

BladeCombination product_by_rewriting(const Matrix& gram, Blade a, Blade b) {
  std::vector<int> word;
  for (int i : blade_indices(a)) word.push_back(i - 1);
  for (int i : blade_indices(b)) word.push_back(i - 1);
  std::vector<std::pair<std::vector<int>, Rational>> work{{word, Rational(1)}};
  std::map<Blade, Rational> result;
  while (!work.empty()) {
    auto [w, c] = std::move(work.back());
    work.pop_back();
    if (c.is_zero()) continue;
    std::size_t k = 0;
    while (k + 1 < w.size() && w[k] < w[k + 1]) ++k;
    if (k + 1 >= w.size()) {
      Blade blade = 0;
      for (int g : w) blade |= Blade{1} << g;
      accumulate(result, blade, c);
      continue;
    }
    const auto i = static_cast<std::size_t>(w[k]);
    const auto j = static_cast<std::size_t>(w[k + 1]);
    std::vector<int> contracted(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
    contracted.insert(contracted.end(), w.begin() + static_cast<std::ptrdiff_t>(k + 2), w.end());
    if (i == j) {
      work.emplace_back(std::move(contracted), c * gram(i, i));
    } else {
      std::vector<int> swapped = w;
      std::swap(swapped[k], swapped[k + 1]);
      work.emplace_back(std::move(swapped), -c);
      work.emplace_back(std::move(contracted), Rational(2) * gram(i, j) * c);
    }
  }
  return to_combination(result);
}

CliffordElement::CliffordElement(std::shared_ptr<const CliffordAlgebra> algebra) : algebra_(std::move(algebra)) {
  if (!algebra_) throw ContractError("CliffordElement: null algebra");
}

CliffordElement CliffordElement::scalar(std::shared_ptr<const CliffordAlgebra> algebra, const Rational& c) {
  return monomial(std::move(algebra), 0, c);
}

CliffordElement CliffordElement::generator(std::shared_ptr<const CliffordAlgebra> algebra, std::size_t i) {
  if (i < 1 || i > algebra->generators()) throw ContractError("CliffordElement::generator: index out of range");
  return monomial(std::move(algebra), Blade{1} << (i - 1));
}

CliffordElement CliffordElement::monomial(std::shared_ptr<const CliffordAlgebra> algebra, Blade b, const Rational& c) {
  if (b >= algebra->dimension()) throw ContractError("CliffordElement::monomial: blade out of range");
  CliffordElement e(std::move(algebra));
  e.add_term(b, c);
  return e;
}

CliffordElement CliffordElement::from_vector(std::shared_ptr<const CliffordAlgebra> algebra, const Vector& v) {
  if (v.size() != algebra->dimension()) throw DimensionError("CliffordElement::from_vector: length mismatch");
  CliffordElement e(std::move(algebra));
  for (std::size_t k = 0; k < v.size(); ++k) e.add_term(e.algebra_->basis()[k], v[k]);
  return e;
}

Rational CliffordElement::coefficient(Blade b) const {
  auto it = terms_.find(b);
  return it == terms_.end() ? Rational() : it->second;
}

int CliffordElement::parity() const {
  int p = -1;
  for (const auto& [b, c] : terms_) {
    const int q = blade_grade(b) % 2;
    if (p >= 0 && p != q) return -1;
    p = q;
  }
  return p;
}

Vector CliffordElement::to_vector() const {
  Vector v(algebra_->dimension());
  for (const auto& [b, c] : terms_) v[algebra_->index_of(b)] = c;
  return v;
}

void CliffordElement::add_term(Blade b, const Rational& c) { accumulate(terms_, b, c); }

void CliffordElement::require_same_algebra(const CliffordElement& other) const {
  if (!(*algebra_ == *other.algebra_)) throw DimensionError("Clifford elements belong to different algebras");
}

CliffordElement& CliffordElement::operator+=(const CliffordElement& other) {
  require_same_algebra(other);
  for (const auto& [b, c] : other.terms_) add_term(b, c);
  return *this;
}

CliffordElement& CliffordElement::operator-=(const CliffordElement& other) {
  require_same_algebra(other);
  for (const auto& [b, c] : other.terms_) add_term(b, -c);
  return *this;
}

CliffordElement& CliffordElement::operator*=(const Rational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [b, c] : terms_) c *= s;
  return *this;
}

CliffordElement clifford_product(const CliffordElement& a, const CliffordElement& b) {
  a.require_same_algebra(b);
  CliffordElement out(a.algebra_);
  for (const auto& [x, c] : a.terms_)
    for (const auto& [y, d] : b.terms_)
      for (const auto& [z, e] : a.algebra_->monomial_product(x, y)) out.add_term(z, c * d * e);
  return out;
}

Subspace filtration_level(const CliffordAlgebra& algebra, int p) {
  const std::size_t dim = algebra.dimension();
  if (p < 0) return Subspace::zero(dim);
  std::vector<std::size_t> indices;
  for (std::size_t k = 0; k < dim; ++k) {
    const int g = blade_grade(algebra.basis()[k]);
    if (g <= p && (p - g) % 2 == 0) indices.push_back(k);
  }
  return Subspace::coordinate(dim, indices);
}

Certificate check_filtered_superalgebra(const CliffordAlgebra& algebra) {
  return check_filtered_superalgebra(
      algebra, [&](int p) { return filtration_level(algebra, p); }, static_cast<int>(algebra.generators()) + 1);
}

Certificate check_filtered_superalgebra(const CliffordAlgebra& algebra, const std::function<Subspace(int)>& level,
                                        int top) {
  auto shared = std::make_shared<const CliffordAlgebra>(algebra);
  const std::size_t dim = algebra.dimension();
  for (int p = 0; p <= top; ++p) {
    const Subspace fp = level(p);
    for (int q = 0; q <= top; ++q) {
      const Subspace fq = level(q);
      const Subspace target = level(std::min(p + q, top + ((p + q - top) % 2 == 0 ? 0 : -1)));
      for (std::size_t i = 0; i < fp.dim(); ++i) {
        const auto x = CliffordElement::from_vector(shared, fp.basis().row_vector(i));
        for (std::size_t j = 0; j < fq.dim(); ++j) {
          const auto y = CliffordElement::from_vector(shared, fq.basis().row_vector(j));
          const Vector product = clifford_product(x, y).to_vector();
          if (!target.contains(product)) {
            return Certificate::fail("filtered_superalgebra",
                                     {{"p", p}, {"q", q}, {"left_basis_index", i}, {"right_basis_index", j},
                                      {"dimension", dim}});
          }
        }
      }
    }
  }
  return Certificate::ok("filtered_superalgebra", {{"top", top}});
}

Matrix left_multiplication(const CliffordAlgebra& algebra, Blade b) {
  const std::size_t dim = algebra.dimension();
  Matrix m(dim, dim);
  for (std::size_t k = 0; k < dim; ++k)
    for (const auto& [z, c] : algebra.monomial_product(b, algebra.basis()[k])) m(k, algebra.index_of(z)) += c;
  return m;
}

Matrix right_multiplication(const CliffordAlgebra& algebra, Blade b) {
  const std::size_t dim = algebra.dimension();
  Matrix m(dim, dim);
  for (std::size_t k = 0; k < dim; ++k)
    for (const auto& [z, c] : algebra.monomial_product(algebra.basis()[k], b)) m(k, algebra.index_of(z)) += c;
  return m;
}

}  // namespace cliffilt
