#pragma once
// Dense exact linear algebra over a field type F (CycQ, RealQuadratic, ...).
// Row-vector conventions: kernels are left kernels, spans are row spans.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace caspr {

template <class F>
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : r_(r), c_(c), d_(r * c, F(0)) {}
  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1);
    return m;
  }

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  F& operator()(std::size_t i, std::size_t j) { return d_[i * c_ + j]; }
  const F& operator()(std::size_t i, std::size_t j) const { return d_[i * c_ + j]; }

  Matrix operator*(const Matrix& o) const {
    if (c_ != o.r_) throw std::invalid_argument("Matrix: shape mismatch");
    Matrix p(r_, o.c_);
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t k = 0; k < c_; ++k) {
        const F& a = (*this)(i, k);
        if (a.is_zero()) continue;
        for (std::size_t j = 0; j < o.c_; ++j)
          if (!o(k, j).is_zero()) p(i, j) += a * o(k, j);
      }
    return p;
  }
  Matrix operator+(const Matrix& o) const {
    Matrix p = *this;
    for (std::size_t i = 0; i < d_.size(); ++i) p.d_[i] += o.d_[i];
    return p;
  }
  Matrix operator-(const Matrix& o) const {
    Matrix p = *this;
    for (std::size_t i = 0; i < d_.size(); ++i) p.d_[i] -= o.d_[i];
    return p;
  }
  Matrix scaled(const F& s) const {
    Matrix p = *this;
    for (auto& x : p.d_) x *= s;
    return p;
  }
  bool operator==(const Matrix& o) const { return r_ == o.r_ && c_ == o.c_ && d_ == o.d_; }
  bool is_zero() const {
    for (const auto& x : d_)
      if (!x.is_zero()) return false;
    return true;
  }
  std::vector<F> row(std::size_t i) const { return {d_.begin() + i * c_, d_.begin() + (i + 1) * c_}; }
  void append_row(const std::vector<F>& v) {
    if (r_ == 0 && c_ == 0) c_ = v.size();
    if (v.size() != c_) throw std::invalid_argument("Matrix: row length mismatch");
    d_.insert(d_.end(), v.begin(), v.end());
    ++r_;
  }
  Matrix transposed() const {
    Matrix t(c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }
  Matrix submatrix(const std::vector<std::size_t>& ri, const std::vector<std::size_t>& ci) const {
    Matrix s(ri.size(), ci.size());
    for (std::size_t i = 0; i < ri.size(); ++i)
      for (std::size_t j = 0; j < ci.size(); ++j) s(i, j) = (*this)(ri[i], ci[j]);
    return s;
  }
  template <class G>
  Matrix map(G g) const {
    Matrix m = *this;
    for (auto& x : m.d_) x = g(x);
    return m;
  }

private:
  std::size_t r_ = 0, c_ = 0;
  std::vector<F> d_;
};

template <class F>
std::vector<F> vec_mat(const std::vector<F>& v, const Matrix<F>& m) {
  std::vector<F> out(m.cols(), F(0));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (v[i].is_zero()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) out[j] += v[i] * m(i, j);
  }
  return out;
}

// Reduced row echelon form of the row span; returns pivot columns.
template <class F>
std::vector<std::size_t> rref_inplace(Matrix<F>& m) {
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    F inv = F(1) / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      F f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

template <class F>
std::size_t rank(Matrix<F> m) {
  return rref_inplace(m).size();
}

// Basis (rows) of {x : x * m = 0}.
template <class F>
Matrix<F> left_kernel(const Matrix<F>& m) {
  // rref of [m | I]; rows whose m-part vanishes span the left kernel
  const std::size_t r = m.rows(), c = m.cols();
  Matrix<F> aug(r, c + r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) aug(i, j) = m(i, j);
    aug(i, c + i) = F(1);
  }
  auto piv = rref_inplace(aug);
  std::size_t rk = 0;
  for (auto p : piv)
    if (p < c) ++rk;
  Matrix<F> k(r - rk, r);
  for (std::size_t i = rk; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) k(i - rk, j) = aug(i, c + j);
  return k;
}

// A subspace of F^n given by a basis, with coordinate extraction.
template <class F>
class RowSpace {
public:
  RowSpace() = default;
  explicit RowSpace(const Matrix<F>& gens) : n_(gens.cols()) {
    rref_ = gens;
    piv_ = rref_inplace(rref_);
    Matrix<F> b(0, n_);
    for (std::size_t i = 0; i < piv_.size(); ++i) b.append_row(rref_.row(i));
    rref_ = b;
  }
  std::size_t dim() const { return piv_.size(); }
  const Matrix<F>& basis() const { return rref_; }
  const std::vector<std::size_t>& pivots() const { return piv_; }
  // coordinates w.r.t. the rref basis, or nullopt if v is outside the span
  std::optional<std::vector<F>> coords(const std::vector<F>& v) const {
    std::vector<F> rem = v, c(piv_.size(), F(0));
    for (std::size_t i = 0; i < piv_.size(); ++i) {
      c[i] = rem[piv_[i]];
      if (c[i].is_zero()) continue;
      for (std::size_t j = 0; j < n_; ++j)
        if (!rref_(i, j).is_zero()) rem[j] -= c[i] * rref_(i, j);
    }
    for (const auto& x : rem)
      if (!x.is_zero()) return std::nullopt;
    return c;
  }
  bool contains(const std::vector<F>& v) const { return coords(v).has_value(); }
  // residue of v after eliminating pivot columns (a canonical coset representative)
  std::vector<F> reduce(const std::vector<F>& v) const {
    std::vector<F> rem = v;
    for (std::size_t i = 0; i < piv_.size(); ++i) {
      F f = rem[piv_[i]];
      if (f.is_zero()) continue;
      for (std::size_t j = 0; j < n_; ++j)
        if (!rref_(i, j).is_zero()) rem[j] -= f * rref_(i, j);
    }
    return rem;
  }

private:
  std::size_t n_ = 0;
  Matrix<F> rref_;
  std::vector<std::size_t> piv_;
};

// ---- univariate polynomials, coefficients low degree first ----

template <class F>
using Poly = std::vector<F>;

template <class F>
void poly_trim(Poly<F>& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

template <class F>
Poly<F> poly_mul(const Poly<F>& a, const Poly<F>& b) {
  if (a.empty() || b.empty()) return {};
  Poly<F> c(a.size() + b.size() - 1, F(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  poly_trim(c);
  return c;
}

// quotient and remainder of a / b
template <class F>
std::pair<Poly<F>, Poly<F>> poly_divmod(Poly<F> a, Poly<F> b) {
  poly_trim(a);
  poly_trim(b);
  if (b.empty()) throw std::domain_error("poly_divmod: division by zero polynomial");
  if (a.size() < b.size()) return {{}, a};
  Poly<F> q(a.size() - b.size() + 1, F(0));
  F lead_inv = F(1) / b.back();
  const long bs = static_cast<long>(b.size());
  for (long i = static_cast<long>(a.size()) - 1; i >= bs - 1; --i) {
    F f = a[i] * lead_inv;
    q[i - (bs - 1)] = f;
    if (f.is_zero()) continue;
    for (long j = 0; j < bs; ++j) a[i - (bs - 1) + j] -= f * b[j];
  }
  poly_trim(a);
  poly_trim(q);
  return {q, a};
}

// Characteristic polynomial det(t I - A) via the Faddeev-LeVerrier recursion.
template <class F>
Poly<F> characteristic_polynomial(const Matrix<F>& a) {
  const std::size_t n = a.rows();
  if (n != a.cols()) throw std::invalid_argument("characteristic_polynomial: not square");
  Poly<F> c(n + 1, F(0));
  c[n] = F(1);
  Matrix<F> mk = Matrix<F>::identity(n);  // M_1 = I
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix<F> am = a * mk;
    F tr(0);
    for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
    F ck = -tr / F(static_cast<long>(k));
    c[n - k] = ck;
    mk = am;
    for (std::size_t i = 0; i < n; ++i) mk(i, i) += ck;
  }
  return c;
}

template <class F>
Matrix<F> matrix_power(const Matrix<F>& a, std::size_t e) {
  Matrix<F> r = Matrix<F>::identity(a.rows()), b = a;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

// rank of A^n for n = dim: the dimension of the eventual image.
template <class F>
std::size_t eventual_rank(const Matrix<F>& a) {
  if (a.rows() == 0) return 0;
  return rank(matrix_power(a, a.rows()));
}

// Number of times q divides p exactly.
template <class F>
std::size_t divisibility_multiplicity(Poly<F> p, const Poly<F>& q) {
  poly_trim(p);
  std::size_t m = 0;
  while (!p.empty()) {
    auto [quo, rem] = poly_divmod(p, q);
    if (!rem.empty()) break;
    p = quo;
    ++m;
  }
  return m;
}

}  // namespace caspr
