#include "caspr/intmat.hpp"

#include <algorithm>
#include <stdexcept>

namespace caspr {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (c_ != o.r_) throw std::invalid_argument("IntMatrix: shape mismatch");
  IntMatrix p(r_, o.c_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t k = 0; k < c_; ++k) {
      const Integer& a = (*this)(i, k);
      if (sgn(a) == 0) continue;
      for (std::size_t j = 0; j < o.c_; ++j)
        if (sgn(o(k, j)) != 0) p(i, j) += a * o(k, j);
    }
  return p;
}

std::vector<Integer> IntMatrix::row(std::size_t i) const {
  return {d_.begin() + i * c_, d_.begin() + (i + 1) * c_};
}

void IntMatrix::append_row(const std::vector<Integer>& v) {
  if (r_ == 0 && c_ == 0) c_ = v.size();
  if (v.size() != c_) throw std::invalid_argument("IntMatrix: row length mismatch");
  d_.insert(d_.end(), v.begin(), v.end());
  ++r_;
}

IntMatrix IntMatrix::stacked(const IntMatrix& below) const {
  if (r_ == 0) return below;
  if (below.r_ == 0) return *this;
  if (below.c_ != c_) throw std::invalid_argument("IntMatrix: stacking width mismatch");
  IntMatrix m = *this;
  m.d_.insert(m.d_.end(), below.d_.begin(), below.d_.end());
  m.r_ += below.r_;
  return m;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(c_, r_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::select_rows(const std::vector<std::size_t>& idx) const {
  IntMatrix m(idx.size(), c_);
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < c_; ++j) m(i, j) = (*this)(idx[i], j);
  return m;
}

bool IntMatrix::is_zero() const {
  return std::all_of(d_.begin(), d_.end(), [](const Integer& x) { return sgn(x) == 0; });
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

// row[dst] -= q * row[src]
void sub_row(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
  if (sgn(q) == 0) return;
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (sgn(m(src, j)) != 0) m(dst, j) -= q * m(src, j);
}

void negate_row(IntMatrix& m, std::size_t i) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = -m(i, j);
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// In-place echelon reduction of h (and u alongside when given); returns rank.
std::size_t echelonize(IntMatrix& h, IntMatrix* u) {
  std::size_t r = 0;
  const std::size_t m = h.rows(), n = h.cols();
  for (std::size_t c = 0; c < n && r < m; ++c) {
    while (true) {
      std::size_t best = m;
      for (std::size_t i = r; i < m; ++i)
        if (sgn(h(i, c)) != 0 && (best == m || mpz_cmpabs(h(i, c).get_mpz_t(), h(best, c).get_mpz_t()) < 0)) best = i;
      if (best == m) break;
      swap_rows(h, r, best);
      if (u) swap_rows(*u, r, best);
      bool done = true;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (sgn(h(i, c)) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), h(r, c).get_mpz_t());
        sub_row(h, i, r, q);
        if (u) sub_row(*u, i, r, q);
        if (sgn(h(i, c)) != 0) done = false;
      }
      if (done) break;
    }
    if (sgn(h(r, c)) == 0) continue;
    if (sgn(h(r, c)) < 0) {
      negate_row(h, r);
      if (u) negate_row(*u, r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Integer q = floor_div(h(i, c), h(r, c));
      sub_row(h, i, r, q);
      if (u) sub_row(*u, i, r, q);
    }
    ++r;
  }
  return r;
}

}  // namespace

IntMatrix hermite_form(const IntMatrix& a) {
  IntMatrix h = a;
  std::size_t r = echelonize(h, nullptr);
  std::vector<std::size_t> idx(r);
  for (std::size_t i = 0; i < r; ++i) idx[i] = i;
  IntMatrix out = h.select_rows(idx);
  if (r == 0) return IntMatrix(0, a.cols());
  return out;
}

HermiteWithTransform hermite_with_transform(const IntMatrix& a) {
  HermiteWithTransform res;
  res.h = a;
  res.u = IntMatrix::identity(a.rows());
  res.rank = echelonize(res.h, &res.u);
  return res;
}

IntMatrix integer_left_kernel(const IntMatrix& a) {
  HermiteWithTransform t = hermite_with_transform(a);
  std::vector<std::size_t> idx;
  for (std::size_t i = t.rank; i < a.rows(); ++i) idx.push_back(i);
  IntMatrix k = t.u.select_rows(idx);
  if (idx.empty()) return IntMatrix(0, a.rows());
  return hermite_form(k);
}

std::size_t integer_rank(const IntMatrix& a) { return hermite_form(a).rows(); }

std::vector<Integer> smith_invariants(const IntMatrix& a0) {
  IntMatrix a = a0;
  const std::size_t m = a.rows(), n = a.cols();
  std::vector<Integer> diag;
  std::size_t t = 0;
  while (t < m && t < n) {
    // smallest nonzero entry in the remaining block
    std::size_t bi = m, bj = n;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (sgn(a(i, j)) != 0 && (bi == m || mpz_cmpabs(a(i, j).get_mpz_t(), a(bi, bj).get_mpz_t()) < 0)) {
          bi = i;
          bj = j;
        }
    if (bi == m) break;
    swap_rows(a, t, bi);
    for (std::size_t i = 0; i < m; ++i) std::swap(a(i, t), a(i, bj));
    bool clean = true;
    for (std::size_t i = t + 1; i < m; ++i) {
      if (sgn(a(i, t)) == 0) continue;
      Integer q;
      mpz_tdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
      sub_row(a, i, t, q);
      if (sgn(a(i, t)) != 0) clean = false;
    }
    for (std::size_t j = t + 1; j < n; ++j) {
      if (sgn(a(t, j)) == 0) continue;
      Integer q;
      mpz_tdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
      for (std::size_t i = t; i < m; ++i) a(i, j) -= q * a(i, t);
      if (sgn(a(t, j)) != 0) clean = false;
    }
    if (!clean) continue;
    // divisibility: fold an offending row into row t and retry
    bool divides = true;
    for (std::size_t i = t + 1; i < m && divides; ++i)
      for (std::size_t j = t + 1; j < n; ++j)
        if (sgn(a(i, j)) != 0 && !mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
          for (std::size_t k = t; k < n; ++k) a(t, k) += a(i, k);
          divides = false;
          break;
        }
    if (!divides) continue;
    diag.push_back(abs(a(t, t)));
    ++t;
  }
  return diag;
}

std::optional<std::vector<Integer>> lattice_coordinates(const IntMatrix& h,
                                                        const std::vector<Integer>& v) {
  std::vector<Integer> rem = v, coords(h.rows(), 0);
  std::size_t col = 0;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    while (col < h.cols() && sgn(h(i, col)) == 0) {
      if (sgn(rem[col]) != 0) return std::nullopt;
      ++col;
    }
    if (col == h.cols()) break;
    if (!mpz_divisible_p(rem[col].get_mpz_t(), h(i, col).get_mpz_t())) return std::nullopt;
    Integer q = rem[col] / h(i, col);
    coords[i] = q;
    for (std::size_t j = col; j < h.cols(); ++j) rem[j] -= q * h(i, j);
    ++col;
  }
  for (const auto& x : rem)
    if (sgn(x) != 0) return std::nullopt;
  return coords;
}

QuotientStructure lattice_quotient(const IntMatrix& s_gens, const IntMatrix& r_gens) {
  IntMatrix s = hermite_form(s_gens);
  IntMatrix coords(0, s.rows());
  for (std::size_t i = 0; i < r_gens.rows(); ++i) {
    auto c = lattice_coordinates(s, r_gens.row(i));
    if (!c) throw std::invalid_argument("lattice_quotient: R is not contained in S");
    coords.append_row(*c);
  }
  QuotientStructure q;
  std::vector<Integer> inv = coords.rows() ? smith_invariants(coords) : std::vector<Integer>{};
  q.free_rank = s.rows() - inv.size();
  for (const auto& d : inv)
    if (d > 1) q.torsion.push_back(d);
  return q;
}

}  // namespace caspr
