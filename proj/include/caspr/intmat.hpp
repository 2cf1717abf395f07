#pragma once
// Dense integer matrices over GMP integers: Hermite and Smith normal forms,
// integer kernels and lattice coordinates.

#include <optional>
#include <vector>
#include <gmpxx.h>

namespace caspr {

using Integer = mpz_class;

class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), d_(rows * cols, 0) {}
  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  Integer& operator()(std::size_t i, std::size_t j) { return d_[i * c_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return d_[i * c_ + j]; }

  IntMatrix operator*(const IntMatrix& o) const;
  bool operator==(const IntMatrix& o) const { return r_ == o.r_ && c_ == o.c_ && d_ == o.d_; }
  bool operator!=(const IntMatrix& o) const { return !(*this == o); }

  std::vector<Integer> row(std::size_t i) const;
  void append_row(const std::vector<Integer>& v);
  IntMatrix stacked(const IntMatrix& below) const;
  IntMatrix transposed() const;
  IntMatrix select_rows(const std::vector<std::size_t>& idx) const;
  bool is_zero() const;

private:
  std::size_t r_ = 0, c_ = 0;
  std::vector<Integer> d_;
};

// Row-style Hermite normal form of the row lattice: nonzero rows only, strictly
// increasing pivot columns, positive pivots, entries above each pivot reduced
// into [0, pivot).
IntMatrix hermite_form(const IntMatrix& a);

struct HermiteWithTransform {
  IntMatrix h;  // full height, zero rows last
  IntMatrix u;  // unimodular, u * a == h
  std::size_t rank = 0;
};
HermiteWithTransform hermite_with_transform(const IntMatrix& a);

// Basis of {x integer row : x * a == 0}; the basis is saturated.
IntMatrix integer_left_kernel(const IntMatrix& a);

// Nonzero invariant factors d1 | d2 | ... of the Smith normal form.
std::vector<Integer> smith_invariants(const IntMatrix& a);

std::size_t integer_rank(const IntMatrix& a);

// Coordinates of v in the row lattice of an echelon basis h (as produced by
// hermite_form), or nullopt if v is not in the lattice.
std::optional<std::vector<Integer>> lattice_coordinates(const IntMatrix& h,
                                                        const std::vector<Integer>& v);

// Structure of the quotient S/R for lattices R subset S (given by generators):
// free rank and torsion invariant factors (> 1). Throws if R is not inside S.
struct QuotientStructure {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;
  bool operator==(const QuotientStructure& o) const {
    return free_rank == o.free_rank && torsion == o.torsion;
  }
};
QuotientStructure lattice_quotient(const IntMatrix& s_gens, const IntMatrix& r_gens);

}  // namespace caspr
