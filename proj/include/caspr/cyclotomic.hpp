#pragma once
// Exact arithmetic in Q(xi), xi = exp(i*pi/3), with xi^2 = xi - 1. Every
// evaluation r -> xi^k of a group-ring element lands here; for k = 0, 3 the
// values are rational and for k = 2, 4 they lie in Q(xi^2) = Q(xi).

#include <complex>
#include <string>
#include <gmpxx.h>

namespace caspr {

class CycQ {
public:
  CycQ() : a_(0), b_(0) {}
  CycQ(long a) : a_(a), b_(0) {}
  CycQ(mpq_class a, mpq_class b = 0) : a_(std::move(a)), b_(std::move(b)) {}
  static CycQ xi_power(int k);

  const mpq_class& a() const { return a_; }
  const mpq_class& b() const { return b_; }

  CycQ operator+(const CycQ& o) const { return {a_ + o.a_, b_ + o.b_}; }
  CycQ operator-(const CycQ& o) const { return {a_ - o.a_, b_ - o.b_}; }
  CycQ operator-() const { return {-a_, -b_}; }
  CycQ operator*(const CycQ& o) const;
  CycQ operator/(const CycQ& o) const { return *this * o.inverse(); }
  CycQ& operator+=(const CycQ& o) { a_ += o.a_; b_ += o.b_; return *this; }
  CycQ& operator-=(const CycQ& o) { a_ -= o.a_; b_ -= o.b_; return *this; }
  CycQ& operator*=(const CycQ& o) { return *this = *this * o; }
  CycQ& operator/=(const CycQ& o) { return *this = *this / o; }
  bool operator==(const CycQ& o) const { return a_ == o.a_ && b_ == o.b_; }
  bool operator!=(const CycQ& o) const { return !(*this == o); }

  CycQ conj() const { return {a_ + b_, -b_}; }
  mpq_class norm() const { return a_ * a_ + a_ * b_ + b_ * b_; }
  CycQ inverse() const;
  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_rational() const { return sgn(b_) == 0; }
  std::complex<double> to_complex() const;
  std::string str() const;

private:
  mpq_class a_, b_;
};

}  // namespace caspr
