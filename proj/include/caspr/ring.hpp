#pragma once
// Exact arithmetic in K = Q(sqrt(-3), sqrt(-5)) on the basis (1, xi, lam, lam*xi),
// with xi = exp(i*pi/3) and lam = 4 + sqrt(15).

#include <array>
#include <complex>
#include <cstdint>
#include <ostream>
#include <string>
#include <gmpxx.h>

namespace caspr {

using Rational = mpq_class;
using Integer = mpz_class;
using cplx = std::complex<double>;

inline constexpr double kLambda = 7.872983346207417;  // 4 + sqrt(15)

// p + q*lam, an element of Q(sqrt 15).
class RealQuadratic {
public:
  RealQuadratic() = default;
  RealQuadratic(Rational p, Rational q = 0) : p_(std::move(p)), q_(std::move(q)) {}
  RealQuadratic(long p) : p_(p), q_(0) {}

  const Rational& p() const { return p_; }
  const Rational& q() const { return q_; }

  RealQuadratic operator+(const RealQuadratic& o) const { return {p_ + o.p_, q_ + o.q_}; }
  RealQuadratic operator-(const RealQuadratic& o) const { return {p_ - o.p_, q_ - o.q_}; }
  RealQuadratic operator-() const { return {-p_, -q_}; }
  RealQuadratic operator*(const RealQuadratic& o) const;
  RealQuadratic operator/(const RealQuadratic& o) const;
  RealQuadratic& operator+=(const RealQuadratic& o) { return *this = *this + o; }
  RealQuadratic& operator-=(const RealQuadratic& o) { return *this = *this - o; }
  RealQuadratic& operator*=(const RealQuadratic& o) { return *this = *this * o; }
  RealQuadratic& operator/=(const RealQuadratic& o) { return *this = *this / o; }
  bool operator==(const RealQuadratic& o) const { return p_ == o.p_ && q_ == o.q_; }
  bool operator!=(const RealQuadratic& o) const { return !(*this == o); }

  // lam -> 8 - lam
  RealQuadratic galois() const { return {p_ + 8 * q_, -q_}; }
  Rational norm() const { return p_ * p_ + 8 * p_ * q_ + q_ * q_; }
  Rational trace() const { return 2 * p_ + 8 * q_; }
  RealQuadratic inverse() const;
  bool is_zero() const { return sgn(p_) == 0 && sgn(q_) == 0; }
  // exact sign of p + q*(4 + sqrt 15)
  int sign() const;
  bool is_rational() const { return sgn(q_) == 0; }
  double to_double() const { return p_.get_d() + q_.get_d() * kLambda; }
  std::string str() const;

  static RealQuadratic lambda() { return {0, 1}; }

private:
  Rational p_{0}, q_{0};
};

std::ostream& operator<<(std::ostream& os, const RealQuadratic& x);

class RingElement {
public:
  RingElement() : c_{0, 0, 0, 0} {}
  RingElement(long a0, long a1, long a2, long a3) : c_{a0, a1, a2, a3} {}
  RingElement(const Rational& a0, const Rational& a1, const Rational& a2, const Rational& a3)
      : c_{a0, a1, a2, a3} {}
  explicit RingElement(const std::array<Rational, 4>& c) : c_(c) {}
  static RingElement from_int(long n) { return {n, 0, 0, 0}; }
  static RingElement from_real(const RealQuadratic& r) { return {r.p(), 0, r.q(), 0}; }

  const Rational& operator[](int i) const { return c_[i]; }
  const std::array<Rational, 4>& coords() const { return c_; }

  RingElement operator+(const RingElement& o) const;
  RingElement operator-(const RingElement& o) const;
  RingElement operator-() const;
  RingElement operator*(const RingElement& o) const;
  RingElement operator*(const Rational& s) const;
  RingElement operator/(const Rational& s) const;
  RingElement operator/(const RingElement& o) const { return *this * o.inverse(); }
  RingElement& operator+=(const RingElement& o) { return *this = *this + o; }
  RingElement& operator-=(const RingElement& o) { return *this = *this - o; }
  RingElement& operator*=(const RingElement& o) { return *this = *this * o; }
  bool operator==(const RingElement& o) const { return c_ == o.c_; }
  bool operator!=(const RingElement& o) const { return !(c_ == o.c_); }
  bool operator<(const RingElement& o) const;

  // complex conjugation: xi -> 1 - xi, lam fixed
  RingElement conj() const;
  // Galois map for internal space: xi -> 1 - xi, lam -> 8 - lam
  RingElement star() const;
  // lam -> 8 - lam with xi fixed (= conj o star)
  RingElement sigma() const;

  cplx embed() const;
  cplx embed_internal() const { return star().embed(); }

  // field norm N(z) = z zbar z' zbar'
  Rational norm() const;
  RingElement inverse() const;
  // z * conj(z), a real element
  RealQuadratic abs2() const;
  bool is_real() const { return sgn(c_[1]) == 0 && sgn(c_[3]) == 0; }
  RealQuadratic real_part_as_quadratic() const;  // requires is_real()

  bool is_integral() const;
  bool is_zero() const;
  // least common multiple of coordinate denominators
  Integer denominator() const;
  std::string str() const;

private:
  std::array<Rational, 4> c_;
};

std::ostream& operator<<(std::ostream& os, const RingElement& x);

inline RingElement operator*(const Rational& s, const RingElement& x) { return x * s; }

// Frequently used constants.
RingElement xi();
RingElement lam();
RingElement xi_pow(int m);
RingElement i_sqrt3();  // 2xi - 1
RingElement i_sqrt5();  // (2xi - 1)(lam - 4)/3
// Half-step multiplier mu = (xi - lam + lam*xi)/3 with |mu|^2 = lam.
RingElement mu();

// x.y = Re(conj(x) y) as an element of Q(sqrt 15)
RealQuadratic pairing(const RingElement& x, const RingElement& y);
// pairing + its conjugate: the rational bilinear form used for duality
Rational trace_form(const RingElement& x, const RingElement& y);
// absolute trace Tr_{K/Q}
Rational field_trace(const RingElement& x);

}  // namespace caspr
