#include "caspr/ring.hpp"

#include <sstream>
#include <stdexcept>

namespace caspr {

namespace {
// (p0 + p1 lam)(q0 + q1 lam) with lam^2 = 8 lam - 1
inline void lam_mul(const Rational& p0, const Rational& p1, const Rational& q0,
                    const Rational& q1, Rational& r0, Rational& r1) {
  Rational t = p1 * q1;
  r0 = p0 * q0 - t;
  r1 = p0 * q1 + p1 * q0 + 8 * t;
}
}  // namespace

RealQuadratic RealQuadratic::operator*(const RealQuadratic& o) const {
  Rational r0, r1;
  lam_mul(p_, q_, o.p_, o.q_, r0, r1);
  return {r0, r1};
}

RealQuadratic RealQuadratic::inverse() const {
  Rational n = norm();
  if (sgn(n) == 0) throw std::domain_error("RealQuadratic: inverse of zero");
  RealQuadratic g = galois();
  return {g.p() / n, g.q() / n};
}

RealQuadratic RealQuadratic::operator/(const RealQuadratic& o) const { return *this * o.inverse(); }

int RealQuadratic::sign() const {
  // p + q lam = (p + 4q) + q sqrt(15)
  Rational a = p_ + 4 * q_;
  int sa = sgn(a), sq = sgn(q_);
  if (sq == 0) return sa;
  if (sa == 0 || sa == sq) return sq;
  Rational lhs = a * a, rhs = 15 * q_ * q_;
  if (lhs == rhs) return 0;  // cannot happen for rationals, kept for clarity
  return lhs > rhs ? sa : sq;
}

std::string RealQuadratic::str() const {
  std::ostringstream os;
  if (sgn(q_) == 0) {
    os << p_.get_str();
  } else if (sgn(p_) == 0) {
    os << q_.get_str() << "*lam";
  } else {
    os << p_.get_str() << (sgn(q_) > 0 ? " + " : " - ") << Rational(abs(q_)).get_str() << "*lam";
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const RealQuadratic& x) { return os << x.str(); }

RingElement RingElement::operator+(const RingElement& o) const {
  return {c_[0] + o.c_[0], c_[1] + o.c_[1], c_[2] + o.c_[2], c_[3] + o.c_[3]};
}
RingElement RingElement::operator-(const RingElement& o) const {
  return {c_[0] - o.c_[0], c_[1] - o.c_[1], c_[2] - o.c_[2], c_[3] - o.c_[3]};
}
RingElement RingElement::operator-() const { return {-c_[0], -c_[1], -c_[2], -c_[3]}; }

RingElement RingElement::operator*(const RingElement& o) const {
  // (A0 + A1 xi)(B0 + B1 xi) with A_i, B_i in Q(lam) and xi^2 = xi - 1
  Rational c00, c01, a, b, c, d, c20, c21;
  lam_mul(c_[0], c_[2], o.c_[0], o.c_[2], c00, c01);
  lam_mul(c_[0], c_[2], o.c_[1], o.c_[3], a, b);
  lam_mul(c_[1], c_[3], o.c_[0], o.c_[2], c, d);
  lam_mul(c_[1], c_[3], o.c_[1], o.c_[3], c20, c21);
  Rational c10 = a + c, c11 = b + d;
  return {c00 - c20, c10 + c20, c01 - c21, c11 + c21};
}

RingElement RingElement::operator*(const Rational& s) const {
  return {c_[0] * s, c_[1] * s, c_[2] * s, c_[3] * s};
}
RingElement RingElement::operator/(const Rational& s) const {
  return {c_[0] / s, c_[1] / s, c_[2] / s, c_[3] / s};
}

bool RingElement::operator<(const RingElement& o) const {
  for (int i = 0; i < 4; ++i) {
    int c = cmp(c_[i], o.c_[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

RingElement RingElement::conj() const {
  return {c_[0] + c_[1], -c_[1], c_[2] + c_[3], -c_[3]};
}

RingElement RingElement::star() const {
  return {c_[0] + c_[1] + 8 * c_[2] + 8 * c_[3], -c_[1] - 8 * c_[3], -c_[2] - c_[3], c_[3]};
}

RingElement RingElement::sigma() const {
  return {c_[0] + 8 * c_[2], c_[1] + 8 * c_[3], -c_[2], -c_[3]};
}

cplx RingElement::embed() const {
  const cplx x(0.5, 0.8660254037844386);
  double a0 = c_[0].get_d(), a1 = c_[1].get_d(), a2 = c_[2].get_d(), a3 = c_[3].get_d();
  return cplx(a0 + a2 * kLambda, 0.0) + (a1 + a3 * kLambda) * x;
}

RealQuadratic RingElement::abs2() const { return (*this * conj()).real_part_as_quadratic(); }

RealQuadratic RingElement::real_part_as_quadratic() const {
  if (!is_real()) throw std::domain_error("RingElement: element is not real");
  return {c_[0], c_[2]};
}

Rational RingElement::norm() const { return abs2().norm(); }

RingElement RingElement::inverse() const {
  RealQuadratic n = abs2();
  if (n.is_zero()) throw std::domain_error("RingElement: inverse of zero");
  return conj() * from_real(n.inverse());
}

bool RingElement::is_integral() const {
  for (const auto& v : c_)
    if (v.get_den() != 1) return false;
  return true;
}

bool RingElement::is_zero() const {
  for (const auto& v : c_)
    if (sgn(v) != 0) return false;
  return true;
}

Integer RingElement::denominator() const {
  Integer d = 1;
  for (const auto& v : c_) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), v.get_den_mpz_t());
  return d;
}

std::string RingElement::str() const {
  std::ostringstream os;
  os << "(" << c_[0].get_str() << ", " << c_[1].get_str() << ", " << c_[2].get_str() << ", "
     << c_[3].get_str() << ")";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const RingElement& x) { return os << x.str(); }

RingElement xi() { return {0, 1, 0, 0}; }
RingElement lam() { return {0, 0, 1, 0}; }

RingElement xi_pow(int m) {
  static const RingElement table[6] = {
      {1, 0, 0, 0}, {0, 1, 0, 0}, {-1, 1, 0, 0}, {-1, 0, 0, 0}, {0, -1, 0, 0}, {1, -1, 0, 0}};
  return table[((m % 6) + 6) % 6];
}

RingElement i_sqrt3() { return {-1, 2, 0, 0}; }
RingElement i_sqrt5() { return i_sqrt3() * RingElement(-4, 0, 1, 0) / Rational(3); }
RingElement mu() { return RingElement(0, 1, -1, 1) / Rational(3); }

RealQuadratic pairing(const RingElement& x, const RingElement& y) {
  RingElement s = x.conj() * y + x * y.conj();
  return (s / Rational(2)).real_part_as_quadratic();
}

Rational trace_form(const RingElement& x, const RingElement& y) { return pairing(x, y).trace(); }

Rational field_trace(const RingElement& x) {
  return 4 * x[0] + 2 * x[1] + 16 * x[2] + 8 * x[3];
}

}  // namespace caspr
