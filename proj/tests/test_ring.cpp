#include <cmath>
#include <complex>
#include <random>

#include "caspr/cyclotomic.hpp"
#include "caspr/ring.hpp"
#include "doctest.h"

using namespace caspr;
using C = std::complex<double>;

namespace {

// floating-point oracle: xi = exp(i pi / 3), lam = 4 + sqrt 15; the internal
// map sends xi to its conjugate and lam to 4 - sqrt 15
const C kXi = std::polar(1.0, M_PI / 3);
const double kLam = 4 + std::sqrt(15.0);
const double kLamStar = 4 - std::sqrt(15.0);

C oracle(const RingElement& x, bool internal = false) {
  const C xi = internal ? std::conj(kXi) : kXi;
  const double l = internal ? kLamStar : kLam;
  return x[0].get_d() + x[1].get_d() * xi + x[2].get_d() * l + x[3].get_d() * l * xi;
}

RingElement random_element(std::mt19937& g) {
  std::uniform_int_distribution<long> d(-20, 20);
  return {d(g), d(g), d(g), d(g)};
}

}  // namespace

TEST_CASE("defining relations of xi and lambda") {
  CHECK(xi() * xi() == xi() - RingElement::from_int(1));
  CHECK(lam() * lam() == lam() * Rational(8) - RingElement::from_int(1));
  CHECK(xi_pow(6) == RingElement::from_int(1));
  CHECK(xi_pow(3) == RingElement::from_int(-1));
  CHECK(xi_pow(-1) == xi_pow(5));
}

TEST_CASE("multiplication agrees with complex arithmetic") {
  std::mt19937 g(11);
  for (int i = 0; i < 200; ++i) {
    const RingElement a = random_element(g), b = random_element(g);
    CHECK(std::abs((a * b).embed() - oracle(a) * oracle(b)) < 1e-9 * (1 + std::abs(oracle(a) * oracle(b))));
    CHECK(std::abs((a + b).embed() - (oracle(a) + oracle(b))) < 1e-9);
    CHECK(std::abs((a * b).embed_internal() - oracle(a, true) * oracle(b, true)) < 1e-6);
  }
}

TEST_CASE("conjugations") {
  std::mt19937 g(12);
  for (int i = 0; i < 100; ++i) {
    const RingElement a = random_element(g);
    CHECK(std::abs(a.conj().embed() - std::conj(oracle(a))) < 1e-9);
    CHECK(std::abs(a.embed_internal() - oracle(a, true)) < 1e-9);
    CHECK(a.star().star() == a);
    CHECK(a.sigma() == a.conj().star());
  }
}

TEST_CASE("norm, inverse and abs2") {
  std::mt19937 g(13);
  for (int i = 0; i < 50; ++i) {
    const RingElement a = random_element(g), b = random_element(g);
    if (a.is_zero() || b.is_zero()) continue;
    CHECK((a * b).norm() == a.norm() * b.norm());
    CHECK(a * a.inverse() == RingElement::from_int(1));
    const double n = std::norm(oracle(a)) * std::norm(oracle(a, true));
    CHECK(std::abs(a.norm().get_d() - n) < 1e-6 * (1 + n));
    CHECK(std::abs(a.abs2().to_double() - std::norm(oracle(a))) < 1e-7 * (1 + std::norm(oracle(a))));
  }
}

TEST_CASE("special elements") {
  CHECK(i_sqrt3() * i_sqrt3() == RingElement::from_int(-3));
  CHECK(i_sqrt5() * i_sqrt5() == RingElement::from_int(-5));
  // |mu|^2 = lam exactly
  CHECK(mu().abs2() == RealQuadratic(0, 1));
  CHECK(std::abs(std::abs(mu().embed()) - std::sqrt(kLam)) < 1e-12);
}

TEST_CASE("RealQuadratic sign is exact near zero") {
  // 4 + sqrt 15 - 7.872983346207417 is tiny but positive or negative; compare
  // with the sign of a large multiple computed through the conjugate
  const RealQuadratic a(-8, 1);  // lam - 8 < 0
  CHECK(a.sign() < 0);
  const RealQuadratic b(-7, 1);  // lam - 7 > 0
  CHECK(b.sign() > 0);
  // 31 - 4 lam = 31 - 16 - 4 sqrt 15 = 15 - 4 sqrt 15 < 0 since 225 < 240
  CHECK(RealQuadratic(31, -4).sign() < 0);
  CHECK(RealQuadratic(0).sign() == 0);
  CHECK((RealQuadratic(3, 2) * RealQuadratic(3, 2).inverse()) == RealQuadratic(1));
}

TEST_CASE("trace form equals twice the real part of the four-dimensional inner product") {
  std::mt19937 g(14);
  for (int i = 0; i < 50; ++i) {
    const RingElement a = random_element(g), b = random_element(g);
    const double ip = std::real(std::conj(oracle(a)) * oracle(b)) + std::real(std::conj(oracle(a, true)) * oracle(b, true));
    CHECK(std::abs(trace_form(a, b).get_d() - ip) < 1e-6 * (1 + std::abs(ip)));
  }
}

TEST_CASE("cyclotomic field arithmetic") {
  const CycQ x = CycQ::xi_power(1);
  CHECK(x * x == x - CycQ(1));
  CHECK(CycQ::xi_power(6) == CycQ(1));
  CHECK(std::abs(x.to_complex() - kXi) < 1e-15);
  const CycQ a(mpq_class(3, 7), mpq_class(-2, 5));
  CHECK(a * a.inverse() == CycQ(1));
  CHECK(std::abs(a.conj().to_complex() - std::conj(a.to_complex())) < 1e-15);
}

TEST_CASE("integrality and parsing of elements") {
  CHECK(RingElement(1, 2, 3, 4).is_integral());
  CHECK_FALSE(mu().is_integral());
  CHECK(mu() * Rational(3) == RingElement(0, 1, -1, 1));
  CHECK(RingElement(Rational(1, 2), 0, 0, 0).denominator() == 2);
}
