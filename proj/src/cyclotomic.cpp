#include "caspr/cyclotomic.hpp"

#include <sstream>
#include <stdexcept>

namespace caspr {

CycQ CycQ::xi_power(int k) {
  switch (((k % 6) + 6) % 6) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 1};
    case 3: return {-1, 0};
    case 4: return {0, -1};
    default: return {1, -1};
  }
}

CycQ CycQ::operator*(const CycQ& o) const {
  // (a + b xi)(c + d xi) = ac - bd + (ad + bc + bd) xi
  mpq_class bd = b_ * o.b_;
  return {a_ * o.a_ - bd, a_ * o.b_ + b_ * o.a_ + bd};
}

CycQ CycQ::inverse() const {
  mpq_class n = norm();
  if (sgn(n) == 0) throw std::domain_error("CycQ: inverse of zero");
  CycQ c = conj();
  return {c.a_ / n, c.b_ / n};
}

std::complex<double> CycQ::to_complex() const {
  return {a_.get_d() + 0.5 * b_.get_d(), 0.8660254037844386 * b_.get_d()};
}

std::string CycQ::str() const {
  std::ostringstream os;
  if (sgn(b_) == 0) {
    os << a_.get_str();
  } else if (sgn(a_) == 0) {
    os << b_.get_str() << "*xi";
  } else {
    os << a_.get_str() << (sgn(b_) > 0 ? "+" : "-") << mpq_class(abs(b_)).get_str() << "*xi";
  }
  return os.str();
}

}  // namespace caspr
