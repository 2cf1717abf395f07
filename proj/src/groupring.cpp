#include "caspr/groupring.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace caspr {

int orbit_size(OrbitKind k) {
  switch (k) {
    case OrbitKind::Free6: return 6;
    case OrbitKind::Negacyclic3: return 3;
    case OrbitKind::Swap2: return 2;
  }
  return 6;
}

GRPoly GRPoly::monomial(int deg, long coeff) {
  GRPoly p;
  p.c_[((deg % 6) + 6) % 6] = coeff;
  return p;
}

GRPoly GRPoly::parse(const std::string& text) {
  GRPoly p;
  std::string s;
  for (char ch : text)
    if (ch != ' ') s += ch;
  if (s.empty()) throw std::invalid_argument("GRPoly: empty entry");
  std::size_t i = 0;
  while (i < s.size()) {
    long sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    }
    long coeff = 1;
    std::size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) {
      coeff = std::stol(s.substr(i, j - i));
      i = j;
    }
    int deg = 0;
    if (i < s.size() && s[i] == 'r') {
      ++i;
      deg = 1;
      std::size_t k = i;
      while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
      if (k > i) deg = std::stoi(s.substr(i, k - i));
      i = k;
    }
    if (i < s.size() && s[i] != '+' && s[i] != '-')
      throw std::invalid_argument("GRPoly: cannot parse '" + text + "'");
    p.c_[deg % 6] += sign * coeff;
  }
  return p;
}

GRPoly GRPoly::operator+(const GRPoly& o) const {
  GRPoly p;
  for (int d = 0; d < 6; ++d) p.c_[d] = c_[d] + o.c_[d];
  return p;
}
GRPoly GRPoly::operator-(const GRPoly& o) const {
  GRPoly p;
  for (int d = 0; d < 6; ++d) p.c_[d] = c_[d] - o.c_[d];
  return p;
}
GRPoly GRPoly::operator-() const {
  GRPoly p;
  for (int d = 0; d < 6; ++d) p.c_[d] = -c_[d];
  return p;
}
GRPoly GRPoly::operator*(const GRPoly& o) const {
  GRPoly p;
  for (int a = 0; a < 6; ++a) {
    if (sgn(c_[a]) == 0) continue;
    for (int b = 0; b < 6; ++b)
      if (sgn(o.c_[b]) != 0) p.c_[(a + b) % 6] += c_[a] * o.c_[b];
  }
  return p;
}

GRPoly GRPoly::conj() const {
  GRPoly p;
  for (int d = 0; d < 6; ++d) p.c_[(6 - d) % 6] = c_[d];
  return p;
}

GRPoly GRPoly::reduced(OrbitKind k) const {
  GRPoly p;
  switch (k) {
    case OrbitKind::Free6: return *this;
    case OrbitKind::Negacyclic3:
      for (int d = 0; d < 6; ++d) {
        if (d < 3) p.c_[d] += c_[d];
        else p.c_[d - 3] -= c_[d];
      }
      return p;
    case OrbitKind::Swap2:
      for (int d = 0; d < 6; ++d) p.c_[d % 2] += c_[d];
      return p;
  }
  return p;
}

bool GRPoly::is_zero() const {
  for (const auto& x : c_)
    if (sgn(x) != 0) return false;
  return true;
}

CycQ GRPoly::evaluate(int k) const {
  CycQ v;
  for (int d = 0; d < 6; ++d)
    if (sgn(c_[d]) != 0) v += CycQ(mpq_class(c_[d])) * CycQ::xi_power(d * k);
  return v;
}

std::string GRPoly::str() const {
  std::ostringstream os;
  bool first = true;
  for (int d = 0; d < 6; ++d) {
    if (sgn(c_[d]) == 0) continue;
    Integer a = abs(c_[d]);
    if (sgn(c_[d]) < 0) os << "-";
    else if (!first) os << "+";
    if (d == 0) os << a.get_str();
    else {
      if (a != 1) os << a.get_str();
      os << "r";
      if (d > 1) os << d;
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

GroupRingMatrix::GroupRingMatrix(std::vector<OrbitLabel> rows, std::vector<OrbitLabel> cols)
    : rl_(std::move(rows)), cl_(std::move(cols)), d_(rl_.size() * cl_.size()) {}

GroupRingMatrix GroupRingMatrix::parse(std::vector<OrbitLabel> rows, std::vector<OrbitLabel> cols,
                                       const std::vector<std::string>& text) {
  GroupRingMatrix m(std::move(rows), std::move(cols));
  if (text.size() != m.rows()) throw std::invalid_argument("GroupRingMatrix: wrong row count");
  for (std::size_t i = 0; i < text.size(); ++i) {
    std::istringstream is(text[i]);
    std::string tok;
    std::size_t j = 0;
    while (is >> tok) {
      if (j >= m.cols()) throw std::invalid_argument("GroupRingMatrix: too many entries");
      m(i, j++) = GRPoly::parse(tok);
    }
    if (j != m.cols()) throw std::invalid_argument("GroupRingMatrix: too few entries");
  }
  return m;
}

GroupRingMatrix GroupRingMatrix::operator*(const GroupRingMatrix& o) const {
  if (cols() != o.rows()) throw std::invalid_argument("GroupRingMatrix: shape mismatch");
  for (std::size_t k = 0; k < cols(); ++k)
    if (cl_[k].kind != o.rl_[k].kind) throw std::invalid_argument("GroupRingMatrix: orbit mismatch");
  GroupRingMatrix p(rl_, o.cl_);
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < o.cols(); ++j) {
      GRPoly s;
      for (std::size_t k = 0; k < cols(); ++k) s += (*this)(i, k) * o(k, j);
      p(i, j) = s.reduced(rl_[i].kind);
    }
  return p;
}

GroupRingMatrix GroupRingMatrix::operator-() const {
  GroupRingMatrix m = *this;
  for (auto& x : m.d_) x = -x;
  return m;
}

GroupRingMatrix GroupRingMatrix::conj() const {
  GroupRingMatrix m = *this;
  for (auto& x : m.d_) x = x.conj();
  return m.reduced();
}

GroupRingMatrix GroupRingMatrix::reduced() const {
  GroupRingMatrix m = *this;
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols(); ++j) m(i, j) = m(i, j).reduced(rl_[i].kind);
  return m;
}

bool GroupRingMatrix::same_map(const GroupRingMatrix& o) const {
  return reduced() == o.reduced();
}

Matrix<CycQ> GroupRingMatrix::evaluate(int k) const {
  Matrix<CycQ> m(rows(), cols());
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols(); ++j) m(i, j) = (*this)(i, j).evaluate(k);
  return m;
}

namespace {
// relation polynomial annihilating the generator of an orbit module
GRPoly orbit_relation(OrbitKind k) {
  switch (k) {
    case OrbitKind::Free6: return {};
    case OrbitKind::Negacyclic3: return GRPoly::monomial(0) + GRPoly::monomial(3);
    case OrbitKind::Swap2: return GRPoly::monomial(0) - GRPoly::monomial(2);
  }
  return {};
}
}  // namespace

bool GroupRingMatrix::is_well_defined() const {
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols(); ++j) {
      if (cl_[j].kind == OrbitKind::Free6) continue;
      GRPoly rel = orbit_relation(cl_[j].kind) * (*this)(i, j);
      if (!rel.reduced(rl_[i].kind).is_zero()) return false;
    }
  return true;
}

std::vector<std::size_t> GroupRingMatrix::block_offsets(const std::vector<OrbitLabel>& labels) {
  std::vector<std::size_t> off;
  std::size_t o = 0;
  for (const auto& l : labels) {
    off.push_back(o);
    o += orbit_size(l.kind);
  }
  off.push_back(o);
  return off;
}

IntMatrix GroupRingMatrix::expand_integer() const {
  auto ro = block_offsets(rl_), co = block_offsets(cl_);
  IntMatrix m(ro.back(), co.back());
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols(); ++j) {
      const GRPoly& p = (*this)(i, j);
      if (p.is_zero()) continue;
      int cs = orbit_size(cl_[j].kind);
      for (int a = 0; a < cs; ++a) {
        // image of r^a * (source generator) in the target module
        GRPoly img = (GRPoly::monomial(a) * p).reduced(rl_[i].kind);
        for (int b = 0; b < orbit_size(rl_[i].kind); ++b) m(ro[i] + b, co[j] + a) = img[b];
      }
    }
  return m;
}

std::string GroupRingMatrix::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows(); ++i) {
    os << rl_[i].name << ":";
    for (std::size_t j = 0; j < cols(); ++j) os << " " << (*this)(i, j).str();
    os << "\n";
  }
  return os.str();
}

}  // namespace caspr
