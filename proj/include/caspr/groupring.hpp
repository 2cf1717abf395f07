#pragma once
// Matrices over the group ring Z[r]/(r^6 - 1).
//
// Rows and columns are indexed by cell orbits. A generic orbit is a free
// Z[r]-module of rank 6; the eta edge spans Z[r]/(r^3 + 1) (since r^3 eta = -eta)
// and the vertices p, q span Z[r]/(r^2 - 1). Column j, row i holds the
// coefficient of cell i in the image of cell j (column = source, row = target).

#include <array>
#include <string>
#include <vector>

#include "caspr/cyclotomic.hpp"
#include "caspr/intmat.hpp"
#include "caspr/linalg.hpp"

namespace caspr {

enum class OrbitKind { Free6, Negacyclic3, Swap2 };

int orbit_size(OrbitKind k);

struct OrbitLabel {
  std::string name;
  OrbitKind kind = OrbitKind::Free6;
  bool operator==(const OrbitLabel& o) const { return name == o.name && kind == o.kind; }
};

class GRPoly {
public:
  GRPoly() = default;
  static GRPoly monomial(int deg, long coeff = 1);
  // Parses "0", "1", "r", "-r5", "r2-r4", "1+r2", "r+r4+r5", ...
  static GRPoly parse(const std::string& s);

  const Integer& operator[](int d) const { return c_[d]; }
  Integer& operator[](int d) { return c_[d]; }

  GRPoly operator+(const GRPoly& o) const;
  GRPoly operator-(const GRPoly& o) const;
  GRPoly operator-() const;
  GRPoly operator*(const GRPoly& o) const;
  GRPoly& operator+=(const GRPoly& o) { return *this = *this + o; }
  bool operator==(const GRPoly& o) const { return c_ == o.c_; }
  bool operator!=(const GRPoly& o) const { return !(c_ == o.c_); }

  GRPoly conj() const;  // r -> r^{-1}
  GRPoly reduced(OrbitKind k) const;
  bool is_zero() const;
  CycQ evaluate(int k) const;
  std::string str() const;

private:
  std::array<Integer, 6> c_{};
};

class GroupRingMatrix {
public:
  GroupRingMatrix() = default;
  GroupRingMatrix(std::vector<OrbitLabel> rows, std::vector<OrbitLabel> cols);
  // rows of whitespace-separated entries
  static GroupRingMatrix parse(std::vector<OrbitLabel> rows, std::vector<OrbitLabel> cols,
                               const std::vector<std::string>& text);

  std::size_t rows() const { return rl_.size(); }
  std::size_t cols() const { return cl_.size(); }
  const std::vector<OrbitLabel>& row_labels() const { return rl_; }
  const std::vector<OrbitLabel>& col_labels() const { return cl_; }
  GRPoly& operator()(std::size_t i, std::size_t j) { return d_[i * cols() + j]; }
  const GRPoly& operator()(std::size_t i, std::size_t j) const { return d_[i * cols() + j]; }

  GroupRingMatrix operator*(const GroupRingMatrix& o) const;
  GroupRingMatrix operator-() const;
  GroupRingMatrix conj() const;
  // entries reduced in the module of their row orbit
  GroupRingMatrix reduced() const;
  // equality as module maps (after reduction)
  bool same_map(const GroupRingMatrix& o) const;
  bool operator==(const GroupRingMatrix& o) const { return rl_ == o.rl_ && cl_ == o.cl_ && d_ == o.d_; }

  Matrix<CycQ> evaluate(int k) const;
  // Each entry is a well-defined module map from its column orbit to its row orbit.
  bool is_well_defined() const;
  IntMatrix expand_integer() const;
  // starting offsets of each orbit block in the expanded matrix
  static std::vector<std::size_t> block_offsets(const std::vector<OrbitLabel>& labels);

  std::string str() const;

private:
  std::vector<OrbitLabel> rl_, cl_;
  std::vector<GRPoly> d_;
};

}  // namespace caspr
