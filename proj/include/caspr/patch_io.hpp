#pragma once
// Versioned plain-text patch files with a byte-stable record order.
//
//   caspr-patch 1
//   parity 0
//   handedness right
//   projection caspr
//   seed Gamma
//   steps 4
//   count 3409
//   <tile> <rot> <R|L> <a0> <a1> <a2> <a3> <den>
//
// Positions are coordinates on the basis (1, xi, lam, lam*xi) over a common
// denominator, which is 1 for every generated patch.

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "caspr/inflation.hpp"

namespace caspr {

struct DataFileError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr int kPatchFormatVersion = 1;

void write_patch(std::ostream& os, const Patch& p);  // canonical order
Patch read_patch(std::istream& is);                   // throws DataFileError
void save_patch(const std::string& path, const Patch& p);
Patch load_patch(const std::string& path);

}  // namespace caspr
