#include "caspr/complex_data.hpp"

#include <sstream>

namespace caspr {

namespace {

const std::vector<std::string> kD1 = {
    "1    0   0    0     1  0     0    0",
    "0   -r   0    0    -r  0     1  1-r",
    "-r3 r4 1-r5 r2-r5   0  r4-r5 -r5  0",
};

const std::vector<std::string> kD2 = {
    "r3-r  -r3  0         -r3   r3     0    -r3    0      r3",
    "r2-r4 -r   -r+r2-r3  r2-r  r2-r3  r2   -r     r2-r   r2",
    "r5    r-1  -1        -1    0      0    r      -1     0",
    "1     0    0         0     0      0    -r5    0      0",
    "0     r5   0         r5    -r     r5-r r5     r5-r3  -r-r3+r5",
    "0     r2   0         0     0      0    -1     0      0",
    "0     0    -r2       r     -r2    r    0      0      0",
    "0     0    r         0     r      0    0      r      r",
};

const std::vector<std::string> kM1 = {
    "0   -r5 0     r2    0         -r5 0           0",
    "-r5 0   r2    r     0         0   0           0",
    "0   0   0     0     0         0   0           0",
    "0   0   0     0     0         0   0           0",
    "r2  r   r-r5  -r4   r+r2-r5   r   r+r2-r4-r5  r+r2-r4-r5",
    "0   0   0     0     0         0   0           0",
    "0   0   r2    r2-r5 0         r2  r2          0",
    "r3  0   -1    0     -1        0   -1          r3",
};

const std::vector<std::string> kM2 = {
    "1  1     1    1   1    1    1     1     1",
    "r5 r5    r5   r5  r5   r5   r5    r5    r5",
    "1  0     0    0   0    0    0     0     0",
    "0  0     0    0   0    0    r2    0     0",
    "r  r4+r5 0    r5  0    r5   r4+r5 0     0",
    "r4 r     r+r5 r   r5   0    r     r     0",
    "r  r     r    r   r    r    r     r     r",
    "r2 1+r2  1+r2 1+r2 1+r2 1+r2 1    1+r2  1+r2",
    "0  0     r4   r4  r+r4 r+r4 0     r4+r5 r+r4+r5",
};

}  // namespace

const std::vector<OrbitLabel>& vertex_labels() {
  static const std::vector<OrbitLabel> v = {
      {"p", OrbitKind::Swap2}, {"q", OrbitKind::Swap2}, {"s", OrbitKind::Free6}};
  return v;
}

const std::vector<std::string>& edge_names() {
  static const std::vector<std::string> v = {"alpha", "beta", "gamma", "delta",
                                             "epsilon", "zeta", "theta", "eta"};
  return v;
}

const std::vector<std::string>& tile_names() {
  static const std::vector<std::string> v = {"Gamma", "Delta", "Theta", "Lambda", "Xi",
                                             "Pi",    "Sigma", "Phi",   "Psi"};
  return v;
}

const std::vector<std::string>& tile_symbols() {
  static const std::vector<std::string> v = {"G", "D", "Q", "L", "X", "P", "S", "F", "Y"};
  return v;
}

const std::vector<OrbitLabel>& edge_labels() {
  static const std::vector<OrbitLabel> v = [] {
    std::vector<OrbitLabel> out;
    for (int i = 0; i < kNumEdgeTypes; ++i)
      out.push_back({edge_names()[i], i == kEta ? OrbitKind::Negacyclic3 : OrbitKind::Free6});
    return out;
  }();
  return v;
}

const std::vector<OrbitLabel>& face_labels() {
  static const std::vector<OrbitLabel> v = [] {
    std::vector<OrbitLabel> out;
    for (const auto& n : tile_names()) out.push_back({n, OrbitKind::Free6});
    return out;
  }();
  return v;
}

const GroupRingMatrix& boundary1() {
  static const GroupRingMatrix m = GroupRingMatrix::parse(vertex_labels(), edge_labels(), kD1);
  return m;
}

GroupRingMatrix boundary1_wrong_delta() {
  GroupRingMatrix m = boundary1();
  m(2, 3) = GRPoly::parse("r2-r4");
  return m;
}

const GroupRingMatrix& boundary2() {
  static const GroupRingMatrix m = GroupRingMatrix::parse(edge_labels(), face_labels(), kD2);
  return m;
}

const GroupRingMatrix& edge_substitution() {
  static const GroupRingMatrix m = GroupRingMatrix::parse(edge_labels(), edge_labels(), kM1);
  return m;
}

const GroupRingMatrix& face_substitution() {
  static const GroupRingMatrix m = GroupRingMatrix::parse(face_labels(), face_labels(), kM2);
  return m;
}

const std::vector<std::string>& constants_text() {
  static const std::vector<std::string> all = [] {
    std::vector<std::string> v;
    for (const auto* block : {&kD1, &kD2, &kM1, &kM2}) v.insert(v.end(), block->begin(), block->end());
    return v;
  }();
  return all;
}

std::uint64_t constants_fingerprint() {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](unsigned char ch) {
    h ^= ch;
    h *= 1099511628211ULL;
  };
  for (const auto& line : constants_text()) {
    std::istringstream is(line);
    std::string tok;
    while (is >> tok) {
      for (unsigned char ch : tok) mix(ch);
      mix('|');
    }
    mix('\n');
  }
  return h;
}

}  // namespace caspr
