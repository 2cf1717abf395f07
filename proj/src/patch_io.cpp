#include "caspr/patch_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "caspr/complex_data.hpp"

namespace caspr {

void write_patch(std::ostream& os, const Patch& p) {
  std::vector<Placement> tiles = p.tiles;
  std::sort(tiles.begin(), tiles.end());
  os << "caspr-patch " << kPatchFormatVersion << "\n";
  os << "parity " << p.parity << "\n";
  os << "handedness right\n";
  os << "projection " << p.projection << "\n";
  os << "seed " << (p.seed >= 0 ? tile_names()[p.seed] : std::string("none")) << "\n";
  os << "steps " << p.steps << "\n";
  os << "count " << tiles.size() << "\n";
  for (const auto& t : tiles) {
    os << tile_symbols()[t.tile] << ' ' << t.rot << ' ' << (t.hand == Hand::Right ? 'R' : 'L');
    for (auto v : t.pos) os << ' ' << v;
    os << " 1\n";
  }
}

namespace {

std::string expect_field(std::istream& is, const std::string& key) {
  std::string line;
  if (!std::getline(is, line)) throw DataFileError("patch file: missing '" + key + "' header");
  std::istringstream ls(line);
  std::string k, v;
  ls >> k >> v;
  if (k != key || v.empty()) throw DataFileError("patch file: expected '" + key + "' header, got '" + line + "'");
  return v;
}

long to_long(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    long v = std::stol(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw DataFileError("patch file: bad " + what + " '" + s + "'");
  }
}

}  // namespace

Patch read_patch(std::istream& is) {
  Patch p;
  if (to_long(expect_field(is, "caspr-patch"), "version") != kPatchFormatVersion)
    throw DataFileError("patch file: unsupported version");
  p.parity = static_cast<int>(to_long(expect_field(is, "parity"), "parity"));
  if (p.parity != 0 && p.parity != 1) throw DataFileError("patch file: parity must be 0 or 1");
  if (expect_field(is, "handedness") != "right") throw DataFileError("patch file: unsupported handedness");
  p.projection = expect_field(is, "projection");
  const std::string seed = expect_field(is, "seed");
  p.seed = seed == "none" ? -1 : tile_from_name(seed);
  if (seed != "none" && p.seed < 0) throw DataFileError("patch file: unknown seed tile '" + seed + "'");
  p.steps = static_cast<int>(to_long(expect_field(is, "steps"), "steps"));
  const long count = to_long(expect_field(is, "count"), "count");
  if (count < 0) throw DataFileError("patch file: negative count");
  p.tiles.reserve(static_cast<std::size_t>(count));
  std::string line;
  for (long i = 0; i < count; ++i) {
    if (!std::getline(is, line)) throw DataFileError("patch file: truncated after " + std::to_string(i) + " records");
    std::istringstream ls(line);
    std::string tile, hand, extra;
    long rot, den;
    Placement t;
    if (!(ls >> tile >> rot >> hand >> t.pos[0] >> t.pos[1] >> t.pos[2] >> t.pos[3] >> den) || (ls >> extra))
      throw DataFileError("patch file: malformed record '" + line + "'");
    t.tile = tile_from_name(tile);
    if (t.tile < 0) throw DataFileError("patch file: unknown tile '" + tile + "'");
    if (rot < 0 || rot > 5) throw DataFileError("patch file: rotation out of range in '" + line + "'");
    t.rot = static_cast<int>(rot);
    if (hand != "R" && hand != "L") throw DataFileError("patch file: bad handedness in '" + line + "'");
    t.hand = hand == "R" ? Hand::Right : Hand::Left;
    if (den != 1) throw DataFileError("patch file: non-integral position in '" + line + "'");
    p.tiles.push_back(t);
  }
  if (std::getline(is, line) && !line.empty()) throw DataFileError("patch file: trailing data");
  return p;
}

void save_patch(const std::string& path, const Patch& p) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw DataFileError("cannot write " + path);
  write_patch(os, p);
  if (!os) throw DataFileError("error writing " + path);
}

Patch load_patch(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw DataFileError("cannot read " + path);
  return read_patch(is);
}

}  // namespace caspr
