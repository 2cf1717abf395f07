#pragma once
// Deterministic random streams: std::mt19937_64 seeded through std::seed_seq
// from (seed, stream), with a fixed bits-to-double conversion so sequences are
// identical across standard libraries.

#include <cstdint>
#include <random>

namespace caspr {

class Rng {
public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    gen_.seed(seq);
  }
  std::uint64_t next() { return gen_(); }
  // uniform in [0, 1)
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }
  // uniform integer in [0, n)
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do x = gen_();
    while (x >= limit);
    return x % n;
  }

private:
  std::mt19937_64 gen_;
};

}  // namespace caspr
