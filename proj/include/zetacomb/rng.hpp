#pragma once

#include <cstdint>

namespace zetacomb {

// Deterministic 64-bit generator used by every randomized fixture, so that
// reports are reproducible bit for bit. It is the splitmix recurrence
//
//   state <- state + 0x9e3779b97f4a7c15
//   z <- state
//   z <- (z xor (z >> 30)) * 0xbf58476d1ce4e5b9
//   z <- (z xor (z >> 27)) * 0x94d049bb133111eb
//   output z xor (z >> 31)
//
// stated here as a formula on purpose: no library RNG, no platform drift.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double a, double b) { return a + (b - a) * uniform(); }

  private:
    std::uint64_t state_;
};

} // namespace zetacomb
