#pragma once

// Deterministic seeded RNG for the randomized sweeps. Bounded draws are
// hand-rolled rejection sampling on top of mt19937_64 because the standard
// distributions are implementation-defined and would break cross-platform
// reproducibility of --seed runs.

#include <cstdint>
#include <random>

namespace quartic {

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    // uniform integer in [lo, hi], inclusive
    long uniform(long lo, long hi) {
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t v;
        do {
            v = eng_();
        } while (v >= limit);
        return lo + static_cast<long>(v % span);
    }

  private:
    std::mt19937_64 eng_;
};

}  // namespace quartic
