#pragma once

#include <cstdint>
#include <random>

namespace wsk {

// All sampling in the kernel and the test harnesses goes through this
// wrapper so that a (seed, label) pair reproduces the exact stream.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t u64() { return eng_(); }

    // uniform in [0, n)
    std::uint64_t below(std::uint64_t n) {
        std::uniform_int_distribution<std::uint64_t> d(0, n - 1);
        return d(eng_);
    }

    long long range(long long lo, long long hi) { // inclusive
        std::uniform_int_distribution<long long> d(lo, hi);
        return d(eng_);
    }

    bool coin() { return below(2) == 1; }

    // child stream for a labelled sub-task; keeps per-trial seeds reportable
    Rng fork(std::uint64_t label) {
        std::uint64_t s = eng_() ^ (0x9e3779b97f4a7c15ull * (label + 1));
        return Rng(s);
    }

  private:
    std::mt19937_64 eng_;
};

} // namespace wsk
