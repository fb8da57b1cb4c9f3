#pragma once

#include "fcd/diagram.hpp"

#include <cstdint>

namespace fcd {

// splitmix64: tiny, fully specified generator so that seeded runs are
// byte-identical across platforms and standard libraries.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    int below(int n) { return static_cast<int>(next() % static_cast<uint64_t>(n)); } // pre: n > 0
    bool coin() { return (next() & 1u) != 0; }

private:
    uint64_t state_;
};

// splitmix64 finalizer, for deriving independent per-trial seeds
uint64_t mix64(uint64_t x);

// Seeded random diagram: `circles` circles (some possibly empty), between
// min_chords and max_chords chords placed uniformly with random framings.
Diagram random_diagram(int min_chords, int max_chords, int circles, Rng& rng);

} // namespace fcd
