// sim.hpp -- Monte-Carlo erasure and repair simulation.
//
// Quantifies what the locality structure buys: parts with small r repair a
// lost symbol from fewer helpers, parts with larger delta absorb more
// failures inside a group before the global decoder is needed.
//
// Reproducibility contract: the generator is SplitMix64 (state advances by
// 0x9E3779B97F4A7C15; output is the xor-shift/multiply finalizer with
// constants 0xBF58476D1CE4E5B9 and 0x94D049BB133111EB).  Trial t draws from
// its own stream seeded with mix(seed XOR (0x9E3779B97F4A7C15 * (t + 1))),
// so serial and parallel schedules produce identical reports.  Draws in
// [0, m) use next() % m.  Identical seed and config give byte-identical
// reports.

#pragma once

#include "lrc/code.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace lrc {

struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    std::uint64_t below(std::uint64_t m) { return next() % m; }

    static SplitMix64 trial_stream(std::uint64_t seed, std::uint64_t trial) {
        SplitMix64 mixer(seed ^ (0x9E3779B97F4A7C15ull * (trial + 1)));
        return SplitMix64(mixer.next());
    }
};

struct SimConfig {
    std::size_t trials = 0;
    std::size_t failures_per_trial = 1;
    std::uint64_t seed = 0;
};

struct SimPartStats {
    std::size_t r = 0;
    std::size_t delta = 0;
    std::size_t symbols_erased = 0;
    std::size_t symbols_repaired_locally = 0;
    std::size_t helpers_read_total = 0;  // over locally repaired symbols
};

struct SimReport {
    std::size_t trials = 0;
    std::size_t failures_per_trial = 0;
    std::uint64_t seed = 0;
    std::vector<SimPartStats> parts;
    std::size_t trials_local_only = 0;       // every erasure repaired in the local phase
    std::size_t trials_global_fallback = 0;  // recovered, but the global solve was needed
    std::size_t trials_unrecoverable = 0;
};

// Encodes a random message per trial, erases failures_per_trial distinct
// uniformly random coordinates, repairs, and tallies the outcome.  The code
// must pass verify_locality for the profile (the certificate is computed
// once up front).  Throws std::invalid_argument on a bad config.
SimReport run_simulation(const LinearCode& code, const LocalityProfile& profile,
                         const std::vector<std::vector<std::size_t>>& hint_groups,
                         const SimConfig& config);

// Fixed-width table; rates printed with six decimals via integer arithmetic
// so the bytes never depend on float formatting.
std::string report_to_text(const SimReport& report);

}  // namespace lrc
