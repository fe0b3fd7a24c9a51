// Copyright 2026 The quftisim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QUFTISIM_RNG_HPP
#define QUFTISIM_RNG_HPP

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <limits>

namespace qufti {

/// Default master seed; reproducibility is the default, entropy is opt-in.
inline constexpr std::uint64_t kDefaultSeed = 20260814ULL;

/// Stable keys for derive_seed. Renumbering would silently change every
/// sampled result, so new tags may only be appended.
enum StreamTag : std::uint64_t {
    kTagRun = 1,          // one (phi, sigma, realization) run of a scan
    kTagNoise = 2,        // phase-noise offsets within a run
    kTagEstimator = 3,    // root stream of an estimator invocation
    kTagSubensemble = 4,  // one subensemble batch within an estimator
};

/// SplitMix64 finalizer. Used only to derive stream seeds, never as the
/// sampling engine itself.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Folds an ordered key tuple into a master seed. Every independent work
/// unit (subensemble, grid point, noise realization, stream segment) gets
/// its stream seed through this function, which makes results independent
/// of scheduling and worker count.
inline std::uint64_t derive_seed(std::uint64_t seed, std::initializer_list<std::uint64_t> keys) {
    std::uint64_t s = splitmix64(seed);
    for (std::uint64_t k : keys) {
        s = splitmix64(s ^ splitmix64(k));
    }
    return s;
}

/// A self-contained random stream: a fully specified engine (xoshiro256++,
/// state expanded from the seed with SplitMix64) plus hand-rolled variate
/// transforms, so that a seed pins the exact bit pattern of every draw
/// regardless of the standard library build. The engine choice is a hot-loop
/// matter: a draw is a handful of shift/rotate ops, several times cheaper
/// than mt19937_64, and stream construction is four SplitMix64 steps, which
/// matters when every subensemble gets its own stream.
class RngStream {
  public:
    explicit RngStream(std::uint64_t seed) {
        // SplitMix64 expansion is the engine author's recommended seeding;
        // it cannot produce the forbidden all-zero state in practice, but
        // guard anyway since the engine would be stuck there forever.
        std::uint64_t s = seed;
        for (int i = 0; i < 4; ++i) {
            s += 0x9E3779B97F4A7C15ULL;
            std::uint64_t z = s;
            z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
            z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
            state_[i] = z ^ (z >> 31);
        }
        if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) {
            state_[0] = 0x9E3779B97F4A7C15ULL;
        }
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform on [0, 1), 53-bit resolution.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform on (0, 1]; safe as a log() argument.
    double uniform01_open_zero() {
        return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
    }

    /// Uniform angle on [-pi, pi).
    double uniform_angle() { return kPi * (2.0 * uniform01() - 1.0); }

    /// Standard normal via Box-Muller (no caching: two uniforms per draw).
    double normal() {
        double u1 = uniform01_open_zero();
        double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
    }

    /// Unbiased uniform integer in {0, ..., bound-1}.
    std::uint32_t below(std::uint32_t bound) {
        const std::uint64_t span = static_cast<std::uint64_t>(bound);
        const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() / span * span;
        for (;;) {
            std::uint64_t x = next_u64();
            if (x < limit) {
                return static_cast<std::uint32_t>(x % span);
            }
        }
    }

  private:
    static constexpr double kPi = 3.14159265358979323846;
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }
    std::uint64_t state_[4];
};

} // namespace qufti

#endif
