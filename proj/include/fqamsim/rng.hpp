/*
   Copyright 2026 The fqamsim Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <array>
#include <complex>
#include <cstdint>

namespace fqamsim {

// Stream domains. Every random quantity in the simulator is drawn from a
// stream addressed by (seed, domain, id0, id1, id2), so results do not
// depend on evaluation order or worker count.
enum class Dom : std::uint64_t {
    DropSeed = 1,
    UePlace = 2,
    Shadowing = 3,
    Fading = 4,
    ReportMi = 5,
    OracleMi = 6,
    MiSample = 7,
    KurtSample = 8,
    Bootstrap = 9,
};

/// Counter-based random stream (Philox4x32-10, Salmon et al. SC'11).
/// The 64-bit key is derived by hashing (seed, domain, ids); the 128-bit
/// counter indexes position within the stream.
class RandomStream {
public:
    RandomStream(std::uint64_t seed, Dom domain,
                 std::uint64_t id0 = 0, std::uint64_t id1 = 0, std::uint64_t id2 = 0);

    std::uint64_t next_u64();

    /// Uniform in [0, 1).
    double next_unit();

    /// Uniform integer in [0, n), n >= 1.
    std::uint64_t next_below(std::uint64_t n);

    /// Standard normal (Box-Muller; second value of each pair is cached).
    double next_normal();

    /// Circularly-symmetric complex Gaussian with E|z|^2 = variance.
    std::complex<double> next_cnormal(double variance);

    static std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> ctr,
                                                   std::array<std::uint32_t, 2> key);

private:
    void refill();

    std::array<std::uint32_t, 2> key_;
    std::array<std::uint32_t, 4> counter_{{0, 0, 0, 0}};
    std::array<std::uint32_t, 4> block_{};
    int avail_ = 0;
    double cached_normal_ = 0.0;
    bool has_cached_normal_ = false;
};

/// Stable 64-bit hash used for sub-seed derivation.
std::uint64_t mix64(std::uint64_t x);

/// Derive a child seed from (seed, domain, id); used where an API takes a
/// plain seed (e.g. one seed per Monte Carlo drop).
std::uint64_t derive_seed(std::uint64_t seed, Dom domain, std::uint64_t id);

} // namespace fqamsim
