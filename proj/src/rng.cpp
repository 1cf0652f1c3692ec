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

#include "fqamsim/rng.hpp"

#include "fqamsim/errors.hpp"

#include <cmath>

namespace fqamsim {

namespace {

constexpr std::uint32_t kPhiloxW32A = 0x9E3779B9u;
constexpr std::uint32_t kPhiloxW32B = 0xBB67AE85u;
constexpr std::uint32_t kPhiloxM4x32A = 0xD2511F53u;
constexpr std::uint32_t kPhiloxM4x32B = 0xCD9E8D57u;

inline void mul_hi_lo(std::uint32_t a, std::uint32_t b, std::uint32_t& lo, std::uint32_t& hi)
{
    const std::uint64_t p = static_cast<std::uint64_t>(a) * b;
    lo = static_cast<std::uint32_t>(p);
    hi = static_cast<std::uint32_t>(p >> 32);
}

inline void philox_round(std::array<std::uint32_t, 4>& ctr, const std::array<std::uint32_t, 2>& key)
{
    std::uint32_t lo0, hi0, lo1, hi1;
    mul_hi_lo(kPhiloxM4x32A, ctr[0], lo0, hi0);
    mul_hi_lo(kPhiloxM4x32B, ctr[2], lo1, hi1);
    const std::array<std::uint32_t, 4> out{hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
    ctr = out;
}

} // namespace

std::uint64_t mix64(std::uint64_t x)
{
    // splitmix64 finalizer
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, Dom domain, std::uint64_t id)
{
    std::uint64_t h = mix64(seed);
    h = mix64(h ^ static_cast<std::uint64_t>(domain));
    h = mix64(h ^ id);
    return h;
}

std::array<std::uint32_t, 4> RandomStream::philox4x32(std::array<std::uint32_t, 4> ctr,
                                                      std::array<std::uint32_t, 2> key)
{
    for (int round = 0; round < 10; ++round) {
        philox_round(ctr, key);
        key[0] += kPhiloxW32A;
        key[1] += kPhiloxW32B;
    }
    return ctr;
}

RandomStream::RandomStream(std::uint64_t seed, Dom domain,
                           std::uint64_t id0, std::uint64_t id1, std::uint64_t id2)
{
    std::uint64_t h = mix64(seed);
    h = mix64(h ^ static_cast<std::uint64_t>(domain));
    h = mix64(h ^ id0);
    h = mix64(h ^ id1);
    h = mix64(h ^ id2);
    key_ = {static_cast<std::uint32_t>(h), static_cast<std::uint32_t>(h >> 32)};
}

void RandomStream::refill()
{
    block_ = philox4x32(counter_, key_);
    // 128-bit counter increment
    if (++counter_[0] == 0 && ++counter_[1] == 0 && ++counter_[2] == 0)
        ++counter_[3];
    avail_ = 4;
}

std::uint64_t RandomStream::next_u64()
{
    if (avail_ < 2)
        refill();
    const std::uint32_t lo = block_[4 - avail_];
    const std::uint32_t hi = block_[4 - avail_ + 1];
    avail_ -= 2;
    return (static_cast<std::uint64_t>(hi) << 32) | lo;
}

double RandomStream::next_unit()
{
    // 53-bit mantissa in [0, 1)
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::uint64_t RandomStream::next_below(std::uint64_t n)
{
    if (n == 0)
        throw UsageError("RandomStream::next_below: n must be >= 1");
    if ((n & (n - 1)) == 0)
        return next_u64() & (n - 1);
    // rejection sampling on the top multiple of n
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t v;
    do {
        v = next_u64();
    } while (v >= limit);
    return v % n;
}

double RandomStream::next_normal()
{
    if (has_cached_normal_) {
        has_cached_normal_ = false;
        return cached_normal_;
    }
    const double u1 = 1.0 - next_unit(); // (0, 1]
    const double u2 = next_unit();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * M_PI * u2;
    cached_normal_ = r * std::sin(a);
    has_cached_normal_ = true;
    return r * std::cos(a);
}

std::complex<double> RandomStream::next_cnormal(double variance)
{
    const double s = std::sqrt(variance / 2.0);
    const double re = next_normal();
    const double im = next_normal();
    return {s * re, s * im};
}

} // namespace fqamsim
