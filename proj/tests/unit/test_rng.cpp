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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fqamsim/rng.hpp"

#include <cmath>
#include <set>

using namespace fqamsim;

namespace {

// Independent transcription of the Philox4x32-10 round function
// (Salmon et al., SC'11) used to cross-check the library's version.
void ref_round(std::uint32_t ctr[4], const std::uint32_t key[2])
{
    const std::uint64_t pa = std::uint64_t{0xD2511F53u} * ctr[0];
    const std::uint64_t pb = std::uint64_t{0xCD9E8D57u} * ctr[2];
    const std::uint32_t out[4] = {
        static_cast<std::uint32_t>(pb >> 32) ^ ctr[1] ^ key[0],
        static_cast<std::uint32_t>(pb),
        static_cast<std::uint32_t>(pa >> 32) ^ ctr[3] ^ key[1],
        static_cast<std::uint32_t>(pa),
    };
    for (int i = 0; i < 4; ++i)
        ctr[i] = out[i];
}

std::array<std::uint32_t, 4> ref_philox(std::array<std::uint32_t, 4> c,
                                        std::array<std::uint32_t, 2> k)
{
    std::uint32_t ctr[4] = {c[0], c[1], c[2], c[3]};
    std::uint32_t key[2] = {k[0], k[1]};
    for (int r = 0; r < 10; ++r) {
        ref_round(ctr, key);
        key[0] += 0x9E3779B9u;
        key[1] += 0xBB67AE85u;
    }
    return {ctr[0], ctr[1], ctr[2], ctr[3]};
}

} // namespace

TEST_CASE("philox block matches an independent transcription")
{
    const std::array<std::uint32_t, 4> ctrs[] = {
        {0, 0, 0, 0},
        {0xffffffffu, 0xffffffffu, 0xffffffffu, 0xffffffffu},
        {0x243f6a88u, 0x85a308d3u, 0x13198a2eu, 0x03707344u},
        {1, 2, 3, 4},
    };
    const std::array<std::uint32_t, 2> keys[] = {
        {0, 0}, {0xffffffffu, 0xffffffffu}, {0xa4093822u, 0x299f31d0u}, {56, 712}};
    for (const auto& c : ctrs)
        for (const auto& k : keys)
            CHECK(RandomStream::philox4x32(c, k) == ref_philox(c, k));
}

TEST_CASE("streams are deterministic and id-separated")
{
    RandomStream a(42, Dom::Fading, 1, 2, 3);
    RandomStream b(42, Dom::Fading, 1, 2, 3);
    for (int i = 0; i < 16; ++i)
        CHECK(a.next_u64() == b.next_u64());

    RandomStream c(42, Dom::Fading, 1, 2, 4);
    RandomStream d(42, Dom::Shadowing, 1, 2, 3);
    RandomStream e(43, Dom::Fading, 1, 2, 3);
    RandomStream base(42, Dom::Fading, 1, 2, 3);
    const std::uint64_t first = base.next_u64();
    CHECK(c.next_u64() != first);
    CHECK(d.next_u64() != first);
    CHECK(e.next_u64() != first);
}

TEST_CASE("uniform and normal moments")
{
    RandomStream s(7, Dom::MiSample, 0);
    const int n = 100000;
    double mean = 0.0;
    for (int i = 0; i < n; ++i) {
        const double u = s.next_unit();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
        mean += u;
    }
    mean /= n;
    CHECK(std::abs(mean - 0.5) < 0.005);

    RandomStream g(7, Dom::MiSample, 1);
    double m1 = 0.0, m2 = 0.0;
    for (int i = 0; i < n; ++i) {
        const double x = g.next_normal();
        m1 += x;
        m2 += x * x;
    }
    m1 /= n;
    m2 /= n;
    CHECK(std::abs(m1) < 0.02);
    CHECK(std::abs(std::sqrt(m2 - m1 * m1) - 1.0) < 0.02);
}

TEST_CASE("next_below covers the range uniformly")
{
    RandomStream s(11, Dom::MiSample, 2);
    int counts[10] = {0};
    const int n = 50000;
    for (int i = 0; i < n; ++i)
        counts[s.next_below(10)]++;
    for (int k = 0; k < 10; ++k)
        CHECK(std::abs(counts[k] - n / 10) < 500);
    CHECK_THROWS(s.next_below(0));
}

TEST_CASE("complex normal has the requested power")
{
    RandomStream s(3, Dom::MiSample, 9);
    const double var = 2.5;
    double p = 0.0;
    const int n = 100000;
    for (int i = 0; i < n; ++i)
        p += std::norm(s.next_cnormal(var));
    CHECK(std::abs(p / n - var) < 0.05);
}

TEST_CASE("derive_seed separates ids")
{
    std::set<std::uint64_t> seen;
    for (std::uint64_t i = 0; i < 1000; ++i)
        seen.insert(derive_seed(5, Dom::DropSeed, i));
    CHECK(seen.size() == 1000);
}
