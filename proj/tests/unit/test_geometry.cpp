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

#include "fqamsim/errors.hpp"
#include "fqamsim/geometry.hpp"

#include <cmath>

using namespace fqamsim;

TEST_CASE("lattice basics")
{
    const auto one = build_lattice(1, 1732.0);
    CHECK(one.n_cells == 1);
    CHECK(std::hypot(one.bs_positions[0].x, one.bs_positions[0].y) < 1e-9);

    const auto seven = build_lattice(7, 1732.0);
    for (int i = 1; i < 7; ++i)
        CHECK(distance(seven.bs_positions[0], seven.bs_positions[i]) ==
              doctest::Approx(1732.0).epsilon(1e-9));

    const auto plan = build_lattice(21, 1732.0);
    CHECK(plan.n_cells == 21);
    double min_d = 1e300;
    for (int a = 0; a < 21; ++a)
        for (int b = a + 1; b < 21; ++b)
            min_d = std::min(min_d, distance(plan.bs_positions[a], plan.bs_positions[b]));
    CHECK(min_d == doctest::Approx(1732.0).epsilon(1e-9));

    CHECK_THROWS_AS(build_lattice(0, 1732.0), ConfigError);
    CHECK_THROWS_AS(build_lattice(7, 0.0), ConfigError);
}

TEST_CASE("lattice truncation is prefix-stable")
{
    const auto big = build_lattice(40, 500.0);
    for (int n = 1; n < 40; ++n) {
        const auto small = build_lattice(n, 500.0);
        for (int i = 0; i < n; ++i) {
            CHECK(small.bs_positions[i].x == big.bs_positions[i].x);
            CHECK(small.bs_positions[i].y == big.bs_positions[i].y);
        }
    }
}

TEST_CASE("directional pattern constants at pi/4")
{
    const auto p = AntennaPattern::directional(M_PI / 4.0);
    CHECK(p.g0_db == doctest::Approx(12.513108836935096).epsilon(1e-9));
    CHECK(p.gsl_db == doctest::Approx(-10.479692844216302).epsilon(1e-9));
    CHECK(p.phi_ml == doctest::Approx(0.65 * M_PI).epsilon(1e-12));

    CHECK(antenna_gain_db(0.0, p) == doctest::Approx(p.g0_db));
    CHECK(antenna_gain_db(p.phi_3db / 2.0, p) ==
          doctest::Approx(p.g0_db - 3.01).epsilon(1e-9));
    CHECK(antenna_gain_db(p.phi_ml / 2.0 + 0.01, p) == doctest::Approx(p.gsl_db));
    CHECK(antenna_gain_db(M_PI, p) == doctest::Approx(p.gsl_db));
}

TEST_CASE("pattern symmetry, wrapping and monotonicity")
{
    const auto p = AntennaPattern::directional(M_PI / 4.0);
    CHECK(antenna_gain_db(-0.3, p) == antenna_gain_db(0.3, p));
    CHECK(antenna_gain_db(2.0 * M_PI - 0.3, p) == doctest::Approx(antenna_gain_db(0.3, p)));

    double prev = antenna_gain_db(0.0, p);
    for (double phi = 0.0; phi <= p.phi_ml / 2.0; phi += p.phi_ml / 400.0) {
        const double g = antenna_gain_db(phi, p);
        CHECK(g <= prev + 1e-12);
        CHECK(g <= p.g0_db + 1e-12);
        prev = g;
    }
}

TEST_CASE("max gain exceeds side-lobe gain across beamwidths")
{
    for (double bw = 0.05; bw < M_PI; bw += 0.05) {
        const auto p = AntennaPattern::directional(bw);
        CHECK(p.g0_db > p.gsl_db);
    }
    CHECK_THROWS_AS(AntennaPattern::directional(0.0), ConfigError);
    CHECK_THROWS_AS(AntennaPattern::directional(7.0), ConfigError);
}

TEST_CASE("omni pattern is angle independent")
{
    const auto p = AntennaPattern::omni(14.0);
    for (double phi = -3.0; phi < 3.0; phi += 0.37)
        CHECK(antenna_gain_db(phi, p) == doctest::Approx(14.0));
}

TEST_CASE("first tier interferers")
{
    const auto plan = build_lattice(21, 1732.0);
    CHECK(first_tier_interferers(plan, 0).size() == 6);
    // the outermost ring cells have truncated neighborhoods
    CHECK(first_tier_interferers(plan, 20).size() < 6);
    const auto single = build_lattice(1, 1732.0);
    CHECK(first_tier_interferers(single, 0).empty());
    CHECK_THROWS_AS(first_tier_interferers(plan, 21), UsageError);
}

TEST_CASE("user drops are deterministic and in-cell")
{
    const auto plan = build_lattice(21, 1732.0);
    const auto a = drop_users(plan, 2, 99);
    const auto b = drop_users(plan, 2, 99);
    REQUIRE(a.size() == 42);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].position.x == b[i].position.x);
        CHECK(a[i].position.y == b[i].position.y);
    }

    for (const auto& ue : a) {
        const double d = distance(ue.position, plan.bs_positions[ue.cell]);
        if (ue.kind == UeKind::CellEdge)
            CHECK(d == doctest::Approx(866.0).epsilon(1e-9));
        else
            CHECK(d >= 35.0);
        CHECK(serving_cell(plan, ue.position) == ue.cell);
    }

    const auto c = drop_users(plan, 2, 100);
    bool any_diff = false;
    for (std::size_t i = 0; i < a.size(); ++i)
        any_diff |= a[i].position.x != c[i].position.x;
    CHECK(any_diff);
}

TEST_CASE("edge users cover the ring uniformly-ish")
{
    const auto plan = build_lattice(1, 1732.0);
    int quadrant[4] = {0};
    for (int seed = 0; seed < 400; ++seed) {
        const auto ues = drop_users(plan, 1, seed);
        const double ang = std::atan2(ues[0].position.y, ues[0].position.x);
        quadrant[int((ang + M_PI) / (M_PI / 2.0)) % 4]++;
    }
    for (int q = 0; q < 4; ++q)
        CHECK(quadrant[q] > 50);
}
