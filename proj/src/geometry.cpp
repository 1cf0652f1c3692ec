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

#include "fqamsim/geometry.hpp"

#include "fqamsim/errors.hpp"
#include "fqamsim/rng.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace fqamsim {

namespace {

constexpr double kLatticeTol = 1e-6; // meters

// Unit normals of the three hexagon side pairs (neighbor directions of the
// triangular lattice with basis (1,0) and (1/2, sqrt(3)/2)).
const Vec2 kHexAxes[3] = {
    {1.0, 0.0},
    {0.5, std::sqrt(3.0) / 2.0},
    {-0.5, std::sqrt(3.0) / 2.0},
};

bool inside_hexagon(const Vec2& p, double isd)
{
    for (const auto& u : kHexAxes) {
        if (std::abs(p.x * u.x + p.y * u.y) > isd / 2.0 + 1e-12)
            return false;
    }
    return true;
}

} // namespace

double distance(const Vec2& a, const Vec2& b)
{
    return std::hypot(a.x - b.x, a.y - b.y);
}

double bearing(const Vec2& a, const Vec2& b)
{
    return std::atan2(b.y - a.y, b.x - a.x);
}

SitePlan build_lattice(int n_cells, double isd)
{
    if (n_cells < 1)
        throw ConfigError("n_cells must be >= 1, got " + std::to_string(n_cells));
    if (!(isd > 0.0))
        throw ConfigError("inter-site distance must be positive");

    struct Candidate {
        long long q; // squared radius in units of isd^2 (integer-exact on the lattice)
        double angle;
        Vec2 pos;
    };

    const int radius = static_cast<int>(std::ceil(std::sqrt(double(n_cells)))) + 3;
    const double sq3_2 = std::sqrt(3.0) / 2.0;
    std::vector<Candidate> cands;
    cands.reserve(static_cast<std::size_t>(2 * radius + 1) * (2 * radius + 1));
    for (int i = -radius; i <= radius; ++i) {
        for (int j = -radius; j <= radius; ++j) {
            const long long q = static_cast<long long>(i) * i +
                                static_cast<long long>(i) * j +
                                static_cast<long long>(j) * j;
            const Vec2 pos{isd * (i + 0.5 * j), isd * (sq3_2 * j)};
            double angle = std::atan2(pos.y, pos.x);
            if (angle < 0.0)
                angle += 2.0 * M_PI;
            if (q == 0)
                angle = 0.0;
            cands.push_back({q, angle, pos});
        }
    }
    std::sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
        if (a.q != b.q)
            return a.q < b.q;
        return a.angle < b.angle;
    });
    if (static_cast<std::size_t>(n_cells) > cands.size())
        throw ConfigError("n_cells too large for lattice generator");

    SitePlan plan;
    plan.isd = isd;
    plan.n_cells = n_cells;
    plan.bs_positions.reserve(n_cells);
    for (int k = 0; k < n_cells; ++k)
        plan.bs_positions.push_back(cands[k].pos);
    return plan;
}

std::vector<int> first_tier_interferers(const SitePlan& plan, int cell)
{
    if (cell < 0 || cell >= plan.n_cells)
        throw UsageError("cell index " + std::to_string(cell) + " out of range");
    std::vector<int> out;
    for (int i = 0; i < plan.n_cells; ++i) {
        if (i == cell)
            continue;
        if (std::abs(distance(plan.bs_positions[i], plan.bs_positions[cell]) - plan.isd) <=
            kLatticeTol)
            out.push_back(i);
    }
    return out;
}

int serving_cell(const SitePlan& plan, const Vec2& p)
{
    int best = 0;
    double best_d = distance(p, plan.bs_positions[0]);
    for (int i = 1; i < plan.n_cells; ++i) {
        const double d = distance(p, plan.bs_positions[i]);
        if (d < best_d - 1e-12) {
            best_d = d;
            best = i;
        }
    }
    return best;
}

AntennaPattern AntennaPattern::directional(double phi_3db)
{
    if (!(phi_3db > 0.0) || phi_3db > 2.0 * M_PI)
        throw ConfigError("half-power beamwidth must be in (0, 2*pi]");
    AntennaPattern p;
    p.is_omni = false;
    p.phi_3db = phi_3db;
    const double ratio = 1.6162 / std::sin(phi_3db / 2.0);
    p.g0_db = 10.0 * std::log10(ratio * ratio);
    p.gsl_db = -0.4111 * std::log(phi_3db) - 10.579;
    p.phi_ml = 2.6 * phi_3db;
    return p;
}

AntennaPattern AntennaPattern::omni(double gain_db)
{
    AntennaPattern p;
    p.is_omni = true;
    p.omni_gain_db = gain_db;
    return p;
}

double antenna_gain_db(double phi, const AntennaPattern& pattern)
{
    if (pattern.is_omni)
        return pattern.omni_gain_db;
    // wrap to (-pi, pi], then fold to [0, pi]
    phi = std::remainder(phi, 2.0 * M_PI);
    phi = std::abs(phi);
    if (phi <= pattern.phi_ml / 2.0) {
        const double x = 2.0 * phi / pattern.phi_3db;
        return pattern.g0_db - 3.01 * x * x;
    }
    return pattern.gsl_db;
}

std::vector<UePlacement> drop_users(const SitePlan& plan, int users_per_cell,
                                    std::uint64_t seed, double min_bs_distance_m)
{
    if (users_per_cell < 1)
        throw ConfigError("users_per_cell must be >= 1");
    std::vector<UePlacement> out;
    out.reserve(static_cast<std::size_t>(plan.n_cells) * users_per_cell);
    const double edge_radius = plan.isd / 2.0;
    for (int cell = 0; cell < plan.n_cells; ++cell) {
        const Vec2 bs = plan.bs_positions[cell];
        for (int k = 0; k < users_per_cell; ++k) {
            RandomStream stream(seed, Dom::UePlace, static_cast<std::uint64_t>(cell),
                                static_cast<std::uint64_t>(k));
            UePlacement ue;
            ue.ue_id = cell * users_per_cell + k;
            ue.cell = cell;
            if (k == 0) {
                ue.kind = UeKind::CellEdge;
                const double angle = 2.0 * M_PI * stream.next_unit();
                ue.position = {bs.x + edge_radius * std::cos(angle),
                               bs.y + edge_radius * std::sin(angle)};
            } else {
                ue.kind = UeKind::UniformRandom;
                const double r = plan.isd / std::sqrt(3.0); // hexagon circumradius
                Vec2 rel;
                do {
                    rel = {r * (2.0 * stream.next_unit() - 1.0),
                           r * (2.0 * stream.next_unit() - 1.0)};
                } while (!inside_hexagon(rel, plan.isd) ||
                         std::hypot(rel.x, rel.y) < min_bs_distance_m);
                ue.position = {bs.x + rel.x, bs.y + rel.y};
            }
            out.push_back(ue);
        }
    }
    return out;
}

} // namespace fqamsim
