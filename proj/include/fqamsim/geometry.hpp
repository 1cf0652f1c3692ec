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

#include <cstdint>
#include <vector>

namespace fqamsim {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

double distance(const Vec2& a, const Vec2& b);
/// Angle of the ray a -> b, in (-pi, pi].
double bearing(const Vec2& a, const Vec2& b);

/// Base-station layout on a triangular lattice; cell regions are the
/// hexagonal Voronoi cells of the sites.
struct SitePlan {
    std::vector<Vec2> bs_positions;
    double isd = 0.0;
    int n_cells = 0;
};

/// The n_cells lattice points closest to the origin (ties by angle),
/// spacing = isd. build_lattice(n) is a prefix of build_lattice(n+1).
SitePlan build_lattice(int n_cells, double isd);

/// Cells exactly one inter-site distance away (within 1e-6 m).
std::vector<int> first_tier_interferers(const SitePlan& plan, int cell);

/// Index of the site whose hexagonal region contains p (nearest site,
/// ties toward the lowest index).
int serving_cell(const SitePlan& plan, const Vec2& p);

/// Simplified directional pattern: quadratic main-lobe roll-off out to
/// phi_ml / 2, constant side-lobe gain beyond. The derived quantities
/// (g0_db, gsl_db, phi_ml) are always recomputed from phi_3db. All angles
/// in radians.
struct AntennaPattern {
    bool is_omni = false;
    double omni_gain_db = 0.0;
    double phi_3db = 0.0;
    double g0_db = 0.0;
    double gsl_db = 0.0;
    double phi_ml = 0.0;

    static AntennaPattern directional(double phi_3db);
    static AntennaPattern omni(double gain_db);
};

/// Pattern gain at angle phi off boresight (wrapped to [0, pi] by symmetry).
double antenna_gain_db(double phi, const AntennaPattern& pattern);

struct Beam {
    int serving_bs = -1;
    int served_ue = -1;
    double boresight = 0.0;
    AntennaPattern pattern;
};

enum class UeKind { CellEdge, UniformRandom };

struct UePlacement {
    int ue_id = -1;
    int cell = -1;
    Vec2 position;
    UeKind kind = UeKind::UniformRandom;
};

/// Per cell: one user on the cell-edge ring (radius isd/2, uniform angle),
/// the rest uniform over the hexagonal cell with a minimum distance from
/// the BS. Deterministic given the seed.
std::vector<UePlacement> drop_users(const SitePlan& plan, int users_per_cell,
                                    std::uint64_t seed, double min_bs_distance_m = 35.0);

} // namespace fqamsim
