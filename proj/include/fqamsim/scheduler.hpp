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

#include "fqamsim/geometry.hpp"

#include <functional>
#include <span>
#include <vector>

namespace fqamsim {

enum class Modulation { Qam, Fqam };

struct Thresholds {
    double gamma_th_db = 3.0; // SINR threshold for switching
    int n_th = 4;             // aggressor-count threshold
};

/// Per-beam service descriptor: local service priority level (higher =
/// more critical) and the maximum relative rate loss the beam tolerates
/// when switched to FQAM.
struct ServiceProfile {
    int lspl = 1;
    double rate_margin = 0.1;
};

struct UserClasses {
    std::vector<int> high;
    std::vector<int> low;
};

/// Split users by SINR: low iff sinr < gamma_th (boundary counts as high).
UserClasses classify_users(std::span<const double> sinr_db, double gamma_th_db);

/// QAM -> FQAM switching gate: both inequalities strict.
bool switch_eligible(double sinr_db, int n_aggressors, const Thresholds& th);

/// One beam's view of the interference graph: its served user's mean SINR
/// and the beams that dominate its interference.
struct BeamContext {
    double sinr_db = 0.0;
    std::vector<int> aggressors;
    ServiceProfile profile;
};

/// Evaluates per-beam user rates (bits/s) for a candidate modulation
/// assignment. Must be a pure function of the assignment.
using RateOracle = std::function<std::vector<double>(const std::vector<Modulation>&)>;

struct SpaceAssignment {
    std::vector<Modulation> beam_mod;
    /// Victim beam whose flip group pulled each beam to FQAM (-1 if QAM).
    std::vector<int> trigger_victim;
    double sum_rate_bps = 0.0;
};

/// Centralized greedy switch: starting from all-QAM, repeatedly flip the
/// group {victim beam + all its aggressors} of the switch-eligible victim
/// with the best network sum-rate gain, subject to every flipped beam
/// keeping its rate loss within its margin unless outranked by its
/// triggering victim's priority. Stops when no group yields a positive
/// gain. Deterministic (ties -> lowest victim id).
SpaceAssignment centralized_space_assign(const std::vector<BeamContext>& beams,
                                         const Thresholds& th, const RateOracle& oracle);

/// Exhaustive search over all feasible FQAM subsets under the same
/// constraints; test oracle for the greedy. Beam count limited to 16.
SpaceAssignment brute_force_space_assign(const std::vector<BeamContext>& beams,
                                         const Thresholds& th, const RateOracle& oracle);

enum class Subband { Reserved, Regular };

/// Frequency-domain plan: the band splits into a reserved subband
/// (fraction rho) for low-SINR users and a regular subband; cells
/// interfering with a victim cell (and victim cells themselves) transmit
/// FQAM on the reserved subband in hybrid mode.
struct FrequencyPlan {
    double rho = 0.5;
    std::vector<Modulation> reserved_mod; // per cell; regular subband is always QAM
    std::vector<Subband> user_subband;    // per user
};

FrequencyPlan frequency_partition(const SitePlan& plan, std::span<const int> user_cell,
                                  std::span<const int> low_users, double rho, bool hybrid);

} // namespace fqamsim
