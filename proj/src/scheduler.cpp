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

#include "fqamsim/scheduler.hpp"

#include "fqamsim/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace fqamsim {

namespace {

double sum(std::span<const double> v)
{
    return std::accumulate(v.begin(), v.end(), 0.0);
}

double relative_loss(double baseline, double now)
{
    if (baseline <= 0.0)
        return 0.0;
    return std::max(0.0, (baseline - now) / baseline);
}

// A flipped beam is feasible if its rate loss against the all-QAM baseline
// stays within its margin, or its triggering victim outranks it.
bool flips_feasible(const std::vector<BeamContext>& beams,
                    const std::vector<Modulation>& mods,
                    const std::vector<int>& trigger,
                    std::span<const double> rates, std::span<const double> base_rates)
{
    for (std::size_t b = 0; b < mods.size(); ++b) {
        if (mods[b] != Modulation::Fqam)
            continue;
        const double loss = relative_loss(base_rates[b], rates[b]);
        if (loss <= beams[b].profile.rate_margin)
            continue;
        const int v = trigger[b];
        if (v >= 0 && beams[static_cast<std::size_t>(v)].profile.lspl > beams[b].profile.lspl)
            continue;
        return false;
    }
    return true;
}

} // namespace

UserClasses classify_users(std::span<const double> sinr_db, double gamma_th_db)
{
    UserClasses out;
    for (std::size_t i = 0; i < sinr_db.size(); ++i) {
        if (sinr_db[i] < gamma_th_db)
            out.low.push_back(static_cast<int>(i));
        else
            out.high.push_back(static_cast<int>(i));
    }
    return out;
}

bool switch_eligible(double sinr_db, int n_aggressors, const Thresholds& th)
{
    return sinr_db < th.gamma_th_db && n_aggressors < th.n_th;
}

SpaceAssignment centralized_space_assign(const std::vector<BeamContext>& beams,
                                         const Thresholds& th, const RateOracle& oracle)
{
    const std::size_t n = beams.size();
    SpaceAssignment a;
    a.beam_mod.assign(n, Modulation::Qam);
    a.trigger_victim.assign(n, -1);

    const std::vector<double> base_rates = oracle(a.beam_mod);
    if (base_rates.size() != n)
        throw UsageError("rate oracle returned " + std::to_string(base_rates.size()) +
                         " rates for " + std::to_string(n) + " beams");
    std::vector<double> cur_rates = base_rates;

    std::vector<int> victims;
    for (std::size_t v = 0; v < n; ++v) {
        if (switch_eligible(beams[v].sinr_db, static_cast<int>(beams[v].aggressors.size()), th))
            victims.push_back(static_cast<int>(v));
    }

    for (;;) {
        double best_gain = 0.0;
        int best_victim = -1;
        std::vector<Modulation> best_mods;
        std::vector<int> best_trigger;
        std::vector<double> best_rates;

        for (int v : victims) {
            // the victim's own link switches to FQAM together with all of
            // its aggressors; the benefit requires both sides to switch
            std::vector<int> group{v};
            group.insert(group.end(), beams[static_cast<std::size_t>(v)].aggressors.begin(),
                         beams[static_cast<std::size_t>(v)].aggressors.end());
            std::vector<Modulation> mods = a.beam_mod;
            std::vector<int> trigger = a.trigger_victim;
            bool flipped_any = false;
            for (int b : group) {
                if (mods[static_cast<std::size_t>(b)] == Modulation::Qam) {
                    mods[static_cast<std::size_t>(b)] = Modulation::Fqam;
                    trigger[static_cast<std::size_t>(b)] = v;
                    flipped_any = true;
                }
            }
            if (!flipped_any)
                continue;
            std::vector<double> rates;
            try {
                rates = oracle(mods);
            } catch (const std::exception& e) {
                throw UsageError("rate oracle failed for victim beam " + std::to_string(v) +
                                 ": " + e.what());
            }
            if (!flips_feasible(beams, mods, trigger, rates, base_rates))
                continue;
            const double gain = sum(rates) - sum(cur_rates);
            if (gain > best_gain) { // strict: ties keep the lowest victim id
                best_gain = gain;
                best_victim = v;
                best_mods = std::move(mods);
                best_trigger = std::move(trigger);
                best_rates = std::move(rates);
            }
        }
        if (best_victim < 0)
            break;
        a.beam_mod = std::move(best_mods);
        a.trigger_victim = std::move(best_trigger);
        cur_rates = std::move(best_rates);
    }
    a.sum_rate_bps = sum(cur_rates);
    return a;
}

SpaceAssignment brute_force_space_assign(const std::vector<BeamContext>& beams,
                                         const Thresholds& th, const RateOracle& oracle)
{
    const std::size_t n = beams.size();
    if (n > 16)
        throw UsageError("brute_force_space_assign limited to 16 beams, got " +
                         std::to_string(n));

    std::vector<int> victims;
    for (std::size_t v = 0; v < n; ++v) {
        if (switch_eligible(beams[v].sinr_db, static_cast<int>(beams[v].aggressors.size()), th))
            victims.push_back(static_cast<int>(v));
    }
    // beams that may legally carry FQAM: eligible victims and their aggressors
    std::vector<int> flippable;
    for (int v : victims) {
        std::vector<int> group{v};
        group.insert(group.end(), beams[static_cast<std::size_t>(v)].aggressors.begin(),
                     beams[static_cast<std::size_t>(v)].aggressors.end());
        for (int b : group) {
            if (std::find(flippable.begin(), flippable.end(), b) == flippable.end())
                flippable.push_back(b);
        }
    }
    std::sort(flippable.begin(), flippable.end());

    SpaceAssignment best;
    best.beam_mod.assign(n, Modulation::Qam);
    best.trigger_victim.assign(n, -1);
    std::vector<double> base_rates = oracle(best.beam_mod);
    if (base_rates.size() != n)
        throw UsageError("rate oracle returned wrong number of rates");
    best.sum_rate_bps = sum(base_rates);

    const std::size_t n_subsets = std::size_t{1} << flippable.size();
    for (std::size_t subset = 1; subset < n_subsets; ++subset) {
        std::vector<Modulation> mods(n, Modulation::Qam);
        std::vector<int> trigger(n, -1);
        for (std::size_t i = 0; i < flippable.size(); ++i) {
            if (!(subset & (std::size_t{1} << i)))
                continue;
            const int b = flippable[i];
            mods[static_cast<std::size_t>(b)] = Modulation::Fqam;
            // LSPL witness: the highest-priority eligible victim this beam
            // aggresses (or the beam itself when it is an eligible victim)
            int wit = -1;
            for (int v : victims) {
                const auto& ag = beams[static_cast<std::size_t>(v)].aggressors;
                if (v == b || std::find(ag.begin(), ag.end(), b) != ag.end()) {
                    if (wit < 0 || beams[static_cast<std::size_t>(v)].profile.lspl >
                                       beams[static_cast<std::size_t>(wit)].profile.lspl)
                        wit = v;
                }
            }
            trigger[static_cast<std::size_t>(b)] = wit;
        }
        const std::vector<double> rates = oracle(mods);
        if (!flips_feasible(beams, mods, trigger, rates, base_rates))
            continue;
        const double s = sum(rates);
        if (s > best.sum_rate_bps) {
            best.beam_mod = std::move(mods);
            best.trigger_victim = std::move(trigger);
            best.sum_rate_bps = s;
        }
    }
    return best;
}

FrequencyPlan frequency_partition(const SitePlan& plan, std::span<const int> user_cell,
                                  std::span<const int> low_users, double rho, bool hybrid)
{
    if (!(rho > 0.0) || !(rho < 1.0))
        throw ConfigError("reserved fraction rho must lie in (0, 1), got " +
                          std::to_string(rho));
    FrequencyPlan fp;
    fp.rho = rho;
    fp.reserved_mod.assign(static_cast<std::size_t>(plan.n_cells), Modulation::Qam);
    fp.user_subband.assign(user_cell.size(), Subband::Regular);

    std::vector<bool> victim_cell(static_cast<std::size_t>(plan.n_cells), false);
    for (int u : low_users) {
        fp.user_subband[static_cast<std::size_t>(u)] = Subband::Reserved;
        victim_cell[static_cast<std::size_t>(user_cell[static_cast<std::size_t>(u)])] = true;
    }
    if (hybrid) {
        // victim cells serve their low-SINR users with FQAM; their first-tier
        // interferers transmit FQAM on the reserved subband as well
        for (int c = 0; c < plan.n_cells; ++c) {
            if (!victim_cell[static_cast<std::size_t>(c)])
                continue;
            fp.reserved_mod[static_cast<std::size_t>(c)] = Modulation::Fqam;
            for (int i : first_tier_interferers(plan, c))
                fp.reserved_mod[static_cast<std::size_t>(i)] = Modulation::Fqam;
        }
    }
    return fp;
}

} // namespace fqamsim
