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

#include "fqamsim/config.hpp"
#include "fqamsim/geometry.hpp"
#include "fqamsim/scheduler.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace fqamsim {

struct RateSample {
    int drop = 0;
    int cell = 0;
    int ue = 0;
    UeKind kind = UeKind::UniformRandom;
    Modulation modulation = Modulation::Qam;
    double sinr_db = 0.0;
    double mi_bits = 0.0;  // bits per symbol of the modulation in use
    double rate_bps = 0.0;
};

struct MetricValue {
    double value = 0.0;
    double ci_lo = 0.0;
    double ci_hi = 0.0;
};

struct MetricsReport {
    Scenario scenario = Scenario::Space;
    Mode mode = Mode::Hybrid;
    std::uint64_t master_seed = 0;
    int n_drops = 0;
    std::vector<RateSample> samples;
    MetricValue available_rate_95; // 5th percentile of the user-rate CDF
    MetricValue average_rate;
    MetricValue peak_rate_5;       // 95th percentile
    std::vector<std::pair<double, double>> cdf; // (rate, cumulative fraction)
    std::vector<std::pair<std::string, std::string>> config_echo;
    std::string build_tag;
};

/// One Monte Carlo drop: place users, draw channels, run the configured
/// scheduler, and compute the mutual-information rate of every user.
/// Deterministic given (config, master seed, drop index).
std::vector<RateSample> run_drop(const SimConfig& cfg, int drop_index);

/// Aggregate n_drops drops (in parallel when workers != 1; results are
/// identical to serial execution) and compute the metric suite with
/// bootstrap 95% confidence intervals (1000 resamples).
/// workers <= 0 selects the hardware concurrency.
MetricsReport run_campaign(const SimConfig& cfg, int workers = 0);

/// Percentile by linear interpolation between order statistics; `sorted`
/// must be ascending, q in [0, 1].
double percentile_linear(std::span<const double> sorted, double q);

/// Paired all-QAM / hybrid comparison over the same master seed.
struct CompareResult {
    MetricsReport all_qam;
    MetricsReport hybrid;
};
CompareResult run_compare(const SimConfig& cfg, int workers = 0);

/// The space scenario's scheduler inputs for one drop: beam contexts and
/// the cached mutual-information rate oracle. Lets tests run the
/// assignment algorithms against the real rate machinery.
struct SchedulerInstance {
    std::vector<BeamContext> beams;
    Thresholds thresholds;
    RateOracle oracle;
};
SchedulerInstance space_scheduler_instance(const SimConfig& cfg, int drop_index);

const char* to_string(UeKind k);
const char* to_string(Modulation m);

} // namespace fqamsim
