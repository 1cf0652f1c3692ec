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

#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace fqamsim {

enum class Scenario { Space, Frequency };
enum class Mode { AllQam, Hybrid };

const char* to_string(Scenario s);
const char* to_string(Mode m);

/// Simulation parameters. Defaults reproduce the reference deployment:
/// 21 BSs on a 1732 m triangular lattice, 43 dBm BS power, two users per
/// cell (one on the cell edge), 20 MHz per user, 300 K noise temperature,
/// pi/4 beams in the space scenario and 14 dB omni antennas in the
/// frequency scenario.
struct SimConfig {
    Scenario scenario = Scenario::Space;
    Mode mode = Mode::Hybrid;
    int n_cells = 21;
    double isd_m = 1732.0;
    double bs_power_dbm = 43.0;
    double ue_bandwidth_hz = 20e6;
    int users_per_cell = 2;
    double noise_temperature_k = 300.0;
    double beam_phi_3db_rad = M_PI / 4.0;
    double omni_gain_db = 14.0;
    int fqam_m_f = 4;
    int fqam_m_q = 4;
    int qam_m_q = 16;
    double gamma_th_db = 3.0;
    int n_th = 4;
    int lspl_default = 1;
    double rate_margin_default = 0.1;
    double rho = 0.5;
    int n_drops = 1000;
    int mi_samples = 600;
    std::uint64_t master_seed = 1;
    int aggressor_cap = 4;
    double min_ue_bs_distance_m = 35.0;
    double path_loss_ref_db = 128.1;
    double path_loss_slope_db = 37.6;
    double shadowing_sigma_db = 8.0;
    bool flat_fading = false; // key "fading": iid | flat
    double aggressor_rel_db = 10.0;
    int oracle_mi_samples = 250;

    /// Range-check every field; throws ConfigError naming the key.
    void validate() const;
};

/// Parse a `key = value` config file (# comments, blank lines allowed).
/// Unknown keys are hard errors; missing keys keep their defaults.
SimConfig load_config(const std::string& path);

/// Set a single field by key name; same keys as the config file.
void set_config_value(SimConfig& cfg, const std::string& key, const std::string& value);

/// Canonical (key, value) echo of every field, in declaration order.
std::vector<std::pair<std::string, std::string>> config_echo(const SimConfig& cfg);

} // namespace fqamsim
