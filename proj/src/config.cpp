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

#include "fqamsim/config.hpp"

#include "fqamsim/errors.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>

namespace fqamsim {

namespace {

std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& value)
{
    try {
        std::size_t pos = 0;
        const double v = std::stod(value, &pos);
        if (pos != value.size())
            throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw ConfigError("config key '" + key + "': cannot parse '" + value +
                          "' as a number");
    }
}

int parse_int(const std::string& key, const std::string& value)
{
    try {
        std::size_t pos = 0;
        const long v = std::stol(value, &pos);
        if (pos != value.size())
            throw std::invalid_argument("trailing characters");
        return static_cast<int>(v);
    } catch (const std::exception&) {
        throw ConfigError("config key '" + key + "': cannot parse '" + value +
                          "' as an integer");
    }
}

std::uint64_t parse_u64(const std::string& key, const std::string& value)
{
    try {
        std::size_t pos = 0;
        const unsigned long long v = std::stoull(value, &pos);
        if (pos != value.size())
            throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw ConfigError("config key '" + key + "': cannot parse '" + value +
                          "' as an unsigned integer");
    }
}

std::string fmt_double(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

bool is_pow2(int v) { return v >= 1 && (v & (v - 1)) == 0; }

void check(bool ok, const std::string& key, const std::string& what)
{
    if (!ok)
        throw ConfigError("config key '" + key + "': " + what);
}

} // namespace

const char* to_string(Scenario s)
{
    return s == Scenario::Space ? "space" : "frequency";
}

const char* to_string(Mode m)
{
    return m == Mode::AllQam ? "all_qam" : "hybrid";
}

void set_config_value(SimConfig& cfg, const std::string& key, const std::string& value)
{
    if (key == "scenario") {
        if (value == "space")
            cfg.scenario = Scenario::Space;
        else if (value == "frequency")
            cfg.scenario = Scenario::Frequency;
        else
            throw ConfigError("config key 'scenario': expected space|frequency, got '" +
                              value + "'");
    } else if (key == "mode") {
        if (value == "all_qam" || value == "all-qam")
            cfg.mode = Mode::AllQam;
        else if (value == "hybrid")
            cfg.mode = Mode::Hybrid;
        else
            throw ConfigError("config key 'mode': expected all_qam|hybrid, got '" + value +
                              "'");
    } else if (key == "n_cells") {
        cfg.n_cells = parse_int(key, value);
    } else if (key == "isd_m") {
        cfg.isd_m = parse_double(key, value);
    } else if (key == "bs_power_dbm") {
        cfg.bs_power_dbm = parse_double(key, value);
    } else if (key == "ue_bandwidth_hz") {
        cfg.ue_bandwidth_hz = parse_double(key, value);
    } else if (key == "users_per_cell") {
        cfg.users_per_cell = parse_int(key, value);
    } else if (key == "noise_temperature_k") {
        cfg.noise_temperature_k = parse_double(key, value);
    } else if (key == "beam_phi_3db_rad") {
        cfg.beam_phi_3db_rad = parse_double(key, value);
    } else if (key == "omni_gain_db") {
        cfg.omni_gain_db = parse_double(key, value);
    } else if (key == "fqam_m_f") {
        cfg.fqam_m_f = parse_int(key, value);
    } else if (key == "fqam_m_q") {
        cfg.fqam_m_q = parse_int(key, value);
    } else if (key == "qam_m_q") {
        cfg.qam_m_q = parse_int(key, value);
    } else if (key == "gamma_th_db") {
        cfg.gamma_th_db = parse_double(key, value);
    } else if (key == "n_th") {
        cfg.n_th = parse_int(key, value);
    } else if (key == "lspl_default") {
        cfg.lspl_default = parse_int(key, value);
    } else if (key == "rate_margin_default") {
        cfg.rate_margin_default = parse_double(key, value);
    } else if (key == "rho") {
        cfg.rho = parse_double(key, value);
    } else if (key == "n_drops") {
        cfg.n_drops = parse_int(key, value);
    } else if (key == "mi_samples") {
        cfg.mi_samples = parse_int(key, value);
    } else if (key == "master_seed") {
        cfg.master_seed = parse_u64(key, value);
    } else if (key == "aggressor_cap") {
        cfg.aggressor_cap = parse_int(key, value);
    } else if (key == "min_ue_bs_distance_m") {
        cfg.min_ue_bs_distance_m = parse_double(key, value);
    } else if (key == "path_loss_ref_db") {
        cfg.path_loss_ref_db = parse_double(key, value);
    } else if (key == "path_loss_slope_db") {
        cfg.path_loss_slope_db = parse_double(key, value);
    } else if (key == "shadowing_sigma_db") {
        cfg.shadowing_sigma_db = parse_double(key, value);
    } else if (key == "fading") {
        if (value == "iid")
            cfg.flat_fading = false;
        else if (value == "flat")
            cfg.flat_fading = true;
        else
            throw ConfigError("config key 'fading': expected iid|flat, got '" + value + "'");
    } else if (key == "aggressor_rel_db") {
        cfg.aggressor_rel_db = parse_double(key, value);
    } else if (key == "oracle_mi_samples") {
        cfg.oracle_mi_samples = parse_int(key, value);
    } else {
        throw ConfigError("unknown config key '" + key + "'");
    }
}

void SimConfig::validate() const
{
    check(n_cells >= 1 && n_cells <= 1024, "n_cells", "must be in [1, 1024]");
    check(isd_m > 0.0, "isd_m", "must be positive");
    check(ue_bandwidth_hz > 0.0, "ue_bandwidth_hz", "must be positive");
    check(users_per_cell >= 1 && users_per_cell <= 64, "users_per_cell",
          "must be in [1, 64]");
    check(noise_temperature_k > 0.0, "noise_temperature_k", "must be positive");
    check(beam_phi_3db_rad > 0.0 && beam_phi_3db_rad <= 2.0 * M_PI, "beam_phi_3db_rad",
          "must be in (0, 2*pi]");
    check(is_pow2(fqam_m_f) && fqam_m_f <= 64, "fqam_m_f",
          "must be a power of 2 in [1, 64]");
    check(fqam_m_q == 2 || fqam_m_q == 4 || fqam_m_q == 16 || fqam_m_q == 64, "fqam_m_q",
          "must be one of 2, 4, 16, 64");
    check(qam_m_q == 2 || qam_m_q == 4 || qam_m_q == 16 || qam_m_q == 64, "qam_m_q",
          "must be one of 2, 4, 16, 64");
    check(n_th >= 1, "n_th", "must be >= 1");
    check(rate_margin_default >= 0.0 && rate_margin_default <= 1.0, "rate_margin_default",
          "must be in [0, 1]");
    check(rho > 0.0 && rho < 1.0, "rho", "must be in (0, 1)");
    check(n_drops >= 1, "n_drops", "must be >= 1");
    check(mi_samples >= 1, "mi_samples", "must be >= 1");
    check(oracle_mi_samples >= 1, "oracle_mi_samples", "must be >= 1");
    check(aggressor_cap >= 0 && aggressor_cap <= 8, "aggressor_cap", "must be in [0, 8]");
    check(min_ue_bs_distance_m >= 35.0 && min_ue_bs_distance_m < isd_m / 2.0,
          "min_ue_bs_distance_m", "must be in [35, isd/2)");
    check(path_loss_slope_db > 0.0, "path_loss_slope_db", "must be positive");
    check(shadowing_sigma_db >= 0.0, "shadowing_sigma_db", "must be >= 0");
    check(aggressor_rel_db >= 0.0, "aggressor_rel_db", "must be >= 0");
}

SimConfig load_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open config file '" + path + "'");
    SimConfig cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line.resize(hash);
        line = trim(line);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config file '" + path + "' line " + std::to_string(lineno) +
                              ": expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw ConfigError("config file '" + path + "' line " + std::to_string(lineno) +
                              ": empty key or value");
        set_config_value(cfg, key, value);
    }
    cfg.validate();
    return cfg;
}

std::vector<std::pair<std::string, std::string>> config_echo(const SimConfig& cfg)
{
    std::vector<std::pair<std::string, std::string>> kv;
    kv.emplace_back("scenario", to_string(cfg.scenario));
    kv.emplace_back("mode", to_string(cfg.mode));
    kv.emplace_back("n_cells", std::to_string(cfg.n_cells));
    kv.emplace_back("isd_m", fmt_double(cfg.isd_m));
    kv.emplace_back("bs_power_dbm", fmt_double(cfg.bs_power_dbm));
    kv.emplace_back("ue_bandwidth_hz", fmt_double(cfg.ue_bandwidth_hz));
    kv.emplace_back("users_per_cell", std::to_string(cfg.users_per_cell));
    kv.emplace_back("noise_temperature_k", fmt_double(cfg.noise_temperature_k));
    kv.emplace_back("beam_phi_3db_rad", fmt_double(cfg.beam_phi_3db_rad));
    kv.emplace_back("omni_gain_db", fmt_double(cfg.omni_gain_db));
    kv.emplace_back("fqam_m_f", std::to_string(cfg.fqam_m_f));
    kv.emplace_back("fqam_m_q", std::to_string(cfg.fqam_m_q));
    kv.emplace_back("qam_m_q", std::to_string(cfg.qam_m_q));
    kv.emplace_back("gamma_th_db", fmt_double(cfg.gamma_th_db));
    kv.emplace_back("n_th", std::to_string(cfg.n_th));
    kv.emplace_back("lspl_default", std::to_string(cfg.lspl_default));
    kv.emplace_back("rate_margin_default", fmt_double(cfg.rate_margin_default));
    kv.emplace_back("rho", fmt_double(cfg.rho));
    kv.emplace_back("n_drops", std::to_string(cfg.n_drops));
    kv.emplace_back("mi_samples", std::to_string(cfg.mi_samples));
    kv.emplace_back("master_seed", std::to_string(cfg.master_seed));
    kv.emplace_back("aggressor_cap", std::to_string(cfg.aggressor_cap));
    kv.emplace_back("min_ue_bs_distance_m", fmt_double(cfg.min_ue_bs_distance_m));
    kv.emplace_back("path_loss_ref_db", fmt_double(cfg.path_loss_ref_db));
    kv.emplace_back("path_loss_slope_db", fmt_double(cfg.path_loss_slope_db));
    kv.emplace_back("shadowing_sigma_db", fmt_double(cfg.shadowing_sigma_db));
    kv.emplace_back("fading", cfg.flat_fading ? "flat" : "iid");
    kv.emplace_back("aggressor_rel_db", fmt_double(cfg.aggressor_rel_db));
    kv.emplace_back("oracle_mi_samples", std::to_string(cfg.oracle_mi_samples));
    return kv;
}

} // namespace fqamsim
