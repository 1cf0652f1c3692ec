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

#include "fqamsim/report.hpp"

#include "fqamsim/errors.hpp"

#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>

namespace fqamsim {

namespace {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

std::string iso_utc_now()
{
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string num(double v)
{
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

json metric_json(const MetricValue& m)
{
    return json{{"value", m.value}, {"ci95_lo", m.ci_lo}, {"ci95_hi", m.ci_hi}};
}

void write_file(const fs::path& path, const std::string& body)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw UsageError("cannot open output file '" + path.string() + "'");
    out << body;
    if (!out)
        throw UsageError("failed writing '" + path.string() + "'");
}

json summary_json(const MetricsReport& r)
{
    json j;
    j["schema"] = "fqamsim/summary-1";
    j["scenario"] = to_string(r.scenario);
    j["mode"] = to_string(r.mode);
    j["master_seed"] = r.master_seed;
    j["n_drops"] = r.n_drops;
    j["sample_count"] = r.samples.size();
    j["metrics"] = json{{"available_rate_95_bps", metric_json(r.available_rate_95)},
                        {"average_rate_bps", metric_json(r.average_rate)},
                        {"peak_rate_5_bps", metric_json(r.peak_rate_5)}};
    json cfg;
    for (const auto& [k, v] : r.config_echo)
        cfg[k] = v;
    j["config"] = cfg;
    j["build"] = r.build_tag;
    j["generated_at"] = iso_utc_now();
    return j;
}

} // namespace

void emit_report(const MetricsReport& report, const std::string& out_dir)
{
    const fs::path dir(out_dir);
    fs::create_directories(dir);

    write_file(dir / "summary.json", summary_json(report).dump(2) + "\n");

    std::string csv = "drop,cell,ue,kind,modulation,sinr_db,mi_bits,rate_bps\n";
    for (const auto& s : report.samples) {
        csv += std::to_string(s.drop) + ',' + std::to_string(s.cell) + ',' +
               std::to_string(s.ue) + ',' + to_string(s.kind) + ',' +
               to_string(s.modulation) + ',' + num(s.sinr_db) + ',' + num(s.mi_bits) + ',' +
               num(s.rate_bps) + '\n';
    }
    write_file(dir / "samples.csv", csv);

    std::string cdf = "rate_bps,cum_fraction\n";
    for (const auto& [rate, frac] : report.cdf)
        cdf += num(rate) + ',' + num(frac) + '\n';
    write_file(dir / "cdf.csv", cdf);
}

void emit_compare(const CompareResult& result, const std::string& out_dir)
{
    const fs::path dir(out_dir);
    emit_report(result.all_qam, (dir / "all_qam").string());
    emit_report(result.hybrid, (dir / "hybrid").string());

    const auto& a = result.all_qam;
    const auto& h = result.hybrid;
    auto rel = [](double base, double v) { return base != 0.0 ? (v - base) / base : 0.0; };

    json j;
    j["schema"] = "fqamsim/compare-1";
    j["scenario"] = to_string(a.scenario);
    j["master_seed"] = a.master_seed;
    j["n_drops"] = a.n_drops;
    j["all_qam"] = json{{"available_rate_95_bps", metric_json(a.available_rate_95)},
                        {"average_rate_bps", metric_json(a.average_rate)},
                        {"peak_rate_5_bps", metric_json(a.peak_rate_5)}};
    j["hybrid"] = json{{"available_rate_95_bps", metric_json(h.available_rate_95)},
                       {"average_rate_bps", metric_json(h.average_rate)},
                       {"peak_rate_5_bps", metric_json(h.peak_rate_5)}};
    j["delta"] = json{
        {"available_rate_95_rel_gain",
         rel(a.available_rate_95.value, h.available_rate_95.value)},
        {"average_rate_rel_gain", rel(a.average_rate.value, h.average_rate.value)},
        {"peak_rate_5_rel_diff",
         std::abs(rel(a.peak_rate_5.value, h.peak_rate_5.value))},
        {"p5_ci_separated", h.available_rate_95.ci_lo > a.available_rate_95.ci_hi},
    };
    j["generated_at"] = iso_utc_now();
    write_file(dir / "delta_summary.json", j.dump(2) + "\n");
}

} // namespace fqamsim
