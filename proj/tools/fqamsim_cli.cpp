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

// Command-line front end; talks to the simulator core only through the
// fqamsim C API.

#include <fqamsim.h>

#include <CLI11.hpp>

#include <cstdio>
#include <memory>
#include <string>

namespace {

struct ConfigDeleter {
    void operator()(fqamsim_config* c) const { fqamsim_config_free(c); }
};
struct ReportDeleter {
    void operator()(fqamsim_report* r) const { fqamsim_report_free(r); }
};
using ConfigPtr = std::unique_ptr<fqamsim_config, ConfigDeleter>;
using ReportPtr = std::unique_ptr<fqamsim_report, ReportDeleter>;

int die(fqamsim_status st, const char* what)
{
    std::fprintf(stderr, "error: %s: %s (status %d)\n", what, fqamsim_last_error(),
                 static_cast<int>(st));
    return 1;
}

ConfigPtr make_config(const std::string& config_path, const std::string& scenario,
                      const std::string& mode, int drops, long long seed,
                      bool seed_set, fqamsim_status& st)
{
    fqamsim_config* raw = nullptr;
    st = config_path.empty() ? fqamsim_config_create(&raw)
                             : fqamsim_config_load(config_path.c_str(), &raw);
    if (st != FQAMSIM_OK)
        return nullptr;
    ConfigPtr cfg(raw);
    if (!scenario.empty() &&
        (st = fqamsim_config_set(cfg.get(), "scenario", scenario.c_str())) != FQAMSIM_OK)
        return nullptr;
    if (!mode.empty() &&
        (st = fqamsim_config_set(cfg.get(), "mode", mode.c_str())) != FQAMSIM_OK)
        return nullptr;
    if (drops > 0 &&
        (st = fqamsim_config_set(cfg.get(), "n_drops",
                                 std::to_string(drops).c_str())) != FQAMSIM_OK)
        return nullptr;
    if (seed_set &&
        (st = fqamsim_config_set(cfg.get(), "master_seed",
                                 std::to_string(seed).c_str())) != FQAMSIM_OK)
        return nullptr;
    if ((st = fqamsim_config_validate(cfg.get())) != FQAMSIM_OK)
        return nullptr;
    return cfg;
}

void print_metrics(const char* label, const fqamsim_report* rep)
{
    const char* names[] = {"available_rate_95", "average_rate", "peak_rate_5"};
    const char* pretty[] = {"95% available rate", "average rate", "5% peak rate"};
    std::printf("%s (%lld samples)\n", label, fqamsim_report_sample_count(rep));
    for (int i = 0; i < 3; ++i) {
        double v = 0.0, lo = 0.0, hi = 0.0;
        if (fqamsim_report_metric(rep, names[i], &v, &lo, &hi) == FQAMSIM_OK)
            std::printf("  %-18s %12.4f Mbit/s   [%.4f, %.4f]\n", pretty[i], v / 1e6,
                        lo / 1e6, hi / 1e6);
    }
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"fqamsim - FQAM resource-partitioning system-level simulator"};
    app.require_subcommand(1);

    std::string config_path, scenario, mode, out_dir;
    int drops = 0;
    long long seed = 0;
    int workers = 0;

    auto add_common = [&](CLI::App* cmd, bool with_mode) {
        cmd->add_option("--config", config_path, "config file (key = value lines)");
        cmd->add_option("--scenario", scenario, "space | frequency")
            ->check(CLI::IsMember({"space", "frequency"}));
        if (with_mode)
            cmd->add_option("--mode", mode, "all-qam | hybrid")
                ->check(CLI::IsMember({"all-qam", "all_qam", "hybrid"}));
        cmd->add_option("--drops", drops, "number of Monte Carlo drops");
        cmd->add_option("--seed", seed, "master seed");
        cmd->add_option("--out", out_dir, "output directory")->required();
        cmd->add_option("--workers", workers, "worker threads (0 = hardware)");
    };

    CLI::App* simulate = app.add_subcommand("simulate", "run one campaign");
    add_common(simulate, true);
    CLI::App* compare =
        app.add_subcommand("compare", "run paired all-QAM and hybrid campaigns");
    add_common(compare, false);

    CLI11_PARSE(app, argc, argv);

    const bool seed_set = simulate->count("--seed") > 0 || compare->count("--seed") > 0;
    fqamsim_status st = FQAMSIM_OK;
    ConfigPtr cfg = make_config(config_path, scenario, mode, drops, seed, seed_set, st);
    if (!cfg)
        return die(st, "configuration");

    if (app.got_subcommand(simulate)) {
        fqamsim_report* raw = nullptr;
        if ((st = fqamsim_run_campaign(cfg.get(), workers, &raw)) != FQAMSIM_OK)
            return die(st, "campaign");
        ReportPtr rep(raw);
        if ((st = fqamsim_report_write(rep.get(), out_dir.c_str())) != FQAMSIM_OK)
            return die(st, "report");
        print_metrics("campaign", rep.get());
        std::printf("report written to %s\n", out_dir.c_str());
        return 0;
    }

    fqamsim_report* raw_a = nullptr;
    fqamsim_report* raw_h = nullptr;
    if ((st = fqamsim_compare(cfg.get(), workers, out_dir.c_str(), &raw_a, &raw_h)) !=
        FQAMSIM_OK)
        return die(st, "compare");
    ReportPtr rep_a(raw_a), rep_h(raw_h);
    print_metrics("all-QAM", rep_a.get());
    print_metrics("hybrid", rep_h.get());
    std::printf("reports written to %s\n", out_dir.c_str());
    return 0;
}
