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

#include "fqamsim.h"

#include "fqamsim/campaign.hpp"
#include "fqamsim/config.hpp"
#include "fqamsim/errors.hpp"
#include "fqamsim/report.hpp"

#include <filesystem>
#include <string>

#ifndef FQAMSIM_BUILD_TAG
#define FQAMSIM_BUILD_TAG "v0.1.0"
#endif

struct fqamsim_config {
    fqamsim::SimConfig cfg;
};

struct fqamsim_report {
    fqamsim::MetricsReport report;
};

namespace {

thread_local std::string g_last_error;

fqamsim_status fail(fqamsim_status code, const std::string& message)
{
    g_last_error = message;
    return code;
}

template <typename Fn>
fqamsim_status guarded(Fn&& fn)
{
    try {
        fn();
        g_last_error.clear();
        return FQAMSIM_OK;
    } catch (const fqamsim::ConfigError& e) {
        return fail(FQAMSIM_ERR_CONFIG, e.what());
    } catch (const fqamsim::UsageError& e) {
        return fail(FQAMSIM_ERR_USAGE, e.what());
    } catch (const std::filesystem::filesystem_error& e) {
        return fail(FQAMSIM_ERR_IO, e.what());
    } catch (const std::exception& e) {
        return fail(FQAMSIM_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(FQAMSIM_ERR_INTERNAL, "unknown error");
    }
}

} // namespace

extern "C" {

const char* fqamsim_version(void)
{
    return FQAMSIM_BUILD_TAG;
}

const char* fqamsim_last_error(void)
{
    return g_last_error.c_str();
}

fqamsim_status fqamsim_config_create(fqamsim_config** out)
{
    if (out == nullptr)
        return fail(FQAMSIM_ERR_USAGE, "fqamsim_config_create: out is NULL");
    return guarded([&] { *out = new fqamsim_config{}; });
}

fqamsim_status fqamsim_config_load(const char* path, fqamsim_config** out)
{
    if (path == nullptr || out == nullptr)
        return fail(FQAMSIM_ERR_USAGE, "fqamsim_config_load: NULL argument");
    return guarded([&] { *out = new fqamsim_config{fqamsim::load_config(path)}; });
}

fqamsim_status fqamsim_config_set(fqamsim_config* cfg, const char* key, const char* value)
{
    if (cfg == nullptr || key == nullptr || value == nullptr)
        return fail(FQAMSIM_ERR_USAGE, "fqamsim_config_set: NULL argument");
    return guarded([&] { fqamsim::set_config_value(cfg->cfg, key, value); });
}

fqamsim_status fqamsim_config_validate(const fqamsim_config* cfg)
{
    if (cfg == nullptr)
        return fail(FQAMSIM_ERR_USAGE, "fqamsim_config_validate: cfg is NULL");
    return guarded([&] { cfg->cfg.validate(); });
}

void fqamsim_config_free(fqamsim_config* cfg)
{
    delete cfg;
}

fqamsim_status fqamsim_run_campaign(const fqamsim_config* cfg, int workers,
                                    fqamsim_report** out)
{
    if (cfg == nullptr || out == nullptr)
        return fail(FQAMSIM_ERR_USAGE, "fqamsim_run_campaign: NULL argument");
    return guarded([&] {
        *out = new fqamsim_report{fqamsim::run_campaign(cfg->cfg, workers)};
    });
}

fqamsim_status fqamsim_compare(const fqamsim_config* cfg, int workers, const char* out_dir,
                               fqamsim_report** all_qam, fqamsim_report** hybrid)
{
    if (cfg == nullptr)
        return fail(FQAMSIM_ERR_USAGE, "fqamsim_compare: cfg is NULL");
    return guarded([&] {
        fqamsim::CompareResult result = fqamsim::run_compare(cfg->cfg, workers);
        if (out_dir != nullptr)
            fqamsim::emit_compare(result, out_dir);
        if (all_qam != nullptr)
            *all_qam = new fqamsim_report{std::move(result.all_qam)};
        if (hybrid != nullptr)
            *hybrid = new fqamsim_report{std::move(result.hybrid)};
    });
}

fqamsim_status fqamsim_report_metric(const fqamsim_report* report, const char* name,
                                     double* value, double* ci_lo, double* ci_hi)
{
    if (report == nullptr || name == nullptr)
        return fail(FQAMSIM_ERR_USAGE, "fqamsim_report_metric: NULL argument");
    const std::string metric(name);
    const fqamsim::MetricValue* m = nullptr;
    if (metric == "available_rate_95")
        m = &report->report.available_rate_95;
    else if (metric == "average_rate")
        m = &report->report.average_rate;
    else if (metric == "peak_rate_5")
        m = &report->report.peak_rate_5;
    else
        return fail(FQAMSIM_ERR_USAGE, "unknown metric '" + metric + "'");
    if (value != nullptr)
        *value = m->value;
    if (ci_lo != nullptr)
        *ci_lo = m->ci_lo;
    if (ci_hi != nullptr)
        *ci_hi = m->ci_hi;
    g_last_error.clear();
    return FQAMSIM_OK;
}

long long fqamsim_report_sample_count(const fqamsim_report* report)
{
    if (report == nullptr)
        return -1;
    return static_cast<long long>(report->report.samples.size());
}

fqamsim_status fqamsim_report_write(const fqamsim_report* report, const char* out_dir)
{
    if (report == nullptr || out_dir == nullptr)
        return fail(FQAMSIM_ERR_USAGE, "fqamsim_report_write: NULL argument");
    return guarded([&] { fqamsim::emit_report(report->report, out_dir); });
}

void fqamsim_report_free(fqamsim_report* report)
{
    delete report;
}

} // extern "C"
