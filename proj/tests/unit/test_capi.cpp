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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fqamsim.h>

#include <cstring>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

struct Cfg {
    fqamsim_config* ptr = nullptr;
    ~Cfg() { fqamsim_config_free(ptr); }
};
struct Rep {
    fqamsim_report* ptr = nullptr;
    ~Rep() { fqamsim_report_free(ptr); }
};

void set_small(fqamsim_config* cfg)
{
    REQUIRE(fqamsim_config_set(cfg, "n_cells", "7") == FQAMSIM_OK);
    REQUIRE(fqamsim_config_set(cfg, "n_drops", "2") == FQAMSIM_OK);
    REQUIRE(fqamsim_config_set(cfg, "mi_samples", "64") == FQAMSIM_OK);
    REQUIRE(fqamsim_config_set(cfg, "oracle_mi_samples", "32") == FQAMSIM_OK);
    REQUIRE(fqamsim_config_set(cfg, "master_seed", "5") == FQAMSIM_OK);
}

} // namespace

TEST_CASE("version and error surface")
{
    CHECK(std::strlen(fqamsim_version()) > 0);
    CHECK(fqamsim_config_create(nullptr) == FQAMSIM_ERR_USAGE);
    CHECK(std::strlen(fqamsim_last_error()) > 0);
}

TEST_CASE("configuration handle lifecycle and validation")
{
    Cfg cfg;
    REQUIRE(fqamsim_config_create(&cfg.ptr) == FQAMSIM_OK);
    CHECK(fqamsim_config_validate(cfg.ptr) == FQAMSIM_OK);

    CHECK(fqamsim_config_set(cfg.ptr, "beamz", "1") == FQAMSIM_ERR_CONFIG);
    CHECK(std::string(fqamsim_last_error()).find("beamz") != std::string::npos);

    CHECK(fqamsim_config_set(cfg.ptr, "n_th", "0") == FQAMSIM_OK);
    CHECK(fqamsim_config_validate(cfg.ptr) == FQAMSIM_ERR_CONFIG);
    CHECK(std::string(fqamsim_last_error()).find("n_th") != std::string::npos);

    CHECK(fqamsim_config_load("/no/such/file.cfg", &cfg.ptr) == FQAMSIM_ERR_CONFIG);
}

TEST_CASE("config file loading through the C API")
{
    const std::string path = "/tmp/fqamsim_capi_test.cfg";
    {
        std::ofstream out(path);
        out << "scenario = frequency\nn_drops = 2\nn_cells = 7\nmi_samples = 64\n";
    }
    Cfg cfg;
    REQUIRE(fqamsim_config_load(path.c_str(), &cfg.ptr) == FQAMSIM_OK);
    std::filesystem::remove(path);
}

TEST_CASE("campaign through the C API")
{
    Cfg cfg;
    REQUIRE(fqamsim_config_create(&cfg.ptr) == FQAMSIM_OK);
    set_small(cfg.ptr);

    Rep rep;
    REQUIRE(fqamsim_run_campaign(cfg.ptr, 2, &rep.ptr) == FQAMSIM_OK);
    CHECK(fqamsim_report_sample_count(rep.ptr) == 2 * 7 * 2);

    double p5 = 0.0, lo = 0.0, hi = 0.0;
    REQUIRE(fqamsim_report_metric(rep.ptr, "available_rate_95", &p5, &lo, &hi) ==
            FQAMSIM_OK);
    double mean = 0.0;
    REQUIRE(fqamsim_report_metric(rep.ptr, "average_rate", &mean, nullptr, nullptr) ==
            FQAMSIM_OK);
    double p95 = 0.0;
    REQUIRE(fqamsim_report_metric(rep.ptr, "peak_rate_5", &p95, nullptr, nullptr) ==
            FQAMSIM_OK);
    CHECK(p5 > 0.0);
    CHECK(p5 <= mean);
    CHECK(mean <= p95);
    CHECK(lo <= p5);
    CHECK(p5 <= hi);

    CHECK(fqamsim_report_metric(rep.ptr, "median", &p5, nullptr, nullptr) ==
          FQAMSIM_ERR_USAGE);

    namespace fs = std::filesystem;
    const auto dir = fs::temp_directory_path() / "fqamsim_capi_report";
    fs::remove_all(dir);
    REQUIRE(fqamsim_report_write(rep.ptr, dir.string().c_str()) == FQAMSIM_OK);
    CHECK(fs::exists(dir / "summary.json"));
    CHECK(fs::exists(dir / "samples.csv"));
    CHECK(fs::exists(dir / "cdf.csv"));
    fs::remove_all(dir);
}

TEST_CASE("paired compare through the C API")
{
    Cfg cfg;
    REQUIRE(fqamsim_config_create(&cfg.ptr) == FQAMSIM_OK);
    set_small(cfg.ptr);

    namespace fs = std::filesystem;
    const auto dir = fs::temp_directory_path() / "fqamsim_capi_compare";
    fs::remove_all(dir);

    Rep a, h;
    REQUIRE(fqamsim_compare(cfg.ptr, 2, dir.string().c_str(), &a.ptr, &h.ptr) ==
            FQAMSIM_OK);
    CHECK(fqamsim_report_sample_count(a.ptr) == fqamsim_report_sample_count(h.ptr));
    CHECK(fs::exists(dir / "all_qam" / "samples.csv"));
    CHECK(fs::exists(dir / "hybrid" / "samples.csv"));
    CHECK(fs::exists(dir / "delta_summary.json"));
    fs::remove_all(dir);
}
