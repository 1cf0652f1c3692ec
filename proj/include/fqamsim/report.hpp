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

#include "fqamsim/campaign.hpp"

#include <string>

namespace fqamsim {

/// Write summary.json (metrics, CIs, config echo), samples.csv (one row
/// per user-rate sample) and cdf.csv (rate, cumulative fraction) into
/// out_dir. Output is byte-stable across runs except for the
/// `generated_at` timestamp in summary.json.
void emit_report(const MetricsReport& report, const std::string& out_dir);

/// Write all_qam/ and hybrid/ report trees plus delta_summary.json with
/// the paired metric deltas.
void emit_compare(const CompareResult& result, const std::string& out_dir);

} // namespace fqamsim
