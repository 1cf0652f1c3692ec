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

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace fqamsim {

/// Macro path loss model ref + slope * log10(d_km); the defaults give the
/// standard 128.1 + 37.6 log10(d_km).
struct PathLossModel {
    double ref_db = 128.1;
    double slope_per_decade_db = 37.6;
};

/// Path loss in dB, d in meters (valid for d >= 35 m).
double path_loss_db(double distance_m, const PathLossModel& model = {});

/// Thermal noise k_B * T * B in watts.
double noise_power_w(double temperature_k, double bandwidth_hz);

/// Composite per-link channel: path loss, log-normal shadowing, transmit
/// antenna gain at the receiver's angle off boresight, and per-tone
/// Rayleigh fading with E|h|^2 = 1.
struct LinkRealization {
    double path_loss_db = 0.0;
    double shadowing_db = 0.0;
    double tx_gain_db = 0.0;
    std::vector<std::complex<double>> fading; // per tone

    /// Linear power gain on tone t: 10^((g - pl + sh)/10) * |h_t|^2.
    double tone_power_gain(int t) const;
    /// Average of tone_power_gain over tones.
    double mean_power_gain() const;
    /// Complex amplitude gain on tone t (sqrt of the long-term linear
    /// gain times the fading coefficient).
    std::complex<double> tone_amplitude(int t) const;
};

/// Draw one link. Shadowing comes from stream (seed, Shadowing, shadow_id)
/// so co-sited transmitters can share it; fading from
/// (seed, Fading, fade_id, tone). flat_fading repeats one coefficient
/// across all tones.
LinkRealization draw_link(double distance_m, double angle_off_boresight,
                          const AntennaPattern& pattern, int n_tones,
                          bool flat_fading, std::uint64_t seed,
                          std::uint64_t shadow_id, std::uint64_t fade_id,
                          double shadowing_sigma_db = 8.0,
                          const PathLossModel& path_loss = {});

/// serving_rx_w / (sum of interferer powers + noise); 0 if serving power
/// is 0. All inputs linear watts.
double mean_sinr(double serving_rx_w, std::span<const double> interferer_rx_w,
                 double noise_w);

} // namespace fqamsim
