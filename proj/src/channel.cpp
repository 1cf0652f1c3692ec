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

#include "fqamsim/channel.hpp"

#include "fqamsim/errors.hpp"
#include "fqamsim/rng.hpp"
#include "fqamsim/units.hpp"

#include <cmath>
#include <string>

namespace fqamsim {

double path_loss_db(double distance_m, const PathLossModel& model)
{
    if (distance_m < 35.0)
        throw UsageError("path_loss_db: distance " + std::to_string(distance_m) +
                         " m below the 35 m model floor");
    return model.ref_db + model.slope_per_decade_db * std::log10(distance_m / 1000.0);
}

double noise_power_w(double temperature_k, double bandwidth_hz)
{
    if (temperature_k < 0.0 || bandwidth_hz < 0.0)
        throw UsageError("noise_power_w: negative temperature or bandwidth");
    return kBoltzmann * temperature_k * bandwidth_hz;
}

double LinkRealization::tone_power_gain(int t) const
{
    return db_to_linear(tx_gain_db - path_loss_db + shadowing_db) *
           std::norm(fading[static_cast<std::size_t>(t)]);
}

double LinkRealization::mean_power_gain() const
{
    double acc = 0.0;
    for (std::size_t t = 0; t < fading.size(); ++t)
        acc += tone_power_gain(static_cast<int>(t));
    return acc / static_cast<double>(fading.size());
}

std::complex<double> LinkRealization::tone_amplitude(int t) const
{
    const double amp = std::pow(10.0, (tx_gain_db - path_loss_db + shadowing_db) / 20.0);
    return amp * fading[static_cast<std::size_t>(t)];
}

LinkRealization draw_link(double distance_m, double angle_off_boresight,
                          const AntennaPattern& pattern, int n_tones,
                          bool flat_fading, std::uint64_t seed,
                          std::uint64_t shadow_id, std::uint64_t fade_id,
                          double shadowing_sigma_db, const PathLossModel& path_loss)
{
    if (n_tones < 1)
        throw UsageError("draw_link: n_tones must be >= 1");
    LinkRealization link;
    link.path_loss_db = path_loss_db(distance_m, path_loss);
    link.tx_gain_db = antenna_gain_db(angle_off_boresight, pattern);

    RandomStream shadow_stream(seed, Dom::Shadowing, shadow_id);
    link.shadowing_db = shadowing_sigma_db * shadow_stream.next_normal();

    link.fading.resize(n_tones);
    RandomStream fade_stream(seed, Dom::Fading, fade_id);
    if (flat_fading) {
        const auto h = fade_stream.next_cnormal(1.0);
        for (auto& f : link.fading)
            f = h;
    } else {
        for (auto& f : link.fading)
            f = fade_stream.next_cnormal(1.0);
    }
    return link;
}

double mean_sinr(double serving_rx_w, std::span<const double> interferer_rx_w,
                 double noise_w)
{
    if (serving_rx_w <= 0.0)
        return 0.0;
    double denom = noise_w;
    for (double p : interferer_rx_w)
        denom += p;
    if (denom <= 0.0)
        throw UsageError("mean_sinr: interference plus noise must be positive");
    return serving_rx_w / denom;
}

} // namespace fqamsim
