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

#include <complex>
#include <cstdint>
#include <vector>

namespace fqamsim {

using ToneVector = std::vector<std::complex<double>>;

/// A labeled constellation in complex m_f-dimensional tone space.
///
/// Each of the m_f * m_q points activates exactly one tone and carries an
/// m_q-ary QAM value on it; m_f == 1 degenerates to plain QAM. Points are
/// indexed by their bit label read MSB-first: the log2(m_f) tone-select
/// bits (natural binary) followed by the log2(m_q) QAM bits (Gray).
/// Mean energy over all points is normalized to 1; transmit power is
/// applied in the link budget, not here.
struct Constellation {
    int m_f = 1;
    int m_q = 1;
    std::vector<ToneVector> points;     // [label][tone]
    std::vector<int> active_tone;       // [label]
    std::vector<std::complex<double>> qam_values; // the m_q Gray-labeled QAM symbols

    int size() const { return static_cast<int>(points.size()); }
    int bits_per_symbol() const;
    const ToneVector& point(std::uint32_t label) const;
    /// Value carried on the active tone of `label`.
    std::complex<double> active_value(std::uint32_t label) const;
};

/// Square QAM (m_q in {4, 16, 64}) or BPSK (m_q = 2), Gray labeled,
/// unit mean energy, m_f = 1.
Constellation build_qam(int m_q);

/// (m_f, m_q)-FQAM: one active tone among m_f, QAM-modulated.
/// m_f must be a power of 2; build_fqam(1, m_q) == build_qam(m_q).
Constellation build_fqam(int m_f, int m_q);

/// Map a bit string of length bits_per_symbol() to its tone vector.
ToneVector modulate(const Constellation& c, const std::vector<std::uint8_t>& bits);

/// Hard maximum-likelihood detection: label of the point nearest to y in
/// Euclidean distance; ties resolved toward the lowest label.
std::vector<std::uint8_t> ml_detect(const Constellation& c, const ToneVector& y,
                                    double noise_var);

/// bits_per_symbol / m_f.
double per_tone_spectral_efficiency(const Constellation& c);

std::uint32_t bits_to_label(const std::vector<std::uint8_t>& bits);
std::vector<std::uint8_t> label_to_bits(std::uint32_t label, int n_bits);

} // namespace fqamsim
