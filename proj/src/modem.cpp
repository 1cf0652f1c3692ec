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

#include "fqamsim/modem.hpp"

#include "fqamsim/errors.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace fqamsim {

namespace {

bool is_pow2(int v) { return v >= 1 && (v & (v - 1)) == 0; }

int ilog2(int v)
{
    int n = 0;
    while ((1 << n) < v)
        ++n;
    return n;
}

std::uint32_t gray_decode(std::uint32_t g)
{
    std::uint32_t b = 0;
    for (; g; g >>= 1)
        b ^= g;
    return b;
}

// Gray-labeled PAM levels {-(L-1), ..., L-1} for label bits of one axis.
double pam_level(std::uint32_t axis_label, int levels)
{
    const std::uint32_t idx = gray_decode(axis_label);
    return 2.0 * static_cast<double>(idx) - (levels - 1);
}

std::vector<std::complex<double>> make_qam_values(int m_q)
{
    if (m_q != 2 && m_q != 4 && m_q != 16 && m_q != 64)
        throw ConfigError("unsupported QAM order " + std::to_string(m_q) +
                          " (supported: 2, 4, 16, 64)");
    std::vector<std::complex<double>> vals(m_q);
    if (m_q == 2) {
        vals[0] = {-1.0, 0.0};
        vals[1] = {1.0, 0.0};
    } else {
        const int side = static_cast<int>(std::lround(std::sqrt(double(m_q))));
        const int axis_bits = ilog2(side);
        for (int label = 0; label < m_q; ++label) {
            const std::uint32_t i_label = static_cast<std::uint32_t>(label) >> axis_bits;
            const std::uint32_t q_label = static_cast<std::uint32_t>(label) & (side - 1);
            vals[label] = {pam_level(i_label, side), pam_level(q_label, side)};
        }
    }
    double energy = 0.0;
    for (const auto& v : vals)
        energy += std::norm(v);
    const double scale = 1.0 / std::sqrt(energy / m_q);
    for (auto& v : vals)
        v *= scale;
    return vals;
}

} // namespace

int Constellation::bits_per_symbol() const
{
    return ilog2(m_f) + ilog2(m_q);
}

const ToneVector& Constellation::point(std::uint32_t label) const
{
    if (label >= points.size())
        throw UsageError("constellation label " + std::to_string(label) + " out of range");
    return points[label];
}

std::complex<double> Constellation::active_value(std::uint32_t label) const
{
    return point(label)[static_cast<std::size_t>(active_tone[label])];
}

Constellation build_qam(int m_q)
{
    return build_fqam(1, m_q);
}

Constellation build_fqam(int m_f, int m_q)
{
    if (!is_pow2(m_f))
        throw ConfigError("FQAM tone count " + std::to_string(m_f) + " is not a power of 2");
    Constellation c;
    c.m_f = m_f;
    c.m_q = m_q;
    c.qam_values = make_qam_values(m_q); // validates m_q
    const int m = m_f * m_q;
    c.points.resize(m);
    c.active_tone.resize(m);
    // label = tone_index * m_q + qam_label (tone bits are the high bits)
    for (int tone = 0; tone < m_f; ++tone) {
        for (int k = 0; k < m_q; ++k) {
            const int label = tone * m_q + k;
            c.points[label].assign(m_f, {0.0, 0.0});
            c.points[label][tone] = c.qam_values[k];
            c.active_tone[label] = tone;
        }
    }
    return c;
}

std::uint32_t bits_to_label(const std::vector<std::uint8_t>& bits)
{
    std::uint32_t label = 0;
    for (std::uint8_t b : bits) {
        if (b > 1)
            throw UsageError("bit values must be 0 or 1");
        label = (label << 1) | b;
    }
    return label;
}

std::vector<std::uint8_t> label_to_bits(std::uint32_t label, int n_bits)
{
    std::vector<std::uint8_t> bits(n_bits);
    for (int i = 0; i < n_bits; ++i)
        bits[i] = static_cast<std::uint8_t>((label >> (n_bits - 1 - i)) & 1u);
    return bits;
}

ToneVector modulate(const Constellation& c, const std::vector<std::uint8_t>& bits)
{
    const int n = c.bits_per_symbol();
    if (static_cast<int>(bits.size()) != n)
        throw UsageError("modulate: expected " + std::to_string(n) + " bits, got " +
                         std::to_string(bits.size()));
    return c.point(bits_to_label(bits));
}

std::vector<std::uint8_t> ml_detect(const Constellation& c, const ToneVector& y,
                                    double noise_var)
{
    if (c.points.empty())
        throw UsageError("ml_detect: empty constellation");
    if (y.size() != static_cast<std::size_t>(c.m_f))
        throw UsageError("ml_detect: received vector has " + std::to_string(y.size()) +
                         " tones, constellation has " + std::to_string(c.m_f));
    if (!(noise_var > 0.0))
        throw UsageError("ml_detect: noise_var must be positive");

    int best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (int label = 0; label < c.size(); ++label) {
        double d = 0.0;
        for (int t = 0; t < c.m_f; ++t)
            d += std::norm(y[t] - c.points[label][t]);
        if (d < best_d) { // strict: ties keep the lowest label
            best_d = d;
            best = label;
        }
    }
    return label_to_bits(static_cast<std::uint32_t>(best), c.bits_per_symbol());
}

double per_tone_spectral_efficiency(const Constellation& c)
{
    return static_cast<double>(c.bits_per_symbol()) / c.m_f;
}

} // namespace fqamsim
