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

#include "fqamsim/modem.hpp"

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace fqamsim {

class RandomStream;

/// Victim-side composite channel for one resource block: complex amplitude
/// gain per tone (path loss, shadowing, antenna gains, fading), transmit
/// power and per-tone thermal noise, all in linear units.
struct VictimChannel {
    std::vector<std::complex<double>> tone_gain;
    double tx_power_w = 1.0;
    double noise_var_w = 1.0;
};

/// One interfering transmission. The constellation's tone count must be
/// either 1 (a per-tone transmitter occupying every victim tone
/// independently) or equal to the victim's tone count (a tone-aligned
/// block). With `project` set (victim dim 1), the entry is the slice of an
/// m_f-tone block at the victim's tone: it contributes one of its QAM
/// values with probability 1/m_f and is silent otherwise.
struct AggressorChannel {
    std::vector<std::complex<double>> tone_gain; // per victim tone
    double tx_power_w = 1.0;
    const Constellation* constellation = nullptr;
    bool project = false;
    /// Always fold this entry into the Gaussian floor, regardless of rank.
    bool fold = false;
};

/// Distribution of interference plus noise in the victim's normalized
/// receive space (victim channel divided out, so a transmitted point x
/// is received as x + i + n). The distribution is an exact finite
/// Gaussian mixture with one component per joint symbol combination of
/// the enumerated aggressors; aggressors beyond the enumeration cap are
/// folded into the per-tone Gaussian noise floor at matched mean power.
class InterferenceMixture {
public:
    int dim() const { return static_cast<int>(noise_var_.size()); }
    std::span<const double> noise_var() const { return noise_var_; }
    int enumerated_aggressors() const
    {
        return static_cast<int>(sparse_.size() + dense_offsets_.size());
    }

    /// Number of mixture components (product over enumerated aggressor
    /// symbol sets). Returned as double since it can be astronomically
    /// large for many dense aggressors.
    double component_count() const;

    struct Component {
        double prob;
        std::vector<std::complex<double>> offset;
    };
    /// Flat component list (probability, mean offset vector). Errors if
    /// the count exceeds `limit`; intended for inspection and testing.
    std::vector<Component> components(std::size_t limit = (1u << 20)) const;

    /// ln p(r) of interference-plus-noise at residual r (length dim()).
    double log_density(std::span<const std::complex<double>> r) const;

    /// Draw interference plus noise into out (length dim()).
    void sample(RandomStream& stream, std::span<std::complex<double>> out) const;

private:
    friend InterferenceMixture build_mixture(const VictimChannel&,
                                             std::vector<AggressorChannel>, int);
    friend class MixtureEvaluator;

    struct Atom {
        double lw;                   // ln(selection probability)
        std::complex<double> offset;
    };
    struct SparseAgg {
        std::vector<std::vector<Atom>> per_tone; // atoms grouped by tone
        std::vector<int> support;                // tones with nonempty atom lists
        // sampling CDF over all atoms: (cumulative weight, tone, offset)
        struct CdfEntry { double cum; int tone; std::complex<double> offset; };
        std::vector<CdfEntry> cdf;
    };
    struct Assignment {
        // tones touched by this joint tone-choice, with the subset mask of
        // sparse aggressors assigned to each
        std::vector<std::pair<std::uint16_t, std::uint16_t>> touched;
    };

    std::vector<double> noise_var_;     // per tone, normalized
    std::vector<double> inv_nu_;        // 1 / noise_var
    std::vector<double> log_pi_nu_;     // ln(pi * noise_var)
    std::vector<SparseAgg> sparse_;
    // dense per-tone cross product (all m_f == 1 aggressors convolved),
    // one atom list per tone; a single zero atom when no dense aggressor
    std::vector<std::vector<Atom>> dense_tone_;
    std::vector<std::vector<std::vector<std::complex<double>>>> dense_offsets_; // [agg][tone][k], for sampling
    std::vector<Assignment> assignments_;
    std::vector<std::vector<std::uint16_t>> tone_masks_; // distinct masks used per tone
    // flattened (sparse subset x dense) offset cross products, indexed by
    // subset_slot_[tone << n_sparse | mask]
    std::vector<std::vector<Atom>> subset_atoms_;
    std::vector<int> subset_slot_;

    void precompute_subsets();
    double log_phi(int tone, std::complex<double> u) const;
    double log_subset_factor(int tone, std::uint16_t mask, std::complex<double> u) const;
    double log_atoms(std::span<const Atom> atoms, double inv_nu, double lpn,
                     std::complex<double> u) const;
};

/// Enumerate the joint symbol distribution of the strongest
/// `enumerate_cap` aggressors (by mean received power) exactly and fold
/// the remainder into Gaussian noise of matched per-tone power.
/// enumerate_cap = 0 folds everything (Gaussian-equivalent interference).
InterferenceMixture build_mixture(const VictimChannel& victim,
                                  std::vector<AggressorChannel> aggressors,
                                  int enumerate_cap);

/// Reusable evaluator of ln p(y | victim symbol) for a fixed received
/// vector y, exploiting the fact that candidate symbols differ on a
/// single tone.
class MixtureEvaluator {
public:
    explicit MixtureEvaluator(const InterferenceMixture& mix);
    void bind(std::span<const std::complex<double>> y);
    /// ln p(y | victim transmitted `value` on `tone`, zero elsewhere).
    double log_density_given(int tone, std::complex<double> value) const;

private:
    const InterferenceMixture* mix_;
    std::vector<std::complex<double>> y_;
    std::vector<double> base_logphi_;
    std::vector<double> logf_base_; // [tone * n_masks + mask-slot]
    std::vector<int> mask_slot_;    // [tone * (1<<J) + mask] -> slot or -1
    int n_mask_slots_ = 0;
    double base_sum_ = 0.0;
    mutable std::vector<double> scratch_;
};

struct MiEstimate {
    double bits = 0.0;
    double std_err = 0.0;
    std::uint64_t n_samples = 0;
};

/// Monte Carlo estimate of the mutual information I(X;Y) in bits per
/// symbol, X uniform over the constellation, Y = x + i + n with (i + n)
/// drawn from the mixture. The conditional density is the exact mixture
/// density, so the estimator is unbiased up to MC error. Deterministic
/// given the seed and independent of evaluation order.
MiEstimate mutual_information(const Constellation& c, const InterferenceMixture& mix,
                              std::uint64_t n_samples, std::uint64_t seed);

/// Sample excess kurtosis of the real part of interference-plus-noise on
/// one tone; ~0 for Gaussian.
double excess_kurtosis(const InterferenceMixture& mix, int tone,
                       std::uint64_t n_samples, std::uint64_t seed);

/// bandwidth * mi / m_f.
double user_rate_bps(double mi_bits, double bandwidth_hz, int m_f);

/// Shannon log2(1 + sinr) in bits; debug reference only, never used for
/// reported metrics.
double shannon_rate_bits(double sinr_linear);

} // namespace fqamsim
