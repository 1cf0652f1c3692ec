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

#include "fqamsim/rate.hpp"

#include "fqamsim/errors.hpp"
#include "fqamsim/rng.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace fqamsim {

namespace {

constexpr std::size_t kMaxAssignments = 1u << 16;
constexpr std::size_t kMaxDenseAtomsPerTone = 4096;
constexpr std::size_t kMaxSubsetCombos = 4096;

// terms more than this far below the maximum cannot move the sum at
// double precision
constexpr double kLseCutoff = 40.0;

double logsumexp(std::span<const double> v)
{
    double m = -std::numeric_limits<double>::infinity();
    for (double x : v)
        m = std::max(m, x);
    if (!std::isfinite(m))
        return m;
    double s = 0.0;
    for (double x : v) {
        if (x - m > -kLseCutoff)
            s += std::exp(x - m);
    }
    return m + std::log(s);
}

} // namespace

double InterferenceMixture::log_atoms(std::span<const Atom> atoms, double inv_nu,
                                      double lpn, std::complex<double> u) const
{
    if (atoms.size() == 1) {
        const auto& a = atoms[0];
        return a.lw - std::norm(u - a.offset) * inv_nu - lpn;
    }
    double m = -std::numeric_limits<double>::infinity();
    double buf[1024];
    std::vector<double> heap;
    double* e = buf;
    if (atoms.size() > std::size(buf)) {
        heap.resize(atoms.size());
        e = heap.data();
    }
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        e[i] = atoms[i].lw - std::norm(u - atoms[i].offset) * inv_nu;
        m = std::max(m, e[i]);
    }
    if (!std::isfinite(m))
        return m;
    double s = 0.0;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        if (e[i] - m > -kLseCutoff)
            s += std::exp(e[i] - m);
    }
    return m + std::log(s) - lpn;
}

double InterferenceMixture::log_phi(int tone, std::complex<double> u) const
{
    return log_atoms(dense_tone_[static_cast<std::size_t>(tone)],
                     inv_nu_[static_cast<std::size_t>(tone)],
                     log_pi_nu_[static_cast<std::size_t>(tone)], u);
}

void InterferenceMixture::precompute_subsets()
{
    const int d = dim();
    const std::size_t j = sparse_.size();
    subset_slot_.assign(static_cast<std::size_t>(d) << j, -1);
    for (int t = 0; t < d; ++t) {
        for (std::uint16_t mask : tone_masks_[static_cast<std::size_t>(t)]) {
            // cross product of the sparse atoms in `mask` on tone t with the
            // dense per-tone atoms
            std::vector<Atom> atoms{{0.0, {0.0, 0.0}}};
            for (std::size_t jbit = 0; jbit < j; ++jbit) {
                if (!(mask & (1u << jbit)))
                    continue;
                const auto& list = sparse_[jbit].per_tone[static_cast<std::size_t>(t)];
                std::vector<Atom> next;
                next.reserve(atoms.size() * list.size());
                for (const auto& a : atoms)
                    for (const auto& b : list)
                        next.push_back({a.lw + b.lw, a.offset + b.offset});
                atoms = std::move(next);
                if (atoms.size() > kMaxSubsetCombos)
                    throw ConfigError("aggressor symbol cross product too large; lower "
                                      "the aggressor cap");
            }
            const auto& dense = dense_tone_[static_cast<std::size_t>(t)];
            if (dense.size() > 1 || dense[0].lw != 0.0 ||
                dense[0].offset != std::complex<double>{0.0, 0.0}) {
                std::vector<Atom> next;
                next.reserve(atoms.size() * dense.size());
                for (const auto& a : atoms)
                    for (const auto& b : dense)
                        next.push_back({a.lw + b.lw, a.offset + b.offset});
                atoms = std::move(next);
                if (atoms.size() > kMaxSubsetCombos)
                    throw ConfigError("aggressor symbol cross product too large; lower "
                                      "the aggressor cap");
            }
            subset_slot_[(static_cast<std::size_t>(t) << j) + mask] =
                static_cast<int>(subset_atoms_.size());
            subset_atoms_.push_back(std::move(atoms));
        }
    }
}

double InterferenceMixture::log_subset_factor(int tone, std::uint16_t mask,
                                              std::complex<double> u) const
{
    const int slot =
        subset_slot_[(static_cast<std::size_t>(tone) << sparse_.size()) + mask];
    return log_atoms(subset_atoms_[static_cast<std::size_t>(slot)],
                     inv_nu_[static_cast<std::size_t>(tone)],
                     log_pi_nu_[static_cast<std::size_t>(tone)], u);
}

double InterferenceMixture::component_count() const
{
    double count = 1.0;
    for (const auto& agg : sparse_) {
        std::size_t atoms = 0;
        for (const auto& list : agg.per_tone)
            atoms += list.size();
        count *= static_cast<double>(atoms);
    }
    for (const auto& agg : dense_offsets_) {
        for (const auto& tone : agg)
            count *= static_cast<double>(tone.size());
    }
    return count;
}

std::vector<InterferenceMixture::Component>
InterferenceMixture::components(std::size_t limit) const
{
    if (component_count() > static_cast<double>(limit))
        throw UsageError("mixture component enumeration would exceed limit of " +
                         std::to_string(limit));
    const int d = dim();
    std::vector<Component> comps{{1.0, std::vector<std::complex<double>>(d, {0.0, 0.0})}};
    for (const auto& agg : sparse_) {
        std::vector<Component> next;
        for (const auto& c : comps) {
            for (int t = 0; t < d; ++t) {
                for (const auto& a : agg.per_tone[static_cast<std::size_t>(t)]) {
                    Component nc = c;
                    nc.prob *= std::exp(a.lw);
                    nc.offset[static_cast<std::size_t>(t)] += a.offset;
                    next.push_back(std::move(nc));
                }
            }
        }
        comps = std::move(next);
    }
    for (const auto& agg : dense_offsets_) {
        for (int t = 0; t < d; ++t) {
            const auto& offs = agg[static_cast<std::size_t>(t)];
            std::vector<Component> next;
            next.reserve(comps.size() * offs.size());
            for (const auto& c : comps) {
                for (const auto& o : offs) {
                    Component nc = c;
                    nc.prob /= static_cast<double>(offs.size());
                    nc.offset[static_cast<std::size_t>(t)] += o;
                    next.push_back(std::move(nc));
                }
            }
            comps = std::move(next);
        }
    }
    return comps;
}

double InterferenceMixture::log_density(std::span<const std::complex<double>> r) const
{
    MixtureEvaluator ev(*this);
    ev.bind(r);
    return ev.log_density_given(0, {0.0, 0.0});
}

void InterferenceMixture::sample(RandomStream& stream,
                                 std::span<std::complex<double>> out) const
{
    const int d = dim();
    for (int t = 0; t < d; ++t)
        out[static_cast<std::size_t>(t)] =
            stream.next_cnormal(noise_var_[static_cast<std::size_t>(t)]);
    for (const auto& agg : sparse_) {
        const double u = stream.next_unit();
        auto it = std::upper_bound(agg.cdf.begin(), agg.cdf.end(), u,
                                   [](double v, const SparseAgg::CdfEntry& e) {
                                       return v < e.cum;
                                   });
        if (it == agg.cdf.end())
            it = std::prev(agg.cdf.end());
        out[static_cast<std::size_t>(it->tone)] += it->offset;
    }
    for (const auto& agg : dense_offsets_) {
        for (int t = 0; t < d; ++t) {
            const auto& offs = agg[static_cast<std::size_t>(t)];
            out[static_cast<std::size_t>(t)] += offs[stream.next_below(offs.size())];
        }
    }
}

InterferenceMixture build_mixture(const VictimChannel& victim,
                                  std::vector<AggressorChannel> aggressors,
                                  int enumerate_cap)
{
    const int d = static_cast<int>(victim.tone_gain.size());
    if (d < 1)
        throw UsageError("victim channel must cover at least one tone");
    if (!(victim.noise_var_w > 0.0))
        throw UsageError("victim noise variance must be positive");
    if (!(victim.tx_power_w > 0.0))
        throw UsageError("victim transmit power must be positive");
    if (enumerate_cap < 0 || enumerate_cap > 16)
        throw ConfigError("aggressor enumeration cap must be in [0, 16]");

    std::vector<std::complex<double>> victim_amp(static_cast<std::size_t>(d));
    const double sp = std::sqrt(victim.tx_power_w);
    for (int t = 0; t < d; ++t) {
        victim_amp[static_cast<std::size_t>(t)] = sp * victim.tone_gain[static_cast<std::size_t>(t)];
        if (std::norm(victim_amp[static_cast<std::size_t>(t)]) <= 0.0)
            throw UsageError("victim channel gain must be nonzero on every tone");
    }

    // Validate aggressor shapes and rank by mean received power.
    struct Ranked {
        std::size_t index;
        double power;
    };
    std::vector<Ranked> ranked;
    ranked.reserve(aggressors.size());
    for (std::size_t i = 0; i < aggressors.size(); ++i) {
        const auto& a = aggressors[i];
        if (a.constellation == nullptr)
            throw UsageError("aggressor constellation must not be null");
        const int mf = a.constellation->m_f;
        if (a.project) {
            if (d != 1)
                throw UsageError("projected aggressors require a single-tone victim block");
            if (a.tone_gain.size() != 1)
                throw UsageError("projected aggressor must carry exactly one tone gain");
        } else if (mf == d || mf == 1) {
            if (a.tone_gain.size() != static_cast<std::size_t>(d))
                throw UsageError("aggressor tone gains must cover the victim block");
        } else {
            throw ConfigError("aggressor tone count m_f=" + std::to_string(mf) +
                              " mismatches victim block of " + std::to_string(d) + " tones");
        }
        if (a.fold)
            continue;
        double mean_gain = 0.0;
        for (const auto& g : a.tone_gain)
            mean_gain += std::norm(g);
        mean_gain /= static_cast<double>(a.tone_gain.size());
        ranked.push_back({i, a.tx_power_w * mean_gain});
    }
    std::stable_sort(ranked.begin(), ranked.end(),
                     [](const Ranked& a, const Ranked& b) { return a.power > b.power; });

    InterferenceMixture mix;
    const std::size_t n_enum = std::min<std::size_t>(static_cast<std::size_t>(enumerate_cap),
                                                     ranked.size());

    // Fold the marked entries and everything beyond the cap into the
    // per-tone noise floor.
    std::vector<std::size_t> folded;
    for (std::size_t i = 0; i < aggressors.size(); ++i) {
        if (aggressors[i].fold)
            folded.push_back(i);
    }
    for (std::size_t r = n_enum; r < ranked.size(); ++r)
        folded.push_back(ranked[r].index);

    std::vector<double> fold(static_cast<std::size_t>(d), 0.0);
    for (std::size_t idx : folded) {
        const auto& a = aggressors[idx];
        const int mf = a.constellation->m_f;
        const double frac = (mf > 1) ? 1.0 / mf : 1.0; // mean symbol energy per tone
        if (a.project) {
            fold[0] += a.tx_power_w * std::norm(a.tone_gain[0]) * frac;
        } else {
            for (int t = 0; t < d; ++t)
                fold[static_cast<std::size_t>(t)] +=
                    a.tx_power_w * std::norm(a.tone_gain[static_cast<std::size_t>(t)]) * frac;
        }
    }
    mix.noise_var_.resize(static_cast<std::size_t>(d));
    mix.inv_nu_.resize(static_cast<std::size_t>(d));
    mix.log_pi_nu_.resize(static_cast<std::size_t>(d));
    for (int t = 0; t < d; ++t) {
        const double nu = (victim.noise_var_w + fold[static_cast<std::size_t>(t)]) /
                          std::norm(victim_amp[static_cast<std::size_t>(t)]);
        mix.noise_var_[static_cast<std::size_t>(t)] = nu;
        mix.inv_nu_[static_cast<std::size_t>(t)] = 1.0 / nu;
        mix.log_pi_nu_[static_cast<std::size_t>(t)] = std::log(M_PI * nu);
    }

    // Enumerated aggressors, expressed in the victim's normalized space.
    std::vector<std::vector<std::vector<std::complex<double>>>> dense;
    for (std::size_t r = 0; r < n_enum; ++r) {
        const auto& a = aggressors[ranked[r].index];
        const auto& c = *a.constellation;
        const double spw = std::sqrt(a.tx_power_w);
        if (a.project) {
            InterferenceMixture::SparseAgg agg;
            agg.per_tone.resize(1);
            const std::complex<double> s = spw * a.tone_gain[0] / victim_amp[0];
            if (c.m_f > 1)
                agg.per_tone[0].push_back(
                    {std::log(double(c.m_f - 1) / c.m_f), {0.0, 0.0}});
            const double lw = -std::log(double(c.m_f) * c.m_q);
            for (const auto& v : c.qam_values)
                agg.per_tone[0].push_back({lw, s * v});
            mix.sparse_.push_back(std::move(agg));
        } else if (c.m_f == d) {
            InterferenceMixture::SparseAgg agg;
            agg.per_tone.resize(static_cast<std::size_t>(d));
            const double lw = -std::log(double(c.size()));
            for (int label = 0; label < c.size(); ++label) {
                const int tone = c.active_tone[static_cast<std::size_t>(label)];
                const std::complex<double> s =
                    spw * a.tone_gain[static_cast<std::size_t>(tone)] /
                    victim_amp[static_cast<std::size_t>(tone)];
                agg.per_tone[static_cast<std::size_t>(tone)].push_back(
                    {lw, s * c.active_value(static_cast<std::uint32_t>(label))});
            }
            mix.sparse_.push_back(std::move(agg));
        } else { // m_f == 1, d > 1: independent QAM symbol on every victim tone
            std::vector<std::vector<std::complex<double>>> per_tone(
                static_cast<std::size_t>(d));
            for (int t = 0; t < d; ++t) {
                const std::complex<double> s =
                    spw * a.tone_gain[static_cast<std::size_t>(t)] /
                    victim_amp[static_cast<std::size_t>(t)];
                for (const auto& v : c.qam_values)
                    per_tone[static_cast<std::size_t>(t)].push_back(s * v);
            }
            dense.push_back(std::move(per_tone));
        }
    }
    if (mix.sparse_.size() > 8)
        throw ConfigError("too many enumerated tone-sparse aggressors (max 8)");
    mix.dense_offsets_ = std::move(dense);

    // Per-tone cross product of the dense aggressors.
    mix.dense_tone_.resize(static_cast<std::size_t>(d));
    for (int t = 0; t < d; ++t) {
        std::vector<InterferenceMixture::Atom> atoms{{0.0, {0.0, 0.0}}};
        for (const auto& agg : mix.dense_offsets_) {
            const auto& offs = agg[static_cast<std::size_t>(t)];
            std::vector<InterferenceMixture::Atom> next;
            next.reserve(atoms.size() * offs.size());
            const double lw = -std::log(double(offs.size()));
            for (const auto& a : atoms)
                for (const auto& o : offs)
                    next.push_back({a.lw + lw, a.offset + o});
            atoms = std::move(next);
            if (atoms.size() > kMaxDenseAtomsPerTone)
                throw ConfigError("dense aggressor cross product too large; lower the "
                                  "aggressor cap");
        }
        mix.dense_tone_[static_cast<std::size_t>(t)] = std::move(atoms);
    }

    // Supports, sampling CDFs, and the joint tone-choice table.
    for (auto& agg : mix.sparse_) {
        double cum = 0.0;
        for (int t = 0; t < static_cast<int>(agg.per_tone.size()); ++t) {
            if (!agg.per_tone[static_cast<std::size_t>(t)].empty())
                agg.support.push_back(t);
            for (const auto& a : agg.per_tone[static_cast<std::size_t>(t)]) {
                cum += std::exp(a.lw);
                agg.cdf.push_back({cum, t, a.offset});
            }
        }
    }
    {
        std::size_t n_assign = 1;
        for (const auto& agg : mix.sparse_) {
            n_assign *= agg.support.size();
            if (n_assign > kMaxAssignments)
                throw ConfigError("joint aggressor tone-choice table too large; lower the "
                                  "aggressor cap or tone count");
        }
        const std::size_t j = mix.sparse_.size();
        if (j > 0) {
            std::vector<std::size_t> idx(j, 0);
            for (;;) {
                InterferenceMixture::Assignment as;
                // group aggressors by chosen tone
                std::vector<std::pair<std::uint16_t, std::uint16_t>> tm;
                for (std::size_t i = 0; i < j; ++i) {
                    const int tone = mix.sparse_[i].support[idx[i]];
                    bool found = false;
                    for (auto& p : tm) {
                        if (p.first == tone) {
                            p.second |= static_cast<std::uint16_t>(1u << i);
                            found = true;
                        }
                    }
                    if (!found)
                        tm.push_back({static_cast<std::uint16_t>(tone),
                                      static_cast<std::uint16_t>(1u << i)});
                }
                std::sort(tm.begin(), tm.end());
                as.touched = std::move(tm);
                mix.assignments_.push_back(std::move(as));
                std::size_t i = 0;
                for (; i < j; ++i) {
                    if (++idx[i] < mix.sparse_[i].support.size())
                        break;
                    idx[i] = 0;
                }
                if (i == j)
                    break;
            }
        }
    }
    mix.tone_masks_.resize(static_cast<std::size_t>(d));
    for (const auto& as : mix.assignments_) {
        for (const auto& [tone, mask] : as.touched) {
            auto& masks = mix.tone_masks_[tone];
            if (std::find(masks.begin(), masks.end(), mask) == masks.end())
                masks.push_back(mask);
        }
    }
    mix.precompute_subsets();
    return mix;
}

MixtureEvaluator::MixtureEvaluator(const InterferenceMixture& mix) : mix_(&mix)
{
    const int d = mix.dim();
    const std::size_t j = mix.sparse_.size();
    y_.resize(static_cast<std::size_t>(d));
    base_logphi_.resize(static_cast<std::size_t>(d));
    mask_slot_.assign(static_cast<std::size_t>(d) << j, -1);
    int slot = 0;
    for (int t = 0; t < d; ++t)
        for (std::uint16_t mask : mix.tone_masks_[static_cast<std::size_t>(t)])
            mask_slot_[(static_cast<std::size_t>(t) << j) + mask] = slot++;
    n_mask_slots_ = slot;
    logf_base_.resize(static_cast<std::size_t>(n_mask_slots_));
    scratch_.reserve(mix.assignments_.size() + 16);
}

void MixtureEvaluator::bind(std::span<const std::complex<double>> y)
{
    const int d = mix_->dim();
    const std::size_t j = mix_->sparse_.size();
    base_sum_ = 0.0;
    for (int t = 0; t < d; ++t) {
        y_[static_cast<std::size_t>(t)] = y[static_cast<std::size_t>(t)];
        base_logphi_[static_cast<std::size_t>(t)] =
            mix_->log_phi(t, y[static_cast<std::size_t>(t)]);
        base_sum_ += base_logphi_[static_cast<std::size_t>(t)];
    }
    for (int t = 0; t < d; ++t)
        for (std::uint16_t mask : mix_->tone_masks_[static_cast<std::size_t>(t)])
            logf_base_[static_cast<std::size_t>(
                mask_slot_[(static_cast<std::size_t>(t) << j) + mask])] =
                mix_->log_subset_factor(t, mask, y[static_cast<std::size_t>(t)]);
}

double MixtureEvaluator::log_density_given(int tone, std::complex<double> value) const
{
    const std::size_t j = mix_->sparse_.size();
    const std::complex<double> u = y_[static_cast<std::size_t>(tone)] - value;
    const double lphi_shift = mix_->log_phi(tone, u);
    const double base = base_sum_ - base_logphi_[static_cast<std::size_t>(tone)] + lphi_shift;
    if (mix_->assignments_.empty())
        return base;

    // shifted subset factors for the victim's tone
    double fshift[1u << 8];
    for (std::uint16_t mask : mix_->tone_masks_[static_cast<std::size_t>(tone)])
        fshift[mask] = mix_->log_subset_factor(tone, mask, u);

    scratch_.clear();
    for (const auto& as : mix_->assignments_) {
        double term = base;
        for (const auto& [t, mask] : as.touched) {
            if (t == tone) {
                term += fshift[mask] - lphi_shift;
            } else {
                term += logf_base_[static_cast<std::size_t>(
                            mask_slot_[(static_cast<std::size_t>(t) << j) + mask])] -
                        base_logphi_[t];
            }
        }
        scratch_.push_back(term);
    }
    return logsumexp(scratch_);
}

MiEstimate mutual_information(const Constellation& c, const InterferenceMixture& mix,
                              std::uint64_t n_samples, std::uint64_t seed)
{
    if (c.points.empty())
        throw UsageError("mutual_information: empty constellation");
    if (mix.dim() != c.m_f)
        throw UsageError("mutual_information: mixture covers " + std::to_string(mix.dim()) +
                         " tones, constellation has " + std::to_string(c.m_f));
    if (n_samples < 1)
        throw UsageError("mutual_information: n_samples must be >= 1");

    const int m = c.size();
    const double log_m = std::log(double(m));
    std::vector<int> cand_tone(static_cast<std::size_t>(m));
    std::vector<std::complex<double>> cand_val(static_cast<std::size_t>(m));
    for (int l = 0; l < m; ++l) {
        cand_tone[static_cast<std::size_t>(l)] = c.active_tone[static_cast<std::size_t>(l)];
        cand_val[static_cast<std::size_t>(l)] = c.active_value(static_cast<std::uint32_t>(l));
    }

    MixtureEvaluator ev(mix);
    std::vector<std::complex<double>> y(static_cast<std::size_t>(mix.dim()));
    std::vector<double> ll(static_cast<std::size_t>(m));

    double acc = 0.0;
    double acc_sq = 0.0;
    for (std::uint64_t s = 0; s < n_samples; ++s) {
        RandomStream stream(seed, Dom::MiSample, s);
        const auto label = static_cast<std::size_t>(stream.next_below(
            static_cast<std::uint64_t>(m)));
        mix.sample(stream, y);
        y[static_cast<std::size_t>(cand_tone[label])] += cand_val[label];
        ev.bind(y);
        for (int l = 0; l < m; ++l)
            ll[static_cast<std::size_t>(l)] =
                ev.log_density_given(cand_tone[static_cast<std::size_t>(l)],
                                     cand_val[static_cast<std::size_t>(l)]);
        const double denom = logsumexp(ll) - log_m;
        const double info = ll[label] - denom; // nats
        acc += info;
        acc_sq += info * info;
    }
    const double n = static_cast<double>(n_samples);
    const double mean_nats = acc / n;
    const double var_nats = std::max(0.0, acc_sq / n - mean_nats * mean_nats);
    MiEstimate est;
    // clamp MC noise into the information-theoretic range [0, log2 M]
    est.bits = std::clamp(mean_nats / M_LN2, 0.0, std::log2(double(m)));
    est.std_err = std::sqrt(var_nats / n) / M_LN2;
    est.n_samples = n_samples;
    return est;
}

double excess_kurtosis(const InterferenceMixture& mix, int tone,
                       std::uint64_t n_samples, std::uint64_t seed)
{
    if (tone < 0 || tone >= mix.dim())
        throw UsageError("excess_kurtosis: tone index out of range");
    if (n_samples < 4)
        throw UsageError("excess_kurtosis: need at least 4 samples");
    std::vector<std::complex<double>> buf(static_cast<std::size_t>(mix.dim()));
    double m1 = 0.0, m2 = 0.0, m3 = 0.0, m4 = 0.0;
    for (std::uint64_t s = 0; s < n_samples; ++s) {
        RandomStream stream(seed, Dom::KurtSample, s);
        mix.sample(stream, buf);
        const double x = buf[static_cast<std::size_t>(tone)].real();
        m1 += x;
        m2 += x * x;
        m3 += x * x * x;
        m4 += x * x * x * x;
    }
    const double n = static_cast<double>(n_samples);
    m1 /= n;
    m2 /= n;
    m3 /= n;
    m4 /= n;
    const double var = m2 - m1 * m1;
    const double mu4 = m4 - 4.0 * m3 * m1 + 6.0 * m2 * m1 * m1 - 3.0 * m1 * m1 * m1 * m1;
    return mu4 / (var * var) - 3.0;
}

double user_rate_bps(double mi_bits, double bandwidth_hz, int m_f)
{
    if (mi_bits < 0.0 || bandwidth_hz < 0.0)
        throw UsageError("user_rate_bps: negative input");
    if (m_f < 1)
        throw UsageError("user_rate_bps: m_f must be >= 1");
    return bandwidth_hz * mi_bits / m_f;
}

double shannon_rate_bits(double sinr_linear)
{
    return std::log2(1.0 + sinr_linear);
}

} // namespace fqamsim
