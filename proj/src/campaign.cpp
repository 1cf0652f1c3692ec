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

#include "fqamsim/campaign.hpp"

#include "fqamsim/channel.hpp"
#include "fqamsim/errors.hpp"
#include "fqamsim/rate.hpp"
#include "fqamsim/rng.hpp"
#include "fqamsim/units.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <memory>
#include <mutex>
#include <thread>
#include <unordered_map>

#ifndef FQAMSIM_BUILD_TAG
#define FQAMSIM_BUILD_TAG "v0.1.0"
#endif

namespace fqamsim {

namespace {

struct Interferer {
    int source = -1; // beam id (space) or cell id (frequency)
    double rx_power_w = 0.0;
    double tx_power_w = 0.0;
    std::vector<std::complex<double>> amps; // per-tone complex amplitude gain
};

struct UserCtx {
    int ue = -1;
    int cell = -1;
    UeKind kind = UeKind::UniformRandom;
    double serving_power_w = 0.0; // transmit power of the serving beam/subband
    double serving_rx_w = 0.0;    // mean received power
    std::vector<std::complex<double>> serving_amps;
    double noise_w = 0.0;
    double bandwidth_hz = 0.0;
    double sinr_db = 0.0;
    std::vector<Interferer> interferers; // sorted by rx power, descending
    int n_aggressors = 0;                // prefix of `interferers`
    std::uint64_t report_seed = 0;
    std::uint64_t oracle_seed = 0;
};

std::uint64_t pack_ids(std::uint64_t hi, std::uint64_t lo)
{
    return (hi << 32) | lo;
}

// Dominant-interferer rule: aggressors are the interferers within
// `rel_db` of the strongest one and above the noise floor.
int count_aggressors(const std::vector<Interferer>& sorted, double noise_w, double rel_db)
{
    if (sorted.empty())
        return 0;
    const double floor_w = sorted.front().rx_power_w * db_to_linear(-rel_db);
    int n = 0;
    for (const auto& it : sorted) {
        if (it.rx_power_w >= floor_w && it.rx_power_w > noise_w)
            ++n;
        else
            break;
    }
    return n;
}

double compute_sinr_db(const UserCtx& u)
{
    std::vector<double> interf;
    interf.reserve(u.interferers.size());
    for (const auto& it : u.interferers)
        interf.push_back(it.rx_power_w);
    const double lin = mean_sinr(u.serving_rx_w, interf, u.noise_w);
    return linear_to_db(std::max(lin, 1e-30));
}

struct RateOut {
    double mi_bits = 0.0;
    double rate_bps = 0.0;
};

// Rate policy: FQAM users decode with the exact mixture of their strongest
// aggressors (conventional receivers cannot exploit non-Gaussian ICI, so
// QAM users see all interference folded into the Gaussian noise floor).
// Power model: the transmit power is a per-tone spectral budget; an
// m_f-tone FQAM block concentrates its whole budget on the active tone, so
// the mean radiated power per tone is modulation independent.
RateOut compute_user_rate(const UserCtx& u, Modulation own,
                          const std::vector<Modulation>& source_mod,
                          const Constellation& qam_c, const Constellation& fqam_c,
                          const SimConfig& cfg, int n_samples, std::uint64_t seed)
{
    RateOut out;
    const int m_f = static_cast<int>(u.serving_amps.size());
    if (own == Modulation::Fqam) {
        VictimChannel victim{u.serving_amps, u.serving_power_w * fqam_c.m_f, u.noise_w};
        std::vector<AggressorChannel> aggs;
        aggs.reserve(u.interferers.size());
        for (std::size_t i = 0; i < u.interferers.size(); ++i) {
            const auto& it = u.interferers[i];
            const bool fqam_src =
                source_mod[static_cast<std::size_t>(it.source)] == Modulation::Fqam;
            AggressorChannel a;
            a.tone_gain = it.amps;
            a.tx_power_w = fqam_src ? it.tx_power_w * fqam_c.m_f : it.tx_power_w;
            a.constellation = fqam_src ? &fqam_c : &qam_c;
            // QAM interference is near-Gaussian; only tone-sparse FQAM
            // aggressors inside the aggressor set are worth enumerating
            a.fold = !fqam_src || static_cast<int>(i) >= u.n_aggressors;
            aggs.push_back(std::move(a));
        }
        const auto mix = build_mixture(victim, std::move(aggs), cfg.aggressor_cap);
        const auto mi = mutual_information(fqam_c, mix, static_cast<std::uint64_t>(n_samples),
                                           seed);
        out.mi_bits = mi.bits;
        out.rate_bps = user_rate_bps(mi.bits, u.bandwidth_hz, fqam_c.m_f);
        return out;
    }
    // QAM: per-tone mutual information, averaged over the block's tones.
    const int per_tone = std::max(1, n_samples / m_f);
    double mi_sum = 0.0;
    for (int t = 0; t < m_f; ++t) {
        VictimChannel victim{{u.serving_amps[static_cast<std::size_t>(t)]},
                             u.serving_power_w,
                             u.noise_w};
        std::vector<AggressorChannel> aggs;
        aggs.reserve(u.interferers.size());
        for (const auto& it : u.interferers) {
            AggressorChannel a;
            a.tone_gain = {it.amps[static_cast<std::size_t>(t)]};
            if (source_mod[static_cast<std::size_t>(it.source)] == Modulation::Fqam) {
                a.tx_power_w = it.tx_power_w * fqam_c.m_f;
                a.constellation = &fqam_c;
                a.project = true;
            } else {
                a.tx_power_w = it.tx_power_w;
                a.constellation = &qam_c;
            }
            aggs.push_back(std::move(a));
        }
        const auto mix = build_mixture(victim, std::move(aggs), 0);
        const auto mi = mutual_information(qam_c, mix, static_cast<std::uint64_t>(per_tone),
                                           derive_seed(seed, Dom::ReportMi,
                                                       static_cast<std::uint64_t>(t)));
        mi_sum += mi.bits;
    }
    out.mi_bits = mi_sum / m_f;
    out.rate_bps = user_rate_bps(out.mi_bits, u.bandwidth_hz, 1);
    return out;
}

std::uint64_t rate_cache_key(const UserCtx& u, Modulation own,
                             const std::vector<Modulation>& source_mod)
{
    // QAM rates depend only on mean interference powers, which the power
    // model keeps modulation independent
    if (own == Modulation::Qam)
        return 0;
    std::uint64_t key = std::uint64_t{1} << 63;
    for (std::size_t i = 0; i < u.interferers.size() && i < 62; ++i) {
        if (source_mod[static_cast<std::size_t>(u.interferers[i].source)] == Modulation::Fqam)
            key |= std::uint64_t{1} << i;
    }
    return key;
}

struct SpaceDrop {
    SimConfig cfg;
    int drop_index = 0;
    std::vector<UePlacement> users;
    std::vector<UserCtx> ctx;
    Constellation qam_c;
    Constellation fqam_c;
    std::vector<std::unordered_map<std::uint64_t, double>> oracle_cache;
};

std::shared_ptr<SpaceDrop> build_space_drop(const SimConfig& cfg, int drop_index)
{
    auto sd = std::make_shared<SpaceDrop>();
    sd->cfg = cfg;
    sd->drop_index = drop_index;
    const std::uint64_t drop_seed =
        derive_seed(cfg.master_seed, Dom::DropSeed, static_cast<std::uint64_t>(drop_index));
    const SitePlan plan = build_lattice(cfg.n_cells, cfg.isd_m);
    sd->users = drop_users(plan, cfg.users_per_cell, drop_seed, cfg.min_ue_bs_distance_m);
    const auto pattern = AntennaPattern::directional(cfg.beam_phi_3db_rad);
    sd->qam_c = build_qam(cfg.qam_m_q);
    sd->fqam_c = build_fqam(cfg.fqam_m_f, cfg.fqam_m_q);
    const double beam_power_w = dbm_to_watts(cfg.bs_power_dbm) / cfg.users_per_cell;
    const double noise_w = noise_power_w(cfg.noise_temperature_k, cfg.ue_bandwidth_hz);
    const PathLossModel pl_model{cfg.path_loss_ref_db, cfg.path_loss_slope_db};
    const int n_users = static_cast<int>(sd->users.size());

    // one beam per user, boresight at the user at drop time
    std::vector<Beam> beams(static_cast<std::size_t>(n_users));
    for (int i = 0; i < n_users; ++i) {
        const auto& ue = sd->users[static_cast<std::size_t>(i)];
        beams[static_cast<std::size_t>(i)] = {
            ue.cell, ue.ue_id,
            bearing(plan.bs_positions[static_cast<std::size_t>(ue.cell)], ue.position),
            pattern};
    }

    std::vector<std::vector<int>> tier(static_cast<std::size_t>(plan.n_cells));
    for (int c = 0; c < plan.n_cells; ++c)
        tier[static_cast<std::size_t>(c)] = first_tier_interferers(plan, c);

    sd->ctx.resize(static_cast<std::size_t>(n_users));
    for (int u = 0; u < n_users; ++u) {
        const auto& ue = sd->users[static_cast<std::size_t>(u)];
        UserCtx& uc = sd->ctx[static_cast<std::size_t>(u)];
        uc.ue = ue.ue_id;
        uc.cell = ue.cell;
        uc.kind = ue.kind;
        uc.noise_w = noise_w;
        uc.bandwidth_hz = cfg.ue_bandwidth_hz;
        uc.serving_power_w = beam_power_w;
        uc.report_seed = derive_seed(drop_seed, Dom::ReportMi, static_cast<std::uint64_t>(u));
        uc.oracle_seed = derive_seed(drop_seed, Dom::OracleMi, static_cast<std::uint64_t>(u));

        std::vector<int> tx_cells{ue.cell};
        tx_cells.insert(tx_cells.end(), tier[static_cast<std::size_t>(ue.cell)].begin(),
                        tier[static_cast<std::size_t>(ue.cell)].end());
        for (int c : tx_cells) {
            const Vec2 site = plan.bs_positions[static_cast<std::size_t>(c)];
            const double dist = std::max(distance(site, ue.position),
                                         cfg.min_ue_bs_distance_m);
            for (int k = 0; k < cfg.users_per_cell; ++k) {
                const int b = c * cfg.users_per_cell + k;
                const double angle =
                    bearing(site, ue.position) - beams[static_cast<std::size_t>(b)].boresight;
                const auto link = draw_link(
                    dist, angle, pattern, cfg.fqam_m_f, cfg.flat_fading, drop_seed,
                    pack_ids(static_cast<std::uint64_t>(c), static_cast<std::uint64_t>(u)),
                    pack_ids(static_cast<std::uint64_t>(b), static_cast<std::uint64_t>(u)),
                    cfg.shadowing_sigma_db, pl_model);
                if (b == u) {
                    uc.serving_rx_w = beam_power_w * link.mean_power_gain();
                    uc.serving_amps.resize(static_cast<std::size_t>(cfg.fqam_m_f));
                    for (int t = 0; t < cfg.fqam_m_f; ++t)
                        uc.serving_amps[static_cast<std::size_t>(t)] = link.tone_amplitude(t);
                } else if (c != ue.cell) {
                    // sibling beams of the serving cell are spatially
                    // orthogonal streams; only other cells interfere
                    Interferer it;
                    it.source = b;
                    it.tx_power_w = beam_power_w;
                    it.rx_power_w = beam_power_w * link.mean_power_gain();
                    it.amps.resize(static_cast<std::size_t>(cfg.fqam_m_f));
                    for (int t = 0; t < cfg.fqam_m_f; ++t)
                        it.amps[static_cast<std::size_t>(t)] = link.tone_amplitude(t);
                    uc.interferers.push_back(std::move(it));
                }
            }
        }
        std::sort(uc.interferers.begin(), uc.interferers.end(),
                  [](const Interferer& a, const Interferer& b) {
                      if (a.rx_power_w != b.rx_power_w)
                          return a.rx_power_w > b.rx_power_w;
                      return a.source < b.source;
                  });
        uc.n_aggressors = count_aggressors(uc.interferers, noise_w, cfg.aggressor_rel_db);
        uc.sinr_db = compute_sinr_db(uc);
    }
    sd->oracle_cache.resize(static_cast<std::size_t>(n_users));
    return sd;
}

std::vector<BeamContext> space_beam_contexts(const SpaceDrop& sd)
{
    const int n_users = static_cast<int>(sd.ctx.size());
    std::vector<BeamContext> bctx(static_cast<std::size_t>(n_users));
    for (int u = 0; u < n_users; ++u) {
        const auto& uc = sd.ctx[static_cast<std::size_t>(u)];
        bctx[static_cast<std::size_t>(u)].sinr_db = uc.sinr_db;
        for (int i = 0; i < uc.n_aggressors; ++i)
            bctx[static_cast<std::size_t>(u)].aggressors.push_back(
                uc.interferers[static_cast<std::size_t>(i)].source);
        bctx[static_cast<std::size_t>(u)].profile = {sd.cfg.lspl_default,
                                                     sd.cfg.rate_margin_default};
    }
    return bctx;
}

RateOracle make_space_oracle(std::shared_ptr<SpaceDrop> sd)
{
    return [sd](const std::vector<Modulation>& mods) {
        const int n_users = static_cast<int>(sd->ctx.size());
        std::vector<double> rates(static_cast<std::size_t>(n_users));
        for (int u = 0; u < n_users; ++u) {
            const auto& uc = sd->ctx[static_cast<std::size_t>(u)];
            const std::uint64_t key =
                rate_cache_key(uc, mods[static_cast<std::size_t>(u)], mods);
            auto& c = sd->oracle_cache[static_cast<std::size_t>(u)];
            auto it = c.find(key);
            if (it == c.end()) {
                const auto r = compute_user_rate(uc, mods[static_cast<std::size_t>(u)],
                                                 mods, sd->qam_c, sd->fqam_c, sd->cfg,
                                                 sd->cfg.oracle_mi_samples, uc.oracle_seed);
                it = c.emplace(key, r.rate_bps).first;
            }
            rates[static_cast<std::size_t>(u)] = it->second;
        }
        return rates;
    };
}

std::vector<RateSample> run_drop_space(const SimConfig& cfg, int drop_index)
{
    auto sd = build_space_drop(cfg, drop_index);
    const int n_users = static_cast<int>(sd->ctx.size());

    std::vector<Modulation> assignment(static_cast<std::size_t>(n_users), Modulation::Qam);
    if (cfg.mode == Mode::Hybrid) {
        const Thresholds th{cfg.gamma_th_db, cfg.n_th};
        assignment =
            centralized_space_assign(space_beam_contexts(*sd), th, make_space_oracle(sd))
                .beam_mod;
    }

    std::vector<RateSample> samples;
    samples.reserve(static_cast<std::size_t>(n_users));
    for (int u = 0; u < n_users; ++u) {
        const auto& uc = sd->ctx[static_cast<std::size_t>(u)];
        const Modulation own = assignment[static_cast<std::size_t>(u)];
        const auto r = compute_user_rate(uc, own, assignment, sd->qam_c, sd->fqam_c, cfg,
                                         cfg.mi_samples, uc.report_seed);
        RateSample s;
        s.drop = drop_index;
        s.cell = uc.cell;
        s.ue = uc.ue;
        s.kind = uc.kind;
        s.modulation = own;
        s.sinr_db = uc.sinr_db;
        s.mi_bits = r.mi_bits;
        s.rate_bps = r.rate_bps;
        samples.push_back(s);
    }
    return samples;
}

std::vector<RateSample> run_drop_frequency(const SimConfig& cfg, int drop_index)
{
    const std::uint64_t drop_seed =
        derive_seed(cfg.master_seed, Dom::DropSeed, static_cast<std::uint64_t>(drop_index));
    const SitePlan plan = build_lattice(cfg.n_cells, cfg.isd_m);
    const auto users =
        drop_users(plan, cfg.users_per_cell, drop_seed, cfg.min_ue_bs_distance_m);
    const auto pattern = AntennaPattern::omni(cfg.omni_gain_db);
    const Constellation qam_c = build_qam(cfg.qam_m_q);
    const Constellation fqam_c = build_fqam(cfg.fqam_m_f, cfg.fqam_m_q);
    const double bs_power_w = dbm_to_watts(cfg.bs_power_dbm);
    const PathLossModel pl_model{cfg.path_loss_ref_db, cfg.path_loss_slope_db};
    const double system_bw = 2.0 * cfg.ue_bandwidth_hz; // two subbands of the UE allocation
    const int n_users = static_cast<int>(users.size());

    std::vector<std::vector<int>> tier(static_cast<std::size_t>(plan.n_cells));
    for (int c = 0; c < plan.n_cells; ++c)
        tier[static_cast<std::size_t>(c)] = first_tier_interferers(plan, c);

    // Long-term SINR (path loss, shadowing, antenna gain; fading averages
    // out) drives the high/low classification, as a slow mechanism should.
    auto shadow_db = [&](int c, int u) {
        RandomStream s(drop_seed, Dom::Shadowing,
                       pack_ids(static_cast<std::uint64_t>(c), static_cast<std::uint64_t>(u)));
        return cfg.shadowing_sigma_db * s.next_normal();
    };
    auto lt_gain = [&](int c, int u) {
        const double dist = std::max(
            distance(plan.bs_positions[static_cast<std::size_t>(c)],
                     users[static_cast<std::size_t>(u)].position),
            cfg.min_ue_bs_distance_m);
        return db_to_linear(cfg.omni_gain_db - path_loss_db(dist, pl_model) + shadow_db(c, u));
    };
    std::vector<double> lt_sinr_db(static_cast<std::size_t>(n_users));
    const double noise_system_w = noise_power_w(cfg.noise_temperature_k, system_bw);
    for (int u = 0; u < n_users; ++u) {
        const int cell = users[static_cast<std::size_t>(u)].cell;
        std::vector<double> interf;
        for (int c : tier[static_cast<std::size_t>(cell)])
            interf.push_back(bs_power_w * lt_gain(c, u));
        const double lin =
            mean_sinr(bs_power_w * lt_gain(cell, u), interf, noise_system_w);
        lt_sinr_db[static_cast<std::size_t>(u)] = linear_to_db(std::max(lin, 1e-30));
    }
    const auto classes = classify_users(lt_sinr_db, cfg.gamma_th_db);

    std::vector<int> user_cell(static_cast<std::size_t>(n_users));
    for (int u = 0; u < n_users; ++u)
        user_cell[static_cast<std::size_t>(u)] = users[static_cast<std::size_t>(u)].cell;
    const FrequencyPlan fplan = frequency_partition(plan, user_cell, classes.low, cfg.rho,
                                                    cfg.mode == Mode::Hybrid);

    // co-scheduled user counts per (cell, subband)
    std::vector<int> n_reserved(static_cast<std::size_t>(plan.n_cells), 0);
    std::vector<int> n_regular(static_cast<std::size_t>(plan.n_cells), 0);
    for (int u = 0; u < n_users; ++u) {
        if (fplan.user_subband[static_cast<std::size_t>(u)] == Subband::Reserved)
            ++n_reserved[static_cast<std::size_t>(user_cell[static_cast<std::size_t>(u)])];
        else
            ++n_regular[static_cast<std::size_t>(user_cell[static_cast<std::size_t>(u)])];
    }

    std::vector<RateSample> samples;
    samples.reserve(static_cast<std::size_t>(n_users));
    for (int u = 0; u < n_users; ++u) {
        const auto& ue = users[static_cast<std::size_t>(u)];
        const Subband sb = fplan.user_subband[static_cast<std::size_t>(u)];
        const bool reserved = sb == Subband::Reserved;
        const double width = (reserved ? cfg.rho : 1.0 - cfg.rho) * system_bw;
        const double sub_power_w = bs_power_w * width / system_bw;
        const int n_co = reserved ? n_reserved[static_cast<std::size_t>(ue.cell)]
                                  : n_regular[static_cast<std::size_t>(ue.cell)];

        UserCtx uc;
        uc.ue = ue.ue_id;
        uc.cell = ue.cell;
        uc.kind = ue.kind;
        uc.noise_w = noise_power_w(cfg.noise_temperature_k, width);
        uc.bandwidth_hz = width / n_co;
        uc.serving_power_w = sub_power_w;
        uc.report_seed = derive_seed(drop_seed, Dom::ReportMi, static_cast<std::uint64_t>(u));

        const std::uint64_t sb_bit = reserved ? 1 : 0;
        auto fade_id = [&](int c) {
            return (pack_ids(static_cast<std::uint64_t>(c),
                             static_cast<std::uint64_t>(u)) << 1) |
                   sb_bit;
        };
        {
            const Vec2 site = plan.bs_positions[static_cast<std::size_t>(ue.cell)];
            const double dist =
                std::max(distance(site, ue.position), cfg.min_ue_bs_distance_m);
            const auto link = draw_link(
                dist, 0.0, pattern, cfg.fqam_m_f, cfg.flat_fading, drop_seed,
                pack_ids(static_cast<std::uint64_t>(ue.cell), static_cast<std::uint64_t>(u)),
                fade_id(ue.cell), cfg.shadowing_sigma_db, pl_model);
            uc.serving_rx_w = sub_power_w * link.mean_power_gain();
            uc.serving_amps.resize(static_cast<std::size_t>(cfg.fqam_m_f));
            for (int t = 0; t < cfg.fqam_m_f; ++t)
                uc.serving_amps[static_cast<std::size_t>(t)] = link.tone_amplitude(t);
        }
        for (int c : tier[static_cast<std::size_t>(ue.cell)]) {
            const Vec2 site = plan.bs_positions[static_cast<std::size_t>(c)];
            const double dist =
                std::max(distance(site, ue.position), cfg.min_ue_bs_distance_m);
            const auto link = draw_link(
                dist, 0.0, pattern, cfg.fqam_m_f, cfg.flat_fading, drop_seed,
                pack_ids(static_cast<std::uint64_t>(c), static_cast<std::uint64_t>(u)),
                fade_id(c), cfg.shadowing_sigma_db, pl_model);
            Interferer it;
            it.source = c;
            it.tx_power_w = sub_power_w;
            it.rx_power_w = sub_power_w * link.mean_power_gain();
            it.amps.resize(static_cast<std::size_t>(cfg.fqam_m_f));
            for (int t = 0; t < cfg.fqam_m_f; ++t)
                it.amps[static_cast<std::size_t>(t)] = link.tone_amplitude(t);
            uc.interferers.push_back(std::move(it));
        }
        std::sort(uc.interferers.begin(), uc.interferers.end(),
                  [](const Interferer& a, const Interferer& b) {
                      if (a.rx_power_w != b.rx_power_w)
                          return a.rx_power_w > b.rx_power_w;
                      return a.source < b.source;
                  });
        uc.n_aggressors = count_aggressors(uc.interferers, uc.noise_w, cfg.aggressor_rel_db);
        uc.sinr_db = compute_sinr_db(uc);

        // interfering cells are full-buffer: on the user's subband every
        // first-tier cell transmits with the plan's modulation
        std::vector<Modulation> source_mod(static_cast<std::size_t>(plan.n_cells),
                                           Modulation::Qam);
        if (reserved)
            source_mod = fplan.reserved_mod;
        const Modulation own =
            reserved ? fplan.reserved_mod[static_cast<std::size_t>(ue.cell)]
                     : Modulation::Qam;
        const auto r = compute_user_rate(uc, own, source_mod, qam_c, fqam_c, cfg,
                                         cfg.mi_samples, uc.report_seed);
        RateSample s;
        s.drop = drop_index;
        s.cell = uc.cell;
        s.ue = uc.ue;
        s.kind = uc.kind;
        s.modulation = own;
        s.sinr_db = uc.sinr_db;
        s.mi_bits = r.mi_bits;
        s.rate_bps = r.rate_bps;
        samples.push_back(s);
    }
    return samples;
}

double mean_of(std::span<const double> v)
{
    double acc = 0.0;
    for (double x : v)
        acc += x;
    return v.empty() ? 0.0 : acc / static_cast<double>(v.size());
}

} // namespace

const char* to_string(UeKind k)
{
    return k == UeKind::CellEdge ? "cell_edge" : "uniform_random";
}

const char* to_string(Modulation m)
{
    return m == Modulation::Qam ? "qam" : "fqam";
}

double percentile_linear(std::span<const double> sorted, double q)
{
    if (sorted.empty())
        throw UsageError("percentile of an empty sample set");
    if (q <= 0.0)
        return sorted.front();
    if (q >= 1.0)
        return sorted.back();
    const double h = q * static_cast<double>(sorted.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(h);
    const double frac = h - static_cast<double>(lo);
    if (lo + 1 >= sorted.size())
        return sorted.back();
    return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

std::vector<RateSample> run_drop(const SimConfig& cfg, int drop_index)
{
    try {
        return cfg.scenario == Scenario::Space ? run_drop_space(cfg, drop_index)
                                               : run_drop_frequency(cfg, drop_index);
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception& e) {
        throw UsageError("drop " + std::to_string(drop_index) + ": " + e.what());
    }
}

MetricsReport run_campaign(const SimConfig& cfg, int workers)
{
    cfg.validate();
    const int n_drops = cfg.n_drops;
    int n_workers = workers > 0 ? workers
                                : static_cast<int>(std::thread::hardware_concurrency());
    n_workers = std::max(1, std::min(n_workers, n_drops));

    std::vector<std::vector<RateSample>> per_drop(static_cast<std::size_t>(n_drops));
    if (n_workers == 1) {
        for (int d = 0; d < n_drops; ++d)
            per_drop[static_cast<std::size_t>(d)] = run_drop(cfg, d);
    } else {
        std::atomic<int> next{0};
        std::exception_ptr first_error;
        std::mutex error_mutex;
        auto worker = [&]() {
            for (;;) {
                const int d = next.fetch_add(1);
                if (d >= n_drops)
                    return;
                try {
                    per_drop[static_cast<std::size_t>(d)] = run_drop(cfg, d);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!first_error)
                        first_error = std::current_exception();
                    return;
                }
            }
        };
        std::vector<std::thread> pool;
        for (int w = 0; w < n_workers; ++w)
            pool.emplace_back(worker);
        for (auto& t : pool)
            t.join();
        if (first_error)
            std::rethrow_exception(first_error);
    }

    MetricsReport rep;
    rep.scenario = cfg.scenario;
    rep.mode = cfg.mode;
    rep.master_seed = cfg.master_seed;
    rep.n_drops = n_drops;
    for (auto& d : per_drop)
        rep.samples.insert(rep.samples.end(), d.begin(), d.end());

    std::vector<double> rates;
    rates.reserve(rep.samples.size());
    for (const auto& s : rep.samples)
        rates.push_back(s.rate_bps);
    std::sort(rates.begin(), rates.end());

    rep.available_rate_95.value = percentile_linear(rates, 0.05);
    rep.average_rate.value = mean_of(rates);
    rep.peak_rate_5.value = percentile_linear(rates, 0.95);

    // bootstrap 95% CIs, 1000 resamples
    const int n_boot = 1000;
    const std::size_t n = rates.size();
    std::vector<double> b_p5, b_mean, b_p95;
    b_p5.reserve(n_boot);
    b_mean.reserve(n_boot);
    b_p95.reserve(n_boot);
    std::vector<double> resample(n);
    for (int rep_i = 0; rep_i < n_boot; ++rep_i) {
        RandomStream stream(cfg.master_seed, Dom::Bootstrap,
                            static_cast<std::uint64_t>(rep_i));
        for (std::size_t i = 0; i < n; ++i)
            resample[i] = rates[static_cast<std::size_t>(stream.next_below(n))];
        std::sort(resample.begin(), resample.end());
        b_p5.push_back(percentile_linear(resample, 0.05));
        b_mean.push_back(mean_of(resample));
        b_p95.push_back(percentile_linear(resample, 0.95));
    }
    auto ci = [](std::vector<double>& v, MetricValue& m) {
        std::sort(v.begin(), v.end());
        m.ci_lo = percentile_linear(v, 0.025);
        m.ci_hi = percentile_linear(v, 0.975);
    };
    ci(b_p5, rep.available_rate_95);
    ci(b_mean, rep.average_rate);
    ci(b_p95, rep.peak_rate_5);

    // CDF over distinct sample values
    for (std::size_t i = 0; i < n; ++i) {
        if (i + 1 == n || rates[i + 1] != rates[i])
            rep.cdf.emplace_back(rates[i], static_cast<double>(i + 1) / static_cast<double>(n));
    }

    rep.config_echo = config_echo(cfg);
    rep.build_tag = FQAMSIM_BUILD_TAG;
    return rep;
}

CompareResult run_compare(const SimConfig& cfg, int workers)
{
    CompareResult out;
    SimConfig a = cfg;
    a.mode = Mode::AllQam;
    SimConfig h = cfg;
    h.mode = Mode::Hybrid;
    out.all_qam = run_campaign(a, workers);
    out.hybrid = run_campaign(h, workers);
    return out;
}

SchedulerInstance space_scheduler_instance(const SimConfig& cfg, int drop_index)
{
    cfg.validate();
    auto sd = build_space_drop(cfg, drop_index);
    SchedulerInstance inst;
    inst.beams = space_beam_contexts(*sd);
    inst.thresholds = {cfg.gamma_th_db, cfg.n_th};
    inst.oracle = make_space_oracle(std::move(sd));
    return inst;
}

} // namespace fqamsim
