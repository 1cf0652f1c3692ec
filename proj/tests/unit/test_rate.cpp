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

#include "fqamsim/errors.hpp"
#include "fqamsim/rate.hpp"
#include "fqamsim/rng.hpp"

#include "../support/oracles.hpp"

#include <cmath>
#include <complex>
#include <vector>

using namespace fqamsim;
using Cplx = std::complex<double>;

namespace {

VictimChannel unit_victim(int tones, double tx_power, double noise_var)
{
    return {std::vector<Cplx>(tones, {1.0, 0.0}), tx_power, noise_var};
}

// brute-force density from the flat component list; independent of the
// factorized evaluator inside the library
double flat_log_density(const std::vector<InterferenceMixture::Component>& comps,
                        std::span<const double> noise_var,
                        std::span<const Cplx> r)
{
    double p = 0.0;
    for (const auto& c : comps) {
        double term = c.prob;
        for (std::size_t t = 0; t < r.size(); ++t) {
            const double nu = noise_var[t];
            term *= std::exp(-std::norm(r[t] - c.offset[t]) / nu) / (M_PI * nu);
        }
        p += term;
    }
    return std::log(p);
}

} // namespace

TEST_CASE("mixture with no aggressors is a single Gaussian component")
{
    const auto mix = build_mixture(unit_victim(4, 2.0, 0.5), {}, 4);
    CHECK(mix.dim() == 4);
    CHECK(mix.component_count() == doctest::Approx(1.0));
    const auto comps = mix.components();
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].prob == doctest::Approx(1.0));
    for (const auto& o : comps[0].offset)
        CHECK(std::abs(o) == 0.0);
    // normalized noise: noise_var / (|gain|^2 * tx_power)
    for (double nu : mix.noise_var())
        CHECK(nu == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("one (4,4)-FQAM aggressor enumerates 16 single-tone components")
{
    const auto fqam = build_fqam(4, 4);
    AggressorChannel agg{std::vector<Cplx>(4, {0.5, 0.25}), 3.0, &fqam, false, false};
    const auto mix = build_mixture(unit_victim(4, 1.0, 1.0), {agg}, 4);
    CHECK(mix.component_count() == doctest::Approx(16.0));
    const auto comps = mix.components();
    REQUIRE(comps.size() == 16);
    double total = 0.0;
    for (const auto& c : comps) {
        CHECK(c.prob == doctest::Approx(1.0 / 16.0));
        total += c.prob;
        int nonzero = 0;
        for (const auto& o : c.offset)
            if (std::abs(o) > 0.0)
                ++nonzero;
        CHECK(nonzero == 1);
    }
    CHECK(std::abs(total - 1.0) < 1e-9);
}

TEST_CASE("two 16-QAM aggressors on a single tone give 256 components")
{
    const auto qam = build_qam(16);
    AggressorChannel a{{Cplx{0.4, 0.0}}, 1.0, &qam, false, false};
    AggressorChannel b{{Cplx{0.0, 0.7}}, 2.0, &qam, false, false};
    const auto mix = build_mixture(unit_victim(1, 1.0, 1.0), {a, b}, 4);
    CHECK(mix.component_count() == doctest::Approx(256.0));
    const auto comps = mix.components();
    REQUIRE(comps.size() == 256);
    double total = 0.0;
    for (const auto& c : comps)
        total += c.prob;
    CHECK(std::abs(total - 1.0) < 1e-9);
}

TEST_CASE("projected FQAM aggressor on one tone is mostly silent")
{
    const auto fqam = build_fqam(4, 4);
    AggressorChannel agg{{Cplx{1.0, 0.0}}, 1.0, &fqam, true, false};
    const auto mix = build_mixture(unit_victim(1, 1.0, 1.0), {agg}, 4);
    const auto comps = mix.components();
    double simple = 0.0;
    double total = 0.0;
    for (const auto& c : comps) {
        total += c.prob;
        if (std::abs(c.offset[0]) == 0.0)
            simple += c.prob;
    }
    CHECK(std::abs(total - 1.0) < 1e-9);
    CHECK(simple == doctest::Approx(0.75));
}

TEST_CASE("tone-count mismatch is a configuration error")
{
    const auto fqam2 = build_fqam(2, 4);
    AggressorChannel agg{std::vector<Cplx>(4, {1.0, 0.0}), 1.0, &fqam2, false, false};
    CHECK_THROWS_AS(build_mixture(unit_victim(4, 1.0, 1.0), {agg}, 4), ConfigError);
}

TEST_CASE("beyond-cap aggressors fold into the noise floor at matched power")
{
    const auto fqam = build_fqam(4, 4);
    AggressorChannel strong{std::vector<Cplx>(4, {1.0, 0.0}), 4.0, &fqam, false, false};
    AggressorChannel weak{std::vector<Cplx>(4, {0.1, 0.0}), 1.0, &fqam, false, false};
    const auto mix = build_mixture(unit_victim(4, 1.0, 1.0), {weak, strong}, 1);
    CHECK(mix.enumerated_aggressors() == 1);
    // folded FQAM power spreads 1/m_f of the transmit power per tone
    for (double nu : mix.noise_var())
        CHECK(nu == doctest::Approx(1.0 + 1.0 * 0.01 / 4.0).epsilon(1e-12));
    // the enumerated one is the strong one: offsets have magnitude 2*|qam|
    const auto comps = mix.components();
    double max_off = 0.0;
    for (const auto& c : comps)
        for (const auto& o : c.offset)
            max_off = std::max(max_off, std::abs(o));
    CHECK(max_off > 1.9); // sqrt(4.0) * |corner of unit QPSK| = 2
}

TEST_CASE("fold-marked aggressors never enumerate")
{
    const auto fqam = build_fqam(4, 4);
    AggressorChannel marked{std::vector<Cplx>(4, {1.0, 0.0}), 9.0, &fqam, false, true};
    const auto mix = build_mixture(unit_victim(4, 1.0, 1.0), {marked}, 4);
    CHECK(mix.enumerated_aggressors() == 0);
    CHECK(mix.component_count() == doctest::Approx(1.0));
    for (double nu : mix.noise_var())
        CHECK(nu == doctest::Approx(1.0 + 9.0 / 4.0).epsilon(1e-12));
}

TEST_CASE("factorized density matches flat component enumeration")
{
    const auto fqam = build_fqam(2, 4);
    const auto qam = build_qam(4);
    // two tone-sparse aggressors (collisions included) plus one dense
    AggressorChannel s1{{Cplx{0.8, 0.1}, Cplx{-0.3, 0.4}}, 1.5, &fqam, false, false};
    AggressorChannel s2{{Cplx{0.2, -0.6}, Cplx{0.9, 0.0}}, 0.7, &fqam, false, false};
    AggressorChannel d1{{Cplx{0.5, 0.5}, Cplx{-0.2, 0.3}}, 1.1, &qam, false, false};
    const auto mix =
        build_mixture({{Cplx{1.2, -0.3}, Cplx{0.9, 0.5}}, 2.0, 0.8}, {s1, s2, d1}, 4);
    const auto comps = mix.components();
    CHECK(comps.size() == 8 * 8 * 16);

    RandomStream rnd(4, Dom::MiSample, 0);
    for (int trial = 0; trial < 64; ++trial) {
        const std::vector<Cplx> r{rnd.next_cnormal(4.0), rnd.next_cnormal(4.0)};
        const double expect = flat_log_density(comps, mix.noise_var(), r);
        const double got = mix.log_density(r);
        CHECK(got == doctest::Approx(expect).epsilon(1e-9));
    }
}

TEST_CASE("sampled interference power matches the mixture's mean power")
{
    const auto fqam = build_fqam(4, 4);
    AggressorChannel agg{std::vector<Cplx>(4, {1.0, 0.0}), 2.0, &fqam, false, false};
    const auto mix = build_mixture(unit_victim(4, 1.0, 0.5), {agg}, 4);
    std::vector<Cplx> buf(4);
    double power = 0.0;
    const int n = 200000;
    for (int i = 0; i < n; ++i) {
        RandomStream stream(77, Dom::KurtSample, i);
        mix.sample(stream, buf);
        for (const auto& v : buf)
            power += std::norm(v);
    }
    // per block: 4 tones of noise 0.5 plus one active aggressor tone of
    // power 2.0
    CHECK(power / n == doctest::Approx(4.0 * 0.5 + 2.0).epsilon(0.01));
}

TEST_CASE("MI asymptotes: drowning noise and saturation")
{
    const auto qpsk = build_qam(4);
    const auto low = mutual_information(
        qpsk, build_mixture(unit_victim(1, 1.0, 1000.0), {}, 0), 20000, 3);
    CHECK(low.bits < 0.01);

    const auto high = mutual_information(
        qpsk, build_mixture(unit_victim(1, 1.0, 1e-4), {}, 0), 20000, 4);
    CHECK(high.bits >= 1.99);
}

TEST_CASE("MI matches the quadrature oracle for QPSK and 16-QAM")
{
    const auto qpsk = build_qam(4);
    std::vector<Cplx> pts;
    for (int l = 0; l < qpsk.size(); ++l)
        pts.push_back(qpsk.points[l][0]);

    for (double esn0_db : {-10.0, 0.0, 10.0}) {
        const double nu = std::pow(10.0, -esn0_db / 10.0);
        const double oracle = test_oracles::awgn_mi_quadrature(pts, nu);
        const auto mc = mutual_information(
            qpsk, build_mixture(unit_victim(1, 1.0, nu), {}, 0), 200000, 7);
        CAPTURE(esn0_db);
        CHECK(std::abs(mc.bits - oracle) < 0.01);
    }

    const auto qam16 = build_qam(16);
    std::vector<Cplx> pts16;
    for (int l = 0; l < qam16.size(); ++l)
        pts16.push_back(qam16.points[l][0]);
    const double nu = std::pow(10.0, -1.0); // 10 dB
    const double oracle16 = test_oracles::awgn_mi_quadrature(pts16, nu);
    const auto mc16 = mutual_information(
        qam16, build_mixture(unit_victim(1, 1.0, nu), {}, 0), 200000, 8);
    CHECK(std::abs(mc16.bits - oracle16) < 0.015);
}

TEST_CASE("frozen quadrature values for QPSK")
{
    const auto qpsk = build_qam(4);
    std::vector<Cplx> pts;
    for (int l = 0; l < qpsk.size(); ++l)
        pts.push_back(qpsk.points[l][0]);
    CHECK(test_oracles::awgn_mi_quadrature(pts, 10.0) ==
          doctest::Approx(0.137487).epsilon(1e-4));
    CHECK(test_oracles::awgn_mi_quadrature(pts, 1.0) ==
          doctest::Approx(0.971888).epsilon(1e-4));
    CHECK(test_oracles::awgn_mi_quadrature(pts, 0.1) ==
          doctest::Approx(1.993513).epsilon(1e-4));
}

TEST_CASE("MI is nonincreasing in noise under common random numbers")
{
    const auto qpsk = build_qam(4);
    double prev = 2.0;
    for (double nu : {0.1, 0.3, 1.0, 3.0, 10.0}) {
        const auto est = mutual_information(
            qpsk, build_mixture(unit_victim(1, 1.0, nu), {}, 0), 20000, 11);
        CHECK(est.bits <= prev + 1e-9);
        prev = est.bits;
    }
}

TEST_CASE("adding an interferer never increases MI")
{
    const auto qpsk = build_qam(4);
    const auto fqam = build_fqam(4, 4);

    const auto base_mix = build_mixture(unit_victim(4, 1.0, 0.5), {}, 4);
    const auto base = mutual_information(fqam, base_mix, 30000, 13);

    for (double agg_power : {0.05, 0.5, 5.0}) {
        AggressorChannel agg{std::vector<Cplx>(4, {1.0, 0.0}), agg_power, &fqam, false,
                             false};
        const auto mix = build_mixture(unit_victim(4, 1.0, 0.5), {agg}, 4);
        const auto with = mutual_information(fqam, mix, 30000, 13);
        CHECK(with.bits <= base.bits + 2.0 * (base.std_err + with.std_err));
    }
    (void)qpsk;
}

TEST_CASE("MI estimator variance shrinks like 1/n")
{
    const auto qpsk = build_qam(4);
    const auto mix = build_mixture(unit_victim(1, 1.0, 1.0), {}, 0);
    const int sizes[3] = {256, 2048, 16384};
    double log_var[3];
    for (int si = 0; si < 3; ++si) {
        double m1 = 0.0, m2 = 0.0;
        const int reps = 48;
        for (int r = 0; r < reps; ++r) {
            const auto est = mutual_information(qpsk, mix, sizes[si],
                                                1000 + 100 * si + r);
            m1 += est.bits;
            m2 += est.bits * est.bits;
        }
        m1 /= reps;
        log_var[si] = std::log(m2 / reps - m1 * m1);
    }
    // least-squares slope over log n
    const double x[3] = {std::log(256.0), std::log(2048.0), std::log(16384.0)};
    const double xm = (x[0] + x[1] + x[2]) / 3.0;
    const double ym = (log_var[0] + log_var[1] + log_var[2]) / 3.0;
    double num = 0.0, den = 0.0;
    for (int i = 0; i < 3; ++i) {
        num += (x[i] - xm) * (log_var[i] - ym);
        den += (x[i] - xm) * (x[i] - xm);
    }
    const double slope = num / den;
    CHECK(slope > -1.2);
    CHECK(slope < -0.8);
}

TEST_CASE("MI input validation")
{
    const auto qpsk = build_qam(4);
    const auto mix4 = build_mixture(unit_victim(4, 1.0, 1.0), {}, 0);
    CHECK_THROWS_AS(mutual_information(qpsk, mix4, 100, 1), UsageError);
    const Constellation empty;
    const auto mix1 = build_mixture(unit_victim(1, 1.0, 1.0), {}, 0);
    CHECK_THROWS_AS(mutual_information(empty, mix1, 100, 1), UsageError);
    CHECK_THROWS_AS(mutual_information(qpsk, mix1, 0, 1), UsageError);
}

TEST_CASE("excess kurtosis: Gaussian baseline and FQAM aggressors")
{
    // pure noise
    const auto noise_mix = build_mixture(unit_victim(1, 1.0, 1.0), {}, 0);
    const double k0 = excess_kurtosis(noise_mix, 0, 1000000, 5);
    CHECK(std::abs(k0) < 0.05);

    // one (4,4)-FQAM aggressor 20 dB above noise in mean power, through a
    // faded channel (block budget = m_f x 100)
    const auto fqam = build_fqam(4, 4);
    auto faded = [](std::uint64_t id) {
        RandomStream s(515, Dom::Fading, id);
        std::vector<Cplx> g(4);
        for (auto& v : g)
            v = s.next_cnormal(1.0);
        return g;
    };
    // the per-tone statistic depends on the fading phase; the block-level
    // behavior is what matters, so average over the tones
    auto mean_kurt = [](const InterferenceMixture& mix, std::uint64_t seed) {
        double acc = 0.0;
        for (int t = 0; t < mix.dim(); ++t)
            acc += excess_kurtosis(mix, t, 100000, seed + static_cast<std::uint64_t>(t));
        return acc / mix.dim();
    };
    auto oracle_kurt = [](const std::vector<AggressorChannel>& aggs,
                          const InterferenceMixture& mix) {
        double acc = 0.0;
        for (int t = 0; t < mix.dim(); ++t) {
            std::vector<test_oracles::AggressorMoments> cums;
            for (const auto& a : aggs) {
                std::vector<test_oracles::MixtureComponent> comps;
                const auto solo = build_mixture(unit_victim(4, 1.0, 1.0), {a}, 4);
                for (const auto& c : solo.components())
                    comps.push_back({c.prob, c.offset[t]});
                cums.push_back(test_oracles::aggressor_cumulants(comps));
            }
            acc += test_oracles::kurtosis_from_cumulants(cums, mix.noise_var()[t]);
        }
        return acc / mix.dim();
    };

    std::vector<AggressorChannel> one_agg{{faded(0), 400.0, &fqam, false, false}};
    const auto one = build_mixture(unit_victim(4, 1.0, 1.0), one_agg, 4);
    const double k1 = mean_kurt(one, 6);
    const double oracle1 = oracle_kurt(one_agg, one);
    CHECK(k1 > 1.0);
    CHECK(k1 == doctest::Approx(oracle1).epsilon(0.1));

    // six equal-power aggressors approach Gaussian (smaller kurtosis)
    std::vector<AggressorChannel> six;
    for (int j = 0; j < 6; ++j)
        six.push_back({faded(static_cast<std::uint64_t>(j)), 400.0, &fqam, false, false});
    const auto many = build_mixture(unit_victim(4, 1.0, 1.0), six, 6);
    const double k6 = mean_kurt(many, 7);
    const double oracle6 = oracle_kurt(six, many);
    CHECK(k6 < k1);
    CHECK(k6 > 0.0);
    CHECK(k6 == doctest::Approx(oracle6).epsilon(0.15));

    // cross-check the two oracle routes on the single-aggressor case
    std::vector<test_oracles::MixtureComponent> comps0;
    for (const auto& c : one.components())
        comps0.push_back({c.prob, c.offset[0]});
    CHECK(test_oracles::kurtosis_from_components(comps0, one.noise_var()[0]) ==
          doctest::Approx(test_oracles::kurtosis_from_cumulants(
                              {{test_oracles::aggressor_cumulants(comps0)}},
                              one.noise_var()[0]))
              .epsilon(1e-9));
}

TEST_CASE("user rate conversion")
{
    CHECK(user_rate_bps(4.0, 20e6, 1) == doctest::Approx(80e6));
    CHECK(user_rate_bps(4.0, 20e6, 4) == doctest::Approx(20e6));
    CHECK(user_rate_bps(0.0, 20e6, 4) == 0.0);
    CHECK_THROWS_AS(user_rate_bps(-1.0, 20e6, 1), UsageError);
    CHECK_THROWS_AS(user_rate_bps(1.0, 20e6, 0), UsageError);
    CHECK(shannon_rate_bits(1.0) == doctest::Approx(1.0));
}

TEST_CASE("FQAM/QAM crossover directions (reduced sample count)")
{
    // mean-power convention: per-tone budget, FQAM concentrates m_f x the
    // budget on its active tone
    const auto fqam = build_fqam(4, 4);
    const auto qam16 = build_qam(16);
    const double nu = 1.0;
    const double inr = 100.0;                   // 20 dB mean interference
    const double sir = std::pow(10.0, -0.5);    // -5 dB
    const double serving = sir * inr;           // per-tone signal budget

    // dominant FQAM aggressor: FQAM victim decodes the exact mixture
    AggressorChannel agg{std::vector<Cplx>(4, {1.0, 0.0}), 4.0 * inr, &fqam, false,
                         false};
    const auto mix_f = build_mixture(unit_victim(4, 4.0 * serving, nu), {agg}, 4);
    const auto mi_f = mutual_information(fqam, mix_f, 40000, 21);

    // conventional QAM receiver folds the same aggressor into noise
    AggressorChannel agg1{{Cplx{1.0, 0.0}}, 4.0 * inr, &fqam, true, false};
    const auto mix_q = build_mixture(unit_victim(1, serving, nu), {agg1}, 0);
    const auto mi_q = mutual_information(qam16, mix_q, 40000, 22);

    const double f_per_tone = mi_f.bits / 4.0;
    const double margin = 3.0 * (mi_f.std_err / 4.0 + mi_q.std_err);
    CHECK(f_per_tone > mi_q.bits + margin);

    // no interference at Es/N0 = 20 dB: QAM wins
    const auto clean_f = mutual_information(
        fqam, build_mixture(unit_victim(4, 400.0, 1.0), {}, 0), 40000, 23);
    const auto clean_q = mutual_information(
        qam16, build_mixture(unit_victim(1, 100.0, 1.0), {}, 0), 40000, 24);
    const double margin2 = 3.0 * (clean_f.std_err / 4.0 + clean_q.std_err);
    CHECK(clean_q.bits > clean_f.bits / 4.0 + margin2);
}
