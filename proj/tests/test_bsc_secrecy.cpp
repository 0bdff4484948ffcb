#include "doctest.h"
#include "oracles.hpp"
#include "pscbsc/bsc_secrecy.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace pscbsc;
using std::numbers::pi;

TEST_SUITE_BEGIN("bsc_secrecy");

TEST_CASE("posterior for even:3 at p = 0.2") {
    const CodePair even3 = oracles::pair_of("even:3");
    const auto ch = ChannelVector::uniform_p(0.2, 3);
    const Distribution d = posterior(even3, ch, 0);
    CHECK(d[0] == doctest::Approx(0.52).epsilon(1e-12));
    for (std::size_t h = 1; h < 4; ++h)
        CHECK(d[h] == doctest::Approx(0.16).epsilon(1e-12));
}

TEST_CASE("received vectors inside the dual code give the identity permutation") {
    const CodePair h74 = oracles::pair_of("hamming:7,4");
    const auto ch = ChannelVector::uniform_p(0.13, 7);
    const auto spec = spectral(h74, ch);
    for (Word c : all_codewords(h74.gen_dual())) {
        const Distribution d = posterior(spec, h74, c);
        for (Word h = 0; h < 16; ++h)
            CHECK(d[h] == doctest::Approx(spec.posterior_entry(h)).epsilon(1e-14));
    }
}

TEST_CASE("p = 1/2 washes out every posterior; p = 0 pins it") {
    const CodePair even3 = oracles::pair_of("even:3");
    const auto half = ChannelVector::uniform_p(0.5, 3);
    for (Word x = 0; x < 8; ++x) {
        const Distribution d = posterior(even3, half, x);
        for (std::size_t h = 0; h < 4; ++h)
            CHECK(d[h] == doctest::Approx(0.25).epsilon(1e-14));
    }
    const auto clean = ChannelVector::uniform_p(0.0, 3);
    for (Word x = 0; x < 8; ++x) {
        const Distribution d = posterior(even3, clean, x);
        double mass_at_peak = 0.0;
        int zero_entries = 0;
        for (std::size_t h = 0; h < 4; ++h) {
            mass_at_peak = std::max(mass_at_peak, d[h]);
            if (d[h] == 0.0) ++zero_entries;  // exact zeros, not tiny floats
        }
        CHECK(mass_at_peak == 1.0);
        CHECK(zero_entries == 3);
    }
}

TEST_CASE("posterior agrees with raw exhaustive Bayes") {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 15; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 7);
        const int k = 1 + static_cast<int>(rng() % static_cast<unsigned>(n));
        const CodePair pair = build_pair(oracles::random_full_rank_code(rng, n, k));
        const auto ch = ChannelVector::uniform_p(
            0.5 * std::uniform_real_distribution<double>(0.01, 0.99)(rng), n);
        const auto spec = spectral(pair, ch);
        for (int i = 0; i < 4; ++i) {
            const Word x = rng() & ((Word{1} << n) - 1);
            const Distribution d = posterior(spec, pair, x);
            const auto bayes = oracles::wiretap_posterior_bayes(pair, ch, x);
            for (std::size_t h = 0; h < bayes.size(); ++h)
                CHECK(std::abs(d[h] - bayes[h]) <= 1e-12);
        }
    }
}

TEST_CASE("bhattacharyya coefficient values") {
    CHECK(bhattacharyya_uniform(Distribution({0.25, 0.25, 0.25, 0.25})) ==
          doctest::Approx(1.0).epsilon(1e-15));
    CHECK(bhattacharyya_uniform(Distribution({1.0, 0.0, 0.0, 0.0})) ==
          doctest::Approx(0.5).epsilon(1e-15));

    const double b = bhattacharyya_uniform(Distribution({0.52, 0.16, 0.16, 0.16}));
    CHECK(b == doctest::Approx((std::sqrt(0.52) + 3 * std::sqrt(0.16)) / 2)
                   .epsilon(1e-14));
    // squared coefficient complements the block error rate at cos(theta)=0.6
    const CodePair even3 = oracles::pair_of("even:3");
    const double pe =
        block_error_psc(even3, ChannelVector::uniform_theta(std::acos(0.6), 3));
    CHECK(std::abs(b * b - (1.0 - pe)) <= 1e-10);
}

TEST_CASE("core duality across the suite instances") {
    for (const char* name : {"rep:3", "even:3", "hamming:7,4", "e8"}) {
        const CodePair pair = oracles::pair_of(name);
        for (double theta : {0.0, pi / 6, pi / 3, 1.2, pi / 2}) {
            const auto ch = ChannelVector::uniform_theta(theta, pair.n());
            const auto spec = spectral(pair, ch);
            const double pe = block_error_psc(spec);
            const double b = bhattacharyya_uniform(posterior(spec, pair, 0));
            CHECK(std::abs((1.0 - pe) - b * b) <= 1e-10);
        }
    }
}

TEST_CASE("fidelity of diagonal density matrices equals the squared coefficient") {
    // for commuting (diagonal) states, F(rho, sigma) = (sum_i sqrt(p_i q_i))^2
    const Distribution d({0.52, 0.16, 0.16, 0.16});
    const double b = bhattacharyya_uniform(d);
    double fidelity = 0.0;
    for (std::size_t i = 0; i < d.size(); ++i) fidelity += std::sqrt(d[i] * 0.25);
    CHECK(fidelity * fidelity == doctest::Approx(b * b).epsilon(1e-15));
}

TEST_CASE("permutation invariance over all received vectors") {
    const CodePair even3 = oracles::pair_of("even:3");
    const auto report =
        permutation_invariance_check(even3, ChannelVector::uniform_p(0.2, 3));
    CHECK(report.vectors_checked == 8);
    CHECK(report.max_sorted_deviation <= 1e-12);
    CHECK(report.max_bhattacharyya_deviation <= 1e-12);

    const CodePair h74 = oracles::pair_of("hamming:7,4");
    for (double p : {0.0, 0.17, 0.5}) {
        const auto rep =
            permutation_invariance_check(h74, ChannelVector::uniform_p(p, 7));
        CHECK(rep.max_sorted_deviation <= 1e-12);
        CHECK(rep.max_bhattacharyya_deviation <= 1e-12);
    }
}

TEST_SUITE_END();
