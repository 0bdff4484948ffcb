#include "doctest.h"
#include "oracles.hpp"
#include "pscbsc/wht.hpp"

#include <cmath>
#include <random>

using namespace pscbsc;

TEST_SUITE_BEGIN("wht");

TEST_CASE("delta and constant tables transform into each other") {
    const RealTable delta(1, {1.0, 0.0});
    const RealTable flat = wht(delta);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    CHECK(flat[0] == doctest::Approx(inv_sqrt2).epsilon(1e-15));
    CHECK(flat[1] == doctest::Approx(inv_sqrt2).epsilon(1e-15));

    const RealTable ones(2, {1.0, 1.0, 1.0, 1.0});
    const RealTable spike = wht(ones);
    CHECK(spike[0] == doctest::Approx(2.0).epsilon(1e-15));
    for (Word h = 1; h < 4; ++h) CHECK(spike[h] == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("butterfly agrees with the naive double sum and is involutive") {
    std::mt19937_64 rng(71);
    std::normal_distribution<double> gauss;
    for (int m : {1, 2, 3, 5}) {
        std::vector<double> values(std::size_t{1} << m);
        for (auto& v : values) v = gauss(rng);
        const RealTable f(m, values);
        const RealTable fast = wht(f);
        const auto slow = oracles::wht_naive(values);
        for (std::size_t i = 0; i < values.size(); ++i)
            CHECK(fast[i] == doctest::Approx(slow[i]).epsilon(1e-12));

        const RealTable back = wht(fast);
        for (std::size_t i = 0; i < values.size(); ++i)
            CHECK(back[i] == doctest::Approx(values[i]).epsilon(1e-12));
    }
}

TEST_CASE("parseval up to m = 14") {
    std::mt19937_64 rng(73);
    std::normal_distribution<double> gauss;
    for (int m : {4, 10, 14}) {
        std::vector<double> values(std::size_t{1} << m);
        for (auto& v : values) v = gauss(rng);
        double before = 0.0;
        for (double v : values) before += v * v;
        const RealTable transformed = wht(RealTable(m, std::move(values)));
        double after = 0.0;
        for (double v : transformed.values) after += v * v;
        CHECK(std::abs(before - after) <= 1e-10 * std::max(1.0, before));
    }
}

TEST_CASE("factor duality identity for rep:2 with mu = (1, x)") {
    const CodePair rep2 = oracles::pair_of("rep:2");
    for (double x : {0.0, 0.3, 1.0}) {
        const std::array<double, 2> mu{1.0, x};
        const auto [lhs, rhs] = dual_indicator_check(rep2, std::vector{mu, mu});
        CHECK(lhs == doctest::Approx(1.0 + x * x).epsilon(1e-14));
        CHECK(rhs == doctest::Approx(lhs).epsilon(1e-14));
    }
}

TEST_CASE("factor duality with mu = (1, 0) gives 1 for any code") {
    for (const char* name : {"rep:3", "even:4", "hamming:7,4", "e8"}) {
        const CodePair pair = oracles::pair_of(name);
        const std::vector<std::array<double, 2>> mu(static_cast<std::size_t>(pair.n()),
                                                    {1.0, 0.0});
        const auto [lhs, rhs] = dual_indicator_check(pair, mu);
        CHECK(lhs == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(rhs == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("factor duality for hamming:7,4 with channel factors") {
    const CodePair h74 = oracles::pair_of("hamming:7,4");
    const std::vector<std::array<double, 2>> mu(7, {0.9, 0.1});
    const auto [lhs, rhs] = dual_indicator_check(h74, mu);
    CHECK(std::abs(lhs - rhs) <= 1e-12);
}

TEST_CASE("factor duality over random codes and factors") {
    std::mt19937_64 rng(79);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 11);
        const int k = 1 + static_cast<int>(rng() % static_cast<unsigned>(n));
        const CodePair pair = build_pair(oracles::random_full_rank_code(rng, n, k));
        std::vector<std::array<double, 2>> mu(static_cast<std::size_t>(n));
        for (auto& m : mu) m = {unit(rng), unit(rng)};
        const auto [lhs, rhs] = dual_indicator_check(pair, mu);
        const double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
        CHECK(std::abs(lhs - rhs) <= 1e-10 * scale);
    }
}

TEST_SUITE_END();
