#include <benchmark/benchmark.h>

#include <random>

#include "pscbsc/bsc_coding.hpp"
#include "pscbsc/bsc_secrecy.hpp"
#include "pscbsc/entropy.hpp"
#include "pscbsc/psc_coding.hpp"
#include "pscbsc/psc_secrecy.hpp"

using namespace pscbsc;

namespace {

CodePair random_pair(int n, int k, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (;;) {
        std::vector<Word> rows(static_cast<std::size_t>(k));
        for (auto& r : rows) r = rng() & ((Word{1} << n) - 1);
        BitMatrix g = BitMatrix::from_rows(std::move(rows), n);
        if (rank(g) == k) return build_pair(g);
    }
}

void BM_wht(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    std::mt19937_64 rng(1);
    std::vector<double> values(std::size_t{1} << m);
    std::normal_distribution<double> gauss;
    for (auto& v : values) v = gauss(rng);
    for (auto _ : state) {
        auto copy = values;
        wht_inplace(copy);
        benchmark::DoNotOptimize(copy.data());
    }
    state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << m));
}
BENCHMARK(BM_wht)->Arg(8)->Arg(12)->Arg(16)->Arg(20);

void BM_coset_table(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const CodePair pair = random_pair(n, n / 2, 2);
    for (auto _ : state) {
        auto table = cosets_of_dual(pair, n);
        benchmark::DoNotOptimize(table.leaders.data());
    }
}
BENCHMARK(BM_coset_table)->Arg(10)->Arg(14)->Arg(18);

void BM_spectral(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const CodePair pair = random_pair(n, n / 2, 3);
    const auto ch = ChannelVector::uniform_theta(0.9, n);
    for (auto _ : state) {
        auto spec = spectral(pair, ch, n);
        benchmark::DoNotOptimize(spec.shat.values.data());
    }
}
BENCHMARK(BM_spectral)->Arg(8)->Arg(12)->Arg(16);

void BM_block_error(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const CodePair pair = random_pair(n, n / 2, 4);
    const auto ch = ChannelVector::uniform_theta(1.1, n);
    for (auto _ : state) benchmark::DoNotOptimize(block_error_psc(pair, ch, n));
}
BENCHMARK(BM_block_error)->Arg(8)->Arg(12)->Arg(16);

void BM_oracle_srm(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const CodePair pair = random_pair(n, n / 2, 5);
    const auto ch = ChannelVector::uniform_theta(0.8, n);
    for (auto _ : state) {
        auto result = oracle_srm(pair, ch, n);
        benchmark::DoNotOptimize(result.pe);
    }
}
BENCHMARK(BM_oracle_srm)->Arg(6)->Arg(8)->Arg(10);

void BM_map_success(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const CodePair pair = random_pair(n, n / 2, 6);
    const auto ch = ChannelVector::uniform_p(0.11, n);
    for (auto _ : state) benchmark::DoNotOptimize(map_success_bsc(pair, ch, n));
}
BENCHMARK(BM_map_success)->Arg(10)->Arg(14)->Arg(18);

void BM_posterior_entropy_brute(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const CodePair pair = random_pair(n, n / 2, 7);
    const auto ch = ChannelVector::uniform_p(0.2, n);
    for (auto _ : state)
        benchmark::DoNotOptimize(wiretap_posterior_entropy_brute(pair, ch, n));
}
BENCHMARK(BM_posterior_entropy_brute)->Arg(8)->Arg(10)->Arg(12);

void BM_dense_fidelity(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const CodePair pair = random_pair(n, n / 2, 8);
    const auto ch = ChannelVector::uniform_p(0.15, n);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            fidelity_dense_oracle(pair, ch, SigmaChoice::optimal, n));
}
BENCHMARK(BM_dense_fidelity)->Arg(4)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
