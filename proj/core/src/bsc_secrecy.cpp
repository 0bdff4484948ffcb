#include "pscbsc/bsc_secrecy.hpp"

#include <algorithm>
#include <cmath>

namespace pscbsc {

Distribution::Distribution(std::vector<double> v) : values(std::move(v)) {
    double sum = 0.0;
    for (double& x : values) {
        if (x < -1e-15) throw OutOfRange("negative probability entry");
        if (x < 0.0) x = 0.0;
        sum += x;
    }
    if (std::abs(sum - 1.0) > 1e-10)
        throw OutOfRange("distribution does not sum to one");
}

Distribution posterior(const SpectralTable& spec, const CodePair& pair, Word x,
                       bool verify, const ChannelVector* ch) {
    if (pair.n() < 64 && (x >> pair.n()))
        throw DimensionMismatch("received vector has bits beyond n");
    const Word shift = mul_vec(x, transpose(pair.gen_code()));
    const std::size_t size = std::size_t{1} << spec.k;
    std::vector<double> d(size);
    for (std::size_t h = 0; h < size; ++h)
        d[h] = spec.posterior_entry(static_cast<Word>(h) ^ shift);

    if (verify) {
        const auto duals = all_codewords(pair.gen_dual());
        const auto reps = all_codewords(pair.gen_dual_complement());
        for (std::size_t h = 0; h < size; ++h) {
            double mass = 0.0;
            for (Word c : duals) mass += bsc_prob(*ch, x ^ reps[h] ^ c);
            if (std::abs(mass - d[h]) > 1e-12)
                throw Error("posterior disagrees with direct coset sums");
        }
    }
    return Distribution(std::move(d));
}

Distribution posterior(const CodePair& pair, const ChannelVector& ch, Word x,
                       int enum_cap) {
    const SpectralTable spec = spectral(pair, ch, enum_cap);
    return posterior(spec, pair, x, /*verify=*/true, &ch);
}

double bhattacharyya_uniform(const Distribution& d) {
    const double uniform = 1.0 / static_cast<double>(d.size());
    double b = 0.0;
    for (double p : d.values) b += std::sqrt(p * uniform);
    return b;
}

PermutationInvarianceReport permutation_invariance_check(const CodePair& pair,
                                                         const ChannelVector& ch,
                                                         int enum_cap) {
    if (pair.n() > enum_cap)
        throw SizeLimit("invariance sweep exceeds the configured cap");
    const SpectralTable spec = spectral(pair, ch, enum_cap);

    PermutationInvarianceReport report;
    const Distribution ref = posterior(spec, pair, 0);
    std::vector<double> ref_sorted = ref.values;
    std::sort(ref_sorted.begin(), ref_sorted.end());
    const double ref_b = bhattacharyya_uniform(ref);

    std::vector<double> sorted(ref_sorted.size());
    for (Word x = 0; x < (Word{1} << pair.n()); ++x) {
        const Distribution d = posterior(spec, pair, x);
        sorted = d.values;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 0; i < sorted.size(); ++i)
            report.max_sorted_deviation =
                std::max(report.max_sorted_deviation, std::abs(sorted[i] - ref_sorted[i]));
        report.max_bhattacharyya_deviation =
            std::max(report.max_bhattacharyya_deviation,
                     std::abs(bhattacharyya_uniform(d) - ref_b));
        ++report.vectors_checked;
    }
    return report;
}

}  // namespace pscbsc
