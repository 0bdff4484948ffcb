#include "pscbsc/wht.hpp"

#include <cmath>

namespace pscbsc {

RealTable::RealTable(int bits_, std::vector<double> v) : bits(bits_), values(std::move(v)) {
    if (values.size() != (std::size_t{1} << bits))
        throw DimensionMismatch("table length must be 2^bits");
}

void wht_inplace(std::span<double> data) {
    const std::size_t size = data.size();
    if (size == 0 || (size & (size - 1)) != 0)
        throw DimensionMismatch("length must be a power of two");
    for (std::size_t bs = 1; bs < size; bs <<= 1) {
        for (std::size_t block = 0; block < size; block += bs << 1) {
            for (std::size_t i = block; i < block + bs; ++i) {
                const double a = data[i];
                const double b = data[i + bs];
                data[i] = a + b;
                data[i + bs] = a - b;
            }
        }
    }
    const double scale = 1.0 / std::sqrt(static_cast<double>(size));
    for (double& x : data) x *= scale;
}

RealTable wht(const RealTable& f) {
    RealTable out = f;
    wht_inplace(out.values);
    return out;
}

DualIndicatorResult dual_indicator_check(const CodePair& pair,
                                         std::span<const std::array<double, 2>> mu) {
    const int n = pair.n();
    const int k = pair.k();
    if (static_cast<int>(mu.size()) != n)
        throw DimensionMismatch("need one factor per bit");

    DualIndicatorResult r;
    for (Word x : all_codewords(pair.gen_code())) {
        double prod = 1.0;
        for (int j = 0; j < n; ++j) prod *= mu[static_cast<std::size_t>(j)][(x >> j) & 1u];
        r.lhs += prod;
    }

    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    std::vector<std::array<double, 2>> mu_hat(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        const auto& m = mu[static_cast<std::size_t>(j)];
        mu_hat[static_cast<std::size_t>(j)] = {inv_sqrt2 * (m[0] + m[1]),
                                               inv_sqrt2 * (m[0] - m[1])};
    }
    double dual_sum = 0.0;
    for (Word x : all_codewords(pair.gen_dual())) {
        double prod = 1.0;
        for (int j = 0; j < n; ++j) prod *= mu_hat[static_cast<std::size_t>(j)][(x >> j) & 1u];
        dual_sum += prod;
    }
    r.rhs = std::exp2(k - 0.5 * n) * dual_sum;
    return r;
}

}  // namespace pscbsc
