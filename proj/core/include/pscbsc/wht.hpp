#ifndef PSCBSC_WHT_HPP
#define PSCBSC_WHT_HPP

#include <array>
#include <span>
#include <vector>

#include "pscbsc/gf2.hpp"

namespace pscbsc {

// A real-valued table over Z_2^bits, indexed by the integer bit mapping.
struct RealTable {
    int bits = 0;
    std::vector<double> values;

    RealTable() = default;
    RealTable(int bits_, std::vector<double> v);
    double operator[](Word i) const { return values[static_cast<std::size_t>(i)]; }
    double& operator[](Word i) { return values[static_cast<std::size_t>(i)]; }
};

// In-place butterfly with the symmetric 2^(-m/2) normalization, so the
// transform is involutive. data.size() must be a power of two.
void wht_inplace(std::span<double> data);

// f_hat(h) = 2^(-m/2) * sum_g (-1)^(h.g) f(g)
RealTable wht(const RealTable& f);

// Both sides of the binary factor-graph duality identity:
//   lhs = sum_{x in C} prod_j mu_j(x_j)
//   rhs = 2^(k-n/2) * sum_{x in C-perp} prod_j mu_hat_j(x_j)
// with mu_hat_j(z) = 2^(-1/2) * (mu_j(0) + (-1)^z mu_j(1)).
struct DualIndicatorResult {
    double lhs = 0.0;
    double rhs = 0.0;
};

DualIndicatorResult dual_indicator_check(const CodePair& pair,
                                         std::span<const std::array<double, 2>> mu);

}  // namespace pscbsc

#endif
