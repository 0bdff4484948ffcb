#ifndef PSCBSC_BSC_SECRECY_HPP
#define PSCBSC_BSC_SECRECY_HPP

#include "pscbsc/psc_coding.hpp"

namespace pscbsc {

// A probability vector; entries are clamped at zero and must sum to one.
struct Distribution {
    std::vector<double> values;

    explicit Distribution(std::vector<double> v);
    std::size_t size() const { return values.size(); }
    double operator[](std::size_t i) const { return values[i]; }
};

// Exact posterior over the 2^k secret messages for wiretap coset coding
// with C-perp on the BSC, given the received vector x. The entries are
// 2^(-k/2) shat(h xor h') with h' = x * G_code^T; when verify is set the
// result is cross-checked against direct coset-probability sums.
Distribution posterior(const CodePair& pair, const ChannelVector& ch, Word x,
                       int enum_cap = kDefaultEnumCap);
Distribution posterior(const SpectralTable& spec, const CodePair& pair, Word x,
                       bool verify = false, const ChannelVector* ch = nullptr);

// B(d, uniform) = sum_h sqrt(d_h 2^-k); callers square it for the secrecy
// measure.
double bhattacharyya_uniform(const Distribution& d);

struct PermutationInvarianceReport {
    double max_sorted_deviation = 0.0;  // vs the sorted zero-coset posterior
    double max_bhattacharyya_deviation = 0.0;
    std::size_t vectors_checked = 0;
};

// Confirms that every received vector yields a permutation of the same
// posterior table, so the Bhattacharyya coefficient is receiver-independent.
PermutationInvarianceReport permutation_invariance_check(const CodePair& pair,
                                                         const ChannelVector& ch,
                                                         int enum_cap = kDefaultEnumCap);

}  // namespace pscbsc

#endif
