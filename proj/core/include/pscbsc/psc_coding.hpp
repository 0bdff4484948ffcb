#ifndef PSCBSC_PSC_CODING_HPP
#define PSCBSC_PSC_CODING_HPP

#include <Eigen/Dense>

#include "pscbsc/channel.hpp"
#include "pscbsc/codebook.hpp"
#include "pscbsc/wht.hpp"

namespace pscbsc {

inline constexpr int kDefaultOracleCap = 12;

// Spectrum of the overlap function for a code on the PSC. s holds the
// overlaps s(g), shat their transform, and sigma(h) = 2^(k/4) sqrt(shat(h)).
// coset_residual records the worst disagreement between 2^(-k/2) shat(h)
// and the matching dual-coset probability mass.
struct SpectralTable {
    int n = 0;
    int k = 0;
    RealTable s;
    RealTable shat;
    RealTable sigma;
    RealTable sigma_hat;
    double coset_residual = 0.0;

    // 2^(-k/2) shat(h): the wiretap posterior entry for coset h.
    double posterior_entry(Word h) const;
    std::vector<double> posterior_table() const;
};

SpectralTable spectral(const CodePair& pair, const ChannelVector& ch,
                       int enum_cap = kDefaultEnumCap);

// Pr[decode g | sent t] under the square-root measurement:
// sigma_hat(g xor t)^2 / 2^k.
double srm_pairwise(const SpectralTable& spec, Word g, Word t);

// Closed-form optimal block error probability on the PSC:
// 1 - B(2^(-k/2) shat, uniform)^2.
double block_error_psc(const SpectralTable& spec);
double block_error_psc(const CodePair& pair, const ChannelVector& ch,
                       int enum_cap = kDefaultEnumCap);

// Explicit state-vector oracle for the SRM. Builds the 2^n x 2^k codeword
// state matrix, forms the measurement from its compact SVD, and evaluates
// the error rate and the full pairwise decode-probability matrix.
struct SrmOracleResult {
    double pe = 0.0;
    Eigen::MatrixXd pairwise;  // pairwise(g, t) = Pr[decode g | sent t]
};

SrmOracleResult oracle_srm(const CodePair& pair, const ChannelVector& ch,
                           int oracle_cap = kDefaultOracleCap);

// Eigenvalues of the normalized Gram matrix 2^(-k) Phi^T Phi, ascending.
std::vector<double> gram_eigenvalues(const CodePair& pair, const ChannelVector& ch,
                                     int oracle_cap = kDefaultOracleCap);

// Column v of the PSC output matrix is the amplitude of basis state v in
// Z(c)|theta>^(x n). Shared by the oracles in this and other modules.
Eigen::VectorXd psc_state(const ChannelVector& ch, Word c);

}  // namespace pscbsc

#endif
