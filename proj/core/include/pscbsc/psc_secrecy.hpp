#ifndef PSCBSC_PSC_SECRECY_HPP
#define PSCBSC_PSC_SECRECY_HPP

#include "pscbsc/bsc_secrecy.hpp"

namespace pscbsc {

inline constexpr int kDenseFidelityCap = 6;
inline constexpr int kRhoDenseCheckCap = 8;

// Analytic eigendecomposition of the eavesdropper's generator state for
// coset-of-C secrecy on the PSC. Eigenvector m is supported on the coset of
// C-perp with representative m * G_dual_complement, with amplitude
// sqrt(p_v / lambda(m)) at basis vector v, and lambda(m) is that coset's
// probability mass.
struct RhoEigensystem {
    int n = 0;
    int k = 0;
    CosetTable dual_cosets;
    std::vector<double> lambdas;
    std::vector<double> prob_table;  // p_v for every v, feeds amplitude()
    double trace = 0.0;           // sum of eigenvalues
    double shat_residual = 0.0;   // worst |lambda(m) - 2^(-k/2) shat(m)|
    double dense_residual = -1.0; // worst |rho psi - lambda psi|, -1 when skipped

    double amplitude(int m, Word v) const;  // entry of eigenvector m at basis v
};

RhoEigensystem rho_eigensystem(const CodePair& pair, const ChannelVector& ch,
                               int enum_cap = kDefaultEnumCap,
                               int dense_check_cap = kRhoDenseCheckCap);

// The fidelity-maximizing sigma and its value q, which coincides with the
// MAP success probability for C-perp on the dual BSC. sigma~ is diagonal
// with entry beta(v) = 2^(n-k) p_{v*} / q at each coset leader v*.
struct OptimalFidelityResult {
    double fidelity = 0.0;
    std::vector<Word> leaders;        // v* per coset of C-perp
    std::vector<double> beta;         // beta(v) per coset
    double sigma_trace_scaled = 0.0;  // Tr[2^-(n-k) sigma~], expect exactly 1
};

OptimalFidelityResult optimal_fidelity(const CodePair& pair, const ChannelVector& ch,
                                       int enum_cap = kDefaultEnumCap);

// Fidelity for sigma chosen as the average output state:
// (sum_m sqrt(sum of squared pattern probabilities in coset m))^2.
double suboptimal_fidelity_avg(const CodePair& pair, const ChannelVector& ch,
                               int enum_cap = kDefaultEnumCap);

// Fidelity for sigma = 2^-n I, evaluated in both displayed forms; the two
// must agree and the value is the weaker of the lower bounds.
struct TrivialFidelityResult {
    double value = 0.0;      // 2^-n (sum_m sqrt(coset mass))^2
    double alt_form = 0.0;   // (2^(-k/2) sum_m sqrt(coset mass / 2^(n-k)))^2
};

TrivialFidelityResult trivial_fidelity_identity_sigma(const CodePair& pair,
                                                      const ChannelVector& ch,
                                                      int enum_cap = kDefaultEnumCap);

// Classical distributions induced by the square-root measurement on the two
// states of the optimal-fidelity expression; both come out uniform, so the
// SRM is useless as a secrecy measurement here. Which measurement attains
// the optimal fidelity is open (plausibly a geometrically uniform one);
// nothing here assumes an answer.
struct SrmSecrecyDistributions {
    Distribution d;  // induced by the joint message/output state
    Distribution f;  // induced by the product state with sigma~
};

SrmSecrecyDistributions srm_induced_distributions(const CodePair& pair,
                                                  const ChannelVector& ch,
                                                  int enum_cap = kDefaultEnumCap);

// Dense matrix-square-root fidelity oracle for the three sigma choices.
enum class SigmaChoice { optimal, average, identity };

double fidelity_dense_oracle(const CodePair& pair, const ChannelVector& ch,
                             SigmaChoice choice, int dense_cap = kDenseFidelityCap);

// Dense check that the secrecy-side Gram matrix is diagonal with entries
// 2^(n-k) p_v and trace 2^(n-k).
struct SecrecyGramReport {
    double max_offdiag = 0.0;
    double max_diag_residual = 0.0;
    double trace = 0.0;
};

SecrecyGramReport secrecy_gram_check(const CodePair& pair, const ChannelVector& ch,
                                     int dense_cap = kDenseFidelityCap);

}  // namespace pscbsc

#endif
