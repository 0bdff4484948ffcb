#ifndef PSCBSC_ENTROPY_HPP
#define PSCBSC_ENTROPY_HPP

#include <span>

#include "pscbsc/bsc_secrecy.hpp"

namespace pscbsc {

// -sum p log2 p with 0 log 0 = 0. The span form accepts unnormalized
// nonnegative entries of a valid distribution.
double shannon(const Distribution& d);
double shannon(std::span<const double> probs);

// Binary entropy eta(p) in bits and its inverse on [0, 1/2].
double binary_entropy(double p);
double binary_entropy_inverse(double h);  // Newton with bisection fallback

// Classical conditional entropy H(S'|Y') of the wiretap posterior,
// averaged over all received vectors by exhaustive Bayes.
double wiretap_posterior_entropy_brute(const CodePair& pair, const ChannelVector& ch,
                                       int enum_cap = kDefaultEnumCap);

// Classical conditional entropy H(U'|Y',S') for coding with C-perp on the
// BSC, by exhaustive enumeration (the coset shift drops out by symmetry).
double dual_coding_entropy_brute(const CodePair& pair, const ChannelVector& ch,
                                 int enum_cap = kDefaultEnumCap);

// Eigenvalue route to H(Y|S=0): Shannon entropy of {2^(-k/2) shat(h)}.
double output_entropy_spectral(const CodePair& pair, const ChannelVector& ch,
                               int enum_cap = kDefaultEnumCap);

// H(Y|S=0) computed from the eigenvalues equals the classical H(S'|Y').
struct VnSecrecyReport {
    double eigen_entropy = 0.0;
    double classical_entropy = 0.0;
    double residual = 0.0;
};
VnSecrecyReport vn_secrecy_equality_check(const CodePair& pair, const ChannelVector& ch,
                                          int enum_cap = kDefaultEnumCap);

// H(U'|Y',S') = H(U|Y,S=0) + eta(p) n - k with
// H(U|Y,S=0) = k - H(S'|Y'). Uniform p only.
struct VnCodingReport {
    double lhs = 0.0;  // brute-force H(U'|Y',S')
    double rhs = 0.0;  // (k - H(S'|Y')) + eta(p) n - k
    double residual = 0.0;
};
VnCodingReport vn_coding_duality_check(const CodePair& pair, const ChannelVector& ch,
                                       int enum_cap = kDefaultEnumCap);

// Per-bit GEXIT duality: the dual (BSC) and primal (PSC) GEXIT values at
// bit i satisfy g_dual + g_primal = 1. Both sides are numerical
// derivatives in the bit's entropy parameter h' = eta(p_i); the defect is
// O(step^2). Only the PSC/BSC pair is covered; extending the curves to
// other binary memoryless channels by parameter averaging is out of scope.
struct GexitReport {
    double h_prime = 0.0;
    double g_dual = 0.0;
    double g_primal = 0.0;
    double defect = 0.0;     // g_dual + g_primal - 1
    double tolerance = 0.0;  // 10 step^2 + 1e-6
};
GexitReport gexit_duality_check(const CodePair& pair, const ChannelVector& ch, int bit,
                                double step = 1e-3, int enum_cap = kDefaultEnumCap);

// EXIT endpoint of the duality at bit i: with theta_i = 0 and uniform
// theta elsewhere, H(X_i'|Y'_{~i},S') = 1 - H(X_i|Y_{~i},S=0). The primal
// side is the difference of two spectral entropies (full vs shortened and
// punctured code).
struct ExitEndpointReport {
    double dual_side = 0.0;    // brute-force H(X_i'|Y'_{~i},S')
    double primal_side = 0.0;  // 1 - Q from the spectral route
    double sum = 0.0;          // expect exactly 1
    double residual = 0.0;
};
ExitEndpointReport exit_endpoint_check(const CodePair& pair, const ChannelVector& ch,
                                       int bit, int enum_cap = kDefaultEnumCap);

// {c in C : c_i = 0} with coordinate i removed, as a fresh generator
// matrix. Used by the EXIT endpoint reduction.
BitMatrix shorten_and_puncture(const BitMatrix& g, int bit);

}  // namespace pscbsc

#endif
