#ifndef PSCBSC_BEC_HPP
#define PSCBSC_BEC_HPP

#include <vector>

#include "pscbsc/gf2.hpp"

namespace pscbsc {

// A deterministic erasure pattern: the set of erased positions, 1-based.
struct ErasurePattern {
    int n = 0;
    std::vector<int> erased;

    ErasurePattern(int n_, std::vector<int> positions);
    std::vector<int> erased_cols() const;      // 0-based column indices
    std::vector<int> observed_cols() const;    // complement, 0-based
    int count() const { return static_cast<int>(erased.size()); }
};

// H(X|Y) for coding with C when the bits in E are erased:
// k - rank(G restricted to the observed columns). Also checks the
// equivalent form |E| - rank(H_E) with H the dual generator.
struct BecEntropyResult {
    int bits = 0;            // k - rank(G_{E^c})
    int parity_form = 0;     // |E| - rank(H_E)
    bool consistent = false;
};
BecEntropyResult bec_cond_entropy(const CodePair& pair, const ErasurePattern& e);

// Dual-observation identity: H(X'|X'_E) = H(X|X_{E^c}) + |E^c| - k,
// where the left side is the dual code's uncertainty given the positions
// in E (which the dual channel delivers).
struct BecDualityReport {
    int dual_entropy = 0;       // (n-k) - rank(G_dual columns E)
    int dual_entropy_alt = 0;   // |E^c| - rank(G_{E^c})
    int rhs = 0;                // H(X|X_{E^c}) + |E^c| - k
    bool ok = false;
};
BecDualityReport bec_entropy_duality_check(const CodePair& pair, const ErasurePattern& e);

// Secrecy/coding bookkeeping: H(S|X_{E^c}) + H(U|X_{E^c},S) = |E|, with the
// perfect-secrecy statements tied to correctability.
struct BecSecrecySumReport {
    int secrecy_entropy = 0;       // H(S|X_{E^c})
    int secrecy_entropy_alt = 0;   // same via rank(G_dual columns E)
    int coding_entropy = 0;        // H(U|X_{E^c}, S)
    bool sum_ok = false;           // sum equals |E|
    bool correctable = false;      // H(U|X_{E^c}, S) = 0
    // Dual-side secret is fully hidden iff the primal pattern is correctable.
    bool dual_perfect_secrecy = false;  // H(S'|X_E) = k
    bool iff_ok = false;
    // For |E| = k the primal secrecy entropy saturates its budget |E|
    // exactly when the pattern is correctable.
    bool budget_iff_ok = false;
};
BecSecrecySumReport secrecy_coding_sum_check(const CodePair& pair, const ErasurePattern& e);

// Guessing/Bhattacharyya equivalence: with d = H(U|X_{E^c},S=0) and
// f = H(S'|X_E), checks f = k - d and that the squared Bhattacharyya
// coefficient 2^(f-k) equals the guessing probability 2^-d, as integer
// exponents.
struct BecGuessingReport {
    int d = 0;
    int f = 0;
    bool f_ok = false;          // f == k - d
    bool exponent_ok = false;   // f - k == -d
};
BecGuessingReport bec_bhattacharyya_guessing_check(const CodePair& pair,
                                                   const ErasurePattern& e);

}  // namespace pscbsc

#endif
