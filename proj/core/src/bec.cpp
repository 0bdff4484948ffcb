#include "pscbsc/bec.hpp"

#include <algorithm>

namespace pscbsc {

ErasurePattern::ErasurePattern(int n_, std::vector<int> positions)
    : n(n_), erased(std::move(positions)) {
    std::sort(erased.begin(), erased.end());
    for (std::size_t i = 0; i < erased.size(); ++i) {
        if (erased[i] < 1 || erased[i] > n)
            throw OutOfRange("erased positions must lie in 1..n");
        if (i > 0 && erased[i] == erased[i - 1])
            throw OutOfRange("duplicate erased position");
    }
}

std::vector<int> ErasurePattern::erased_cols() const {
    std::vector<int> cols;
    cols.reserve(erased.size());
    for (int pos : erased) cols.push_back(pos - 1);
    return cols;
}

std::vector<int> ErasurePattern::observed_cols() const {
    std::vector<int> cols;
    std::size_t next = 0;
    for (int j = 0; j < n; ++j) {
        if (next < erased.size() && erased[next] == j + 1) {
            ++next;
            continue;
        }
        cols.push_back(j);
    }
    return cols;
}

BecEntropyResult bec_cond_entropy(const CodePair& pair, const ErasurePattern& e) {
    if (e.n != pair.n()) throw DimensionMismatch("pattern length differs from n");
    BecEntropyResult r;
    r.bits = pair.k() - rank(select_columns(pair.gen_code(), e.observed_cols()));
    r.parity_form = e.count() - rank(select_columns(pair.gen_dual(), e.erased_cols()));
    r.consistent = r.bits == r.parity_form;
    return r;
}

BecDualityReport bec_entropy_duality_check(const CodePair& pair, const ErasurePattern& e) {
    if (e.n != pair.n()) throw DimensionMismatch("pattern length differs from n");
    const int n = pair.n();
    const int k = pair.k();
    const int observed = n - e.count();

    BecDualityReport r;
    r.dual_entropy = (n - k) - rank(select_columns(pair.gen_dual(), e.erased_cols()));
    r.dual_entropy_alt = observed - rank(select_columns(pair.gen_code(), e.observed_cols()));
    r.rhs = bec_cond_entropy(pair, e).bits + observed - k;
    r.ok = r.dual_entropy == r.rhs && r.dual_entropy_alt == r.rhs;
    return r;
}

BecSecrecySumReport secrecy_coding_sum_check(const CodePair& pair, const ErasurePattern& e) {
    if (e.n != pair.n()) throw DimensionMismatch("pattern length differs from n");
    const int n = pair.n();
    const int k = pair.k();
    const int rank_observed = rank(select_columns(pair.gen_code(), e.observed_cols()));

    BecSecrecySumReport r;
    r.coding_entropy = k - rank_observed;
    r.secrecy_entropy = (n - k) - (n - e.count()) + rank_observed;
    r.secrecy_entropy_alt = rank(select_columns(pair.gen_dual(), e.erased_cols()));
    r.sum_ok = r.secrecy_entropy == r.secrecy_entropy_alt &&
               r.secrecy_entropy + r.coding_entropy == e.count();
    r.correctable = r.coding_entropy == 0;

    const int dual_secret_entropy = rank_observed;  // H(S'|X_E), S' = X G_code^T
    r.dual_perfect_secrecy = dual_secret_entropy == k;
    r.iff_ok = r.dual_perfect_secrecy == r.correctable;
    r.budget_iff_ok =
        e.count() != k || ((r.secrecy_entropy == e.count()) == r.correctable);
    return r;
}

BecGuessingReport bec_bhattacharyya_guessing_check(const CodePair& pair,
                                                   const ErasurePattern& e) {
    if (e.n != pair.n()) throw DimensionMismatch("pattern length differs from n");
    const int k = pair.k();
    const int rank_observed = rank(select_columns(pair.gen_code(), e.observed_cols()));

    BecGuessingReport r;
    r.d = k - rank_observed;   // H(U|X_{E^c}, S=0)
    r.f = rank_observed;       // H(S'|X_E)
    r.f_ok = r.f == k - r.d;
    r.exponent_ok = (r.f - k) == -r.d;
    return r;
}

}  // namespace pscbsc
