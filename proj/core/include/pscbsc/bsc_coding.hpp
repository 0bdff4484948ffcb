#ifndef PSCBSC_BSC_CODING_HPP
#define PSCBSC_BSC_CODING_HPP

#include "pscbsc/channel.hpp"
#include "pscbsc/codebook.hpp"

namespace pscbsc {

// Most probable member of coset m of C-perp under the given channel, with
// ties broken by smallest integer. For uniform p <= 1/2 this is the
// minimum-weight leader.
struct ProbLeader {
    Word vector = 0;
    double prob = 0.0;
};
ProbLeader prob_leader(const CosetTable& dual_cosets, int m, const ChannelVector& ch);

// Optimal block success probability for C-perp on the BSC: the summed
// probabilities of the per-coset most likely error patterns.
double map_success_bsc(const CodePair& pair, const ChannelVector& ch,
                       int enum_cap = kDefaultEnumCap);

// Explicitly realizes the success probability as the projective measurement
// whose projector for message z covers { c_z xor v* }. Checks completeness
// and orthogonality bit-exactly and compares the traced average success
// with map_success_bsc.
struct MapMeasurementReport {
    bool complete = false;        // projectors cover every basis vector once
    bool orthogonal = false;      // supports are pairwise disjoint
    double traced_success = 0.0;  // 2^-(n-k) sum_z Tr[phi_z Pi_z]
    double map_success = 0.0;
    double residual = 0.0;
};
MapMeasurementReport map_measurement_check(const CodePair& pair, const ChannelVector& ch,
                                           int oracle_cap = kDefaultEnumCap);

// Square-root-measurement block success probability for C-perp on the BSC:
// sum over cosets of (sum of squared pattern probabilities) / (coset mass),
// with 0/0 cosets contributing 0.
double srm_success_bsc(const CodePair& pair, const ChannelVector& ch,
                       int enum_cap = kDefaultEnumCap);

// Same value written as E[X^2] for the per-coset 2-norm/1-norm ratio X
// weighted by the coset masses q_m.
double srm_success_bsc_second_moment(const CodePair& pair, const ChannelVector& ch,
                                     int enum_cap = kDefaultEnumCap);

// Diagnostic for the SRM optimality condition: max/min ratio of the
// diagonal of phi^T (Phi Phi^T)^(-1/2) phi. A ratio above one witnesses
// that the condition fails, so the SRM need not be optimal.
double srm_optimality_witness_ratio(const CodePair& pair, const ChannelVector& ch,
                                    int enum_cap = kDefaultEnumCap);

}  // namespace pscbsc

#endif
