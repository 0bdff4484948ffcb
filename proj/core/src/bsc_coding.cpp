#include "pscbsc/bsc_coding.hpp"

#include <cmath>
#include <limits>

namespace pscbsc {

ProbLeader prob_leader(const CosetTable& dual_cosets, int m, const ChannelVector& ch) {
    ProbLeader best;
    best.prob = -1.0;
    for (Word c : dual_cosets.base_codewords) {
        const Word v = dual_cosets.representatives[static_cast<std::size_t>(m)] ^ c;
        const double p = bsc_prob(ch, v);
        if (p > best.prob || (p == best.prob && v < best.vector)) {
            best.vector = v;
            best.prob = p;
        }
    }
    return best;
}

double map_success_bsc(const CodePair& pair, const ChannelVector& ch, int enum_cap) {
    if (ch.n() != pair.n()) throw DimensionMismatch("channel length differs from n");
    const CosetTable t = cosets_of_dual(pair, enum_cap);
    double total = 0.0;
    for (int m = 0; m < t.coset_count(); ++m) total += prob_leader(t, m, ch).prob;
    return total;
}

MapMeasurementReport map_measurement_check(const CodePair& pair, const ChannelVector& ch,
                                           int oracle_cap) {
    const int n = pair.n();
    if (ch.n() != n) throw DimensionMismatch("channel length differs from n");
    if (n > oracle_cap) throw SizeLimit("measurement check exceeds the configured cap");

    const CosetTable t = cosets_of_dual(pair, oracle_cap);
    std::vector<Word> leaders(static_cast<std::size_t>(t.coset_count()));
    for (int m = 0; m < t.coset_count(); ++m)
        leaders[static_cast<std::size_t>(m)] = prob_leader(t, m, ch).vector;

    const auto dual_codewords = all_codewords(pair.gen_dual());
    const std::size_t dim = std::size_t{1} << n;

    MapMeasurementReport report;
    std::vector<int> covered(dim, 0);
    std::vector<double> phi_z(dim);
    double traced = 0.0;
    for (Word cz : dual_codewords) {
        // diagonal of the output state for message z: entry v is p(v xor c_z)
        for (std::size_t v = 0; v < dim; ++v)
            phi_z[v] = bsc_prob(ch, static_cast<Word>(v) ^ cz);
        for (Word leader : leaders) {
            const Word support = cz ^ leader;
            ++covered[static_cast<std::size_t>(support)];
            traced += phi_z[static_cast<std::size_t>(support)];
        }
    }
    report.complete = true;
    report.orthogonal = true;
    for (int c : covered) {
        if (c != 1) report.complete = false;
        if (c > 1) report.orthogonal = false;
    }
    report.traced_success = traced / static_cast<double>(dual_codewords.size());
    report.map_success = map_success_bsc(pair, ch, oracle_cap);
    report.residual = std::abs(report.traced_success - report.map_success);
    return report;
}

double srm_success_bsc(const CodePair& pair, const ChannelVector& ch, int enum_cap) {
    if (ch.n() != pair.n()) throw DimensionMismatch("channel length differs from n");
    const CosetTable t = cosets_of_dual(pair, enum_cap);
    double total = 0.0;
    for (int m = 0; m < t.coset_count(); ++m) {
        double mass = 0.0;
        double sq = 0.0;
        for (std::size_t j = 0; j < t.base_codewords.size(); ++j) {
            const double p = bsc_prob(ch, t.member(m, j));
            mass += p;
            sq += p * p;
        }
        if (mass == 0.0) continue;  // the 0/0 coset contributes nothing
        total += sq / mass;
    }
    return total;
}

double srm_success_bsc_second_moment(const CodePair& pair, const ChannelVector& ch,
                                     int enum_cap) {
    const CosetTable t = cosets_of_dual(pair, enum_cap);
    double expectation = 0.0;
    for (int m = 0; m < t.coset_count(); ++m) {
        double mass = 0.0;
        double sq = 0.0;
        for (std::size_t j = 0; j < t.base_codewords.size(); ++j) {
            const double p = bsc_prob(ch, t.member(m, j));
            mass += p;
            sq += p * p;
        }
        if (mass == 0.0) continue;
        const double x = std::sqrt(sq) / mass;
        expectation += mass * x * x;
    }
    return expectation;
}

double srm_optimality_witness_ratio(const CodePair& pair, const ChannelVector& ch,
                                    int enum_cap) {
    const int n = pair.n();
    if (ch.n() != n) throw DimensionMismatch("channel length differs from n");
    if (n > enum_cap) throw SizeLimit("witness sweep exceeds the configured cap");
    const auto dual_codewords = all_codewords(pair.gen_dual());
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    for (Word v = 0; v < (Word{1} << n); ++v) {
        double coset_mass = 0.0;
        for (Word c : dual_codewords) coset_mass += bsc_prob(ch, v ^ c);
        if (coset_mass <= 0.0) continue;
        const double entry = bsc_prob(ch, v) / std::sqrt(coset_mass);
        lo = std::min(lo, entry);
        hi = std::max(hi, entry);
    }
    if (lo <= 0.0 || !std::isfinite(lo)) return std::numeric_limits<double>::infinity();
    return hi / lo;
}

}  // namespace pscbsc
