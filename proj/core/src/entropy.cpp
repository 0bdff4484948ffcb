#include "pscbsc/entropy.hpp"

#include <cmath>

namespace pscbsc {

namespace {
constexpr double kProbFloor = 1e-300;

double plogp(double p) { return p > kProbFloor ? -p * std::log2(p) : 0.0; }

Word drop_bit(Word v, int bit) {
    const Word low = v & ((Word{1} << bit) - 1);
    const Word high = (v >> (bit + 1)) << bit;
    return low | high;
}
}  // namespace

double shannon(std::span<const double> probs) {
    double h = 0.0;
    for (double p : probs) {
        if (p < -1e-15) throw OutOfRange("negative probability entry");
        h += plogp(p);
    }
    return h;
}

double shannon(const Distribution& d) { return shannon(std::span(d.values)); }

double binary_entropy(double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw OutOfRange("p must lie in [0, 1]");
    return plogp(p) + plogp(1.0 - p);
}

double binary_entropy_inverse(double h) {
    if (!(h >= 0.0 && h <= 1.0)) throw OutOfRange("entropy must lie in [0, 1]");
    if (h == 0.0) return 0.0;
    if (h == 1.0) return 0.5;
    double lo = 0.0, hi = 0.5;
    double p = 0.25;
    for (int iter = 0; iter < 200; ++iter) {
        const double err = binary_entropy(p) - h;
        if (std::abs(err) < 1e-14) return p;
        if (err > 0.0)
            hi = p;
        else
            lo = p;
        const double slope = std::log2((1.0 - p) / p);
        double next = slope > 0.0 ? p - err / slope : 0.5 * (lo + hi);
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        p = next;
    }
    return p;
}

double wiretap_posterior_entropy_brute(const CodePair& pair, const ChannelVector& ch,
                                       int enum_cap) {
    const int n = pair.n();
    if (ch.n() != n) throw DimensionMismatch("channel length differs from n");
    if (n > enum_cap) throw SizeLimit("entropy enumeration exceeds the cap");

    const auto p_table = error_prob_table(ch);
    const auto duals = all_codewords(pair.gen_dual());
    const auto reps = all_codewords(pair.gen_dual_complement());
    const double py = std::exp2(-n);  // received vector is marginally uniform

    double h = 0.0;
    std::vector<double> post(reps.size());
    for (Word y = 0; y < (Word{1} << n); ++y) {
        for (std::size_t m = 0; m < reps.size(); ++m) {
            double mass = 0.0;
            for (Word c : duals) mass += p_table[static_cast<std::size_t>(y ^ reps[m] ^ c)];
            post[m] = mass;
        }
        h += py * shannon(std::span(post));
    }
    return h;
}

double dual_coding_entropy_brute(const CodePair& pair, const ChannelVector& ch,
                                 int enum_cap) {
    const int n = pair.n();
    if (ch.n() != n) throw DimensionMismatch("channel length differs from n");
    if (n > enum_cap) throw SizeLimit("entropy enumeration exceeds the cap");

    const auto p_table = error_prob_table(ch);
    const auto duals = all_codewords(pair.gen_dual());
    const double prior = 1.0 / static_cast<double>(duals.size());

    double h = 0.0;
    std::vector<double> post(duals.size());
    for (Word y = 0; y < (Word{1} << n); ++y) {
        double py = 0.0;
        for (std::size_t u = 0; u < duals.size(); ++u) {
            post[u] = prior * p_table[static_cast<std::size_t>(y ^ duals[u])];
            py += post[u];
        }
        if (py <= 0.0) continue;
        for (double& x : post) x /= py;
        h += py * shannon(std::span(post));
    }
    return h;
}

double output_entropy_spectral(const CodePair& pair, const ChannelVector& ch,
                               int enum_cap) {
    const auto eig = spectral(pair, ch, enum_cap).posterior_table();
    return shannon(std::span(eig));
}

VnSecrecyReport vn_secrecy_equality_check(const CodePair& pair, const ChannelVector& ch,
                                          int enum_cap) {
    VnSecrecyReport r;
    r.eigen_entropy = output_entropy_spectral(pair, ch, enum_cap);
    r.classical_entropy = wiretap_posterior_entropy_brute(pair, ch, enum_cap);
    r.residual = std::abs(r.eigen_entropy - r.classical_entropy);
    return r;
}

VnCodingReport vn_coding_duality_check(const CodePair& pair, const ChannelVector& ch,
                                       int enum_cap) {
    if (!ch.uniform())
        throw OutOfRange("the coding duality check needs a uniform channel");
    const double p = ch.n() > 0 ? ch.p(0) : 0.0;

    VnCodingReport r;
    r.lhs = dual_coding_entropy_brute(pair, ch, enum_cap);
    const double secrecy_entropy = output_entropy_spectral(pair, ch, enum_cap);
    const double primal_coding = pair.k() - secrecy_entropy;  // H(U|Y,S=0)
    r.rhs = primal_coding + binary_entropy(p) * pair.n() - pair.k();
    r.residual = std::abs(r.lhs - r.rhs);
    return r;
}

namespace {

// derivative of f in h' at h0, central where possible, one-sided at the
// ends of [0, 1]
template <typename F>
double entropy_derivative(F&& f, double h0, double step) {
    const double lo = h0 - step;
    const double hi = h0 + step;
    if (lo >= 0.0 && hi <= 1.0) return (f(hi) - f(lo)) / (2.0 * step);
    if (hi > 1.0) return (f(h0) - f(lo)) / step;
    return (f(hi) - f(h0)) / step;
}

}  // namespace

GexitReport gexit_duality_check(const CodePair& pair, const ChannelVector& ch, int bit,
                                double step, int enum_cap) {
    const int n = pair.n();
    if (ch.n() != n) throw DimensionMismatch("channel length differs from n");
    if (bit < 0 || bit >= n) throw OutOfRange("bit index out of range");
    if (step < 1e-8) throw StepTooSmall("finite-difference step below noise floor");
    if (step > 0.1) throw OutOfRange("step too large for a local derivative");

    GexitReport r;
    r.h_prime = binary_entropy(ch.p(bit));
    if (r.h_prime <= 0.0)
        throw OutOfRange("h' = 0 endpoint is covered by the EXIT endpoint check");

    const auto dual_entropy = [&](double h) {
        return dual_coding_entropy_brute(pair, ch.with_p(bit, binary_entropy_inverse(h)),
                                         enum_cap);
    };
    const auto primal_entropy_in_hprime = [&](double h) {
        // k - H(S'|Y') as a function of the bit's dual entropy parameter
        return pair.k() -
               output_entropy_spectral(pair, ch.with_p(bit, binary_entropy_inverse(h)),
                                       enum_cap);
    };

    r.g_dual = entropy_derivative(dual_entropy, r.h_prime, step);
    // primal parameter h = 1 - h', so d/dh = -d/dh'
    r.g_primal = -entropy_derivative(primal_entropy_in_hprime, r.h_prime, step);
    r.defect = r.g_dual + r.g_primal - 1.0;
    r.tolerance = 10.0 * step * step + 1e-6;
    return r;
}

BitMatrix shorten_and_puncture(const BitMatrix& g, int bit) {
    if (bit < 0 || bit >= g.cols()) throw OutOfRange("bit index out of range");
    std::vector<Word> rows;
    rows.reserve(static_cast<std::size_t>(g.rows()));
    for (int i = 0; i < g.rows(); ++i) rows.push_back(g.row(i));

    int pivot = -1;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if ((rows[i] >> bit) & 1u) {
            pivot = static_cast<int>(i);
            break;
        }
    }
    std::vector<Word> kept;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (static_cast<int>(i) == pivot) continue;
        Word row = rows[i];
        if (pivot >= 0 && ((row >> bit) & 1u)) row ^= rows[static_cast<std::size_t>(pivot)];
        kept.push_back(drop_bit(row, bit));
    }
    // kept may be empty: the shortened code can be zero-dimensional
    return BitMatrix::from_rows(std::move(kept), g.cols() - 1);
}

ExitEndpointReport exit_endpoint_check(const CodePair& pair, const ChannelVector& ch,
                                       int bit, int enum_cap) {
    const int n = pair.n();
    if (ch.n() != n) throw DimensionMismatch("channel length differs from n");
    if (bit < 0 || bit >= n) throw OutOfRange("bit index out of range");
    if (n > enum_cap) throw SizeLimit("entropy enumeration exceeds the cap");
    if (ch.p(bit) != 0.0)
        throw OutOfRange("the endpoint check needs theta = 0 at the chosen bit");
    double other_p = -1.0;
    for (int j = 0; j < n; ++j) {
        if (j == bit) continue;
        if (other_p < 0.0) other_p = ch.p(j);
        if (ch.p(j) != other_p)
            throw OutOfRange("the endpoint check needs uniform theta off the chosen bit");
    }

    // dual side: H(X_i'|Y'_{~i}, S') by exhaustive Bayes
    std::vector<double> rest_ps;
    for (int j = 0; j < n; ++j)
        if (j != bit) rest_ps.push_back(ch.p(j));
    const auto p_rest = error_prob_table(ChannelVector::from_ps(std::move(rest_ps)));

    const auto duals = all_codewords(pair.gen_dual());
    const auto reps = all_codewords(pair.gen_dual_complement());
    const std::size_t rest_dim = std::size_t{1} << (n - 1);
    const double weight_x = std::exp2(-n);

    double dual_side = 0.0;
    std::vector<double> joint(rest_dim * 2);
    for (std::size_t s = 0; s < reps.size(); ++s) {
        std::fill(joint.begin(), joint.end(), 0.0);
        for (Word c : duals) {
            const Word x = reps[s] ^ c;
            const Word x_rest = drop_bit(x, bit);
            const std::size_t xi = (x >> bit) & 1u;
            for (std::size_t y = 0; y < rest_dim; ++y)
                joint[y * 2 + xi] += weight_x * p_rest[static_cast<std::size_t>(x_rest ^ y)];
        }
        for (std::size_t y = 0; y < rest_dim; ++y) {
            const double w0 = joint[y * 2];
            const double w1 = joint[y * 2 + 1];
            const double mass = w0 + w1;
            if (mass <= 0.0) continue;
            dual_side += mass * binary_entropy(w0 / mass);
        }
    }

    // primal side: Q = H(Y_{~i}|S=0) - H(Y_{~i}|X_i=0, S=0), both spectral
    const double h_full = output_entropy_spectral(pair, ch, enum_cap);
    const BitMatrix sub = shorten_and_puncture(pair.gen_code(), bit);
    const CodePair sub_pair = build_pair(sub);
    std::vector<double> sub_ps(static_cast<std::size_t>(n - 1), other_p);
    const double h_sub =
        output_entropy_spectral(sub_pair, ChannelVector::from_ps(std::move(sub_ps)), enum_cap);
    const double q = h_full - h_sub;

    ExitEndpointReport r;
    r.dual_side = dual_side;
    r.primal_side = 1.0 - q;
    r.sum = r.dual_side + r.primal_side;
    r.residual = std::abs(r.sum - 1.0);
    return r;
}

}  // namespace pscbsc
