#include "pscbsc/psc_coding.hpp"

#include <cmath>

namespace pscbsc {

namespace {
// sigma(h) below this is treated as zero, mirroring the pseudo-inverse.
constexpr double kSigmaZeroTol = 1e-12;
}  // namespace

double SpectralTable::posterior_entry(Word h) const {
    const double v = std::exp2(-0.5 * k) * shat[h];
    return v < 0.0 ? 0.0 : v;
}

std::vector<double> SpectralTable::posterior_table() const {
    std::vector<double> out(shat.values.size());
    for (std::size_t h = 0; h < out.size(); ++h)
        out[h] = posterior_entry(static_cast<Word>(h));
    return out;
}

SpectralTable spectral(const CodePair& pair, const ChannelVector& ch, int enum_cap) {
    const int n = pair.n();
    const int k = pair.k();
    if (ch.n() != n) throw DimensionMismatch("channel length differs from n");
    if (n > enum_cap) throw SizeLimit("spectral table exceeds the configured cap");

    SpectralTable t;
    t.n = n;
    t.k = k;

    const auto codewords = all_codewords(pair.gen_code());
    t.s = RealTable(k, std::vector<double>(codewords.size()));
    for (std::size_t g = 0; g < codewords.size(); ++g) {
        double prod = 1.0;
        for (int i = 0; i < n; ++i)
            if ((codewords[g] >> i) & 1u) prod *= ch.cos_theta(i);
        t.s[g] = prod;
    }
    t.shat = wht(t.s);

    // cross-check against the dual-coset probability masses
    const auto duals = all_codewords(pair.gen_dual());
    const auto reps = all_codewords(pair.gen_dual_complement());
    const double scale = std::exp2(-0.5 * k);
    for (std::size_t h = 0; h < reps.size(); ++h) {
        double mass = 0.0;
        for (Word c : duals) mass += bsc_prob(ch, reps[h] ^ c);
        t.coset_residual = std::max(t.coset_residual, std::abs(scale * t.shat[h] - mass));
    }

    const double amp = std::exp2(0.25 * k);
    t.sigma = RealTable(k, std::vector<double>(codewords.size()));
    for (std::size_t h = 0; h < codewords.size(); ++h) {
        const double v = t.shat[h];
        t.sigma[h] = v <= kSigmaZeroTol ? 0.0 : amp * std::sqrt(v);
    }
    t.sigma_hat = wht(t.sigma);
    return t;
}

double srm_pairwise(const SpectralTable& spec, Word g, Word t) {
    const double v = spec.sigma_hat[g ^ t];
    return v * v * std::exp2(-spec.k);
}

double block_error_psc(const SpectralTable& spec) {
    double b = 0.0;
    const double inv = std::exp2(-0.5 * spec.k);
    for (std::size_t h = 0; h < spec.shat.values.size(); ++h)
        b += std::sqrt(spec.posterior_entry(static_cast<Word>(h))) * inv;
    return 1.0 - b * b;
}

double block_error_psc(const CodePair& pair, const ChannelVector& ch, int enum_cap) {
    return block_error_psc(spectral(pair, ch, enum_cap));
}

Eigen::VectorXd psc_state(const ChannelVector& ch, Word c) {
    const int n = ch.n();
    Eigen::VectorXd amp = Eigen::VectorXd::Ones(1);
    for (int i = 0; i < n; ++i) {
        const double c0 = std::cos(ch.theta(i) / 2.0);
        const double s0 = std::sin(ch.theta(i) / 2.0);
        const double sign = ((c >> i) & 1u) ? -1.0 : 1.0;
        Eigen::VectorXd next(amp.size() * 2);
        next.head(amp.size()) = c0 * amp;
        next.tail(amp.size()) = sign * s0 * amp;
        amp.swap(next);
    }
    return amp;
}

namespace {

Eigen::MatrixXd codeword_state_matrix(const CodePair& pair, const ChannelVector& ch) {
    const auto codewords = all_codewords(pair.gen_code());
    Eigen::MatrixXd phi(std::int64_t{1} << pair.n(), static_cast<std::int64_t>(codewords.size()));
    const Eigen::VectorXd base = psc_state(ch, 0);
    for (std::size_t g = 0; g < codewords.size(); ++g) {
        Eigen::VectorXd col = base;
        for (std::int64_t v = 0; v < col.size(); ++v)
            if (dot(static_cast<Word>(v), codewords[g])) col[v] = -col[v];
        phi.col(static_cast<std::int64_t>(g)) = col;
    }
    return phi;
}

bool interior_channel(const ChannelVector& ch) {
    for (int i = 0; i < ch.n(); ++i)
        if (ch.p(i) <= 0.0 || ch.p(i) >= 0.5) return false;
    return true;
}

}  // namespace

SrmOracleResult oracle_srm(const CodePair& pair, const ChannelVector& ch, int oracle_cap) {
    if (ch.n() != pair.n()) throw DimensionMismatch("channel length differs from n");
    if (pair.n() > oracle_cap || pair.k() > 10)
        throw SizeLimit("state-vector oracle exceeds the configured cap");

    const Eigen::MatrixXd phi = codeword_state_matrix(pair, ch);
    // JacobiSVD: BDCSVD mis-factors the highly degenerate spectra these
    // Gram-structured matrices produce
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(phi, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    const double cutoff = 1e-10 * sv(0);
    std::int64_t kept = 0;
    while (kept < sv.size() && sv(kept) > cutoff) ++kept;
    if (kept < sv.size() && interior_channel(ch))
        throw NumericalRankLoss("codeword state matrix lost rank at interior theta");

    const Eigen::MatrixXd psi =
        svd.matrixU().leftCols(kept) * svd.matrixV().leftCols(kept).transpose();

    SrmOracleResult r;
    const Eigen::MatrixXd overlaps = psi.transpose() * phi;
    r.pairwise = overlaps.array().square();
    const std::int64_t m = r.pairwise.rows();
    double err = 0.0;
    for (std::int64_t t = 0; t < m; ++t)
        for (std::int64_t g = 0; g < m; ++g)
            if (g != t) err += r.pairwise(g, t);
    r.pe = err / static_cast<double>(m);
    return r;
}

std::vector<double> gram_eigenvalues(const CodePair& pair, const ChannelVector& ch,
                                     int oracle_cap) {
    if (ch.n() != pair.n()) throw DimensionMismatch("channel length differs from n");
    if (pair.n() > oracle_cap || pair.k() > 10)
        throw SizeLimit("Gram oracle exceeds the configured cap");
    const Eigen::MatrixXd phi = codeword_state_matrix(pair, ch);
    const Eigen::MatrixXd gram = std::exp2(-pair.k()) * (phi.transpose() * phi);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram, Eigen::EigenvaluesOnly);
    const auto& ev = es.eigenvalues();
    return std::vector<double>(ev.data(), ev.data() + ev.size());
}

}  // namespace pscbsc
