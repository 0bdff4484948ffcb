#include "pscbsc/psc_secrecy.hpp"

#include <cmath>

#include "pscbsc/bsc_coding.hpp"

namespace pscbsc {

double RhoEigensystem::amplitude(int m, Word v) const {
    const double lambda = lambdas[static_cast<std::size_t>(m)];
    if (lambda <= 0.0) return 0.0;
    if (dual_cosets.coset_index(v) != m) return 0.0;
    return std::sqrt(prob_table[static_cast<std::size_t>(v)] / lambda);
}

namespace {

// rho = 2^-k sum_{c in C} Z(c)|theta><theta|Z(c), built densely.
Eigen::MatrixXd dense_rho(const CodePair& pair, const ChannelVector& ch) {
    const std::int64_t dim = std::int64_t{1} << pair.n();
    Eigen::MatrixXd rho = Eigen::MatrixXd::Zero(dim, dim);
    for (Word c : all_codewords(pair.gen_code())) {
        const Eigen::VectorXd state = psc_state(ch, c);
        rho.noalias() += state * state.transpose();
    }
    rho *= std::exp2(-pair.k());
    return rho;
}

}  // namespace

RhoEigensystem rho_eigensystem(const CodePair& pair, const ChannelVector& ch,
                               int enum_cap, int dense_check_cap) {
    if (ch.n() != pair.n()) throw DimensionMismatch("channel length differs from n");

    RhoEigensystem sys;
    sys.n = pair.n();
    sys.k = pair.k();
    sys.dual_cosets = cosets_of_dual(pair, enum_cap);

    const auto& t = sys.dual_cosets;
    sys.lambdas.resize(static_cast<std::size_t>(t.coset_count()));
    for (int m = 0; m < t.coset_count(); ++m) {
        double mass = 0.0;
        for (std::size_t j = 0; j < t.base_codewords.size(); ++j)
            mass += bsc_prob(ch, t.member(m, j));
        sys.lambdas[static_cast<std::size_t>(m)] = mass;
        sys.trace += mass;
    }

    const SpectralTable spec = spectral(pair, ch, enum_cap);
    for (int m = 0; m < t.coset_count(); ++m)
        sys.shat_residual =
            std::max(sys.shat_residual,
                     std::abs(sys.lambdas[static_cast<std::size_t>(m)] -
                              spec.posterior_entry(static_cast<Word>(m))));

    sys.prob_table = error_prob_table(ch);

    if (pair.n() <= dense_check_cap) {
        const Eigen::MatrixXd rho = dense_rho(pair, ch);
        sys.dense_residual = 0.0;
        const std::int64_t dim = rho.rows();
        Eigen::VectorXd psi(dim);
        for (int m = 0; m < t.coset_count(); ++m) {
            const double lambda = sys.lambdas[static_cast<std::size_t>(m)];
            if (lambda <= 0.0) continue;
            psi.setZero();
            for (std::size_t j = 0; j < t.base_codewords.size(); ++j) {
                const Word v = t.member(m, j);
                psi[static_cast<std::int64_t>(v)] =
                    std::sqrt(sys.prob_table[static_cast<std::size_t>(v)] / lambda);
            }
            const Eigen::VectorXd resid = rho * psi - lambda * psi;
            sys.dense_residual =
                std::max(sys.dense_residual, resid.cwiseAbs().maxCoeff());
        }
    }
    return sys;
}

OptimalFidelityResult optimal_fidelity(const CodePair& pair, const ChannelVector& ch,
                                       int enum_cap) {
    if (ch.n() != pair.n()) throw DimensionMismatch("channel length differs from n");
    const CosetTable t = cosets_of_dual(pair, enum_cap);

    OptimalFidelityResult r;
    std::vector<double> leader_probs(static_cast<std::size_t>(t.coset_count()));
    r.leaders.resize(static_cast<std::size_t>(t.coset_count()));
    double q = 0.0;
    for (int m = 0; m < t.coset_count(); ++m) {
        const ProbLeader lead = prob_leader(t, m, ch);
        r.leaders[static_cast<std::size_t>(m)] = lead.vector;
        leader_probs[static_cast<std::size_t>(m)] = lead.prob;
        q += lead.prob;
    }
    r.fidelity = q;

    const double scale = std::exp2(pair.n() - pair.k());
    r.beta.resize(leader_probs.size());
    double trace = 0.0;
    for (std::size_t m = 0; m < leader_probs.size(); ++m) {
        r.beta[m] = scale * leader_probs[m] / q;
        trace += r.beta[m];
    }
    r.sigma_trace_scaled = trace / scale;
    if (std::abs(r.sigma_trace_scaled - 1.0) > 1e-12)
        throw Error("sigma normalization lost: Tr[2^-(n-k) sigma] != 1");
    return r;
}

double suboptimal_fidelity_avg(const CodePair& pair, const ChannelVector& ch,
                               int enum_cap) {
    if (ch.n() != pair.n()) throw DimensionMismatch("channel length differs from n");
    const CosetTable t = cosets_of_dual(pair, enum_cap);
    double sum = 0.0;
    for (int m = 0; m < t.coset_count(); ++m) {
        double sq = 0.0;
        for (std::size_t j = 0; j < t.base_codewords.size(); ++j) {
            const double p = bsc_prob(ch, t.member(m, j));
            sq += p * p;
        }
        sum += std::sqrt(sq);
    }
    return sum * sum;
}

TrivialFidelityResult trivial_fidelity_identity_sigma(const CodePair& pair,
                                                      const ChannelVector& ch,
                                                      int enum_cap) {
    if (ch.n() != pair.n()) throw DimensionMismatch("channel length differs from n");
    const CosetTable t = cosets_of_dual(pair, enum_cap);
    double sum = 0.0;
    double sum_scaled = 0.0;
    const double codewords_per_coset = std::exp2(pair.n() - pair.k());
    for (int m = 0; m < t.coset_count(); ++m) {
        double mass = 0.0;
        for (std::size_t j = 0; j < t.base_codewords.size(); ++j)
            mass += bsc_prob(ch, t.member(m, j));
        sum += std::sqrt(mass);
        sum_scaled += std::sqrt(mass / codewords_per_coset);
    }
    TrivialFidelityResult r;
    r.value = std::exp2(-pair.n()) * sum * sum;
    const double first_form = std::exp2(-0.5 * pair.k()) * sum_scaled;
    r.alt_form = first_form * first_form;
    return r;
}

SrmSecrecyDistributions srm_induced_distributions(const CodePair& pair,
                                                  const ChannelVector& ch,
                                                  int enum_cap) {
    const int n = pair.n();
    const int k = pair.k();
    if (ch.n() != n) throw DimensionMismatch("channel length differs from n");

    const CosetTable t = cosets_of_dual(pair, enum_cap);
    const auto shifts = all_codewords(pair.gen_complement());  // y_h over C^T
    const std::size_t messages = shifts.size();                // 2^(n-k)
    const double inv_messages = 1.0 / static_cast<double>(messages);

    // Tr[rho Pi_g] = 2^-(n-k) sum_m ( sum_{v in coset m} (-1)^(y_g . v) sqrt(p_v) )^2
    std::vector<double> trace_rho_pi(messages, 0.0);
    for (std::size_t g = 0; g < messages; ++g) {
        double total = 0.0;
        for (int m = 0; m < t.coset_count(); ++m) {
            double inner = 0.0;
            for (std::size_t j = 0; j < t.base_codewords.size(); ++j) {
                const Word v = t.member(m, j);
                const double amp = std::sqrt(bsc_prob(ch, v));
                inner += dot(shifts[g], v) ? -amp : amp;
            }
            total += inner * inner;
        }
        trace_rho_pi[g] = inv_messages * total;
    }

    std::vector<double> d(messages, 0.0);
    for (std::size_t hp = 0; hp < messages; ++hp) {
        double acc = 0.0;
        for (std::size_t h = 0; h < messages; ++h) acc += trace_rho_pi[h ^ hp];
        d[hp] = inv_messages * acc;
    }

    // f via the analytic eigendata: each coset leader v* contributes
    // (beta(v)/alpha(v*)) * lambda(m) * |<v*| Z(y_h') |psi(m)>|^2.
    const OptimalFidelityResult opt = optimal_fidelity(pair, ch, enum_cap);
    std::vector<double> f(messages, 0.0);
    for (std::size_t hp = 0; hp < messages; ++hp) {
        double acc = 0.0;
        for (int m = 0; m < t.coset_count(); ++m) {
            const Word leader = opt.leaders[static_cast<std::size_t>(m)];
            const double p_leader = bsc_prob(ch, leader);
            if (p_leader <= 0.0) continue;
            double lambda = 0.0;
            for (std::size_t j = 0; j < t.base_codewords.size(); ++j)
                lambda += bsc_prob(ch, t.member(m, j));
            const double alpha = std::exp2(n - k) * p_leader;
            const double sign = dot(shifts[hp], leader) ? -1.0 : 1.0;
            const double amp = sign * std::sqrt(p_leader / lambda);
            acc += (opt.beta[static_cast<std::size_t>(m)] / alpha) * lambda * amp * amp;
        }
        f[hp] = inv_messages * acc;
    }

    return SrmSecrecyDistributions{Distribution(std::move(d)), Distribution(std::move(f))};
}

namespace {

Eigen::MatrixXd matrix_sqrt_psd(const Eigen::MatrixXd& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
    Eigen::VectorXd vals = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    return es.eigenvectors() * vals.asDiagonal() * es.eigenvectors().transpose();
}

double trace_norm(const Eigen::MatrixXd& m) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    return svd.singularValues().sum();
}

}  // namespace

double fidelity_dense_oracle(const CodePair& pair, const ChannelVector& ch,
                             SigmaChoice choice, int dense_cap) {
    const int n = pair.n();
    const int k = pair.k();
    if (ch.n() != n) throw DimensionMismatch("channel length differs from n");
    if (n > dense_cap) throw SizeLimit("dense fidelity oracle exceeds the cap");

    const std::int64_t dim = std::int64_t{1} << n;
    const double messages = std::exp2(n - k);

    Eigen::VectorXd sigma_diag = Eigen::VectorXd::Zero(dim);
    switch (choice) {
        case SigmaChoice::optimal: {
            const OptimalFidelityResult opt = optimal_fidelity(pair, ch);
            for (std::size_t m = 0; m < opt.leaders.size(); ++m)
                sigma_diag[static_cast<std::int64_t>(opt.leaders[m])] =
                    opt.beta[m] / messages;
            break;
        }
        case SigmaChoice::average: {
            // Tr_A of the joint state: diagonal with entries p_v
            const auto p_table = error_prob_table(ch);
            for (std::int64_t v = 0; v < dim; ++v)
                sigma_diag[v] = p_table[static_cast<std::size_t>(v)];
            break;
        }
        case SigmaChoice::identity:
            sigma_diag.setConstant(std::exp2(-n));
            break;
    }
    const Eigen::VectorXd sqrt_sigma_block =
        (sigma_diag / messages).cwiseMax(0.0).cwiseSqrt();

    const Eigen::MatrixXd rho = dense_rho(pair, ch);
    const Eigen::MatrixXd sqrt_rho = matrix_sqrt_psd(rho / messages);

    // The joint state is block diagonal over messages h with blocks
    // 2^-(n-k) Z(y_h) rho Z(y_h), so the trace norm splits into per-block
    // trace norms.
    double total = 0.0;
    for (Word yh : all_codewords(pair.gen_complement())) {
        Eigen::MatrixXd block = sqrt_rho;
        for (std::int64_t r = 0; r < dim; ++r) {
            if (!dot(static_cast<Word>(r), yh)) continue;
            block.row(r) = -block.row(r);
            block.col(r) = -block.col(r);
        }
        total += trace_norm(block * sqrt_sigma_block.asDiagonal());
    }
    return total * total;
}

SecrecyGramReport secrecy_gram_check(const CodePair& pair, const ChannelVector& ch,
                                     int dense_cap) {
    const int n = pair.n();
    const int k = pair.k();
    if (ch.n() != n) throw DimensionMismatch("channel length differs from n");
    if (n > dense_cap) throw SizeLimit("Gram check exceeds the cap");

    const std::int64_t dim = std::int64_t{1} << n;
    const Eigen::MatrixXd rho = dense_rho(pair, ch);
    Eigen::MatrixXd gram = Eigen::MatrixXd::Zero(dim, dim);
    for (Word yh : all_codewords(pair.gen_complement())) {
        Eigen::MatrixXd block = rho;
        for (std::int64_t r = 0; r < dim; ++r) {
            if (!dot(static_cast<Word>(r), yh)) continue;
            block.row(r) = -block.row(r);
            block.col(r) = -block.col(r);
        }
        gram += block;
    }

    SecrecyGramReport report;
    const auto p_table = error_prob_table(ch);
    const double scale = std::exp2(n - k);
    for (std::int64_t r = 0; r < dim; ++r) {
        for (std::int64_t c = 0; c < dim; ++c) {
            if (r == c) continue;
            report.max_offdiag = std::max(report.max_offdiag, std::abs(gram(r, c)));
        }
        report.max_diag_residual =
            std::max(report.max_diag_residual,
                     std::abs(gram(r, r) - scale * p_table[static_cast<std::size_t>(r)]));
    }
    report.trace = gram.trace();
    return report;
}

}  // namespace pscbsc
