#include "suite.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <future>
#include <numbers>
#include <ostream>
#include <random>

#include "pscbsc/bec.hpp"
#include "pscbsc/bsc_coding.hpp"
#include "pscbsc/bsc_secrecy.hpp"
#include "pscbsc/entropy.hpp"
#include "pscbsc/psc_coding.hpp"
#include "pscbsc/psc_secrecy.hpp"

namespace pscbsc::tools {

namespace {

using Clock = std::chrono::steady_clock;

const char* status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::skip: return "skip";
        case CheckStatus::warn: return "warn";
    }
    return "?";
}

// Runs one check body, turning SizeLimit into a skip and any other error
// into a failure with the message in the note.
template <typename Fn>
CheckResult run_check(const std::string& name, Fn&& body) {
    CheckResult r;
    r.name = name;
    const auto start = Clock::now();
    try {
        body(r);
        if (r.status == CheckStatus::pass && r.tolerance > 0.0 &&
            !(r.residual <= r.tolerance))
            r.status = CheckStatus::fail;
    } catch (const SizeLimit& e) {
        r.status = CheckStatus::skip;
        r.note = e.what();
    } catch (const std::exception& e) {
        r.status = CheckStatus::fail;
        r.note = e.what();
    }
    r.millis = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    return r;
}

InstanceReport run_instance(const SuiteConfig& cfg, const std::string& code_name,
                            double theta) {
    InstanceReport report;
    report.code = code_name;
    report.theta = theta;

    const CodePair pair = build_pair(resolve_code(code_name));
    report.n = pair.n();
    report.k = pair.k();
    const auto ch = ChannelVector::uniform_theta(theta, pair.n());
    report.p = ch.p(0);
    auto& checks = report.checks;

    checks.push_back(run_check("duality_pe_vs_b2", [&](CheckResult& r) {
        const auto spec = spectral(pair, ch, cfg.enum_cap);
        r.lhs = 1.0 - block_error_psc(spec);
        const double b = bhattacharyya_uniform(posterior(spec, pair, 0));
        r.rhs = b * b;
        r.residual = std::abs(r.lhs - r.rhs);
        r.tolerance = 1e-10;
    }));

    checks.push_back(run_check("shat_coset_consistency", [&](CheckResult& r) {
        r.residual = spectral(pair, ch, cfg.enum_cap).coset_residual;
        r.tolerance = 1e-10;
    }));

    checks.push_back(run_check("parseval_sigma", [&](CheckResult& r) {
        const auto spec = spectral(pair, ch, cfg.enum_cap);
        for (Word h = 0; h < (Word{1} << pair.k()); ++h) {
            r.lhs += spec.sigma[h] * spec.sigma[h];
            r.rhs += spec.sigma_hat[h] * spec.sigma_hat[h];
        }
        r.residual = std::abs(r.lhs - r.rhs);
        r.tolerance = 1e-10 * std::max(1.0, r.lhs);
    }));

    checks.push_back(run_check("pe_oracle_svd", [&](CheckResult& r) {
        const auto oracle = oracle_srm(pair, ch, cfg.oracle_cap);
        const auto spec = spectral(pair, ch, cfg.enum_cap);
        r.lhs = block_error_psc(spec);
        r.rhs = oracle.pe;
        double worst = std::abs(r.lhs - r.rhs);
        for (Word g = 0; g < (Word{1} << pair.k()); ++g)
            for (Word t = 0; t < (Word{1} << pair.k()); ++t)
                worst = std::max(worst,
                                 std::abs(oracle.pairwise(static_cast<long>(g),
                                                          static_cast<long>(t)) -
                                          srm_pairwise(spec, g, t)));
        r.residual = worst;
        r.tolerance = 1e-8;
    }));

    checks.push_back(run_check("gram_eigenvalues", [&](CheckResult& r) {
        auto eigs = gram_eigenvalues(pair, ch, cfg.oracle_cap);
        auto expected = spectral(pair, ch, cfg.enum_cap).posterior_table();
        std::sort(eigs.begin(), eigs.end());
        std::sort(expected.begin(), expected.end());
        for (std::size_t i = 0; i < eigs.size(); ++i)
            r.residual = std::max(r.residual, std::abs(eigs[i] - expected[i]));
        r.tolerance = 1e-8;
    }));

    checks.push_back(run_check("posterior_permutation", [&](CheckResult& r) {
        // sweeps all 2^n received vectors, so it gets a tighter cap
        const auto inv =
            permutation_invariance_check(pair, ch, std::min(cfg.enum_cap, 14));
        r.residual = std::max(inv.max_sorted_deviation, inv.max_bhattacharyya_deviation);
        r.tolerance = 1e-12;
    }));

    checks.push_back(run_check("posterior_bayes", [&](CheckResult& r) {
        // posterior() verifies its own coset sums; exercise a few vectors
        for (Word x : {Word{0}, (Word{1} << pair.n()) - 1, Word{5} & ((Word{1} << pair.n()) - 1)})
            posterior(pair, ch, x, cfg.enum_cap);
        r.tolerance = 1e-12;
    }));

    checks.push_back(run_check("map_projective_measurement", [&](CheckResult& r) {
        const auto m = map_measurement_check(pair, ch, cfg.oracle_cap);
        if (!m.complete || !m.orthogonal) {
            r.status = CheckStatus::fail;
            r.note = "projector completeness/orthogonality violated";
        }
        r.lhs = m.traced_success;
        r.rhs = m.map_success;
        r.residual = m.residual;
        r.tolerance = 1e-12;
    }));

    checks.push_back(run_check("srm_not_above_map", [&](CheckResult& r) {
        r.lhs = srm_success_bsc(pair, ch, cfg.enum_cap);
        r.rhs = map_success_bsc(pair, ch, cfg.enum_cap);
        r.residual = std::max(0.0, r.lhs - r.rhs);
        r.tolerance = 1e-12;
    }));

    checks.push_back(run_check("srm_second_moment", [&](CheckResult& r) {
        r.lhs = srm_success_bsc(pair, ch, cfg.enum_cap);
        r.rhs = srm_success_bsc_second_moment(pair, ch, cfg.enum_cap);
        r.residual = std::abs(r.lhs - r.rhs);
        r.tolerance = 1e-12;
    }));

    checks.push_back(run_check("fidelity_chain", [&](CheckResult& r) {
        const auto trivial = trivial_fidelity_identity_sigma(pair, ch, cfg.enum_cap);
        const double avg = suboptimal_fidelity_avg(pair, ch, cfg.enum_cap);
        const auto opt = optimal_fidelity(pair, ch, cfg.enum_cap);
        const double map = map_success_bsc(pair, ch, cfg.enum_cap);
        double worst = std::abs(trivial.value - trivial.alt_form);
        worst = std::max(worst, trivial.value - avg);
        worst = std::max(worst, avg - opt.fidelity);
        worst = std::max(worst, std::abs(opt.fidelity - map) * 1e4);  // 1e-14 budget
        worst = std::max(worst, std::abs(opt.sigma_trace_scaled - 1.0) * 1e4);
        r.lhs = opt.fidelity;
        r.rhs = map;
        r.residual = std::max(0.0, worst);
        r.tolerance = 1e-10;
    }));

    checks.push_back(run_check("fidelity_dense_oracle", [&](CheckResult& r) {
        const auto trivial = trivial_fidelity_identity_sigma(pair, ch, cfg.enum_cap);
        const double avg = suboptimal_fidelity_avg(pair, ch, cfg.enum_cap);
        const auto opt = optimal_fidelity(pair, ch, cfg.enum_cap);
        double worst = std::abs(
            fidelity_dense_oracle(pair, ch, SigmaChoice::optimal, cfg.dense_cap) -
            opt.fidelity);
        worst = std::max(
            worst, std::abs(fidelity_dense_oracle(pair, ch, SigmaChoice::average,
                                                  cfg.dense_cap) -
                            avg));
        worst = std::max(
            worst, std::abs(fidelity_dense_oracle(pair, ch, SigmaChoice::identity,
                                                  cfg.dense_cap) -
                            trivial.value));
        r.residual = worst;
        r.tolerance = 1e-6;
    }));

    checks.push_back(run_check("srm_secrecy_uniform", [&](CheckResult& r) {
        const auto dists =
            srm_induced_distributions(pair, ch, std::min(cfg.enum_cap, 14));
        const double expected = std::exp2(pair.k() - pair.n());
        for (std::size_t h = 0; h < dists.d.size(); ++h) {
            r.residual = std::max(r.residual, std::abs(dists.d[h] - expected));
            r.residual = std::max(r.residual, std::abs(dists.f[h] - expected));
        }
        r.tolerance = 1e-10;
    }));

    checks.push_back(run_check("rho_eigensystem", [&](CheckResult& r) {
        const auto sys = rho_eigensystem(pair, ch, cfg.enum_cap);
        r.residual = std::max(std::abs(sys.trace - 1.0) * 1e4, sys.shat_residual * 1e4);
        if (sys.dense_residual >= 0.0)
            r.residual = std::max(r.residual, sys.dense_residual);
        r.tolerance = 1e-8;
    }));

    checks.push_back(run_check("secrecy_gram_diagonal", [&](CheckResult& r) {
        const auto g = secrecy_gram_check(pair, ch, cfg.dense_cap);
        r.residual = std::max({g.max_offdiag, g.max_diag_residual,
                               std::abs(g.trace - std::exp2(pair.n() - pair.k()))});
        r.tolerance = 1e-10;
    }));

    checks.push_back(run_check("vne_output_entropy", [&](CheckResult& r) {
        const auto v = vn_secrecy_equality_check(pair, ch, std::min(cfg.enum_cap, 12));
        r.lhs = v.eigen_entropy;
        r.rhs = v.classical_entropy;
        r.residual = v.residual;
        r.tolerance = 1e-10;
    }));

    checks.push_back(run_check("vne_coding_duality", [&](CheckResult& r) {
        const auto v = vn_coding_duality_check(pair, ch, std::min(cfg.enum_cap, 12));
        r.lhs = v.lhs;
        r.rhs = v.rhs;
        r.residual = v.residual;
        r.tolerance = 1e-9;
    }));

    checks.push_back(run_check("gexit_duality", [&](CheckResult& r) {
        if (ch.p(0) <= 0.0) {
            r.status = CheckStatus::skip;
            r.note = "h' = 0 endpoint handled by exit_endpoint";
            return;
        }
        const auto g = gexit_duality_check(pair, ch, 0, 1e-3, std::min(cfg.enum_cap, 12));
        r.lhs = g.g_dual;
        r.rhs = 1.0 - g.g_primal;
        r.residual = std::abs(g.defect);
        r.tolerance = 1e-4;
    }));

    checks.push_back(run_check("exit_endpoint", [&](CheckResult& r) {
        std::vector<double> ps(static_cast<std::size_t>(pair.n()), ch.p(0));
        ps[0] = 0.0;
        const auto endpoint = exit_endpoint_check(
            pair, ChannelVector::from_ps(std::move(ps)), 0, std::min(cfg.enum_cap, 12));
        r.lhs = endpoint.dual_side;
        r.rhs = 1.0 - endpoint.primal_side;
        r.residual = endpoint.residual;
        r.tolerance = 1e-9;
    }));

    return report;
}

std::vector<double> default_theta_grid() {
    return {0.0, std::numbers::pi / 6, std::numbers::pi / 3, 1.2, std::numbers::pi / 2};
}

void append_global_checks(const SuiteConfig& cfg, SuiteReport& report) {
    auto& checks = report.global_checks;

    checks.push_back(run_check("bec_identities_random", [&](CheckResult& r) {
        std::mt19937_64 rng(cfg.seed);
        int failures = 0;
        for (int trial = 0; trial < 200; ++trial) {
            const int n = 2 + static_cast<int>(rng() % 15);
            const int k = 1 + static_cast<int>(rng() % static_cast<unsigned>(n));
            BitMatrix g(0, 0);
            do {
                std::vector<Word> rows(static_cast<std::size_t>(k));
                for (auto& row : rows) row = rng() & ((Word{1} << n) - 1);
                g = BitMatrix::from_rows(std::move(rows), n);
            } while (rank(g) != k);
            const CodePair pair = build_pair(g);
            std::vector<int> erased;
            for (int pos = 1; pos <= n; ++pos)
                if (rng() & 1) erased.push_back(pos);
            const ErasurePattern e(n, erased);
            const auto sum = secrecy_coding_sum_check(pair, e);
            const auto guess = bec_bhattacharyya_guessing_check(pair, e);
            if (!bec_cond_entropy(pair, e).consistent ||
                !bec_entropy_duality_check(pair, e).ok || !sum.sum_ok || !sum.iff_ok ||
                !sum.budget_iff_ok || !guess.f_ok || !guess.exponent_ok)
                ++failures;
        }
        r.lhs = 200;
        r.rhs = 200 - failures;
        r.residual = failures;
        r.tolerance = 0.5;  // integer identities: any failure is fatal
    }));

    checks.push_back(run_check("factor_duality_random", [&](CheckResult& r) {
        std::mt19937_64 rng(cfg.seed + 1);
        std::uniform_real_distribution<double> unit(-1.0, 1.0);
        for (int trial = 0; trial < 100; ++trial) {
            const int n = 2 + static_cast<int>(rng() % 11);
            const int k = 1 + static_cast<int>(rng() % static_cast<unsigned>(n));
            BitMatrix g(0, 0);
            do {
                std::vector<Word> rows(static_cast<std::size_t>(k));
                for (auto& row : rows) row = rng() & ((Word{1} << n) - 1);
                g = BitMatrix::from_rows(std::move(rows), n);
            } while (rank(g) != k);
            const CodePair pair = build_pair(g);
            std::vector<std::array<double, 2>> mu(static_cast<std::size_t>(n));
            for (auto& m : mu) m = {unit(rng), unit(rng)};
            const auto [lhs, rhs] = dual_indicator_check(pair, mu);
            const double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
            r.residual = std::max(r.residual, std::abs(lhs - rhs) / scale);
        }
        r.tolerance = 1e-10;
    }));

    checks.push_back(run_check("wht_parseval_random", [&](CheckResult& r) {
        std::mt19937_64 rng(cfg.seed + 2);
        std::normal_distribution<double> gauss;
        for (int m : {8, 12, 14}) {
            std::vector<double> values(std::size_t{1} << m);
            for (auto& v : values) v = gauss(rng);
            double before = 0.0;
            for (double v : values) before += v * v;
            const RealTable t = wht(RealTable(m, std::move(values)));
            double after = 0.0;
            for (double v : t.values) after += v * v;
            r.residual = std::max(r.residual, std::abs(before - after) / before);
        }
        r.tolerance = 1e-10;
    }));

    checks.push_back(run_check("pair_identities_random", [&](CheckResult& r) {
        std::mt19937_64 rng(cfg.seed + 3);
        for (int trial = 0; trial < 50; ++trial) {
            const int n = 2 + static_cast<int>(rng() % 11);
            const int k = 1 + static_cast<int>(rng() % static_cast<unsigned>(n));
            BitMatrix g(0, 0);
            do {
                std::vector<Word> rows(static_cast<std::size_t>(k));
                for (auto& row : rows) row = rng() & ((Word{1} << n) - 1);
                g = BitMatrix::from_rows(std::move(rows), n);
            } while (rank(g) != k);
            for (auto order : {CompletionOrder::ascending, CompletionOrder::descending}) {
                const CodePair pair = build_pair(g, order);
                if (!check_pair_identities(pair)) {
                    r.status = CheckStatus::fail;
                    r.note = "block identities violated";
                    return;
                }
                // duality must hold for any valid complement choice
                const auto ch = ChannelVector::uniform_p(0.17, n);
                const auto spec = spectral(pair, ch, cfg.enum_cap);
                const double b = bhattacharyya_uniform(posterior(spec, pair, 0));
                r.residual = std::max(
                    r.residual, std::abs((1.0 - block_error_psc(spec)) - b * b));
            }
        }
        r.tolerance = 1e-10;
    }));
}

void append_monotonicity_warnings(const SuiteConfig& cfg,
                                  const std::vector<double>& thetas,
                                  SuiteReport& report) {
    for (const auto& code_name : cfg.codes) {
        CheckResult r = run_check("pe_monotone_in_theta." + code_name,
                                  [&](CheckResult& check) {
            const CodePair pair = build_pair(resolve_code(code_name));
            std::vector<double> grid = thetas;
            std::sort(grid.begin(), grid.end());
            double previous = 2.0;
            double worst = 0.0;
            for (double theta : grid) {
                const double pe = block_error_psc(
                    pair, ChannelVector::uniform_theta(theta, pair.n()), cfg.enum_cap);
                worst = std::max(worst, pe - previous);
                previous = pe;
            }
            check.residual = std::max(0.0, worst);
            if (check.residual > 1e-12) check.status = CheckStatus::warn;
            check.tolerance = 0.0;  // advisory only
        });
        if (r.status == CheckStatus::fail) r.status = CheckStatus::warn;
        report.global_checks.push_back(std::move(r));
    }
}

}  // namespace

int SuiteReport::failed() const {
    int count = 0;
    for (const auto& inst : instances)
        for (const auto& c : inst.checks) count += c.status == CheckStatus::fail;
    for (const auto& c : global_checks) count += c.status == CheckStatus::fail;
    return count;
}

int SuiteReport::passed() const {
    int count = 0;
    for (const auto& inst : instances)
        for (const auto& c : inst.checks) count += c.status == CheckStatus::pass;
    for (const auto& c : global_checks) count += c.status == CheckStatus::pass;
    return count;
}

int SuiteReport::skipped() const {
    int count = 0;
    for (const auto& inst : instances)
        for (const auto& c : inst.checks) count += c.status == CheckStatus::skip;
    for (const auto& c : global_checks) count += c.status == CheckStatus::skip;
    return count;
}

int SuiteReport::warned() const {
    int count = 0;
    for (const auto& inst : instances)
        for (const auto& c : inst.checks) count += c.status == CheckStatus::warn;
    for (const auto& c : global_checks) count += c.status == CheckStatus::warn;
    return count;
}

namespace {

nlohmann::json check_to_json(const CheckResult& c) {
    nlohmann::json j{{"name", c.name},
                     {"status", status_name(c.status)},
                     {"lhs", c.lhs},
                     {"rhs", c.rhs},
                     {"residual", c.residual},
                     {"tolerance", c.tolerance}};
    if (!c.note.empty()) j["note"] = c.note;
    return j;
}

}  // namespace

nlohmann::json SuiteReport::to_json() const {
    nlohmann::json j;
    j["schema"] = 1;
    j["config"] = {{"codes", config.codes},
                   {"thetas", config.thetas.empty() ? default_theta_grid() : config.thetas},
                   {"oracle_cap", config.oracle_cap},
                   {"enum_cap", config.enum_cap},
                   {"dense_cap", config.dense_cap},
                   {"seed", config.seed}};
    j["instances"] = nlohmann::json::array();
    for (const auto& inst : instances) {
        nlohmann::json ji{{"code", inst.code}, {"n", inst.n},     {"k", inst.k},
                          {"theta", inst.theta}, {"p", inst.p}};
        ji["checks"] = nlohmann::json::array();
        for (const auto& c : inst.checks) ji["checks"].push_back(check_to_json(c));
        j["instances"].push_back(std::move(ji));
    }
    j["global_checks"] = nlohmann::json::array();
    for (const auto& c : global_checks) j["global_checks"].push_back(check_to_json(c));
    j["summary"] = {{"passed", passed()},
                    {"failed", failed()},
                    {"skipped", skipped()},
                    {"warned", warned()}};
    return j;
}

void SuiteReport::print_table(std::ostream& os) const {
    char line[256];
    for (const auto& inst : instances) {
        std::snprintf(line, sizeof line, "%s [n=%d k=%d] theta=%.6f p=%.6f",
                      inst.code.c_str(), inst.n, inst.k, inst.theta, inst.p);
        os << line << '\n';
        for (const auto& c : inst.checks) {
            std::snprintf(line, sizeof line,
                          "  %-28s %-4s residual=%.3e tol=%.3e (%.1f ms)%s%s",
                          c.name.c_str(), status_name(c.status), c.residual,
                          c.tolerance, c.millis, c.note.empty() ? "" : "  # ",
                          c.note.c_str());
            os << line << '\n';
        }
    }
    if (!global_checks.empty()) os << "global\n";
    for (const auto& c : global_checks) {
        std::snprintf(line, sizeof line,
                      "  %-28s %-4s residual=%.3e tol=%.3e (%.1f ms)%s%s",
                      c.name.c_str(), status_name(c.status), c.residual, c.tolerance,
                      c.millis, c.note.empty() ? "" : "  # ", c.note.c_str());
        os << line << '\n';
    }
    std::snprintf(line, sizeof line, "summary: %d passed, %d failed, %d skipped, %d warned",
                  passed(), failed(), skipped(), warned());
    os << line << '\n';
}

SuiteReport run_suite(const SuiteConfig& config) {
    SuiteReport report;
    report.config = config;
    const std::vector<double> thetas =
        config.thetas.empty() ? default_theta_grid() : config.thetas;

    std::vector<std::pair<std::string, double>> work;
    for (const auto& code : config.codes)
        for (double theta : thetas) work.emplace_back(code, theta);

    report.instances.resize(work.size());
    if (config.parallel) {
        std::vector<std::future<InstanceReport>> futures;
        futures.reserve(work.size());
        for (const auto& [code, theta] : work)
            futures.push_back(std::async(std::launch::async, run_instance,
                                         std::cref(config), code, theta));
        for (std::size_t i = 0; i < futures.size(); ++i)
            report.instances[i] = futures[i].get();
    } else {
        for (std::size_t i = 0; i < work.size(); ++i)
            report.instances[i] = run_instance(config, work[i].first, work[i].second);
    }

    if (!config.codes.empty()) {
        append_monotonicity_warnings(config, thetas, report);
        append_global_checks(config, report);
    }
    return report;
}

}  // namespace pscbsc::tools
