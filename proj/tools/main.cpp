// pscbsc: closed-form coding/secrecy quantities for binary linear codes on
// the pure-state channel and its dual binary symmetric channel, with
// brute-force verification.
#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "pscbsc/bec.hpp"
#include "pscbsc/bsc_coding.hpp"
#include "pscbsc/bsc_secrecy.hpp"
#include "pscbsc/entropy.hpp"
#include "pscbsc/psc_coding.hpp"
#include "pscbsc/psc_secrecy.hpp"
#include "suite.hpp"

namespace {

using nlohmann::json;
using namespace pscbsc;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

double parse_angle(const std::string& token) {
    if (token.rfind("deg:", 0) == 0)
        return std::stod(token.substr(4)) * std::numbers::pi / 180.0;
    return std::stod(token);
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= s.size()) {
        const auto comma = s.find(',', start);
        if (comma == std::string::npos) {
            out.push_back(s.substr(start));
            break;
        }
        out.push_back(s.substr(start, comma - start));
        start = comma + 1;
    }
    return out;
}

// --theta takes radians or "deg:x", --p takes error rates; both accept
// per-bit comma lists
ChannelVector make_channel(const std::string& theta_arg, const std::string& p_arg,
                           int n) {
    if (!theta_arg.empty()) {
        std::vector<double> thetas;
        for (const auto& tok : split_commas(theta_arg)) thetas.push_back(parse_angle(tok));
        if (thetas.size() == 1) return ChannelVector::uniform_theta(thetas[0], n);
        return ChannelVector::from_thetas(std::move(thetas));
    }
    std::vector<double> ps;
    for (const auto& tok : split_commas(p_arg)) ps.push_back(std::stod(tok));
    if (ps.size() == 1) return ChannelVector::uniform_p(ps[0], n);
    return ChannelVector::from_ps(std::move(ps));
}

void emit(const json& j, const std::string& json_path) {
    std::cout << j.dump(2) << '\n';
    if (!json_path.empty()) {
        std::ofstream out(json_path);
        out << j.dump(2) << '\n';
    }
}

struct CommonArgs {
    std::string code;
    std::string theta;
    std::string p;
    std::string json_path;
    int oracle_cap = kDefaultOracleCap;
    int enum_cap = kDefaultEnumCap;
    std::uint64_t seed = 12345;  // only the randomized sub-suites consume it
};

void add_common(CLI::App* cmd, CommonArgs& args, bool need_channel) {
    cmd->add_option("--code", args.code, "built-in code name or file path")->required();
    if (need_channel) {
        auto* theta = cmd->add_option("--theta", args.theta,
                                      "PSC angle in radians or deg:x; comma list for per-bit");
        auto* p = cmd->add_option("--p", args.p,
                                  "dual BSC error rate in [0,1/2]; comma list for per-bit");
        theta->excludes(p);
        p->excludes(theta);
    }
    cmd->add_option("--json", args.json_path, "also write the JSON report to this path");
    cmd->add_option("--oracle-cap", args.oracle_cap, "max n for dense state-vector oracles");
    cmd->add_option("--enum-cap", args.enum_cap, "max n for 2^n enumerations");
    cmd->add_option("--seed", args.seed, "seed for randomized sub-suites");
}

int require_channel(const CommonArgs& args) {
    if (args.theta.empty() && args.p.empty()) {
        std::cerr << "error: one of --theta or --p is required\n";
        return kExitUsage;
    }
    return kExitPass;
}

int cmd_pe(const CommonArgs& args, bool with_oracle) {
    if (int rc = require_channel(args)) return rc;
    const CodePair pair = build_pair(resolve_code(args.code));
    const auto ch = make_channel(args.theta, args.p, pair.n());
    const auto spec = spectral(pair, ch, args.enum_cap);

    json j;
    j["schema"] = 1;
    j["code"] = args.code;
    j["n"] = pair.n();
    j["k"] = pair.k();
    j["pe_closed_form"] = block_error_psc(spec);
    j["shat"] = spec.shat.values;
    j["shat_coset_residual"] = spec.coset_residual;

    bool ok = spec.coset_residual <= 1e-10;
    if (with_oracle) {
        const auto oracle = oracle_srm(pair, ch, args.oracle_cap);
        const double residual = std::abs(oracle.pe - block_error_psc(spec));
        j["pe_oracle"] = oracle.pe;
        j["residual"] = residual;
        ok = ok && residual <= 1e-8;
    }
    emit(j, args.json_path);
    return ok ? kExitPass : kExitCheckFailure;
}

int cmd_secrecy_bsc(const CommonArgs& args, const std::string& received) {
    if (int rc = require_channel(args)) return rc;
    const CodePair pair = build_pair(resolve_code(args.code));
    const auto ch = make_channel(args.theta, args.p, pair.n());

    const Word x = received.empty() ? 0 : from_bits(received);
    const auto spec = spectral(pair, ch, args.enum_cap);
    const Distribution post = posterior(spec, pair, x, /*verify=*/true, &ch);
    const double b = bhattacharyya_uniform(post);
    const double pe = block_error_psc(spec);
    const double mismatch = std::abs(b * b - (1.0 - pe));

    json j;
    j["schema"] = 1;
    j["code"] = args.code;
    j["received"] = to_bits(x, pair.n());
    j["posterior"] = post.values;
    j["bhattacharyya"] = b;
    j["b_squared"] = b * b;
    j["matches_pe"] = mismatch <= 1e-10;
    emit(j, args.json_path);
    return mismatch <= 1e-10 ? kExitPass : kExitCheckFailure;
}

int cmd_coding_bsc(const CommonArgs& args) {
    if (int rc = require_channel(args)) return rc;
    const CodePair pair = build_pair(resolve_code(args.code));
    const auto ch = make_channel(args.theta, args.p, pair.n());
    const double map = map_success_bsc(pair, ch, args.enum_cap);
    const double srm = srm_success_bsc(pair, ch, args.enum_cap);

    json j;
    j["schema"] = 1;
    j["code"] = args.code;
    j["map_success"] = map;
    j["srm_success"] = srm;
    j["gap"] = map - srm;
    emit(j, args.json_path);
    return srm <= map + 1e-12 ? kExitPass : kExitCheckFailure;
}

int cmd_secrecy_psc(const CommonArgs& args) {
    if (int rc = require_channel(args)) return rc;
    const CodePair pair = build_pair(resolve_code(args.code));
    const auto ch = make_channel(args.theta, args.p, pair.n());

    const auto opt = optimal_fidelity(pair, ch, args.enum_cap);
    const double avg = suboptimal_fidelity_avg(pair, ch, args.enum_cap);
    const auto trivial = trivial_fidelity_identity_sigma(pair, ch, args.enum_cap);
    const auto dists = srm_induced_distributions(pair, ch, args.enum_cap);

    json j;
    j["schema"] = 1;
    j["code"] = args.code;
    j["optimal_fidelity"] = opt.fidelity;
    j["avg_sigma_fidelity"] = avg;
    j["identity_sigma_fidelity"] = trivial.value;
    j["srm_d"] = dists.d.values;
    j["srm_f"] = dists.f.values;
    emit(j, args.json_path);

    const bool ordered = trivial.value <= avg + 1e-10 && avg <= opt.fidelity + 1e-10;
    return ordered ? kExitPass : kExitCheckFailure;
}

int cmd_entropy(const CommonArgs& args, int gexit_bit, double step) {
    if (int rc = require_channel(args)) return rc;
    const CodePair pair = build_pair(resolve_code(args.code));
    const auto ch = make_channel(args.theta, args.p, pair.n());
    const int cap = std::min(args.enum_cap, 12);

    json j;
    j["schema"] = 1;
    j["code"] = args.code;
    bool ok = true;

    const auto secrecy = vn_secrecy_equality_check(pair, ch, cap);
    j["vne_output"] = {{"eigen_entropy", secrecy.eigen_entropy},
                       {"classical_entropy", secrecy.classical_entropy},
                       {"residual", secrecy.residual}};
    ok = ok && secrecy.residual <= 1e-10;

    if (ch.uniform()) {
        const auto coding = vn_coding_duality_check(pair, ch, cap);
        j["vne_coding"] = {{"dual_coding_entropy", coding.lhs},
                           {"primal_coding_entropy", pair.k() - secrecy.eigen_entropy},
                           {"rhs", coding.rhs},
                           {"residual", coding.residual}};
        ok = ok && coding.residual <= 1e-9;
    }

    if (gexit_bit >= 0) {
        const auto g = gexit_duality_check(pair, ch, gexit_bit, step, cap);
        j["gexit"] = {{"bit", gexit_bit},     {"h_prime", g.h_prime},
                      {"g_dual", g.g_dual},   {"g_primal", g.g_primal},
                      {"defect", g.defect},   {"tolerance", g.tolerance}};
        ok = ok && std::abs(g.defect) <= g.tolerance;
    }
    emit(j, args.json_path);
    return ok ? kExitPass : kExitCheckFailure;
}

int cmd_bec(const CommonArgs& args, const std::string& erase_arg) {
    const CodePair pair = build_pair(resolve_code(args.code));
    std::vector<int> positions;
    if (!erase_arg.empty())
        for (const auto& tok : split_commas(erase_arg))
            if (!tok.empty()) positions.push_back(std::stoi(tok));
    const ErasurePattern e(pair.n(), positions);

    const auto cond = bec_cond_entropy(pair, e);
    const auto dual = bec_entropy_duality_check(pair, e);
    const auto sum = secrecy_coding_sum_check(pair, e);
    const auto guess = bec_bhattacharyya_guessing_check(pair, e);

    json j;
    j["schema"] = 1;
    j["code"] = args.code;
    j["erased"] = e.erased;
    j["coding_entropy"] = {{"bits", cond.bits},
                           {"parity_form", cond.parity_form},
                           {"consistent", cond.consistent}};
    j["entropy_duality"] = {{"dual_entropy", dual.dual_entropy},
                            {"dual_entropy_alt", dual.dual_entropy_alt},
                            {"rhs", dual.rhs},
                            {"ok", dual.ok}};
    j["secrecy_coding_sum"] = {{"secrecy_entropy", sum.secrecy_entropy},
                               {"coding_entropy", sum.coding_entropy},
                               {"sum_ok", sum.sum_ok},
                               {"correctable", sum.correctable},
                               {"dual_perfect_secrecy", sum.dual_perfect_secrecy},
                               {"iff_ok", sum.iff_ok},
                               {"budget_iff_ok", sum.budget_iff_ok}};
    j["guessing"] = {{"d", guess.d},
                     {"f", guess.f},
                     {"f_ok", guess.f_ok},
                     {"exponent_ok", guess.exponent_ok}};
    emit(j, args.json_path);

    const bool ok = cond.consistent && dual.ok && sum.sum_ok && sum.iff_ok &&
                    sum.budget_iff_ok && guess.f_ok && guess.exponent_ok;
    return ok ? kExitPass : kExitCheckFailure;
}

int cmd_suite(tools::SuiteConfig config, const std::string& json_path,
              const std::string& theta_arg) {
    if (!theta_arg.empty()) {
        config.thetas.clear();
        for (const auto& tok : split_commas(theta_arg))
            config.thetas.push_back(parse_angle(tok));
    }
    // `--codes ''` selects the empty code list
    std::erase(config.codes, std::string{});
    const tools::SuiteReport report = tools::run_suite(config);
    report.print_table(std::cout);
    if (!json_path.empty()) {
        std::ofstream out(json_path);
        out << report.to_json().dump(2) << '\n';
    }
    return report.ok() ? kExitPass : kExitCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"coding/secrecy duality calculator for binary linear codes on the "
                 "pure-state channel and its dual binary symmetric channel"};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::help);

    CommonArgs pe_args;
    bool pe_oracle = false;
    auto* pe = app.add_subcommand("pe", "optimal block error rate on the PSC");
    add_common(pe, pe_args, true);
    pe->add_flag("--oracle", pe_oracle, "cross-check against the dense SVD oracle");

    CommonArgs sb_args;
    std::string received;
    auto* sb = app.add_subcommand("secrecy-bsc", "wiretap posterior and leakage on the BSC");
    add_common(sb, sb_args, true);
    sb->add_option("--received", received, "received vector as a '0'/'1' string");

    CommonArgs cb_args;
    auto* cb = app.add_subcommand("coding-bsc", "MAP and SRM success rates on the BSC");
    add_common(cb, cb_args, true);

    CommonArgs sp_args;
    auto* sp = app.add_subcommand("secrecy-psc", "eavesdropper fidelities on the PSC");
    add_common(sp, sp_args, true);

    CommonArgs en_args;
    int gexit_bit = -1;
    double gexit_step = 1e-3;
    auto* en = app.add_subcommand("entropy", "entropy and GEXIT duality reports");
    add_common(en, en_args, true);
    en->add_option("--gexit-bit", gexit_bit, "bit index for the GEXIT check (0-based)");
    en->add_option("--step", gexit_step, "finite-difference step in h'");

    CommonArgs bec_args;
    std::string erase_arg;
    auto* bec = app.add_subcommand("bec", "exact erasure-channel identities");
    add_common(bec, bec_args, false);
    bec->add_option("--erase", erase_arg, "comma list of erased positions, 1-based");

    tools::SuiteConfig suite_config;
    std::string suite_json, suite_thetas;
    auto* suite = app.add_subcommand("suite", "run the full verification suite");
    suite->add_option("--code,--codes", suite_config.codes,
                      "codes to verify (names or files)");
    suite->add_option("--theta", suite_thetas, "comma list of PSC angles");
    suite->add_option("--json", suite_json, "write the JSON report to this path");
    suite->add_option("--oracle-cap", suite_config.oracle_cap, "max n for dense oracles");
    suite->add_option("--enum-cap", suite_config.enum_cap, "max n for 2^n enumerations");
    suite->add_option("--seed", suite_config.seed, "seed for the randomized sub-suites");
    suite->add_flag("--parallel", suite_config.parallel, "run instances concurrently");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (pe->parsed()) return cmd_pe(pe_args, pe_oracle);
        if (sb->parsed()) return cmd_secrecy_bsc(sb_args, received);
        if (cb->parsed()) return cmd_coding_bsc(cb_args);
        if (sp->parsed()) return cmd_secrecy_psc(sp_args);
        if (en->parsed()) return cmd_entropy(en_args, gexit_bit, gexit_step);
        if (bec->parsed()) return cmd_bec(bec_args, erase_arg);
        if (suite->parsed()) return cmd_suite(suite_config, suite_json, suite_thetas);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const OutOfRange& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DimensionMismatch& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitCheckFailure;
    }
    return kExitUsage;
}
