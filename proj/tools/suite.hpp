// Cross-module verification suite behind the `suite` subcommand.
#ifndef PSCBSC_TOOLS_SUITE_HPP
#define PSCBSC_TOOLS_SUITE_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

namespace pscbsc::tools {

struct SuiteConfig {
    std::vector<std::string> codes{"rep:3", "even:3", "hamming:7,4", "e8"};
    std::vector<double> thetas{};  // empty selects the default grid
    int oracle_cap = 12;
    int enum_cap = 20;
    int dense_cap = 6;
    std::uint64_t seed = 12345;
    bool parallel = false;
};

enum class CheckStatus { pass, fail, skip, warn };

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::pass;
    double lhs = 0.0;
    double rhs = 0.0;
    double residual = 0.0;
    double tolerance = 0.0;
    std::string note;
    double millis = 0.0;  // table only, never serialized
};

struct InstanceReport {
    std::string code;
    int n = 0;
    int k = 0;
    double theta = 0.0;
    double p = 0.0;
    std::vector<CheckResult> checks;
};

struct SuiteReport {
    SuiteConfig config;
    std::vector<InstanceReport> instances;
    std::vector<CheckResult> global_checks;

    int failed() const;
    int passed() const;
    int skipped() const;
    int warned() const;
    bool ok() const { return failed() == 0; }

    nlohmann::json to_json() const;
    void print_table(std::ostream& os) const;
};

SuiteReport run_suite(const SuiteConfig& config);

}  // namespace pscbsc::tools

#endif
