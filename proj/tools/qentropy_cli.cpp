#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qentropy/audit.hpp"
#include "qentropy/conditional.hpp"
#include "qentropy/entropy.hpp"

namespace {

using nlohmann::json;
using namespace qentropy;

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitViolated = 2;
constexpr int kExitUsage = 64;

std::string fmt12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

struct CommonOpts {
    std::string family = "corrected";
    double q = 1.0;
    double tau = -1.0;
    double lambda = 0.0;
    std::optional<double> alpha;
    std::string p_inline;
    std::string r_inline;
    std::string in_path;
    std::string format = "table";
    std::string axiom = "all";
    std::size_t trials = 1000;
    std::uint64_t seed = 42;
    double tol = 1e-9;

    EntropyParams params() const {
        EntropyParams out{.q = q, .tau = tau, .lambda = lambda};
        out.alpha = alpha;
        return out;
    }
};

json load_input(const CommonOpts& opts) {
    int sources = !opts.p_inline.empty() + !opts.r_inline.empty() + !opts.in_path.empty();
    if (sources != 1) {
        throw invalid_parameter("provide exactly one of --p, --r, --in");
    }
    if (!opts.p_inline.empty()) return json{{"p", json::parse(opts.p_inline)}};
    if (!opts.r_inline.empty()) return json{{"r", json::parse(opts.r_inline)}};
    if (opts.in_path == "-") {
        std::stringstream buffer;
        buffer << std::cin.rdbuf();
        return json::parse(buffer.str());
    }
    std::ifstream file(opts.in_path);
    if (!file) throw invalid_parameter("cannot open input file: " + opts.in_path);
    return json::parse(file);
}

void print_report(const AuditReport& report, const std::string& format) {
    if (format == "json") {
        std::cout << report.to_json().dump() << "\n";
        return;
    }
    std::cout << "axiom     " << report.axiom << "\n"
              << "family    " << family_name(report.family) << "\n"
              << "verdict   " << (report.holds ? "holds" : "violated") << "\n"
              << "lhs       " << fmt12(report.lhs) << "\n"
              << "rhs       " << fmt12(report.rhs) << "\n"
              << "gap       " << fmt12(report.gap) << "\n"
              << "tolerance " << fmt12(report.tolerance) << "\n";
}

int cmd_compute(const CommonOpts& opts) {
    const json input = load_input(opts);
    const Distribution p = distribution_from_json(input);
    const double value = evaluate(family_from_name(opts.family), p, opts.params());
    if (opts.format == "json") {
        std::cout << json{{"family", opts.family}, {"value", value}}.dump() << "\n";
    } else {
        std::cout << fmt12(value) << "\n";
    }
    return kExitOk;
}

int cmd_conditional(const CommonOpts& opts) {
    const json input = load_input(opts);
    const JointDistribution joint = joint_from_json(input);
    const EntropyFamily family = family_from_name(opts.family);
    double value = 0.0;
    switch (family) {
        case EntropyFamily::Corrected: value = conditional_corrected(joint, opts.params()); break;
        case EntropyFamily::Nath: value = conditional_nath(joint, opts.params()); break;
        case EntropyFamily::JizbaKorbel:
            value = conditional_jizba_korbel(joint, opts.params());
            break;
        default:
            throw invalid_parameter(
                "conditional supports corrected, nath, jizba-korbel");
    }
    if (opts.format == "json") {
        std::cout << json{{"family", opts.family}, {"conditional", value}}.dump() << "\n";
    } else {
        std::cout << fmt12(value) << "\n";
    }
    return kExitOk;
}

int cmd_chain(const CommonOpts& opts) {
    const json input = load_input(opts);
    const JointDistribution joint = joint_from_json(input);
    const ChainRuleEvaluation eval =
        chain_rule(joint, family_from_name(opts.family), opts.params());
    if (opts.format == "json") {
        std::cout << json{{"family", opts.family},
                          {"joint", eval.joint_entropy},
                          {"marginal", eval.marginal_entropy},
                          {"conditional", eval.conditional_entropy},
                          {"combined", eval.combined},
                          {"gap", eval.gap}}
                         .dump()
                  << "\n";
    } else {
        std::cout << "joint       " << fmt12(eval.joint_entropy) << "\n"
                  << "marginal    " << fmt12(eval.marginal_entropy) << "\n"
                  << "conditional " << fmt12(eval.conditional_entropy) << "\n"
                  << "combined    " << fmt12(eval.combined) << "\n"
                  << "gap         " << fmt12(eval.gap) << "\n";
    }
    return kExitOk;
}

int cmd_audit(const CommonOpts& opts) {
    const EntropyFamily family = family_from_name(opts.family);
    AuditSuiteConfig config{.family = family,
                            .params = opts.params(),
                            .trials = opts.trials,
                            .seed = opts.seed,
                            .tolerance = opts.tol};
    const bool chain_capable = family == EntropyFamily::Corrected ||
                               family == EntropyFamily::Nath ||
                               family == EntropyFamily::JizbaKorbel;

    std::vector<AuditReport> reports;
    auto want = [&](const std::string& id) { return opts.axiom == "all" || opts.axiom == id; };
    if (want("a2")) reports.push_back(check_maximality(config));
    if (want("a3")) reports.push_back(check_expandability(config));
    if (want("a4")) {
        if (chain_capable) {
            reports.push_back(check_chain_rule(config));
        } else if (opts.axiom == "a4") {
            throw invalid_parameter("a4 audit supports corrected, nath, jizba-korbel");
        }
    }
    if (want("a5") || want("c4")) reports.push_back(check_normalization(family, opts.params()));
    if (want("c1")) reports.push_back(check_info_additivity(opts.q, opts.trials, opts.seed));
    if (want("c3")) reports.push_back(check_composability(config));
    if (reports.empty()) throw invalid_parameter("unknown axiom: " + opts.axiom);

    bool violated = false;
    if (opts.format == "json") {
        json out = json::array();
        for (const AuditReport& r : reports) out.push_back(r.to_json());
        std::cout << out.dump() << "\n";
    }
    for (const AuditReport& r : reports) {
        if (opts.format != "json") {
            std::cout << r.axiom << "  " << family_name(r.family) << "  "
                      << (r.holds ? "holds" : "violated") << "  gap " << fmt12(r.gap)
                      << "\n";
        }
        violated = violated || !r.holds;
    }
    return violated ? kExitViolated : kExitOk;
}

int cmd_counterexample(const CommonOpts& opts) {
    const AuditReport report = reproduce_counterexample();
    print_report(report, opts.format);
    return kExitViolated;
}

int cmd_search(const CommonOpts& opts) {
    AuditSuiteConfig config{.family = family_from_name(opts.family),
                            .params = opts.params(),
                            .trials = opts.trials,
                            .seed = opts.seed,
                            .tolerance = opts.tol};
    const std::vector<AuditReport> violations = search_violations(config);
    if (opts.format == "json") {
        json out = json::array();
        for (const AuditReport& r : violations) out.push_back(r.to_json());
        std::cout << out.dump() << "\n";
    } else if (violations.empty()) {
        std::cout << "no violations found\n";
    } else {
        for (const AuditReport& r : violations) {
            std::cout << r.axiom << "  q " << fmt12(r.params.q) << "  tau "
                      << fmt12(r.params.tau) << "  lambda " << fmt12(r.params.lambda)
                      << "  gap " << fmt12(r.gap) << "\n";
        }
    }
    return violations.empty() ? kExitOk : kExitViolated;
}

void add_common_flags(CLI::App* cmd, CommonOpts& opts, bool with_data, bool with_audit) {
    cmd->add_option("--family", opts.family,
                    "shannon|nath|corrected|jizba-korbel|aczel-daroczy|tsallis|g-class");
    cmd->add_option("--q", opts.q, "deformation parameter q > 0");
    cmd->add_option("--tau", opts.tau, "scale exponent tau < 0");
    cmd->add_option("--lambda", opts.lambda, "g-class parameter");
    cmd->add_option("--alpha", opts.alpha, "escort exponent for the conditional mean");
    cmd->add_option("--format", opts.format, "json|table")
        ->check(CLI::IsMember({"json", "table"}));
    if (with_data) {
        cmd->add_option("--p", opts.p_inline, "inline JSON probability array");
        cmd->add_option("--r", opts.r_inline, "inline JSON joint matrix");
        cmd->add_option("--in", opts.in_path, "input file with {\"p\": ...} or {\"r\": ...}, - for stdin");
    }
    if (with_audit) {
        cmd->add_option("--axiom", opts.axiom, "a2|a3|a4|a5|c1|c3|c4|all")
            ->check(CLI::IsMember({"a2", "a3", "a4", "a5", "c1", "c3", "c4", "all"}));
        cmd->add_option("--trials", opts.trials, "random witnesses per check");
        cmd->add_option("--seed", opts.seed, "RNG seed");
        cmd->add_option("--tol", opts.tol, "verdict tolerance");
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"generalized-entropy toolkit: entropy families, q-deformed "
                 "composition, and numerical axiom audits"};
    app.require_subcommand(1);

    CommonOpts opts;
    CLI::App* compute = app.add_subcommand("compute", "evaluate an entropy family");
    CLI::App* conditional =
        app.add_subcommand("conditional", "escort-weighted conditional entropy");
    CLI::App* chain = app.add_subcommand("chain", "evaluate both sides of the chain rule");
    CLI::App* audit = app.add_subcommand("audit", "run axiom checks");
    CLI::App* counterexample =
        app.add_subcommand("counterexample", "replicate the chain-rule counterexample");
    CLI::App* search = app.add_subcommand("search", "grid search for axiom violations");

    add_common_flags(compute, opts, true, false);
    add_common_flags(conditional, opts, true, false);
    add_common_flags(chain, opts, true, false);
    add_common_flags(audit, opts, false, true);
    add_common_flags(counterexample, opts, false, false);
    add_common_flags(search, opts, false, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (compute->parsed()) return cmd_compute(opts);
        if (conditional->parsed()) return cmd_conditional(opts);
        if (chain->parsed()) return cmd_chain(opts);
        if (audit->parsed()) return cmd_audit(opts);
        if (counterexample->parsed()) return cmd_counterexample(opts);
        if (search->parsed()) return cmd_search(opts);
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const qentropy::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitUsage;
}
