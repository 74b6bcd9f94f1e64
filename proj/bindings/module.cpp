#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "qentropy/audit.hpp"
#include "qentropy/conditional.hpp"
#include "qentropy/entropy.hpp"

namespace py = pybind11;
using namespace qentropy;

namespace {

EntropyParams make_params(double q, double tau, double lambda, std::optional<double> alpha) {
    EntropyParams params{.q = q, .tau = tau, .lambda = lambda};
    params.alpha = alpha;
    params.validate();
    return params;
}

Distribution dist(const std::vector<double>& p, bool normalize = false) {
    return Distribution::make(p, normalize);
}

JointDistribution joint(const std::vector<std::vector<double>>& r) {
    return JointDistribution::make(r);
}

} // namespace

PYBIND11_MODULE(_qentropy, m) {
    m.doc() = "generalized entropy families, q-deformed composition, axiom audits";

    py::register_exception<qentropy::error>(m, "QEntropyError");

    m.def(
        "make_distribution",
        [](const std::vector<double>& p, bool normalize) {
            return dist(p, normalize).probs();
        },
        py::arg("p"), py::arg("normalize") = false);
    m.def(
        "escort",
        [](const std::vector<double>& p, double q) { return escort(dist(p), q).probs(); },
        py::arg("p"), py::arg("q"));
    m.def(
        "direct_product",
        [](const std::vector<double>& p, const std::vector<double>& q) {
            return direct_product(dist(p), dist(q)).probs();
        },
        py::arg("p"), py::arg("q"));

    m.def(
        "q_add", [](double u, double v, double q) { return q_add(u, v, q); },
        py::arg("u"), py::arg("v"), py::arg("q"));
    m.def(
        "h_map", [](double x, double q) { return h_map(x, q); }, py::arg("x"),
        py::arg("q"));
    m.def(
        "h_inv", [](double y, double q) { return h_inv(y, q); }, py::arg("y"),
        py::arg("q"));

    m.def(
        "entropy",
        [](const std::string& family, const std::vector<double>& p, double q, double tau,
           double lambda) {
            return evaluate(family_from_name(family), dist(p),
                            make_params(q, tau, lambda, std::nullopt));
        },
        py::arg("family"), py::arg("p"), py::arg("q") = 1.0, py::arg("tau") = -1.0,
        py::arg("lambda_") = 0.0);
    m.def(
        "info_content", [](double p, double q) { return info_content(p, q); },
        py::arg("p"), py::arg("q"));

    m.def(
        "conditional_entropy",
        [](const std::string& family, const std::vector<std::vector<double>>& r, double q,
           double tau, std::optional<double> alpha) {
            const EntropyParams params = make_params(q, tau, 0.0, alpha);
            const JointDistribution jd = joint(r);
            switch (family_from_name(family)) {
                case EntropyFamily::Corrected: return conditional_corrected(jd, params);
                case EntropyFamily::Nath: return conditional_nath(jd, params);
                case EntropyFamily::JizbaKorbel:
                    return conditional_jizba_korbel(jd, params);
                default:
                    throw invalid_parameter(
                        "conditional supports corrected, nath, jizba-korbel");
            }
        },
        py::arg("family"), py::arg("r"), py::arg("q") = 1.0, py::arg("tau") = -1.0,
        py::arg("alpha") = py::none());

    m.def(
        "chain_rule",
        [](const std::string& family, const std::vector<std::vector<double>>& r, double q,
           double tau) {
            const ChainRuleEvaluation eval = chain_rule(
                joint(r), family_from_name(family), make_params(q, tau, 0.0, std::nullopt));
            py::dict out;
            out["joint"] = eval.joint_entropy;
            out["marginal"] = eval.marginal_entropy;
            out["conditional"] = eval.conditional_entropy;
            out["combined"] = eval.combined;
            out["gap"] = eval.gap;
            return out;
        },
        py::arg("family"), py::arg("r"), py::arg("q") = 1.0, py::arg("tau") = -1.0);

    m.def("counterexample_json", [] { return reproduce_counterexample().to_json().dump(); });

    m.def(
        "audit_json",
        [](const std::string& family, const std::string& axiom, double q, double tau,
           double lambda, std::size_t trials, std::uint64_t seed, double tol) {
            AuditSuiteConfig config{.family = family_from_name(family),
                                    .params = make_params(q, tau, lambda, std::nullopt),
                                    .trials = trials,
                                    .seed = seed,
                                    .tolerance = tol};
            AuditReport report;
            if (axiom == "a2") report = check_maximality(config);
            else if (axiom == "a3") report = check_expandability(config);
            else if (axiom == "a4") report = check_chain_rule(config);
            else if (axiom == "a5" || axiom == "c4")
                report = check_normalization(config.family, config.params);
            else if (axiom == "c1") report = check_info_additivity(q, trials, seed);
            else if (axiom == "c3") report = check_composability(config);
            else throw invalid_parameter("unknown axiom: " + axiom);
            return report.to_json().dump();
        },
        py::arg("family"), py::arg("axiom"), py::arg("q") = 1.0, py::arg("tau") = -1.0,
        py::arg("lambda_") = 0.0, py::arg("trials") = 1000, py::arg("seed") = 42,
        py::arg("tol") = 1e-9);
}
