#pragma once

// JSON views of the toolkit's result types, built on nlohmann/json.
// ordered_json keeps insertion order so serialized output is byte-identical
// for identical inputs. Bounds that do not apply serialize as null.

#include <complex>

#include <nlohmann/json.hpp>

#include "twbound/bounds.hpp"
#include "twbound/certificates.hpp"
#include "twbound/exact_treewidth.hpp"
#include "twbound/graph.hpp"
#include "twbound/spectrum.hpp"

namespace twbound {

using ordered_json = nlohmann::ordered_json;

namespace detail {

inline ordered_json optional_json(const std::optional<double>& v) {
    if (v.has_value()) return *v;
    return nullptr;
}

inline ordered_json complex_json(const std::complex<double>& z) {
    return ordered_json::array({z.real(), z.imag()});
}

}  // namespace detail

inline ordered_json spectrum_json(const SpectrumResult& s) {
    ordered_json j;
    j["eigenvalues"] = s.eigenvalues;
    j["lambda2"] = s.eigenvalues.size() >= 2 ? ordered_json(s.lambda2()) : ordered_json(nullptr);
    j["lambda_max"] = s.lambda_max();
    j["tolerance"] = s.tolerance;
    return j;
}

inline ordered_json bounds_json(const BoundReport& r) {
    ordered_json j;
    j["graph"] = {{"n", r.n}, {"m", r.m}, {"max_degree", r.max_degree}};
    j["spectrum"] = {{"lambda2", r.lambda2}, {"lambda_max", r.lambda_max}};
    j["bounds"] = {{"cs03", detail::optional_json(r.cs03)},
                   {"ghnoo24", detail::optional_json(r.ghnoo24)},
                   {"thm1", detail::optional_json(r.thm1)},
                   {"thm2", detail::optional_json(r.thm2)}};
    j["best_integer_lower_bound"] = r.best_integer;
    return j;
}

inline ordered_json decomposition_json(const TreeDecomposition& td) {
    ordered_json j;
    j["n"] = td.n;
    j["width"] = td.width();
    j["bags"] = td.bags;
    j["tree_edges"] = ordered_json::array();
    for (const auto& [a, b] : td.tree_edges) j["tree_edges"].push_back({a, b});
    return j;
}

inline ordered_json exact_json(const Graph& g, const ExactResult& r) {
    ordered_json j;
    j["graph"] = {{"n", g.n()}, {"m", g.m()}};
    j["width"] = r.width;
    j["elimination_order"] = r.elimination_order;
    j["decomposition"] = decomposition_json(r.decomposition);
    return j;
}

inline ordered_json partition_json(const BalancedPartition& p) {
    ordered_json j;
    j["S"] = p.S;
    j["U1"] = p.U1;
    j["U2"] = p.U2;
    j["U3"] = p.U3;
    return j;
}

inline ordered_json gu_liu_json(const GuLiuResult& r) {
    ordered_json j;
    j["applicable"] = r.applicable;
    j["separator_size"] = r.separator_size;
    j["x_size"] = r.x_size;
    j["y_size"] = r.y_size;
    j["rhs"] = r.rhs;
    j["margin"] = r.margin;
    j["pass"] = r.pass;
    return j;
}

// Everything a consumer needs to re-check the certificate from scratch:
// the graph itself, the decomposition the separator was drawn from, the
// partition, the test vector coefficients, and both inequality chains.
inline ordered_json certificate_json(const Graph& g, const TreeDecomposition& td,
                                     const CertificateReport& t1, const Theorem2Report& t2) {
    ordered_json j;
    ordered_json edges = ordered_json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
    j["graph"] = {{"n", g.n()}, {"m", g.m()}, {"max_degree", g.max_degree()}, {"edges", edges}};
    j["decomposition"] = decomposition_json(td);
    j["partition"] = partition_json(t1.partition);

    const auto coeff = triangle_coefficients(static_cast<double>(t1.partition.U1.size()),
                                             static_cast<double>(t1.partition.U2.size()),
                                             static_cast<double>(t1.partition.U3.size()));
    j["coefficients"] = {{"alpha", detail::complex_json(coeff.alpha)},
                         {"beta", detail::complex_json(coeff.beta)},
                         {"gamma", detail::complex_json(coeff.gamma)},
                         {"theta", coeff.theta},
                         {"phi", coeff.phi}};

    ordered_json t1j;
    t1j["lambda2"] = t1.lambda2;
    t1j["max_degree"] = t1.max_degree;
    t1j["sum_x"] = detail::complex_json(t1.sum_x);
    t1j["norm_sq"] = t1.norm_sq;
    t1j["quadratic_form"] = t1.qform;
    t1j["lower"] = t1.lower;
    t1j["upper"] = t1.upper;
    t1j["implied_separator_bound"] = t1.implied_separator_bound;
    t1j["tau"] = t1.tau;
    t1j["checks"] = {{"partition", t1.partition_ok}, {"zero_sum", t1.zero_sum_ok},
                     {"norm", t1.norm_ok},           {"lower", t1.lower_ok},
                     {"upper", t1.upper_ok},         {"separator", t1.separator_ok}};
    t1j["pass"] = t1.pass();
    j["theorem1"] = t1j;

    ordered_json t2j;
    t2j["applicable"] = t2.applicable;
    t2j["complete_branch"] = t2.complete_branch;
    t2j["lambda2"] = t2.lambda2;
    t2j["lambda_max"] = t2.lambda_max;
    t2j["instances"] = ordered_json::array();
    for (const auto& inst : t2.instances) t2j["instances"].push_back(gu_liu_json(inst));
    t2j["summed_lhs"] = t2.summed_lhs;
    t2j["summed_rhs"] = t2.summed_rhs;
    t2j["implied_separator_bound"] = t2.implied_separator_bound;
    t2j["bound_value"] = t2.bound_value;
    t2j["tau"] = t2.tau;
    if (!t2.note.empty()) t2j["note"] = t2.note;
    t2j["pass"] = t2.pass;
    j["theorem2"] = t2j;
    return j;
}

}  // namespace twbound
