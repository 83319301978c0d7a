#pragma once

// The four spectral treewidth lower bounds, oldest to newest:
//
//   cs03     3*n*l2 / (4*D + 8*l2) - 1
//   ghnoo24  3*n*l2 / max{4*D + 3*l2, 3*D + 4.5*l2} - 1
//   thm1     n*l2 / (D + l2) - 1
//   thm2     2*n*l2 / (3*ln - l2) - 1
//
// where D is the maximum degree, l2 the second-smallest and ln the largest
// Laplacian eigenvalue. The first three require D >= 1 and dominate each
// other in the order listed; thm2 is incomparable to them. An empty result
// means "not applicable" (the graph has no edge), which is a report state
// rather than an error so corpus runs survive edgeless members.

#include <cmath>
#include <optional>

#include "twbound/graph.hpp"
#include "twbound/spectrum.hpp"

namespace twbound {

inline std::optional<double> bound_cs03(int n, double max_degree, double lambda2) {
    if (max_degree < 1.0) return std::nullopt;
    return 3.0 * n * lambda2 / (4.0 * max_degree + 8.0 * lambda2) - 1.0;
}

inline std::optional<double> bound_ghnoo24(int n, double max_degree, double lambda2) {
    if (max_degree < 1.0) return std::nullopt;
    const double denom =
        std::max(4.0 * max_degree + 3.0 * lambda2, 3.0 * max_degree + 4.5 * lambda2);
    return 3.0 * n * lambda2 / denom - 1.0;
}

inline std::optional<double> bound_thm1(int n, double max_degree, double lambda2) {
    if (max_degree < 1.0) return std::nullopt;
    return n * lambda2 / (max_degree + lambda2) - 1.0;
}

inline std::optional<double> bound_thm2(int n, double lambda2, double lambda_max) {
    if (lambda_max <= 0.0) return std::nullopt;
    return 2.0 * n * lambda2 / (3.0 * lambda_max - lambda2) - 1.0;
}

struct BoundReport {
    int n = 0;
    long long m = 0;
    int max_degree = 0;
    double lambda2 = 0.0;
    double lambda_max = 0.0;
    std::optional<double> cs03;
    std::optional<double> ghnoo24;
    std::optional<double> thm1;
    std::optional<double> thm2;
    int best_integer = 0;
};

// Treewidth is an integer, so a real lower bound b certifies tw >= ceil(b - eps);
// eps absorbs eigensolver error and the result is clamped at 0.
inline int integerize_bound(double value) {
    constexpr double eps = 1e-6;
    const double c = std::ceil(value - eps);
    return c < 0.0 ? 0 : static_cast<int>(c);
}

inline BoundReport bounds_report(const Graph& g, const SpectrumResult& spectrum) {
    BoundReport report;
    report.n = g.n();
    report.m = g.m();
    report.max_degree = g.max_degree();
    report.lambda_max = spectrum.lambda_max();
    report.lambda2 = g.n() >= 2 ? spectrum.lambda2() : 0.0;
    if (g.m() >= 1) {
        const double d = static_cast<double>(report.max_degree);
        report.cs03 = bound_cs03(report.n, d, report.lambda2);
        report.ghnoo24 = bound_ghnoo24(report.n, d, report.lambda2);
        report.thm1 = bound_thm1(report.n, d, report.lambda2);
        report.thm2 = bound_thm2(report.n, report.lambda2, report.lambda_max);
    }
    int best = 0;
    for (const auto& b : {report.cs03, report.ghnoo24, report.thm1, report.thm2})
        if (b) best = std::max(best, integerize_bound(*b));
    report.best_integer = best;
    return report;
}

inline BoundReport bounds_report(const Graph& g) {
    if (g.n() < 1) throw std::invalid_argument("bounds_report: empty graph");
    return bounds_report(g, eigenvalues(g));
}

}  // namespace twbound
