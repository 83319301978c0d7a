#pragma once

// Laplacian matrix, its full eigenvalue spectrum, and the quadratic form
// over complex vertex vectors.
//
// The eigensolver is self-contained: Householder reduction to tridiagonal
// form followed by implicit-shift QL. Dense and O(n^3), which is fine at
// desk scale (n up to a few thousand), and deterministic for a given input.

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <vector>

#include "twbound/graph.hpp"

namespace twbound {

using ComplexVector = std::vector<std::complex<double>>;

// Dense symmetric n x n matrix, row-major. Entries of a graph Laplacian
// are integers: deg(v) on the diagonal, -1 on edges, 0 elsewhere.
class LaplacianMatrix {
public:
    explicit LaplacianMatrix(int order)
        : order_(order), entries_(static_cast<size_t>(order) * order, 0.0) {
        if (order < 1) throw std::invalid_argument("laplacian: order must be >= 1");
    }

    int order() const { return order_; }
    double operator()(int i, int j) const {
        return entries_[static_cast<size_t>(i) * order_ + j];
    }
    double& operator()(int i, int j) { return entries_[static_cast<size_t>(i) * order_ + j]; }
    const std::vector<double>& entries() const { return entries_; }

private:
    int order_;
    std::vector<double> entries_;
};

inline LaplacianMatrix laplacian(const Graph& g) {
    if (g.n() == 0) throw std::invalid_argument("laplacian: empty graph");
    LaplacianMatrix L(g.n());
    for (int v = 0; v < g.n(); ++v) L(v, v) = static_cast<double>(g.degree(v));
    for (const auto& [u, v] : g.edges()) {
        L(u, v) = -1.0;
        L(v, u) = -1.0;
    }
    return L;
}

namespace detail {

// Householder reduction of a symmetric matrix to tridiagonal form,
// eigenvalues-only variant (no transformation accumulation).
// On return d holds the diagonal and e[1..n-1] the subdiagonal.
inline void householder_tridiagonalize(std::vector<std::vector<double>>& a,
                                       std::vector<double>& d, std::vector<double>& e) {
    const int n = static_cast<int>(a.size());
    d.assign(static_cast<size_t>(n), 0.0);
    e.assign(static_cast<size_t>(n), 0.0);
    for (int i = n - 1; i >= 1; --i) {
        const int l = i - 1;
        double h = 0.0;
        if (l > 0) {
            double scale = 0.0;
            for (int k = 0; k <= l; ++k) scale += std::abs(a[i][k]);
            if (scale == 0.0) {
                e[i] = a[i][l];
            } else {
                for (int k = 0; k <= l; ++k) {
                    a[i][k] /= scale;
                    h += a[i][k] * a[i][k];
                }
                double f = a[i][l];
                double g = f >= 0.0 ? -std::sqrt(h) : std::sqrt(h);
                e[i] = scale * g;
                h -= f * g;
                a[i][l] = f - g;
                f = 0.0;
                for (int j = 0; j <= l; ++j) {
                    g = 0.0;
                    for (int k = 0; k <= j; ++k) g += a[j][k] * a[i][k];
                    for (int k = j + 1; k <= l; ++k) g += a[k][j] * a[i][k];
                    e[j] = g / h;
                    f += e[j] * a[i][j];
                }
                const double hh = f / (h + h);
                for (int j = 0; j <= l; ++j) {
                    f = a[i][j];
                    e[j] = g = e[j] - hh * f;
                    for (int k = 0; k <= j; ++k) a[j][k] -= f * e[k] + g * a[i][k];
                }
            }
        } else {
            e[i] = a[i][l];
        }
        d[i] = h;
    }
    for (int i = 0; i < n; ++i) d[i] = a[i][i];
}

// Implicit-shift QL on a symmetric tridiagonal matrix (d diagonal,
// e[1..n-1] subdiagonal). Overwrites d with the eigenvalues, unsorted.
inline void tridiagonal_ql(std::vector<double>& d, std::vector<double>& e) {
    const int n = static_cast<int>(d.size());
    if (n == 1) return;
    for (int i = 1; i < n; ++i) e[i - 1] = e[i];
    e[static_cast<size_t>(n) - 1] = 0.0;
    const double eps = std::numeric_limits<double>::epsilon();
    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= eps * dd) break;
            }
            if (m != l) {
                if (iter++ == 50)
                    throw std::runtime_error("eigensolver: QL iteration failed to converge");
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                int i;
                for (i = m - 1; i >= l; --i) {
                    double f = s * e[i];
                    const double b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                }
                if (r == 0.0 && i >= l) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
}

// Eigenvalues of a dense symmetric matrix represented as nested rows.
inline std::vector<double> symmetric_eigenvalues(std::vector<std::vector<double>> a) {
    std::vector<double> d, e;
    householder_tridiagonalize(a, d, e);
    tridiagonal_ql(d, e);
    std::sort(d.begin(), d.end());
    return d;
}

}  // namespace detail

struct SpectrumResult {
    std::vector<double> eigenvalues;  // non-decreasing
    double tolerance = 1e-8;          // reported solver accuracy bound
    double zero_threshold = 1e-8;     // |lambda| below this counts as zero
    int zero_multiplicity = 0;

    // Second-smallest eigenvalue (algebraic connectivity), snapped to an
    // exact 0 when it falls below the zero threshold.
    double lambda2() const {
        if (eigenvalues.size() < 2)
            throw std::invalid_argument("lambda2: need at least 2 vertices");
        double v = eigenvalues[1];
        return std::abs(v) <= zero_threshold ? 0.0 : v;
    }

    double lambda_max() const {
        if (eigenvalues.empty()) throw std::invalid_argument("lambda_max: empty spectrum");
        return eigenvalues.back();
    }
};

inline SpectrumResult eigenvalues(const Graph& g) {
    if (g.n() == 0) throw std::invalid_argument("eigenvalues: empty graph");
    const LaplacianMatrix L = laplacian(g);
    std::vector<std::vector<double>> a(static_cast<size_t>(g.n()),
                                       std::vector<double>(static_cast<size_t>(g.n())));
    for (int i = 0; i < g.n(); ++i)
        for (int j = 0; j < g.n(); ++j) a[i][j] = L(i, j);
    SpectrumResult result;
    result.eigenvalues = detail::symmetric_eigenvalues(std::move(a));
    result.tolerance = 1e-8;
    result.zero_threshold = 1e-8 * std::max<double>(1.0, 2.0 * static_cast<double>(g.m()));
    for (double v : result.eigenvalues)
        if (std::abs(v) <= result.zero_threshold) ++result.zero_multiplicity;
    return result;
}

inline double lambda2(const Graph& g) { return eigenvalues(g).lambda2(); }
inline double lambda_max(const Graph& g) { return eigenvalues(g).lambda_max(); }

// Edge-sum form of x*Lx: sum over edges of |x(u)-x(v)|^2. Always real and
// nonnegative; agrees with the matrix form within rounding.
inline double quadratic_form(const Graph& g, const ComplexVector& x) {
    if (static_cast<int>(x.size()) != g.n())
        throw std::invalid_argument("quadratic_form: vector length != graph order");
    double total = 0.0;
    for (const auto& [u, v] : g.edges()) total += std::norm(x[static_cast<size_t>(u)] - x[static_cast<size_t>(v)]);
    return total;
}

}  // namespace twbound
