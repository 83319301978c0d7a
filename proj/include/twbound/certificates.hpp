#pragma once

// Constructive replay of the proof machinery behind the two spectral
// treewidth bounds:
//
//   balanced_separator    walk a tree decomposition to a set S inside one of
//                         its bags whose removal leaves only components of
//                         <= (n-|S|)/2 vertices
//   three_partition       group the components of G-S into three sets with
//                         the same size cap and no edges between sets
//   triangle_coefficients unit complex numbers alpha,beta,gamma with
//                         a*alpha + b*beta + c*gamma = 0 whenever
//                         max{a,b,c} <= (a+b+c)/2
//   build_test_vector     x(v) = alpha_i on U_i, 0 on S
//   verify_theorem1_chain lambda2*(n-|S|) <= x*Lx <= maxdeg*|S|, hence
//                         |S| >= n*lambda2/(maxdeg+lambda2)
//   verify_gu_liu         |S| >= 2*lambda2/(lambda_max-lambda2)*|X| for a
//                         partition (S,X,Y), |X| <= |Y|, no X-Y edge
//   verify_theorem2_chain three Gu-Liu instances summed, hence
//                         |S| >= 2n*lambda2/(3*lambda_max-lambda2)
//
// All inequality checks carry the additive tolerance tau = 1e-6*n so that
// certificates never fail on eigensolver rounding noise.

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "twbound/exact_treewidth.hpp"
#include "twbound/graph.hpp"
#include "twbound/spectrum.hpp"

namespace twbound {

struct BalancedPartition {
    std::vector<int> S;
    std::vector<int> U1, U2, U3;  // possibly empty

    int total() const {
        return static_cast<int>(S.size() + U1.size() + U2.size() + U3.size());
    }
    const std::vector<int>& part(int i) const { return i == 0 ? U1 : i == 1 ? U2 : U3; }
};

inline double certificate_tolerance(const Graph& g) { return 1e-6 * g.n(); }

namespace detail {

// Empty string when (S,U1,U2,U3) satisfies every BalancedPartition
// invariant for g, else a description of the first violation. Out-of-range
// or overlapping vertex lists are structural and throw instead.
inline std::string check_partition(const Graph& g, const BalancedPartition& p) {
    std::vector<int> owner(static_cast<size_t>(g.n()), -1);
    const std::vector<const std::vector<int>*> parts = {&p.S, &p.U1, &p.U2, &p.U3};
    for (int which = 0; which < 4; ++which) {
        for (int v : *parts[static_cast<size_t>(which)]) {
            if (v < 0 || v >= g.n())
                throw std::invalid_argument("partition: vertex out of range");
            if (owner[static_cast<size_t>(v)] != -1)
                throw std::invalid_argument("partition: vertex " + std::to_string(v) +
                                            " listed twice");
            owner[static_cast<size_t>(v)] = which;
        }
    }
    for (int v = 0; v < g.n(); ++v)
        if (owner[static_cast<size_t>(v)] == -1)
            throw std::invalid_argument("partition: vertex " + std::to_string(v) + " unassigned");

    const long long rest = g.n() - static_cast<long long>(p.S.size());
    for (int i = 0; i < 3; ++i)
        if (2 * static_cast<long long>(p.part(i).size()) > rest)
            return "part U" + std::to_string(i + 1) + " has " +
                   std::to_string(p.part(i).size()) + " vertices, above the cap (n-|S|)/2";
    for (const auto& [u, v] : g.edges()) {
        const int a = owner[static_cast<size_t>(u)], b = owner[static_cast<size_t>(v)];
        if (a > 0 && b > 0 && a != b)
            return "edge (" + std::to_string(u) + "," + std::to_string(v) +
                   ") joins U" + std::to_string(a) + " and U" + std::to_string(b);
    }
    return {};
}

// Connected components of G-S in BFS discovery order from the smallest
// vertex; each component's vertex list is sorted.
inline std::vector<std::vector<int>> components_outside(const Graph& g,
                                                        const std::vector<bool>& in_s) {
    std::vector<std::vector<int>> comps;
    std::vector<bool> seen(static_cast<size_t>(g.n()), false);
    std::vector<int> stack;
    for (int s = 0; s < g.n(); ++s) {
        if (in_s[static_cast<size_t>(s)] || seen[static_cast<size_t>(s)]) continue;
        std::vector<int> comp;
        seen[static_cast<size_t>(s)] = true;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int w : g.neighbors(v)) {
                if (!in_s[static_cast<size_t>(w)] && !seen[static_cast<size_t>(w)]) {
                    seen[static_cast<size_t>(w)] = true;
                    stack.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

}  // namespace detail

namespace detail {

// The unique component of G-S with more than (n-|S|)/2 vertices, or nullptr.
// (Two such components would together exceed n-|S|.)
inline const std::vector<int>* heavy_component(const std::vector<std::vector<int>>& comps,
                                               long long rest) {
    for (const auto& comp : comps)
        if (2 * static_cast<long long>(comp.size()) > rest) return &comp;
    return nullptr;
}

}  // namespace detail

// Find S contained in some bag of the decomposition (so |S| <= width+1)
// such that every component of G-S has at most (n-|S|)/2 vertices.
//
// Not every decomposition has a whole bag with that property -- for the path
// 0-1-2 with bags {0,1},{1,2},{2} each bag leaves a too-large component, while
// the subset {1} works -- so the search runs in three phases:
//   1. walk the bag tree toward the over-half component, never crossing a
//      tree edge twice (a tree edge cannot have an over-half component on
//      both sides, so the walk cannot loop and makes at most one pass);
//   2. shrink the final bag: dropping a vertex not adjacent to the heavy
//      component enlarges the allowance (n-|S|)/2 without feeding it;
//   3. if the shrink stalls, scan subsets of every bag, smallest first.
inline std::vector<int> balanced_separator(const Graph& g, const TreeDecomposition& td) {
    const auto validation = validate_td(g, td);
    if (!validation.valid())
        throw std::invalid_argument("balanced_separator: invalid decomposition: " +
                                    validation.witness);
    const int b = static_cast<int>(td.bags.size());
    if (b == 0) throw std::invalid_argument("balanced_separator: decomposition has no bags");

    std::vector<std::vector<int>> bag_adj(static_cast<size_t>(b));
    for (const auto& [x, y] : td.tree_edges) {
        bag_adj[static_cast<size_t>(x)].push_back(y);
        bag_adj[static_cast<size_t>(y)].push_back(x);
    }
    // first bag containing each vertex; any one works since the occurrence
    // subtree of a vertex avoiding the current bag sits in a single branch
    std::vector<int> home(static_cast<size_t>(g.n()), -1);
    for (int i = 0; i < b; ++i)
        for (int v : td.bags[static_cast<size_t>(i)])
            if (home[static_cast<size_t>(v)] == -1) home[static_cast<size_t>(v)] = i;

    const auto balanced_or_heavy = [&](const std::vector<int>& s)
        -> std::pair<std::vector<std::vector<int>>, const std::vector<int>*> {
        std::vector<bool> in_s(static_cast<size_t>(g.n()), false);
        for (int v : s) in_s[static_cast<size_t>(v)] = true;
        auto comps = detail::components_outside(g, in_s);
        const auto* heavy =
            detail::heavy_component(comps, g.n() - static_cast<long long>(s.size()));
        return {std::move(comps), heavy};
    };

    // phase 1: guided walk with per-edge memory
    std::set<std::pair<int, int>> crossed;
    int current = 0;
    for (int step = 0; step < b; ++step) {
        const auto [comps, heavy] = balanced_or_heavy(td.bags[static_cast<size_t>(current)]);
        if (heavy == nullptr) {
            auto out = td.bags[static_cast<size_t>(current)];
            std::sort(out.begin(), out.end());
            return out;
        }
        // BFS on the bag tree from `current`, then walk back from the bag
        // holding the heavy component's smallest vertex to find the first
        // step of the path.
        const int target = home[static_cast<size_t>(heavy->front())];
        std::vector<int> parent(static_cast<size_t>(b), -2);
        parent[static_cast<size_t>(current)] = -1;
        std::vector<int> queue = {current};
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            for (int nb : bag_adj[static_cast<size_t>(queue[qi])]) {
                if (parent[static_cast<size_t>(nb)] == -2) {
                    parent[static_cast<size_t>(nb)] = queue[qi];
                    queue.push_back(nb);
                }
            }
        }
        int next = target;
        while (parent[static_cast<size_t>(next)] != current) next = parent[static_cast<size_t>(next)];
        if (!crossed.insert(std::minmax(current, next)).second) break;  // would re-cross
        current = next;
    }

    // phase 2: shrink the bag we stopped at
    std::vector<int> s = td.bags[static_cast<size_t>(current)];
    std::sort(s.begin(), s.end());
    while (true) {
        const auto [comps, heavy] = balanced_or_heavy(s);
        if (heavy == nullptr) return s;
        std::vector<bool> in_heavy(static_cast<size_t>(g.n()), false);
        for (int v : *heavy) in_heavy[static_cast<size_t>(v)] = true;
        bool removed = false;
        for (size_t i = 0; i < s.size(); ++i) {
            bool touches = false;
            for (int w : g.neighbors(s[i]))
                if (in_heavy[static_cast<size_t>(w)]) {
                    touches = true;
                    break;
                }
            if (!touches) {
                s.erase(s.begin() + static_cast<long>(i));
                removed = true;
                break;
            }
        }
        if (!removed) break;  // every remaining vertex feeds the heavy side
    }

    // phase 3: exhaustive subsets of every bag, smallest subset first
    for (int size = 0; size <= td.width() + 1; ++size) {
        for (int i = 0; i < b; ++i) {
            auto bag = td.bags[static_cast<size_t>(i)];
            std::sort(bag.begin(), bag.end());
            const int k = static_cast<int>(bag.size());
            if (size > k || k > 25) continue;
            for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
                if (std::popcount(mask) != size) continue;
                std::vector<int> cand;
                for (int j = 0; j < k; ++j)
                    if (mask & (1u << j)) cand.push_back(bag[static_cast<size_t>(j)]);
                if (balanced_or_heavy(cand).second == nullptr) return cand;
            }
        }
    }
    throw std::logic_error("balanced_separator: no balanced subset of any bag");
}

// Distribute the components of G-S over three sets: largest first into the
// least-loaded set. The greedy result is checked against the cap; if it ever
// failed, an exhaustive assignment over all 3^k component placements backs
// it up (k is small at the sizes the oracle handles).
inline BalancedPartition three_partition(const Graph& g, const std::vector<int>& separator) {
    std::vector<bool> in_s(static_cast<size_t>(g.n()), false);
    for (int v : separator) {
        if (v < 0 || v >= g.n()) throw std::invalid_argument("three_partition: vertex out of range");
        in_s[static_cast<size_t>(v)] = true;
    }
    auto comps = detail::components_outside(g, in_s);
    const long long rest = g.n() - static_cast<long long>(separator.size());
    for (const auto& comp : comps)
        if (2 * static_cast<long long>(comp.size()) > rest)
            throw std::invalid_argument("three_partition: component of " +
                                        std::to_string(comp.size()) +
                                        " vertices exceeds the cap (n-|S|)/2");

    std::stable_sort(comps.begin(), comps.end(),
                     [](const auto& a, const auto& b) { return a.size() > b.size(); });

    std::array<std::vector<int>, 3> bins;
    std::array<long long, 3> load = {0, 0, 0};
    auto caps_ok = [&](const std::array<long long, 3>& l) {
        return 2 * l[0] <= rest && 2 * l[1] <= rest && 2 * l[2] <= rest;
    };
    for (const auto& comp : comps) {
        int pick = 0;
        for (int i = 1; i < 3; ++i)
            if (load[static_cast<size_t>(i)] < load[static_cast<size_t>(pick)]) pick = i;
        load[static_cast<size_t>(pick)] += static_cast<long long>(comp.size());
        bins[static_cast<size_t>(pick)].insert(bins[static_cast<size_t>(pick)].end(), comp.begin(),
                                               comp.end());
    }

    if (!caps_ok(load)) {
        const size_t k = comps.size();
        if (k > 20) throw std::logic_error("three_partition: too many components for fallback");
        std::vector<int> assign(k, 0);
        bool found = false;
        long long total = 1;
        for (size_t i = 0; i < k; ++i) total *= 3;
        for (long long code = 0; code < total && !found; ++code) {
            long long c = code;
            std::array<long long, 3> l = {0, 0, 0};
            for (size_t i = 0; i < k; ++i) {
                assign[i] = static_cast<int>(c % 3);
                c /= 3;
                l[static_cast<size_t>(assign[i])] += static_cast<long long>(comps[i].size());
            }
            found = caps_ok(l);
        }
        if (!found)
            throw std::logic_error("three_partition: no valid assignment exists");
        for (auto& bin : bins) bin.clear();
        for (size_t i = 0; i < k; ++i)
            bins[static_cast<size_t>(assign[i])].insert(bins[static_cast<size_t>(assign[i])].end(),
                                                        comps[i].begin(), comps[i].end());
    }

    BalancedPartition p;
    p.S = separator;
    std::sort(p.S.begin(), p.S.end());
    p.U1 = std::move(bins[0]);
    p.U2 = std::move(bins[1]);
    p.U3 = std::move(bins[2]);
    for (auto* u : {&p.U1, &p.U2, &p.U3}) std::sort(u->begin(), u->end());
    return p;
}

struct TriangleCoefficients {
    std::complex<double> alpha{1.0, 0.0};
    std::complex<double> beta{1.0, 0.0};
    std::complex<double> gamma{1.0, 0.0};
    double a = 0.0, b = 0.0, c = 0.0;  // the input weights
    double theta = 0.0, phi = 0.0;     // construction angles, radians
};

// Unit complex coefficients with a*alpha + b*beta + c*gamma = 0, feasible
// exactly when max{a,b,c} <= (a+b+c)/2. The weights are permuted so the
// largest sits last; if the other two add up to it the coefficients are
// collinear (1,1,-1), otherwise the three weights form a triangle traversed
// in the complex plane: alpha = e^{i*theta}, beta = e^{-i*phi}, gamma = -1
// with theta, phi the triangle angles adjacent to the longest side.
inline TriangleCoefficients triangle_coefficients(double a, double b, double c) {
    if (a < 0.0 || b < 0.0 || c < 0.0)
        throw std::invalid_argument("triangle_coefficients: negative weight");
    TriangleCoefficients out;
    out.a = a;
    out.b = b;
    out.c = c;
    const double sum = a + b + c;
    if (sum == 0.0) return out;  // all-zero: any unit values close the sum

    const std::array<double, 3> vals = {a, b, c};
    int mx = 0;
    for (int i = 1; i < 3; ++i)
        if (vals[static_cast<size_t>(i)] >= vals[static_cast<size_t>(mx)]) mx = i;
    std::array<int, 3> slot{};  // slot[k] = original index of permuted weight k
    int k = 0;
    for (int i = 0; i < 3; ++i)
        if (i != mx) slot[static_cast<size_t>(k++)] = i;
    slot[2] = mx;
    const double pa = vals[static_cast<size_t>(slot[0])];
    const double pb = vals[static_cast<size_t>(slot[1])];
    const double pc = vals[static_cast<size_t>(slot[2])];

    const double tol = 1e-12 * sum;
    if (pa + pb < pc - tol)
        throw std::invalid_argument("triangle_coefficients: infeasible, largest weight exceeds half the total");

    std::array<std::complex<double>, 3> coeff;
    if (pa + pb <= pc + tol) {
        coeff = {std::complex<double>(1.0, 0.0), std::complex<double>(1.0, 0.0),
                 std::complex<double>(-1.0, 0.0)};
    } else {
        // acos is unstable at the ends of its domain, but the collinear
        // branch above keeps the arguments away from +-1
        const double cos_theta =
            std::clamp((pa * pa + pc * pc - pb * pb) / (2.0 * pa * pc), -1.0, 1.0);
        const double cos_phi =
            std::clamp((pb * pb + pc * pc - pa * pa) / (2.0 * pb * pc), -1.0, 1.0);
        out.theta = std::acos(cos_theta);
        out.phi = std::acos(cos_phi);
        coeff = {std::complex<double>(std::cos(out.theta), std::sin(out.theta)),
                 std::complex<double>(std::cos(out.phi), -std::sin(out.phi)),
                 std::complex<double>(-1.0, 0.0)};
    }
    std::array<std::complex<double>, 3> result;
    for (int i = 0; i < 3; ++i) result[static_cast<size_t>(slot[static_cast<size_t>(i)])] = coeff[static_cast<size_t>(i)];
    out.alpha = result[0];
    out.beta = result[1];
    out.gamma = result[2];
    return out;
}

// x(v) = alpha_i for v in U_i, 0 on S. The part sizes satisfy the triangle
// feasibility condition whenever the partition is balanced, so the vector
// always sums to ~0 and has squared norm n - |S|.
inline ComplexVector build_test_vector(const BalancedPartition& p) {
    const int n = p.total();
    const auto coeff = triangle_coefficients(static_cast<double>(p.U1.size()),
                                             static_cast<double>(p.U2.size()),
                                             static_cast<double>(p.U3.size()));
    ComplexVector x(static_cast<size_t>(n), {0.0, 0.0});
    auto place = [&](const std::vector<int>& part, std::complex<double> value) {
        for (int v : part) {
            if (v < 0 || v >= n) throw std::invalid_argument("build_test_vector: vertex out of range");
            x[static_cast<size_t>(v)] = value;
        }
    };
    place(p.U1, coeff.alpha);
    place(p.U2, coeff.beta);
    place(p.U3, coeff.gamma);
    return x;
}

struct CertificateReport {
    BalancedPartition partition;
    ComplexVector x;
    std::complex<double> sum_x{0.0, 0.0};
    double norm_sq = 0.0;
    double qform = 0.0;
    double lower = 0.0;  // lambda2 * (n - |S|)
    double upper = 0.0;  // max_degree * |S|
    double implied_separator_bound = 0.0;  // n * lambda2 / (max_degree + lambda2)
    double lambda2 = 0.0;
    int max_degree = 0;
    double tau = 0.0;
    std::string partition_witness;  // empty when the partition invariants hold

    bool partition_ok = false;
    bool zero_sum_ok = false;
    bool norm_ok = false;
    bool lower_ok = false;
    bool upper_ok = false;
    bool separator_ok = false;

    bool pass() const {
        return partition_ok && zero_sum_ok && norm_ok && lower_ok && upper_ok && separator_ok;
    }
};

inline CertificateReport verify_theorem1_chain(const Graph& g, const SpectrumResult& spectrum,
                                               const BalancedPartition& partition) {
    CertificateReport report;
    report.partition = partition;
    report.partition_witness = detail::check_partition(g, partition);
    report.partition_ok = report.partition_witness.empty();
    report.tau = certificate_tolerance(g);
    report.lambda2 = g.n() >= 2 ? spectrum.lambda2() : 0.0;
    report.max_degree = g.max_degree();

    report.x = build_test_vector(partition);
    for (const auto& value : report.x) {
        report.sum_x += value;
        report.norm_sq += std::norm(value);
    }
    report.qform = quadratic_form(g, report.x);

    const double outside = static_cast<double>(g.n() - static_cast<int>(partition.S.size()));
    report.lower = report.lambda2 * outside;
    report.upper = static_cast<double>(report.max_degree) *
                   static_cast<double>(partition.S.size());
    const double denom = static_cast<double>(report.max_degree) + report.lambda2;
    report.implied_separator_bound = denom > 0.0 ? g.n() * report.lambda2 / denom : 0.0;

    report.zero_sum_ok = std::abs(report.sum_x) <= 1e-9 * std::max(1, g.n());
    report.norm_ok = std::abs(report.norm_sq - outside) <= 1e-9 * std::max(1, g.n());
    report.lower_ok = report.qform >= report.lower - report.tau;
    report.upper_ok = report.qform <= report.upper + report.tau;
    report.separator_ok =
        static_cast<double>(partition.S.size()) >= report.implied_separator_bound - report.tau;
    return report;
}

inline CertificateReport verify_theorem1_chain(const Graph& g, const BalancedPartition& partition) {
    return verify_theorem1_chain(g, eigenvalues(g), partition);
}

struct GuLiuResult {
    bool applicable = true;  // false when lambda_max - lambda2 vanishes (complete graph)
    int separator_size = 0;
    int x_size = 0;
    int y_size = 0;
    double rhs = 0.0;     // 2*lambda2/(lambda_max-lambda2) * |X|
    double margin = 0.0;  // |S| - rhs
    bool pass = false;
};

inline GuLiuResult verify_gu_liu(const Graph& g, const SpectrumResult& spectrum,
                                 const std::vector<int>& S, const std::vector<int>& X,
                                 const std::vector<int>& Y) {
    std::vector<int> owner(static_cast<size_t>(g.n()), -1);
    const std::vector<const std::vector<int>*> parts = {&S, &X, &Y};
    for (int which = 0; which < 3; ++which) {
        for (int v : *parts[static_cast<size_t>(which)]) {
            if (v < 0 || v >= g.n()) throw std::invalid_argument("gu_liu: vertex out of range");
            if (owner[static_cast<size_t>(v)] != -1)
                throw std::invalid_argument("gu_liu: vertex " + std::to_string(v) + " listed twice");
            owner[static_cast<size_t>(v)] = which;
        }
    }
    for (int v = 0; v < g.n(); ++v)
        if (owner[static_cast<size_t>(v)] == -1)
            throw std::invalid_argument("gu_liu: vertex " + std::to_string(v) + " unassigned");
    if (X.size() > Y.size())
        throw std::invalid_argument("gu_liu: |X| must not exceed |Y|");
    for (const auto& [u, v] : g.edges()) {
        const int a = owner[static_cast<size_t>(u)], b = owner[static_cast<size_t>(v)];
        if ((a == 1 && b == 2) || (a == 2 && b == 1))
            throw std::invalid_argument("gu_liu: edge (" + std::to_string(u) + "," +
                                        std::to_string(v) + ") joins X and Y");
    }

    GuLiuResult result;
    result.separator_size = static_cast<int>(S.size());
    result.x_size = static_cast<int>(X.size());
    result.y_size = static_cast<int>(Y.size());
    const double l2 = g.n() >= 2 ? spectrum.lambda2() : 0.0;
    const double ln = spectrum.lambda_max();
    const double gap = ln - l2;
    if (gap <= 1e-6 * std::max(1.0, ln)) {
        result.applicable = false;  // complete (or edgeless) graph
        return result;
    }
    result.rhs = 2.0 * l2 / gap * static_cast<double>(X.size());
    result.margin = static_cast<double>(S.size()) - result.rhs;
    result.pass = result.margin >= -certificate_tolerance(g);
    return result;
}

inline GuLiuResult verify_gu_liu(const Graph& g, const std::vector<int>& S,
                                 const std::vector<int>& X, const std::vector<int>& Y) {
    return verify_gu_liu(g, eigenvalues(g), S, X, Y);
}

struct Theorem2Report {
    bool applicable = true;      // false when the graph has no edge
    bool complete_branch = false;
    double lambda2 = 0.0;
    double lambda_max = 0.0;
    std::vector<GuLiuResult> instances;  // one per U_i on the general branch
    double summed_lhs = 0.0;  // 3|S|
    double summed_rhs = 0.0;  // 2*lambda2*(n-|S|)/(lambda_max-lambda2)
    double implied_separator_bound = 0.0;  // 2n*lambda2/(3*lambda_max-lambda2)
    double bound_value = 0.0;              // implied_separator_bound - 1
    double tau = 0.0;
    std::string note;
    bool pass = false;
};

inline Theorem2Report verify_theorem2_chain(const Graph& g, const SpectrumResult& spectrum,
                                            const BalancedPartition& partition) {
    Theorem2Report report;
    report.tau = certificate_tolerance(g);
    const std::string witness = detail::check_partition(g, partition);
    if (!witness.empty()) {
        report.note = witness;
        report.pass = false;
        return report;
    }
    report.lambda_max = spectrum.lambda_max();
    report.lambda2 = g.n() >= 2 ? spectrum.lambda2() : 0.0;
    if (g.m() == 0) {
        report.applicable = false;
        report.note = "graph has no edge; the bound does not apply";
        report.pass = true;  // vacuous
        return report;
    }
    if (g.is_complete()) {
        // lambda2 = lambda_max = n, and the bound is exactly n-1 = tw
        report.complete_branch = true;
        const double n = static_cast<double>(g.n());
        report.implied_separator_bound =
            2.0 * n * report.lambda2 / (3.0 * report.lambda_max - report.lambda2);
        report.bound_value = report.implied_separator_bound - 1.0;
        const bool spectrum_ok = std::abs(report.lambda2 - n) <= report.tau &&
                                 std::abs(report.lambda_max - n) <= report.tau;
        const bool value_ok = std::abs(report.bound_value - (n - 1.0)) <= report.tau;
        report.pass = spectrum_ok && value_ok;
        if (!report.pass) report.note = "complete-graph branch failed";
        return report;
    }

    const int n = g.n();
    const int s_size = static_cast<int>(partition.S.size());
    bool all_pass = true;
    for (int i = 0; i < 3; ++i) {
        const std::vector<int>& x_set = partition.part(i);
        std::vector<int> y_set;
        for (int j = 0; j < 3; ++j)
            if (j != i) y_set.insert(y_set.end(), partition.part(j).begin(), partition.part(j).end());
        std::sort(y_set.begin(), y_set.end());
        auto inst = verify_gu_liu(g, spectrum, partition.S, x_set, y_set);
        all_pass = all_pass && inst.applicable && inst.pass;
        report.instances.push_back(inst);
    }
    const double gap = report.lambda_max - report.lambda2;
    report.summed_lhs = 3.0 * s_size;
    report.summed_rhs = 2.0 * report.lambda2 * static_cast<double>(n - s_size) / gap;
    report.implied_separator_bound =
        2.0 * n * report.lambda2 / (3.0 * report.lambda_max - report.lambda2);
    report.bound_value = report.implied_separator_bound - 1.0;
    const bool summed_ok = report.summed_lhs >= report.summed_rhs - report.tau;
    const bool implied_ok =
        static_cast<double>(s_size) >= report.implied_separator_bound - report.tau;
    report.pass = all_pass && summed_ok && implied_ok;
    if (!report.pass && report.note.empty()) report.note = "inequality chain failed";
    return report;
}

inline Theorem2Report verify_theorem2_chain(const Graph& g, const BalancedPartition& partition) {
    return verify_theorem2_chain(g, eigenvalues(g), partition);
}

}  // namespace twbound
