#pragma once

// Independent oracles used only by the tests. Each one deliberately takes a
// different algorithmic route than the library code it checks:
//
//   brute_force_treewidth   all n! elimination orders (vs the subset DP)
//   jacobi_eigenvalues      cyclic Jacobi rotations (vs Householder + QL)
//   union_find_components   disjoint sets (vs BFS traversal)
//   laplacian_moment        exact integer trace of L^k (vs eigenvalue sums)

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "twbound/families.hpp"
#include "twbound/graph.hpp"

namespace oracle {

inline int brute_force_treewidth(const twbound::Graph& g) {
    const int n = g.n();
    if (n == 0) return -1;
    if (n > 8) throw std::invalid_argument("brute_force_treewidth: too large");
    std::vector<std::vector<bool>> base(static_cast<size_t>(n),
                                        std::vector<bool>(static_cast<size_t>(n), false));
    for (const auto& [u, v] : g.edges()) {
        base[static_cast<size_t>(u)][static_cast<size_t>(v)] = true;
        base[static_cast<size_t>(v)][static_cast<size_t>(u)] = true;
    }
    std::vector<int> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    int best = n - 1;
    do {
        auto adj = base;
        std::vector<bool> gone(static_cast<size_t>(n), false);
        int width = 0;
        for (int v : order) {
            std::vector<int> nbrs;
            for (int w = 0; w < n; ++w)
                if (!gone[static_cast<size_t>(w)] && adj[static_cast<size_t>(v)][static_cast<size_t>(w)])
                    nbrs.push_back(w);
            width = std::max(width, static_cast<int>(nbrs.size()));
            if (width >= best) break;
            for (size_t i = 0; i < nbrs.size(); ++i)
                for (size_t j = i + 1; j < nbrs.size(); ++j) {
                    adj[static_cast<size_t>(nbrs[i])][static_cast<size_t>(nbrs[j])] = true;
                    adj[static_cast<size_t>(nbrs[j])][static_cast<size_t>(nbrs[i])] = true;
                }
            gone[static_cast<size_t>(v)] = true;
        }
        best = std::min(best, width);
    } while (std::next_permutation(order.begin(), order.end()));
    return best;
}

inline std::vector<double> jacobi_eigenvalues(std::vector<std::vector<double>> a) {
    const size_t n = a.size();
    double scale = 1e-300;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) scale = std::max(scale, std::abs(a[i][j]));
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (size_t p = 0; p < n; ++p)
            for (size_t q = p + 1; q < n; ++q) off += a[p][q] * a[p][q];
        if (off <= 1e-26 * scale * scale) break;
        for (size_t p = 0; p < n; ++p) {
            for (size_t q = p + 1; q < n; ++q) {
                if (std::abs(a[p][q]) <= 1e-14 * scale) continue;
                const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (size_t k = 0; k < n; ++k) {
                    const double akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (size_t k = 0; k < n; ++k) {
                    const double apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    std::vector<double> eig(n);
    for (size_t i = 0; i < n; ++i) eig[i] = a[i][i];
    std::sort(eig.begin(), eig.end());
    return eig;
}

inline std::vector<std::vector<double>> laplacian_dense(const twbound::Graph& g) {
    std::vector<std::vector<double>> a(static_cast<size_t>(g.n()),
                                       std::vector<double>(static_cast<size_t>(g.n()), 0.0));
    for (const auto& [u, v] : g.edges()) {
        a[static_cast<size_t>(u)][static_cast<size_t>(v)] -= 1.0;
        a[static_cast<size_t>(v)][static_cast<size_t>(u)] -= 1.0;
        a[static_cast<size_t>(u)][static_cast<size_t>(u)] += 1.0;
        a[static_cast<size_t>(v)][static_cast<size_t>(v)] += 1.0;
    }
    return a;
}

inline int union_find_components(const twbound::Graph& g) {
    std::vector<int> parent(static_cast<size_t>(g.n()));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    };
    for (const auto& [u, v] : g.edges()) parent[static_cast<size_t>(find(u))] = find(v);
    int count = 0;
    for (int v = 0; v < g.n(); ++v)
        if (find(v) == v) ++count;
    return count;
}

// trace of L^k in exact integer arithmetic
inline long long laplacian_moment(const twbound::Graph& g, int k) {
    const size_t n = static_cast<size_t>(g.n());
    std::vector<std::vector<long long>> lap(n, std::vector<long long>(n, 0));
    for (const auto& [u, v] : g.edges()) {
        lap[static_cast<size_t>(u)][static_cast<size_t>(v)] -= 1;
        lap[static_cast<size_t>(v)][static_cast<size_t>(u)] -= 1;
        lap[static_cast<size_t>(u)][static_cast<size_t>(u)] += 1;
        lap[static_cast<size_t>(v)][static_cast<size_t>(v)] += 1;
    }
    std::vector<std::vector<long long>> power(n, std::vector<long long>(n, 0));
    for (size_t i = 0; i < n; ++i) power[i][i] = 1;
    for (int step = 0; step < k; ++step) {
        std::vector<std::vector<long long>> next(n, std::vector<long long>(n, 0));
        for (size_t i = 0; i < n; ++i)
            for (size_t l = 0; l < n; ++l) {
                if (power[i][l] == 0) continue;
                for (size_t j = 0; j < n; ++j) next[i][j] += power[i][l] * lap[l][j];
            }
        power = std::move(next);
    }
    long long trace = 0;
    for (size_t i = 0; i < n; ++i) trace += power[i][i];
    return trace;
}

inline bool is_connected(const twbound::Graph& g) {
    return g.n() <= 1 || union_find_components(g) == 1;
}

// ---------------------------------------------------------------------------
// deterministic corpora shared by tests

struct NamedGraph {
    std::string name;
    twbound::Graph g;
};

// every generated-family instance with n <= max_n
inline std::vector<NamedGraph> family_corpus(int max_n) {
    using namespace twbound;
    std::vector<NamedGraph> out;
    auto add = [&](const std::string& desc) {
        const auto spec = parse_family(desc);
        const Graph g = generate(spec);
        if (g.n() <= max_n) out.push_back({family_name(spec), g});
    };
    for (int n = 1; n <= max_n; ++n) add("complete:" + std::to_string(n));
    for (int p = 1; p <= max_n; ++p)
        for (int q = p; p + q <= max_n; ++q)
            add("complete_bipartite:" + std::to_string(p) + "," + std::to_string(q));
    for (int n = 1; n <= max_n; ++n) add("path:" + std::to_string(n));
    for (int n = 3; n <= max_n; ++n) add("cycle:" + std::to_string(n));
    for (int r = 2; r <= max_n / 2; ++r)
        for (int c = r; r * c <= max_n; ++c)
            add("grid:" + std::to_string(r) + "," + std::to_string(c));
    return out;
}

inline std::vector<NamedGraph> gnp_corpus(int count, int min_n, int max_n) {
    using namespace twbound;
    std::vector<NamedGraph> out;
    const double probs[] = {0.2, 0.35, 0.5, 0.65, 0.8};
    int n = min_n;
    size_t pi = 0;
    for (int seed = 1; static_cast<int>(out.size()) < count; ++seed) {
        FamilySpec spec;
        spec.kind = FamilySpec::Kind::gnp;
        spec.a = n;
        spec.p = probs[pi];
        spec.seed = static_cast<std::uint64_t>(seed);
        out.push_back({family_name(spec), generate(spec)});
        if (++n > max_n) n = min_n;
        pi = (pi + 1) % 5;
    }
    return out;
}

}  // namespace oracle
