#pragma once

// Exact treewidth for small graphs.
//
// Subset dynamic programming over elimination orderings: with
//   q(S, v) = #{ w outside S+v : w reachable from v via internal vertices in S }
// the recurrence
//   TW(empty) = -inf,  TW(S) = min over v in S of max{ TW(S - v), q(S - v, v) }
// gives tw(G) = TW(V). q(S - v, v) is the number of "future" neighbors v
// sees through already-eliminated vertices, i.e. the clique size - 1 that
// eliminating v creates. States are bitmask-encoded, so this is limited to
// small n (default 20, about a million states).
//
// The optimal elimination order is replayed to build a tree decomposition:
// the bag of v is v plus its future neighbors at elimination time, attached
// to the bag of the earliest-eliminated future neighbor.

#include <bit>
#include <cstdint>
#include <numeric>
#include <string>

#include "twbound/families.hpp"
#include "twbound/graph.hpp"

namespace twbound {

class SizeLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct TreeDecomposition {
    int n = 0;  // order of the decomposed graph
    std::vector<std::vector<int>> bags;
    std::vector<std::pair<int, int>> tree_edges;  // pairs of bag indices

    int width() const {
        size_t largest = 0;
        for (const auto& bag : bags) largest = std::max(largest, bag.size());
        return static_cast<int>(largest) - 1;
    }
};

struct ExactResult {
    int width = 0;
    TreeDecomposition decomposition;
    std::vector<int> elimination_order;
};

namespace detail {

// Future-neighbor set of v given the eliminated set `inside`:
// all vertices outside inside+v reachable from v via paths whose internal
// vertices lie in inside. Masks limit this to n <= 31.
inline std::uint32_t reachable_through(const std::vector<std::uint32_t>& adj,
                                       std::uint32_t inside, int v) {
    std::uint32_t visited = 1u << v;
    std::uint32_t seen_nbrs = adj[static_cast<size_t>(v)];
    std::uint32_t grow = seen_nbrs & inside & ~visited;
    while (grow) {
        visited |= grow;
        std::uint32_t add = 0;
        while (grow) {
            const int u = std::countr_zero(grow);
            grow &= grow - 1;
            add |= adj[static_cast<size_t>(u)];
        }
        seen_nbrs |= add;
        grow = seen_nbrs & inside & ~visited;
    }
    return seen_nbrs & ~inside & ~(1u << v);
}

inline std::vector<std::uint32_t> adjacency_masks(const Graph& g) {
    std::vector<std::uint32_t> adj(static_cast<size_t>(g.n()), 0);
    for (const auto& [u, v] : g.edges()) {
        adj[static_cast<size_t>(u)] |= 1u << v;
        adj[static_cast<size_t>(v)] |= 1u << u;
    }
    return adj;
}

}  // namespace detail

inline ExactResult exact_tw(const Graph& g, int limit = 20) {
    const int n = g.n();
    if (n < 1) throw std::invalid_argument("exact_tw: empty graph");
    if (limit > 26) throw std::invalid_argument("exact_tw: limit above hard cap 26");
    if (n > limit)
        throw SizeLimitError("exact_tw: graph has " + std::to_string(n) +
                             " vertices, above the limit " + std::to_string(limit));

    const auto adj = detail::adjacency_masks(g);
    const std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1;

    // TW table over all subsets; -1 stands in for TW(empty) = -inf, which is
    // absorbed by the max against q >= 0.
    std::vector<std::int8_t> tw(static_cast<size_t>(full) + 1, 0);
    tw[0] = -1;
    for (std::uint32_t s = 1; s <= full; ++s) {
        int best = n;  // width never exceeds n-1
        for (std::uint32_t rem = s; rem;) {
            const int v = std::countr_zero(rem);
            rem &= rem - 1;
            const std::uint32_t rest = s & ~(1u << v);
            const int prev = tw[rest];
            if (prev >= best) continue;  // max(prev, q) cannot beat best
            const int q = std::popcount(detail::reachable_through(adj, rest, v));
            const int cand = std::max(prev, q);
            if (cand < best) best = cand;
        }
        tw[s] = static_cast<std::int8_t>(best);
    }

    ExactResult result;
    result.width = tw[full];

    // Replay the DP choices, lowest vertex index first, to get a
    // deterministic optimal elimination order (filled back to front: the
    // chosen vertex is the last of the current subset to be eliminated).
    std::vector<int> order(static_cast<size_t>(n));
    std::uint32_t s = full;
    for (int pos = n - 1; pos >= 0; --pos) {
        for (std::uint32_t rem = s; rem;) {
            const int v = std::countr_zero(rem);
            rem &= rem - 1;
            const std::uint32_t rest = s & ~(1u << v);
            const int q = std::popcount(detail::reachable_through(adj, rest, v));
            if (std::max<int>(tw[rest], q) == tw[s]) {
                order[static_cast<size_t>(pos)] = v;
                s = rest;
                break;
            }
        }
    }
    result.elimination_order = order;

    // Bags from the order; parent of a bag is the bag of the earliest
    // eliminated future neighbor. Roots (no future neighbors) are chained
    // afterwards so the result is a single tree even for disconnected input.
    TreeDecomposition td;
    td.n = n;
    td.bags.resize(static_cast<size_t>(n));
    std::vector<int> position(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) position[static_cast<size_t>(order[static_cast<size_t>(i)])] = i;
    std::vector<std::uint32_t> future(static_cast<size_t>(n));
    std::uint32_t eliminated = 0;
    for (int i = 0; i < n; ++i) {
        const int v = order[static_cast<size_t>(i)];
        const std::uint32_t f = detail::reachable_through(adj, eliminated, v);
        future[static_cast<size_t>(i)] = f;
        auto& bag = td.bags[static_cast<size_t>(i)];
        bag.push_back(v);
        for (std::uint32_t rem = f; rem;) {
            bag.push_back(std::countr_zero(rem));
            rem &= rem - 1;
        }
        std::sort(bag.begin(), bag.end());
        eliminated |= 1u << v;
    }
    std::vector<int> roots;
    for (int i = 0; i < n; ++i) {
        const std::uint32_t f = future[static_cast<size_t>(i)];
        if (f == 0) {
            roots.push_back(i);
            continue;
        }
        int parent = n;
        for (std::uint32_t rem = f; rem;) {
            parent = std::min(parent, position[static_cast<size_t>(std::countr_zero(rem))]);
            rem &= rem - 1;
        }
        td.tree_edges.emplace_back(i, parent);
    }
    for (size_t r = 0; r + 1 < roots.size(); ++r)
        td.tree_edges.emplace_back(roots[r], roots[r + 1]);
    result.decomposition = std::move(td);
    return result;
}

struct TdValidation {
    bool vertex_coverage = false;
    bool edge_coverage = false;
    bool coherence = false;
    bool tree_shape = false;
    int width = -1;
    std::string witness;  // first failure found; empty when valid

    bool valid() const { return vertex_coverage && edge_coverage && coherence && tree_shape; }
};

inline TdValidation validate_td(const Graph& g, const TreeDecomposition& td) {
    TdValidation report;
    report.width = td.width();
    const int b = static_cast<int>(td.bags.size());
    auto note = [&](const std::string& w) {
        if (report.witness.empty()) report.witness = w;
    };

    std::vector<std::vector<bool>> contains(static_cast<size_t>(b),
                                            std::vector<bool>(static_cast<size_t>(g.n()), false));
    bool bags_wellformed = true;
    for (int i = 0; i < b; ++i) {
        for (int v : td.bags[static_cast<size_t>(i)]) {
            if (v < 0 || v >= g.n()) {
                note("bag " + std::to_string(i) + " contains out-of-range vertex " +
                     std::to_string(v));
                bags_wellformed = false;
                continue;
            }
            contains[static_cast<size_t>(i)][static_cast<size_t>(v)] = true;
        }
    }

    report.vertex_coverage = bags_wellformed;
    for (int v = 0; v < g.n(); ++v) {
        bool found = false;
        for (int i = 0; i < b && !found; ++i) found = contains[static_cast<size_t>(i)][static_cast<size_t>(v)];
        if (!found) {
            report.vertex_coverage = false;
            note("vertex " + std::to_string(v) + " appears in no bag");
            break;
        }
    }

    report.edge_coverage = true;
    for (const auto& [u, v] : g.edges()) {
        bool found = false;
        for (int i = 0; i < b && !found; ++i)
            found = contains[static_cast<size_t>(i)][static_cast<size_t>(u)] &&
                    contains[static_cast<size_t>(i)][static_cast<size_t>(v)];
        if (!found) {
            report.edge_coverage = false;
            note("edge (" + std::to_string(u) + "," + std::to_string(v) + ") contained in no bag");
            break;
        }
    }

    // Tree check: correct edge count plus connectivity over all bags.
    bool edges_ok = true;
    std::vector<int> parent(static_cast<size_t>(b));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    };
    for (const auto& [a, c] : td.tree_edges) {
        if (a < 0 || a >= b || c < 0 || c >= b || a == c) {
            note("invalid tree edge (" + std::to_string(a) + "," + std::to_string(c) + ")");
            edges_ok = false;
            continue;
        }
        parent[static_cast<size_t>(find(a))] = find(c);
    }
    int tree_components = 0;
    for (int i = 0; i < b; ++i)
        if (find(i) == i) ++tree_components;
    report.tree_shape = edges_ok &&
                        static_cast<int>(td.tree_edges.size()) == std::max(0, b - 1) &&
                        tree_components <= 1;
    if (!report.tree_shape) note("tree edges do not form a tree on the bags");

    // Coherence: the bags holding each vertex must form one connected piece
    // of the bag tree.
    report.coherence = true;
    for (int v = 0; v < g.n() && report.coherence; ++v) {
        std::vector<int> occ(static_cast<size_t>(b));
        std::iota(occ.begin(), occ.end(), 0);
        auto occ_find = [&](int x) {
            while (occ[static_cast<size_t>(x)] != x) {
                occ[static_cast<size_t>(x)] = occ[static_cast<size_t>(occ[static_cast<size_t>(x)])];
                x = occ[static_cast<size_t>(x)];
            }
            return x;
        };
        for (const auto& [a, c] : td.tree_edges) {
            if (a < 0 || a >= b || c < 0 || c >= b) continue;
            if (contains[static_cast<size_t>(a)][static_cast<size_t>(v)] &&
                contains[static_cast<size_t>(c)][static_cast<size_t>(v)])
                occ[static_cast<size_t>(occ_find(a))] = occ_find(c);
        }
        int pieces = 0;
        for (int i = 0; i < b; ++i)
            if (contains[static_cast<size_t>(i)][static_cast<size_t>(v)] && occ_find(i) == i) ++pieces;
        if (pieces > 1) {
            report.coherence = false;
            note("bags containing vertex " + std::to_string(v) + " are disconnected");
        }
    }
    return report;
}

// Known widths for the generated families. 1 x c grids degenerate to paths.
inline int closed_form_tw(const FamilySpec& spec) {
    switch (spec.kind) {
        case FamilySpec::Kind::complete:
            if (spec.a < 1) throw std::invalid_argument("closed_form_tw: complete needs n >= 1");
            return spec.a - 1;
        case FamilySpec::Kind::complete_bipartite:
            if (spec.a < 1 || spec.b < 1)
                throw std::invalid_argument("closed_form_tw: bipartite sides must be >= 1");
            return std::min(spec.a, spec.b);
        case FamilySpec::Kind::path:
            if (spec.a < 1) throw std::invalid_argument("closed_form_tw: path needs n >= 1");
            return spec.a >= 2 ? 1 : 0;
        case FamilySpec::Kind::cycle:
            if (spec.a < 3) throw std::invalid_argument("closed_form_tw: cycle needs n >= 3");
            return 2;
        case FamilySpec::Kind::grid: {
            if (spec.a < 1 || spec.b < 1)
                throw std::invalid_argument("closed_form_tw: grid dimensions must be >= 1");
            const int lo = std::min(spec.a, spec.b);
            const int hi = std::max(spec.a, spec.b);
            if (lo == 1) return hi >= 2 ? 1 : 0;
            return lo;
        }
        case FamilySpec::Kind::gnp:
            throw std::invalid_argument("closed_form_tw: gnp has no closed-form treewidth");
    }
    throw std::logic_error("closed_form_tw: unreachable");
}

}  // namespace twbound
