#pragma once

// Simple undirected graph with dense vertex labels 0..n-1.
// Graphs are immutable after construction; all queries are const.

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace twbound {

using Edge = std::pair<int, int>;

class Graph {
public:
    Graph() = default;

    // Edges may be given in any order and orientation; they are normalized
    // to (min,max) and sorted. Self-loops, duplicates and out-of-range
    // endpoints are rejected.
    Graph(int n, std::vector<Edge> edges) : n_(n) {
        if (n < 0) throw std::invalid_argument("graph: negative vertex count");
        for (auto& [u, v] : edges) {
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw std::invalid_argument("graph: vertex index out of range: (" +
                                            std::to_string(u) + "," + std::to_string(v) + ")");
            if (u == v)
                throw std::invalid_argument("graph: self-loop at vertex " + std::to_string(u));
            if (u > v) std::swap(u, v);
        }
        std::sort(edges.begin(), edges.end());
        auto dup = std::adjacent_find(edges.begin(), edges.end());
        if (dup != edges.end())
            throw std::invalid_argument("graph: duplicate edge (" + std::to_string(dup->first) +
                                        "," + std::to_string(dup->second) + ")");
        edges_ = std::move(edges);
        adj_.resize(static_cast<size_t>(n_));
        for (const auto& [u, v] : edges_) {
            adj_[static_cast<size_t>(u)].push_back(v);
            adj_[static_cast<size_t>(v)].push_back(u);
        }
        for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
    }

    int n() const { return n_; }
    long long m() const { return static_cast<long long>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[static_cast<size_t>(v)]; }
    int degree(int v) const { return static_cast<int>(adj_[static_cast<size_t>(v)].size()); }

    bool has_edge(int u, int v) const {
        if (u == v) return false;
        const auto& a = adj_[static_cast<size_t>(u)];
        return std::binary_search(a.begin(), a.end(), v);
    }

    int max_degree() const {
        int d = 0;
        for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
        return d;
    }

    bool is_complete() const { return m() == static_cast<long long>(n_) * (n_ - 1) / 2; }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

struct GraphStats {
    int n = 0;
    long long m = 0;
    int max_degree = 0;
    int component_count = 0;
};

// Connected components by graph search; returns the component id of every
// vertex (ids are 0-based in order of the smallest contained vertex).
inline std::vector<int> component_ids(const Graph& g) {
    std::vector<int> comp(static_cast<size_t>(g.n()), -1);
    int next = 0;
    std::vector<int> stack;
    for (int s = 0; s < g.n(); ++s) {
        if (comp[static_cast<size_t>(s)] != -1) continue;
        comp[static_cast<size_t>(s)] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(v)) {
                if (comp[static_cast<size_t>(w)] == -1) {
                    comp[static_cast<size_t>(w)] = next;
                    stack.push_back(w);
                }
            }
        }
        ++next;
    }
    return comp;
}

inline GraphStats stats(const Graph& g) {
    GraphStats s;
    s.n = g.n();
    s.m = g.m();
    s.max_degree = g.max_degree();
    if (g.n() == 0) {
        s.component_count = 0;
    } else {
        auto comp = component_ids(g);
        s.component_count = *std::max_element(comp.begin(), comp.end()) + 1;
    }
    return s;
}

}  // namespace twbound
