#pragma once

// Graph family generators. Vertex labelings are canonical per family so
// identical parameters always produce identical graphs:
//   complete(n)             all pairs on 0..n-1
//   complete_bipartite(p,q) side A = 0..p-1, side B = p..p+q-1
//   path(n)                 0-1-...-(n-1)
//   cycle(n)                path closed by the edge {n-1,0}
//   grid(r,c)               row-major labels v = i*c + j, right/down edges
//   gnp(n,p,seed)           each pair (u<v), scanned u-major, kept when the
//                           next SplitMix64 draw in [0,1) is below p

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "twbound/graph.hpp"

namespace twbound {

// SplitMix64 (Steele, Lea, Flood 2014). Tiny, portable, 64-bit seeded;
// the same seed yields the same stream on every platform.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0,1) with 53 random bits.
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

inline Graph complete(int n) {
    if (n < 1) throw std::invalid_argument("complete: n must be >= 1");
    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(n) * (n - 1) / 2);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

inline Graph complete_bipartite(int p, int q) {
    if (p < 1 || q < 1) throw std::invalid_argument("complete_bipartite: sides must be >= 1");
    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(p) * q);
    for (int u = 0; u < p; ++u)
        for (int v = 0; v < q; ++v) edges.emplace_back(u, p + v);
    return Graph(p + q, std::move(edges));
}

inline Graph path_graph(int n) {
    if (n < 1) throw std::invalid_argument("path: n must be >= 1");
    std::vector<Edge> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph(n, std::move(edges));
}

inline Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle: n must be >= 3");
    std::vector<Edge> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    edges.emplace_back(0, n - 1);
    return Graph(n, std::move(edges));
}

inline Graph grid_graph(int r, int c) {
    if (r < 1 || c < 1) throw std::invalid_argument("grid: dimensions must be >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) {
            int v = i * c + j;
            if (j + 1 < c) edges.emplace_back(v, v + 1);
            if (i + 1 < r) edges.emplace_back(v, v + c);
        }
    return Graph(r * c, std::move(edges));
}

inline Graph gnp(int n, double p, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("gnp: n must be >= 1");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("gnp: probability must be in [0,1]");
    SplitMix64 rng(seed);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.next_unit() < p) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

// Family descriptors in "name:args" form, e.g. "complete_bipartite:3,5",
// "gnp:10,0.3,7". The gnp seed argument is optional and defaults to 0.
struct FamilySpec {
    enum class Kind { complete, complete_bipartite, path, cycle, grid, gnp };
    Kind kind = Kind::complete;
    int a = 0;
    int b = 0;
    double p = 0.0;
    std::uint64_t seed = 0;
};

inline FamilySpec parse_family(const std::string& desc, std::uint64_t default_seed = 0) {
    auto colon = desc.find(':');
    std::string name = desc.substr(0, colon);
    std::vector<std::string> args;
    if (colon != std::string::npos) {
        std::string rest = desc.substr(colon + 1);
        size_t start = 0;
        while (true) {
            size_t comma = rest.find(',', start);
            args.push_back(rest.substr(start, comma - start));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
    }
    auto want = [&](size_t lo, size_t hi) {
        if (args.size() < lo || args.size() > hi)
            throw std::invalid_argument("family: wrong argument count in '" + desc + "'");
    };
    auto arg_int = [&](size_t i) {
        try {
            size_t pos = 0;
            int v = std::stoi(args.at(i), &pos);
            if (pos != args[i].size()) throw std::invalid_argument("trailing");
            return v;
        } catch (const std::exception&) {
            throw std::invalid_argument("family: bad integer argument in '" + desc + "'");
        }
    };
    FamilySpec spec;
    if (name == "complete") {
        want(1, 1);
        spec.kind = FamilySpec::Kind::complete;
        spec.a = arg_int(0);
    } else if (name == "complete_bipartite") {
        want(2, 2);
        spec.kind = FamilySpec::Kind::complete_bipartite;
        spec.a = arg_int(0);
        spec.b = arg_int(1);
    } else if (name == "path") {
        want(1, 1);
        spec.kind = FamilySpec::Kind::path;
        spec.a = arg_int(0);
    } else if (name == "cycle") {
        want(1, 1);
        spec.kind = FamilySpec::Kind::cycle;
        spec.a = arg_int(0);
    } else if (name == "grid") {
        want(2, 2);
        spec.kind = FamilySpec::Kind::grid;
        spec.a = arg_int(0);
        spec.b = arg_int(1);
    } else if (name == "gnp") {
        want(2, 3);
        spec.kind = FamilySpec::Kind::gnp;
        spec.a = arg_int(0);
        try {
            size_t pos = 0;
            spec.p = std::stod(args.at(1), &pos);
            if (pos != args[1].size()) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
            throw std::invalid_argument("family: bad probability in '" + desc + "'");
        }
        spec.seed = args.size() == 3
                        ? static_cast<std::uint64_t>(std::stoull(args.at(2)))
                        : default_seed;
    } else {
        throw std::invalid_argument("family: unknown family '" + name + "'");
    }
    return spec;
}

inline Graph generate(const FamilySpec& spec) {
    switch (spec.kind) {
        case FamilySpec::Kind::complete: return complete(spec.a);
        case FamilySpec::Kind::complete_bipartite: return complete_bipartite(spec.a, spec.b);
        case FamilySpec::Kind::path: return path_graph(spec.a);
        case FamilySpec::Kind::cycle: return cycle_graph(spec.a);
        case FamilySpec::Kind::grid: return grid_graph(spec.a, spec.b);
        case FamilySpec::Kind::gnp: return gnp(spec.a, spec.p, spec.seed);
    }
    throw std::logic_error("family: unreachable");
}

inline std::string family_name(const FamilySpec& spec) {
    switch (spec.kind) {
        case FamilySpec::Kind::complete: return "complete:" + std::to_string(spec.a);
        case FamilySpec::Kind::complete_bipartite:
            return "complete_bipartite:" + std::to_string(spec.a) + "," + std::to_string(spec.b);
        case FamilySpec::Kind::path: return "path:" + std::to_string(spec.a);
        case FamilySpec::Kind::cycle: return "cycle:" + std::to_string(spec.a);
        case FamilySpec::Kind::grid:
            return "grid:" + std::to_string(spec.a) + "," + std::to_string(spec.b);
        case FamilySpec::Kind::gnp: {
            std::ostringstream out;
            out << "gnp:" << spec.a << ',' << spec.p << ',' << spec.seed;
            return out.str();
        }
    }
    return "?";
}

}  // namespace twbound
