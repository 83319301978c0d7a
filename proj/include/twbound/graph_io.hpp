#pragma once

// Text formats for graphs.
//
// PACE .gr: optional comment lines starting with 'c', one header line
// "p tw <n> <m>", then m edge lines "<u> <v>" with 1-based indices.
// Edge list: one "u v" pair per line, 0-based; an optional single-integer
// line fixes the vertex count (otherwise n = max label + 1).

#include <charconv>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "twbound/graph.hpp"

namespace twbound {

namespace detail {

inline std::vector<std::string_view> split_tokens(std::string_view line) {
    std::vector<std::string_view> out;
    size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

inline long long parse_int(std::string_view tok, const char* what) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw std::invalid_argument(std::string("parse: non-integer ") + what + " token '" +
                                    std::string(tok) + "'");
    return value;
}

}  // namespace detail

inline Graph parse_pace_gr(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    long long n = -1, m = -1;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        auto toks = detail::split_tokens(line);
        if (toks.empty() || toks[0] == "c") continue;
        if (toks[0] == "p") {
            if (n >= 0) throw std::invalid_argument("pace: duplicate header line");
            if (toks.size() != 4 || toks[1] != "tw")
                throw std::invalid_argument("pace: malformed header '" + line + "'");
            n = detail::parse_int(toks[2], "vertex count");
            m = detail::parse_int(toks[3], "edge count");
            if (n < 0 || m < 0) throw std::invalid_argument("pace: negative count in header");
            continue;
        }
        if (n < 0) throw std::invalid_argument("pace: edge line before header");
        if (toks.size() != 2) throw std::invalid_argument("pace: malformed edge line '" + line + "'");
        long long u = detail::parse_int(toks[0], "vertex");
        long long v = detail::parse_int(toks[1], "vertex");
        if (u < 1 || u > n || v < 1 || v > n)
            throw std::invalid_argument("pace: vertex index out of range in '" + line + "'");
        edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
    }
    if (n < 0) throw std::invalid_argument("pace: missing header line");
    if (static_cast<long long>(edges.size()) != m)
        throw std::invalid_argument("pace: header declares " + std::to_string(m) + " edges, found " +
                                    std::to_string(edges.size()));
    return Graph(static_cast<int>(n), std::move(edges));
}

inline Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<Edge> edges;
    long long declared_n = -1;
    long long max_label = -1;
    while (std::getline(in, line)) {
        auto toks = detail::split_tokens(line);
        if (toks.empty() || toks[0] == "c" || toks[0][0] == '#') continue;
        if (toks.size() == 1) {
            declared_n = detail::parse_int(toks[0], "vertex count");
            continue;
        }
        if (toks.size() != 2)
            throw std::invalid_argument("edge list: malformed line '" + line + "'");
        long long u = detail::parse_int(toks[0], "vertex");
        long long v = detail::parse_int(toks[1], "vertex");
        if (u < 0 || v < 0) throw std::invalid_argument("edge list: negative vertex label");
        max_label = std::max({max_label, u, v});
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    long long n = declared_n >= 0 ? declared_n : max_label + 1;
    if (max_label >= n)
        throw std::invalid_argument("edge list: vertex label exceeds declared count");
    return Graph(static_cast<int>(n), std::move(edges));
}

inline std::string to_pace_gr(const Graph& g) {
    std::ostringstream out;
    out << "p tw " << g.n() << ' ' << g.m() << '\n';
    for (const auto& [u, v] : g.edges()) out << u + 1 << ' ' << v + 1 << '\n';
    return out.str();
}

inline std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.n() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

// Heuristic used by the CLI: PACE files carry a "p tw" header.
inline bool looks_like_pace_gr(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto toks = detail::split_tokens(line);
        if (toks.empty() || toks[0] == "c") continue;
        return toks[0] == "p";
    }
    return false;
}

}  // namespace twbound
