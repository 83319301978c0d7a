#pragma once

// PACE .td format: comment lines 'c ...', one header "s td <#bags> <max bag
// size> <n>", bag lines "b <id> <v...>" with 1-based ids and vertices, then
// one line "<i> <j>" per tree edge (1-based bag ids).

#include <sstream>
#include <string>

#include "twbound/exact_treewidth.hpp"
#include "twbound/graph_io.hpp"

namespace twbound {

inline std::string to_pace_td(const TreeDecomposition& td) {
    std::ostringstream out;
    size_t largest = 0;
    for (const auto& bag : td.bags) largest = std::max(largest, bag.size());
    out << "s td " << td.bags.size() << ' ' << largest << ' ' << td.n << '\n';
    for (size_t i = 0; i < td.bags.size(); ++i) {
        out << "b " << i + 1;
        for (int v : td.bags[i]) out << ' ' << v + 1;
        out << '\n';
    }
    for (const auto& [a, b] : td.tree_edges) out << a + 1 << ' ' << b + 1 << '\n';
    return out.str();
}

inline TreeDecomposition parse_pace_td(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    TreeDecomposition td;
    long long declared_bags = -1;
    bool seen_header = false;
    while (std::getline(in, line)) {
        auto toks = detail::split_tokens(line);
        if (toks.empty() || toks[0] == "c") continue;
        if (toks[0] == "s") {
            if (seen_header) throw std::invalid_argument("td: duplicate header");
            if (toks.size() != 5 || toks[1] != "td")
                throw std::invalid_argument("td: malformed header '" + line + "'");
            declared_bags = detail::parse_int(toks[2], "bag count");
            td.n = static_cast<int>(detail::parse_int(toks[4], "vertex count"));
            if (declared_bags < 0 || td.n < 0)
                throw std::invalid_argument("td: negative count in header");
            td.bags.assign(static_cast<size_t>(declared_bags), {});
            seen_header = true;
            continue;
        }
        if (!seen_header) throw std::invalid_argument("td: line before header: '" + line + "'");
        if (toks[0] == "b") {
            if (toks.size() < 2) throw std::invalid_argument("td: malformed bag line '" + line + "'");
            long long id = detail::parse_int(toks[1], "bag id");
            if (id < 1 || id > declared_bags)
                throw std::invalid_argument("td: bag id out of range in '" + line + "'");
            auto& bag = td.bags[static_cast<size_t>(id - 1)];
            for (size_t k = 2; k < toks.size(); ++k) {
                long long v = detail::parse_int(toks[k], "vertex");
                if (v < 1 || v > td.n)
                    throw std::invalid_argument("td: vertex out of range in '" + line + "'");
                bag.push_back(static_cast<int>(v - 1));
            }
            std::sort(bag.begin(), bag.end());
            bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
            continue;
        }
        if (toks.size() != 2) throw std::invalid_argument("td: malformed edge line '" + line + "'");
        long long a = detail::parse_int(toks[0], "bag id");
        long long b = detail::parse_int(toks[1], "bag id");
        if (a < 1 || a > declared_bags || b < 1 || b > declared_bags)
            throw std::invalid_argument("td: tree edge id out of range in '" + line + "'");
        td.tree_edges.emplace_back(static_cast<int>(a - 1), static_cast<int>(b - 1));
    }
    if (!seen_header) throw std::invalid_argument("td: missing header line");
    return td;
}

}  // namespace twbound
