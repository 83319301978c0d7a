// Command-line front end for the treewidth lower-bound toolkit.
//
//   bounds   spectral lower bounds for one graph
//   exact    exact treewidth (subset dynamic program) + PACE .td output
//   verify   replay the proof-chain certificates end to end
//   family   emit a generated family graph as PACE .gr
//   batch    bounds (+ exact where it fits) over many graphs
//   compare  like batch, but an over-limit graph is reported as a row error
//
// Exit codes: 0 success / all checks pass, 1 usage or parse error,
// 2 verification failure, 3 size refusal.

#include <atomic>
#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "twbound/twbound.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerify = 2;
constexpr int kExitRefused = 3;

// shortest round-trip decimal form; deterministic and locale-independent
std::string fmt_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string read_text(const std::string& path) {
    std::ostringstream ss;
    if (path == "-") {
        ss << std::cin.rdbuf();
    } else {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw std::runtime_error("cannot open " + path);
        ss << in.rdbuf();
    }
    return ss.str();
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

// emit to --out when given, stdout otherwise
void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty())
        std::cout << text;
    else
        write_text(out_path, text);
}

twbound::Graph load_graph_text(const std::string& text) {
    return twbound::looks_like_pace_gr(text) ? twbound::parse_pace_gr(text)
                                             : twbound::parse_edge_list(text);
}

// ---------------------------------------------------------------------------
// graph sources: files, directories of .gr files, family descriptors
// (numeric arguments of a descriptor may be ranges `lo..hi`)

struct GraphSource {
    std::string name;
    std::string path;        // set for file-backed sources
    std::string descriptor;  // set for family-generated sources
};

struct DescriptorArg {
    bool is_range = false;
    long long lo = 0, hi = 0;
    std::string raw;
};

DescriptorArg parse_descriptor_arg(const std::string& arg) {
    DescriptorArg out;
    out.raw = arg;
    const auto dots = arg.find("..");
    if (dots == std::string::npos) return out;
    auto parse_ll = [&](const std::string& s) {
        long long v = 0;
        const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
        if (res.ec != std::errc() || res.ptr != s.data() + s.size())
            throw std::runtime_error("bad range bound '" + s + "' in '" + arg + "'");
        return v;
    };
    out.is_range = true;
    out.lo = parse_ll(arg.substr(0, dots));
    out.hi = parse_ll(arg.substr(dots + 2));
    if (out.lo > out.hi) throw std::runtime_error("empty range '" + arg + "'");
    return out;
}

// Expand ranges to a list of plain descriptors, in odometer order (last
// argument fastest). For a complete_bipartite grid where both arguments are
// ranges, only p <= q instances are kept (the rest are isomorphic repeats).
// A gnp descriptor without an explicit seed expands to `seeds` instances
// seeded base_seed, base_seed+1, ...
std::vector<std::string> expand_descriptor(const std::string& desc, std::uint64_t base_seed,
                                           int seeds) {
    const auto colon = desc.find(':');
    const std::string name = desc.substr(0, colon);
    std::vector<DescriptorArg> args;
    if (colon != std::string::npos) {
        const std::string rest = desc.substr(colon + 1);
        size_t start = 0;
        while (true) {
            const size_t comma = rest.find(',', start);
            args.push_back(parse_descriptor_arg(rest.substr(start, comma - start)));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
    }

    std::vector<std::string> combos;
    std::vector<std::string> current(args.size());
    auto rec = [&](auto&& self, size_t i) -> void {
        if (i == args.size()) {
            std::string d = name;
            for (size_t k = 0; k < current.size(); ++k) d += (k == 0 ? ":" : ",") + current[k];
            combos.push_back(d);
            return;
        }
        if (!args[i].is_range) {
            current[i] = args[i].raw;
            self(self, i + 1);
            return;
        }
        for (long long v = args[i].lo; v <= args[i].hi; ++v) {
            current[i] = std::to_string(v);
            self(self, i + 1);
        }
    };
    rec(rec, 0);

    if (name == "complete_bipartite" && args.size() == 2 && args[0].is_range && args[1].is_range) {
        std::vector<std::string> kept;
        for (const auto& d : combos) {
            const auto spec = twbound::parse_family(d, base_seed);
            if (spec.a <= spec.b) kept.push_back(d);
        }
        combos = std::move(kept);
    }

    if (name == "gnp" && args.size() == 2 && seeds > 1) {
        std::vector<std::string> seeded;
        for (const auto& d : combos)
            for (int s = 0; s < seeds; ++s)
                seeded.push_back(d + "," + std::to_string(base_seed + static_cast<std::uint64_t>(s)));
        combos = std::move(seeded);
    }
    return combos;
}

std::vector<GraphSource> collect_sources(const std::vector<std::string>& inputs,
                                         const std::vector<std::string>& families,
                                         std::uint64_t seed, int seeds) {
    std::vector<GraphSource> sources;
    for (const auto& input : inputs) {
        if (input != "-" && std::filesystem::is_directory(input)) {
            std::vector<std::string> found;
            for (const auto& entry : std::filesystem::directory_iterator(input))
                if (entry.is_regular_file() && entry.path().extension() == ".gr")
                    found.push_back(entry.path().string());
            std::sort(found.begin(), found.end());
            for (auto& f : found) sources.push_back({f, f, ""});
        } else {
            sources.push_back({input, input, ""});
        }
    }
    for (const auto& fam : families)
        for (const auto& d : expand_descriptor(fam, seed, seeds)) {
            const auto spec = twbound::parse_family(d, seed);
            sources.push_back({twbound::family_name(spec), "", d});
        }
    return sources;
}

twbound::Graph realize(const GraphSource& src, std::uint64_t seed) {
    if (!src.descriptor.empty())
        return twbound::generate(twbound::parse_family(src.descriptor, seed));
    return load_graph_text(read_text(src.path));
}

// ---------------------------------------------------------------------------
// batch rows

struct Row {
    std::string name;
    bool have_bounds = false;
    twbound::BoundReport rep;
    std::optional<int> exact;
    std::optional<int> gap;
    std::string error;
};

const std::vector<std::string> kColumns = {
    "name",    "n",    "m",    "max_degree",   "lambda2",  "lambda_max", "cs03",
    "ghnoo24", "thm1", "thm2", "best_integer", "exact_tw", "gap",        "error"};

std::vector<std::string> row_cells(const Row& row) {
    auto opt = [](const std::optional<double>& v) { return v ? fmt_double(*v) : ""; };
    if (!row.have_bounds)
        return {row.name, "", "", "", "", "", "", "", "", "", "", "", "", row.error};
    const auto& r = row.rep;
    return {row.name,
            std::to_string(r.n),
            std::to_string(r.m),
            std::to_string(r.max_degree),
            fmt_double(r.lambda2),
            fmt_double(r.lambda_max),
            opt(r.cs03),
            opt(r.ghnoo24),
            opt(r.thm1),
            opt(r.thm2),
            std::to_string(r.best_integer),
            row.exact ? std::to_string(*row.exact) : "",
            row.gap ? std::to_string(*row.gap) : "",
            row.error};
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string quoted = "\"";
    for (char ch : field) {
        if (ch == '"') quoted += '"';
        quoted += ch;
    }
    return quoted + "\"";
}

std::string rows_to_csv(const std::vector<Row>& rows) {
    std::ostringstream out;
    for (size_t i = 0; i < kColumns.size(); ++i) out << (i ? "," : "") << kColumns[i];
    out << '\n';
    for (const auto& row : rows) {
        const auto cells = row_cells(row);
        for (size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << csv_escape(cells[i]);
        out << '\n';
    }
    return out.str();
}

std::string rows_to_table(const std::vector<Row>& rows) {
    std::vector<std::vector<std::string>> grid;
    grid.push_back(kColumns);
    for (const auto& row : rows) grid.push_back(row_cells(row));
    std::vector<size_t> width(kColumns.size(), 0);
    for (auto& cells : grid)
        for (size_t i = 0; i < cells.size(); ++i) {
            if (cells[i].empty() && !grid.empty() && &cells != &grid.front()) cells[i] = "-";
            width[i] = std::max(width[i], cells[i].size());
        }
    std::ostringstream out;
    for (const auto& cells : grid) {
        for (size_t i = 0; i < cells.size(); ++i) {
            out << cells[i];
            if (i + 1 < cells.size())
                out << std::string(width[i] - cells[i].size() + 2, ' ');
        }
        out << '\n';
    }
    return out.str();
}

twbound::ordered_json row_to_json(const Row& row) {
    using twbound::ordered_json;
    ordered_json j;
    j["name"] = row.name;
    auto opt = [](const std::optional<double>& v) {
        return v ? ordered_json(*v) : ordered_json(nullptr);
    };
    if (row.have_bounds) {
        const auto& r = row.rep;
        j["n"] = r.n;
        j["m"] = r.m;
        j["max_degree"] = r.max_degree;
        j["lambda2"] = r.lambda2;
        j["lambda_max"] = r.lambda_max;
        j["cs03"] = opt(r.cs03);
        j["ghnoo24"] = opt(r.ghnoo24);
        j["thm1"] = opt(r.thm1);
        j["thm2"] = opt(r.thm2);
        j["best_integer"] = r.best_integer;
        j["exact_tw"] = row.exact ? ordered_json(*row.exact) : ordered_json(nullptr);
        j["gap"] = row.gap ? ordered_json(*row.gap) : ordered_json(nullptr);
    }
    j["error"] = row.error.empty() ? ordered_json(nullptr) : ordered_json(row.error);
    return j;
}

template <typename F>
void parallel_for(size_t count, F&& body) {
    const unsigned hw = std::thread::hardware_concurrency();
    const size_t workers = std::min({count, static_cast<size_t>(hw == 0 ? 1 : hw),
                                     static_cast<size_t>(16)});
    if (workers <= 1) {
        for (size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (size_t w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (size_t i; (i = next.fetch_add(1)) < count;) body(i);
        });
    for (auto& t : pool) t.join();
}

// ---------------------------------------------------------------------------
// subcommands

struct Options {
    std::vector<std::string> inputs;
    std::vector<std::string> families;
    std::string format;  // empty = subcommand default
    std::uint64_t seed = 0;
    int limit = 20;
    int seeds = 1;
    std::string out;
    std::string td;
};

GraphSource resolve_single_source(const Options& opt) {
    auto sources = collect_sources(opt.inputs, opt.families, opt.seed, opt.seeds);
    if (sources.size() != 1)
        throw std::runtime_error("expected exactly one input graph (a file path or one --family)");
    return sources.front();
}

int run_bounds(const Options& opt) {
    const auto src = resolve_single_source(opt);
    const auto g = realize(src, opt.seed);
    const auto report = twbound::bounds_report(g);
    const std::string format = opt.format.empty() ? "table" : opt.format;

    if (format == "json") {
        emit(opt.out, twbound::bounds_json(report).dump(2) + "\n");
        return kExitOk;
    }
    if (format == "csv") {
        Row row;
        row.name = src.name;
        row.have_bounds = true;
        row.rep = report;
        emit(opt.out, rows_to_csv({row}));
        return kExitOk;
    }
    auto opt_cell = [](const std::optional<double>& v) {
        return v ? fmt_double(*v) : std::string("n/a");
    };
    auto int_cell = [](const std::optional<double>& v) {
        return v ? std::to_string(twbound::integerize_bound(*v)) : std::string("n/a");
    };
    std::ostringstream out;
    out << "graph        " << src.name << "  (n=" << report.n << ", m=" << report.m
        << ", max_degree=" << report.max_degree << ")\n";
    out << "lambda2      " << fmt_double(report.lambda2) << '\n';
    out << "lambda_max   " << fmt_double(report.lambda_max) << '\n';
    out << "cs03         " << opt_cell(report.cs03) << "  (integer " << int_cell(report.cs03)
        << ")\n";
    out << "ghnoo24      " << opt_cell(report.ghnoo24) << "  (integer " << int_cell(report.ghnoo24)
        << ")\n";
    out << "thm1         " << opt_cell(report.thm1) << "  (integer " << int_cell(report.thm1)
        << ")\n";
    out << "thm2         " << opt_cell(report.thm2) << "  (integer " << int_cell(report.thm2)
        << ")\n";
    out << "best integer lower bound: " << report.best_integer << '\n';
    emit(opt.out, out.str());
    return kExitOk;
}

int run_exact(const Options& opt) {
    const auto src = resolve_single_source(opt);
    const auto g = realize(src, opt.seed);
    twbound::ExactResult result;
    try {
        result = twbound::exact_tw(g, opt.limit);
    } catch (const twbound::SizeLimitError& e) {
        std::cerr << "refused: " << e.what() << '\n';
        return kExitRefused;
    }
    if (!opt.out.empty()) write_text(opt.out, twbound::to_pace_td(result.decomposition));
    const std::string format = opt.format.empty() ? "table" : opt.format;
    if (format == "json")
        std::cout << twbound::exact_json(g, result).dump(2) << '\n';
    else
        std::cout << result.width << '\n';
    return kExitOk;
}

int run_verify(const Options& opt) {
    const auto src = resolve_single_source(opt);
    const auto g = realize(src, opt.seed);

    twbound::TreeDecomposition td;
    if (!opt.td.empty()) {
        td = twbound::parse_pace_td(read_text(opt.td));
        const auto validation = twbound::validate_td(g, td);
        if (!validation.valid()) {
            std::cerr << "invalid decomposition: " << validation.witness << '\n';
            return kExitVerify;
        }
    } else {
        try {
            td = twbound::exact_tw(g, opt.limit).decomposition;
        } catch (const twbound::SizeLimitError& e) {
            std::cerr << "refused: " << e.what() << " (pass --td to verify an external decomposition)\n";
            return kExitRefused;
        }
    }

    const auto spectrum = twbound::eigenvalues(g);
    const auto separator = twbound::balanced_separator(g, td);
    const auto partition = twbound::three_partition(g, separator);
    const auto t1 = twbound::verify_theorem1_chain(g, spectrum, partition);
    const auto t2 = twbound::verify_theorem2_chain(g, spectrum, partition);

    const std::string format = opt.format.empty() ? "json" : opt.format;
    if (format == "table") {
        std::ostringstream out;
        out << "graph        " << src.name << "  (n=" << g.n() << ", m=" << g.m() << ")\n";
        out << "decomposition width " << td.width() << ", separator size " << separator.size()
            << ", parts " << partition.U1.size() << "/" << partition.U2.size() << "/"
            << partition.U3.size() << '\n';
        out << "theorem 1    qform=" << fmt_double(t1.qform) << "  lower=" << fmt_double(t1.lower)
            << "  upper=" << fmt_double(t1.upper)
            << "  implied |S| >= " << fmt_double(t1.implied_separator_bound) << "  "
            << (t1.pass() ? "pass" : "FAIL") << '\n';
        out << "theorem 2    "
            << (t2.complete_branch ? std::string("complete-graph branch")
                                   : "3|S|=" + fmt_double(t2.summed_lhs) +
                                         " >= " + fmt_double(t2.summed_rhs))
            << "  bound=" << fmt_double(t2.bound_value) << "  " << (t2.pass ? "pass" : "FAIL")
            << '\n';
        emit(opt.out, out.str());
    } else {
        emit(opt.out, twbound::certificate_json(g, td, t1, t2).dump(2) + "\n");
    }

    std::vector<std::string> failed;
    if (!t1.partition_ok) failed.push_back("partition invariants (" + t1.partition_witness + ")");
    if (!t1.zero_sum_ok) failed.push_back("sum x = 0");
    if (!t1.norm_ok) failed.push_back("|x|^2 = n-|S|");
    if (!t1.lower_ok) failed.push_back("lambda2*(n-|S|) <= x*Lx");
    if (!t1.upper_ok) failed.push_back("x*Lx <= max_degree*|S|");
    if (!t1.separator_ok) failed.push_back("|S| >= n*lambda2/(max_degree+lambda2)");
    if (!t2.pass) failed.push_back("theorem 2 chain" + (t2.note.empty() ? "" : " (" + t2.note + ")"));
    if (!failed.empty()) {
        for (const auto& f : failed) std::cerr << "failed: " << f << '\n';
        return kExitVerify;
    }
    return kExitOk;
}

int run_family(const Options& opt) {
    if (opt.families.size() + opt.inputs.size() != 1)
        throw std::runtime_error("expected exactly one family descriptor");
    const std::string desc = opt.families.empty() ? opt.inputs.front() : opt.families.front();
    const auto g = twbound::generate(twbound::parse_family(desc, opt.seed));
    emit(opt.out, twbound::to_pace_gr(g));
    return kExitOk;
}

int run_batch(const Options& opt, bool strict_exact) {
    const auto sources = collect_sources(opt.inputs, opt.families, opt.seed, opt.seeds);
    if (sources.empty()) throw std::runtime_error("no input graphs (give files, directories or --family)");

    // realize sequentially (cheap), compute rows concurrently
    std::vector<std::optional<twbound::Graph>> graphs(sources.size());
    std::vector<Row> rows(sources.size());
    for (size_t i = 0; i < sources.size(); ++i) {
        rows[i].name = sources[i].name;
        try {
            graphs[i] = realize(sources[i], opt.seed);
        } catch (const std::exception& e) {
            rows[i].error = e.what();
        }
    }
    parallel_for(sources.size(), [&](size_t i) {
        if (!graphs[i].has_value()) return;
        const auto& g = *graphs[i];
        try {
            rows[i].rep = twbound::bounds_report(g);
            rows[i].have_bounds = true;
            if (g.n() <= opt.limit) {
                const int width = twbound::exact_tw(g, opt.limit).width;
                rows[i].exact = width;
                rows[i].gap = width - rows[i].rep.best_integer;
            } else if (strict_exact) {
                rows[i].error = "exact treewidth skipped: n=" + std::to_string(g.n()) +
                                " exceeds limit " + std::to_string(opt.limit);
            }
        } catch (const std::exception& e) {
            rows[i].error = e.what();
        }
    });

    const std::string format = opt.format.empty() ? "table" : opt.format;
    if (format == "json") {
        twbound::ordered_json j = twbound::ordered_json::array();
        for (const auto& row : rows) j.push_back(row_to_json(row));
        emit(opt.out, j.dump(2) + "\n");
    } else if (format == "csv") {
        emit(opt.out, rows_to_csv(rows));
    } else {
        emit(opt.out, rows_to_table(rows));
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spectral treewidth lower bounds: bounds, exact oracle, proof certificates"};
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&](CLI::App* cmd, bool with_inputs) {
        if (with_inputs)
            cmd->add_option("inputs", opt.inputs, "graph files (.gr or edge list), '-' for stdin");
        cmd->add_option("--family", opt.families,
                        "family descriptor, e.g. complete:6, complete_bipartite:3,5, path:8, "
                        "cycle:9, grid:3,4, gnp:12,0.3");
        cmd->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"json", "csv", "table"}));
        cmd->add_option("--seed", opt.seed, "seed for gnp family generation");
        cmd->add_option("--out", opt.out, "write the primary output to this file");
    };

    auto* cmd_bounds = app.add_subcommand("bounds", "spectral lower bounds for one graph");
    add_common(cmd_bounds, true);

    auto* cmd_exact = app.add_subcommand("exact", "exact treewidth and a witness decomposition");
    add_common(cmd_exact, true);
    cmd_exact->add_option("--limit", opt.limit, "largest n the oracle accepts")
        ->check(CLI::Range(1, 24));

    auto* cmd_verify = app.add_subcommand("verify", "replay the proof-chain certificates");
    add_common(cmd_verify, true);
    cmd_verify->add_option("--limit", opt.limit, "largest n the oracle accepts")
        ->check(CLI::Range(1, 24));
    cmd_verify->add_option("--td", opt.td, "verify against this PACE .td file instead of the oracle");

    auto* cmd_family = app.add_subcommand("family", "emit a generated family graph as PACE .gr");
    add_common(cmd_family, true);

    auto* cmd_batch = app.add_subcommand("batch", "bounds over many graphs");
    add_common(cmd_batch, true);
    cmd_batch->add_option("--limit", opt.limit, "exact treewidth cutoff")->check(CLI::Range(1, 24));
    cmd_batch->add_option("--seeds", opt.seeds, "expand seedless gnp descriptors this many times")
        ->check(CLI::Range(1, 1000000));

    auto* cmd_compare = app.add_subcommand("compare", "bounds vs exact treewidth over many graphs");
    add_common(cmd_compare, true);
    cmd_compare->add_option("--limit", opt.limit, "exact treewidth cutoff")
        ->check(CLI::Range(1, 24));
    cmd_compare->add_option("--seeds", opt.seeds, "expand seedless gnp descriptors this many times")
        ->check(CLI::Range(1, 1000000));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (app.got_subcommand(cmd_bounds)) return run_bounds(opt);
        if (app.got_subcommand(cmd_exact)) return run_exact(opt);
        if (app.got_subcommand(cmd_verify)) return run_verify(opt);
        if (app.got_subcommand(cmd_family)) return run_family(opt);
        if (app.got_subcommand(cmd_batch)) return run_batch(opt, false);
        if (app.got_subcommand(cmd_compare)) return run_batch(opt, true);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
