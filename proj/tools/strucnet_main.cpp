// strucnet: structural solvability analysis of equation systems.
//
// Exit codes: 0 analysis succeeded with a robust/solvable outcome,
//             2 analysis succeeded with a fragile/unsolvable outcome,
//             1 bad input or internal failure.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "strucnet/analysis.hpp"
#include "strucnet/bottleneck.hpp"
#include "strucnet/graph_io.hpp"
#include "strucnet/randomized.hpp"
#include "strucnet/structural.hpp"

namespace {

using nlohmann::ordered_json;
using namespace strucnet;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitFragile = 2;

struct Options {
    std::string file;
    RandomizedConfig cfg;
    int points = 100;
    bool json = false;
    bool all = false;
    std::string out;
    std::vector<std::string> support;
    std::vector<std::string> targets;
    std::string label;
};

void add_common(CLI::App* cmd, Options& opt) {
    cmd->add_option("file", opt.file, "graph file (JSON)")->required();
    cmd->add_option("--seed", opt.cfg.seed, "seed for all randomized checks");
    cmd->add_option("--trials", opt.cfg.trials, "randomized trials per check");
    cmd->add_option("--tol", opt.cfg.rank_rel_tol, "relative singular value cutoff");
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

ordered_json edge_list_json(const StructureGraph& g, const std::vector<Edge>& edges) {
    ordered_json arr = ordered_json::array();
    for (const Edge& e : edges) arr.push_back({g.label(e.first), g.label(e.second)});
    return arr;
}

int cmd_analyze(const Options& opt) {
    const StructureGraph g = load_graph_file(opt.file);
    check_config(opt.cfg);
    const AnalysisReport r = analyze(g, opt.cfg);
    std::cout << (opt.json ? report_json(r, g) : report_text(r, g));
    return r.coverable ? kExitOk : kExitFragile;
}

int cmd_cover(const Options& opt) {
    const StructureGraph g = load_graph_file(opt.file);
    const auto cover = cycle_cover(g);
    if (opt.json) {
        ordered_json doc;
        doc["coverable"] = cover.has_value();
        if (cover) {
            ordered_json cycles = ordered_json::array();
            for (const auto& cycle : cover->cycles) {
                ordered_json one = ordered_json::array();
                for (int v : cycle) one.push_back(g.label(v));
                cycles.push_back(one);
            }
            doc["cover"] = cycles;
        } else {
            doc["cover"] = nullptr;
        }
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << (cover ? cover_lines(g, *cover) : std::string("none\n"));
    }
    return cover ? kExitOk : kExitFragile;
}

int cmd_repair(const Options& opt) {
    const StructureGraph g = load_graph_file(opt.file);
    const bool coverable = deficiency(g) == 0;
    if (opt.all) {
        const std::vector<Edge> fixes = coverable ? std::vector<Edge>{} : single_edge_fixes(g);
        if (opt.json) {
            ordered_json doc;
            doc["fixes"] = edge_list_json(g, fixes);
            std::cout << doc.dump(2) << "\n";
        } else {
            for (const Edge& e : fixes)
                std::cout << g.label(e.first) << " -> " << g.label(e.second) << "\n";
        }
        return kExitOk;
    }
    const RepairPlan plan = repair(g);
    if (opt.json) {
        ordered_json doc;
        doc["additions"] = edge_list_json(g, plan.additions);
        doc["deficiency_trace"] = plan.deficiency_trace;
        std::cout << doc.dump(2) << "\n";
    } else {
        for (const Edge& e : plan.additions)
            std::cout << "add " << g.label(e.first) << " -> " << g.label(e.second) << "\n";
        std::cout << "deficiency:";
        for (int d : plan.deficiency_trace) std::cout << " " << d;
        std::cout << "\n";
    }
    return kExitOk;
}

int cmd_verify(const Options& opt) {
    const StructureGraph g = load_graph_file(opt.file);
    check_config(opt.cfg);
    if (opt.points < 1) throw std::invalid_argument("--points must be at least 1");
    const VerifySummary s = run_verification(g, opt.cfg, opt.points);
    std::cout << verify_text(s, g, opt.cfg, opt.points, opt.file);
    return s.all_passed ? kExitOk : kExitFragile;
}

int cmd_render(const Options& opt) {
    const StructureGraph g = load_graph_file(opt.file);
    const auto b = minimax_bottleneck(g);
    const std::string dot = b ? to_dot(g, b->bottle, b->neck) : to_dot(g);
    write_output(opt.out, dot);
    return kExitOk;
}

StructuredLinearSystem load_system_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("system file: cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    ordered_json doc;
    try {
        doc = ordered_json::parse(buf.str());
    } catch (const ordered_json::exception& e) {
        throw ParseError(std::string("system file: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("m") || !doc.contains("n") ||
        !doc.contains("a_pattern") || !doc.contains("b_pattern"))
        throw ParseError("system file: need object with m, n, a_pattern, b_pattern");
    if (!doc["m"].is_number_integer() || !doc["n"].is_number_integer())
        throw ParseError("system file: m and n must be integers");
    const int m = doc["m"].get<int>();
    const int n = doc["n"].get<int>();
    if (m < 0 || n < 0) throw ParseError("system file: m and n must be nonnegative");
    std::vector<Position> allowed;
    for (const auto& pos : doc["a_pattern"]) {
        if (!pos.is_array() || pos.size() != 2 || !pos[0].is_number_integer() ||
            !pos[1].is_number_integer())
            throw ParseError("system file: a_pattern entries must be [row, col] pairs");
        const int i = pos[0].get<int>(), j = pos[1].get<int>();
        if (i < 0 || i >= m || j < 0 || j >= n)
            throw ParseError("system file: a_pattern position out of range");
        allowed.emplace_back(i, j);
    }
    std::vector<bool> b(static_cast<std::size_t>(m), false);
    for (const auto& row : doc["b_pattern"]) {
        if (!row.is_number_integer()) throw ParseError("system file: b_pattern entries must be rows");
        const int i = row.get<int>();
        if (i < 0 || i >= m) throw ParseError("system file: b_pattern row out of range");
        b[static_cast<std::size_t>(i)] = true;
    }
    std::sort(allowed.begin(), allowed.end());
    allowed.erase(std::unique(allowed.begin(), allowed.end()), allowed.end());
    return StructuredLinearSystem{StructurePattern(m, n, std::move(allowed)), std::move(b)};
}

int cmd_solvable(const Options& opt) {
    const StructuredLinearSystem sys = load_system_file(opt.file);
    check_config(opt.cfg);
    const SolvabilityVerdict v = classify_solvability(sys, opt.cfg);
    const bool always = v.verdict == Solvability::AlmostAlways;
    if (opt.json) {
        ordered_json doc;
        doc["verdict"] = always ? "almost_always" : "almost_never";
        doc["agreeing_trials"] = v.agreeing_trials;
        doc["trials"] = opt.cfg.trials;
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "verdict: almost " << (always ? "always" : "never") << " solvable ("
                  << v.agreeing_trials << "/" << opt.cfg.trials << " trials)\n";
    }
    return always ? kExitOk : kExitFragile;
}

int cmd_expand(const Options& opt) {
    const StructureGraph g = load_graph_file(opt.file);
    auto resolve = [&](const std::vector<std::string>& labels, const char* what) {
        std::vector<int> ids;
        for (const std::string& l : labels) {
            const int v = g.index_of(l);
            if (v < 0) throw std::invalid_argument(std::string(what) + ": unknown node " + l);
            ids.push_back(v);
        }
        return ids;
    };
    const StructureGraph expanded = expand_shared(g, resolve(opt.support, "--support"),
                                                  resolve(opt.targets, "--targets"), opt.label);
    write_output(opt.out, serialize_graph(expanded));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"structural solvability analysis of equation systems"};
    app.require_subcommand(1);

    Options opt;

    CLI::App* analyze_cmd = app.add_subcommand("analyze", "rank, coverability and bottleneck report");
    add_common(analyze_cmd, opt);
    analyze_cmd->add_flag("--json", opt.json, "emit JSON instead of text");

    CLI::App* cover_cmd = app.add_subcommand("cover", "print a cycle cover or 'none'");
    cover_cmd->add_option("file", opt.file, "graph file (JSON)")->required();
    cover_cmd->add_flag("--json", opt.json, "emit JSON instead of text");

    CLI::App* repair_cmd = app.add_subcommand("repair", "plan edge additions restoring coverability");
    repair_cmd->add_option("file", opt.file, "graph file (JSON)")->required();
    repair_cmd->add_flag("--all", opt.all, "list every verified single-edge fix instead");
    repair_cmd->add_flag("--json", opt.json, "emit JSON instead of text");

    CLI::App* verify_cmd = app.add_subcommand("verify", "cross-check structure against numerics");
    add_common(verify_cmd, opt);
    verify_cmd->add_option("--points", opt.points, "sample points for the Jacobian sweep");

    CLI::App* render_cmd = app.add_subcommand("render", "emit Graphviz DOT with bottleneck colors");
    render_cmd->add_option("file", opt.file, "graph file (JSON)")->required();
    render_cmd->add_option("-o", opt.out, "output path (default: stdout)");

    CLI::App* solvable_cmd = app.add_subcommand("solvable", "classify a structured linear system");
    add_common(solvable_cmd, opt);
    solvable_cmd->add_flag("--json", opt.json, "emit JSON instead of text");

    CLI::App* expand_cmd = app.add_subcommand("expand", "factor a shared input through a new node");
    expand_cmd->add_option("file", opt.file, "graph file (JSON)")->required();
    expand_cmd->add_option("--support", opt.support, "source nodes of the shared term")
        ->required()
        ->delimiter(',');
    expand_cmd->add_option("--targets", opt.targets, "nodes consuming the shared term")
        ->required()
        ->delimiter(',');
    expand_cmd->add_option("--label", opt.label, "label for the new node")->required();
    expand_cmd->add_option("-o", opt.out, "output path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }

    try {
        if (app.got_subcommand(analyze_cmd)) return cmd_analyze(opt);
        if (app.got_subcommand(cover_cmd)) return cmd_cover(opt);
        if (app.got_subcommand(repair_cmd)) return cmd_repair(opt);
        if (app.got_subcommand(verify_cmd)) return cmd_verify(opt);
        if (app.got_subcommand(render_cmd)) return cmd_render(opt);
        if (app.got_subcommand(solvable_cmd)) return cmd_solvable(opt);
        if (app.got_subcommand(expand_cmd)) return cmd_expand(opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;  // unreachable: require_subcommand(1)
}
