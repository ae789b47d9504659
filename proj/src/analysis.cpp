#include "strucnet/analysis.hpp"

#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace strucnet {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string label_set(const StructureGraph& g, const std::vector<int>& nodes) {
    std::string out = "{";
    for (std::size_t k = 0; k < nodes.size(); ++k) {
        if (k) out += ", ";
        out += g.label(nodes[k]);
    }
    return out + "}";
}

std::string bottleneck_text(const StructureGraph& g, const std::optional<Bottleneck>& b) {
    if (!b) return "none";
    std::ostringstream out;
    out << "bottle " << label_set(g, b->bottle) << " -> neck " << label_set(g, b->neck)
        << " (deficiency " << b->deficiency << ")";
    return out.str();
}

ordered_json bottleneck_json(const StructureGraph& g, const std::optional<Bottleneck>& b) {
    if (!b) return nullptr;
    ordered_json out;
    auto labels = [&](const std::vector<int>& nodes) {
        ordered_json arr = ordered_json::array();
        for (int v : nodes) arr.push_back(g.label(v));
        return arr;
    };
    out["bottle"] = labels(b->bottle);
    out["neck"] = labels(b->neck);
    out["deficiency"] = b->deficiency;
    return out;
}

std::string cycle_text(const StructureGraph& g, const std::vector<int>& cycle) {
    std::string out;
    for (int v : cycle) {
        out += g.label(v);
        out += " -> ";
    }
    out += g.label(cycle.front());  // close the loop
    return out;
}

std::string sci(double v) {
    std::ostringstream out;
    out << std::scientific << std::setprecision(3) << v;
    return out.str();
}

}  // namespace

AnalysisReport analyze(const StructureGraph& g, const RandomizedConfig& cfg) {
    AnalysisReport r;
    r.n = g.size();
    r.edges = g.edge_count();
    r.structural_rank = structural_rank(g);
    r.deficiency = r.n - r.structural_rank;
    r.coverable = r.deficiency == 0;
    r.cover = cycle_cover(g);
    r.forward_bottleneck = minimax_bottleneck(g);
    r.backward_bottleneck = backward_bottleneck(g);
    r.numeric_rank = NumericRankReport{generic_rank_numeric(pattern_of(g), cfg), cfg.trials,
                                       cfg.rank_rel_tol};
    return r;
}

std::string report_text(const AnalysisReport& r, const StructureGraph& g) {
    std::ostringstream out;
    out << "nodes: " << r.n << ", edges: " << r.edges << "\n";
    out << "structural rank: " << r.structural_rank << " (deficiency " << r.deficiency << ")\n";
    out << "numeric rank: " << r.numeric_rank.value << " (" << r.numeric_rank.trials
        << " trials, tol " << r.numeric_rank.tolerance << ")\n";
    out << "cycle coverable: " << (r.coverable ? "yes" : "no") << "\n";
    out << "forward minimax bottleneck: " << bottleneck_text(g, r.forward_bottleneck) << "\n";
    out << "backward minimax bottleneck: " << bottleneck_text(g, r.backward_bottleneck) << "\n";
    return out.str();
}

std::string report_json(const AnalysisReport& r, const StructureGraph& g) {
    ordered_json doc;
    doc["n"] = r.n;
    doc["edges"] = r.edges;
    doc["structural_rank"] = r.structural_rank;
    doc["deficiency"] = r.deficiency;
    doc["coverable"] = r.coverable;
    if (r.cover) {
        ordered_json cycles = ordered_json::array();
        for (const auto& cycle : r.cover->cycles) {
            ordered_json one = ordered_json::array();
            for (int v : cycle) one.push_back(g.label(v));
            cycles.push_back(one);
        }
        doc["cover"] = cycles;
    } else {
        doc["cover"] = nullptr;
    }
    doc["forward_bottleneck"] = bottleneck_json(g, r.forward_bottleneck);
    doc["backward_bottleneck"] = bottleneck_json(g, r.backward_bottleneck);
    doc["numeric_rank"] = {{"value", r.numeric_rank.value},
                           {"trials", r.numeric_rank.trials},
                           {"tolerance", r.numeric_rank.tolerance}};
    return doc.dump(2) + "\n";
}

VerifySummary run_verification(const StructureGraph& g, const RandomizedConfig& cfg, int points) {
    VerifySummary summary;
    const int n = g.size();
    const int rank = structural_rank(g);
    const bool coverable = rank == n;
    auto add = [&](std::string name, std::string detail, bool passed) {
        summary.checks.push_back({std::move(name), std::move(detail), passed});
    };

    {
        const int numeric = generic_rank_numeric(pattern_of(g), cfg);
        std::ostringstream d;
        d << "structural " << rank << ", numeric " << numeric;
        add("rank agreement", d.str(), numeric == rank);
    }
    {
        const auto exact = null_nodes(g);
        const auto numeric = null_nodes_numeric(g, cfg);
        std::ostringstream d;
        d << "exact " << label_set(g, exact) << ", numeric " << label_set(g, numeric);
        add("null node agreement", d.str(), exact == numeric);
    }

    const StructuredFunction f = sample_function(g, cfg);
    {
        const SweepResult sweep = jacobian_rank_sweep(f, points, cfg);
        std::ostringstream d;
        d << "min " << sweep.min_rank << ", max " << sweep.max_rank << " over " << points
          << " points (structural " << rank << ")";
        add("jacobian rank sweep", d.str(), sweep.max_rank <= rank && sweep.min_rank == rank);
    }

    DrawStream point_stream(mix_seed(cfg.seed, kSaltPoint));
    const Eigen::VectorXd x0 = random_point(n, point_stream);
    if (coverable) {
        const NewtonResult sol = solve_from_anchor(f, x0, cfg);
        std::ostringstream d;
        d << "residual " << sci(sol.residual) << " after " << sol.iterations << " iterations";
        add("anchored newton", d.str(), sol.converged);
    } else {
        add("anchored newton", "skipped (graph not cycle coverable)", true);
    }
    {
        const RobustnessProbeResult probe = probe_robustness(f, x0, 1e-3, cfg);
        const char* verdict = probe.verdict == ProbeVerdict::RobustObserved    ? "RobustObserved"
                              : probe.verdict == ProbeVerdict::FragileObserved ? "FragileObserved"
                                                                               : "Inconclusive";
        std::ostringstream d;
        d << verdict << " (displacement " << sci(probe.displacement) << ", residual "
          << sci(probe.residual) << ")";
        const bool expected = coverable ? probe.verdict == ProbeVerdict::RobustObserved
                                        : probe.verdict == ProbeVerdict::FragileObserved;
        add("robustness probe", d.str(), expected);
    }
    {
        const int dim = manifold_dimension_at(f, x0, cfg);
        std::ostringstream d;
        d << dim << " (n - structural rank = " << n - rank << ")";
        add("manifold dimension", d.str(), dim == n - rank);
    }

    summary.all_passed = true;
    for (const auto& c : summary.checks) summary.all_passed = summary.all_passed && c.passed;
    return summary;
}

std::string verify_text(const VerifySummary& s, const StructureGraph& g, const RandomizedConfig& cfg,
                        int points, const std::string& source) {
    std::ostringstream out;
    out << "verify: " << source << "\n";
    out << "nodes: " << g.size() << ", edges: " << g.edge_count() << ", seed: " << cfg.seed
        << ", trials: " << cfg.trials << ", rank tol: " << cfg.rank_rel_tol
        << ", points: " << points << "\n";
    for (std::size_t k = 0; k < s.checks.size(); ++k) {
        const auto& c = s.checks[k];
        out << "[" << k + 1 << "] " << c.name << ": " << c.detail << " .. "
            << (c.passed ? "ok" : "MISMATCH") << "\n";
    }
    out << "verify: " << (s.all_passed ? "PASS" : "FAIL") << " (" << s.checks.size()
        << " checks)\n";
    return out.str();
}

std::string cover_lines(const StructureGraph& g, const CycleCover& cover) {
    std::string out;
    for (const auto& cycle : cover.cycles) {
        out += cycle_text(g, cycle);
        out += "\n";
    }
    return out;
}

}  // namespace strucnet
