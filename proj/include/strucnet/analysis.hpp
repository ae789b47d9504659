#pragma once

#include <optional>
#include <string>

#include "strucnet/bottleneck.hpp"
#include "strucnet/nonlinear.hpp"
#include "strucnet/randomized.hpp"
#include "strucnet/structural.hpp"

namespace strucnet {

struct NumericRankReport {
    int value = 0;
    int trials = 0;
    double tolerance = 0.0;
};

/// Everything the analyze command reports about one graph.
struct AnalysisReport {
    int n = 0;
    int edges = 0;
    int structural_rank = 0;
    int deficiency = 0;
    bool coverable = false;
    std::optional<CycleCover> cover;
    std::optional<Bottleneck> forward_bottleneck;   // present iff deficiency > 0
    std::optional<Bottleneck> backward_bottleneck;
    NumericRankReport numeric_rank;
};

AnalysisReport analyze(const StructureGraph& g, const RandomizedConfig& cfg);

std::string report_text(const AnalysisReport& r, const StructureGraph& g);
std::string report_json(const AnalysisReport& r, const StructureGraph& g);

/// One cross-check of cmd_verify: name, printable detail, pass flag.
struct VerifyCheck {
    std::string name;
    std::string detail;
    bool passed = false;
};

struct VerifySummary {
    std::vector<VerifyCheck> checks;
    bool all_passed = false;
};

/** Runs the self-consistency battery on g: structural vs numeric rank,
 *  exact vs numeric null nodes, Jacobian rank sweep against the
 *  structural ceiling, anchored Newton on coverable graphs, the
 *  robustness probe against the verdict the structure predicts, and the
 *  manifold dimension at a random point. Deterministic per cfg.seed.
 */
VerifySummary run_verification(const StructureGraph& g, const RandomizedConfig& cfg, int points);

std::string verify_text(const VerifySummary& s, const StructureGraph& g, const RandomizedConfig& cfg,
                        int points, const std::string& source);

/// One closed "a -> b -> ... -> a" line per cycle, in cover order.
std::string cover_lines(const StructureGraph& g, const CycleCover& cover);

}  // namespace strucnet
