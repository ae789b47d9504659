#include "strucnet/randomized.hpp"

namespace strucnet {

std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
    std::uint64_t z = a + 0x9E3779B97F4A7C15ull * (b + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

void check_config(const RandomizedConfig& cfg) {
    if (cfg.trials < 1) throw std::invalid_argument("config: trials must be >= 1");
    if (!(cfg.rank_rel_tol > 0.0 && cfg.rank_rel_tol < 1.0))
        throw std::invalid_argument("config: rank_rel_tol must lie in (0, 1)");
    if (!(cfg.coord_tol > 0.0 && cfg.coord_tol < 1.0))
        throw std::invalid_argument("config: coord_tol must lie in (0, 1)");
    if (!(cfg.entry_min_magnitude > 0.0 && cfg.entry_min_magnitude < cfg.entry_max_magnitude))
        throw std::invalid_argument("config: entry band must satisfy 0 < min < max");
}

Eigen::MatrixXd instantiate(const StructurePattern& p, const RandomizedConfig& cfg, int trial) {
    check_config(cfg);
    DrawStream stream(mix_seed(mix_seed(cfg.seed, kSaltInstantiate), static_cast<std::uint64_t>(trial)));
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(p.rows(), p.cols());
    for (auto [i, j] : p.allowed()) m(i, j) = stream.entry(cfg);
    return m;
}

std::vector<Eigen::VectorXd> kernel_basis(const Eigen::MatrixXd& m, const RandomizedConfig& cfg) {
    check_config(cfg);
    const Eigen::Index n = m.cols();
    if (n == 0) return {};
    if (m.rows() == 0) {
        std::vector<Eigen::VectorXd> basis;
        for (Eigen::Index j = 0; j < n; ++j) basis.push_back(Eigen::VectorXd::Unit(n, j));
        return basis;
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    int rank = 0;
    if (sv.size() > 0 && sv(0) > 0.0) {
        const double cutoff = cfg.rank_rel_tol * sv(0);
        while (rank < sv.size() && sv(rank) > cutoff) ++rank;
    }
    std::vector<Eigen::VectorXd> basis;
    for (Eigen::Index j = rank; j < n; ++j) basis.push_back(svd.matrixV().col(j));
    return basis;
}

int generic_rank_numeric(const StructurePattern& p, const RandomizedConfig& cfg) {
    check_config(cfg);
    int best = 0;
    for (int t = 0; t < cfg.trials; ++t)
        best = std::max(best, numeric_rank(instantiate(p, cfg, t), cfg));
    return best;
}

std::vector<int> null_nodes_numeric(const StructureGraph& g, const RandomizedConfig& cfg) {
    check_config(cfg);
    const StructurePattern p = pattern_of(g);
    const int n = g.size();
    std::vector<int> votes(n, 0);
    for (int t = 0; t < cfg.trials; ++t) {
        const Eigen::MatrixXd a = instantiate(p, cfg, t);
        const auto basis = kernel_basis(a, cfg);
        if (basis.empty()) continue;
        DrawStream stream(mix_seed(mix_seed(cfg.seed, kSaltKernelCombine), static_cast<std::uint64_t>(t)));
        Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
        for (const auto& v : basis) x += stream.entry(cfg) * v;
        const double scale = x.lpNorm<Eigen::Infinity>();
        if (!(scale > 0.0)) continue;
        for (int j = 0; j < n; ++j)
            if (std::abs(x(j)) > cfg.coord_tol * scale) ++votes[j];
    }
    std::vector<int> nodes;
    for (int j = 0; j < n; ++j)
        if (2 * votes[j] > cfg.trials) nodes.push_back(j);
    return nodes;
}

SolvabilityVerdict classify_solvability(const StructuredLinearSystem& s, const RandomizedConfig& cfg) {
    check_config(cfg);
    const int rows = s.a_pattern.rows();
    if (static_cast<int>(s.b_pattern.size()) != rows)
        throw std::invalid_argument("b_pattern length must equal the row count of a_pattern");

    int solvable_trials = 0;
    for (int t = 0; t < cfg.trials; ++t) {
        const Eigen::MatrixXd a = instantiate(s.a_pattern, cfg, t);
        DrawStream stream(mix_seed(mix_seed(cfg.seed, kSaltRhs), static_cast<std::uint64_t>(t)));
        Eigen::VectorXd b = Eigen::VectorXd::Zero(rows);
        for (int i = 0; i < rows; ++i)
            if (s.b_pattern[i]) b(i) = stream.entry(cfg);
        Eigen::MatrixXd augmented(rows, a.cols() + 1);
        augmented << a, b;
        if (numeric_rank(a, cfg) == numeric_rank(augmented, cfg)) ++solvable_trials;
    }
    const bool solvable = 2 * solvable_trials > cfg.trials;
    return SolvabilityVerdict{
        solvable ? Solvability::AlmostAlways : Solvability::AlmostNever,
        solvable ? solvable_trials : cfg.trials - solvable_trials,
    };
}

}  // namespace strucnet
