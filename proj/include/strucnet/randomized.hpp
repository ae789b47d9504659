#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "strucnet/graph.hpp"

namespace strucnet {

/** Configuration for the randomized numerical checks.
 *
 *  Entries are drawn uniformly from [-max_mag, -min_mag] u [min_mag, max_mag];
 *  the gap around zero keeps instantiated matrices well conditioned, and any
 *  such absolutely continuous distribution selects generic matrices.
 */
struct RandomizedConfig {
    std::uint64_t seed = 0;
    int trials = 7;
    double rank_rel_tol = 1e-8;   // singular values above rank_rel_tol * sigma_max count
    double coord_tol = 1e-6;      // kernel coordinate j counts when |x_j| > coord_tol * |x|_inf
    double entry_min_magnitude = 0.1;
    double entry_max_magnitude = 1.0;
};

/** One splitmix64 round of (a + golden * (b + 1)).
 *  Used to derive independent child streams: per-trial streams are
 *  mix_seed(mix_seed(seed, purpose_salt), trial), so distinct purposes and
 *  trials never share a generator state.
 */
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b);

// Purpose salts for derived streams (documented part of the seeding scheme).
inline constexpr std::uint64_t kSaltInstantiate = 1;
inline constexpr std::uint64_t kSaltKernelCombine = 2;
inline constexpr std::uint64_t kSaltRhs = 3;
inline constexpr std::uint64_t kSaltFunction = 4;
inline constexpr std::uint64_t kSaltSweep = 5;
inline constexpr std::uint64_t kSaltNewton = 6;
inline constexpr std::uint64_t kSaltProbe = 7;
inline constexpr std::uint64_t kSaltPoint = 8;

/// Deterministic double stream; all randomness in the library flows
/// through this so results are reproducible bit for bit per seed.
class DrawStream {
public:
    explicit DrawStream(std::uint64_t seed) : rng_(seed) {}

    /// Uniform in [0, 1), 53-bit resolution.
    double uniform01() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// Draw from the two-sided band described by cfg.
    double entry(const RandomizedConfig& cfg) {
        double mag = cfg.entry_min_magnitude +
                     (cfg.entry_max_magnitude - cfg.entry_min_magnitude) * uniform01();
        return (rng_() & 1u) ? mag : -mag;
    }

private:
    std::mt19937_64 rng_;
};

/// Throws std::invalid_argument unless cfg satisfies its invariants.
void check_config(const RandomizedConfig& cfg);

/** Random matrix carrying pattern p: zero outside the allowed positions,
 *  band-distributed entries inside, filled in ascending position order.
 *  Reproducible: the draw stream is mix_seed(mix_seed(seed, kSaltInstantiate), trial).
 */
Eigen::MatrixXd instantiate(const StructurePattern& p, const RandomizedConfig& cfg, int trial);

/// Singular values above rank_rel_tol * sigma_max; 0 for an empty or zero matrix.
template <typename Derived>
int numeric_rank(const Eigen::MatrixBase<Derived>& m, const RandomizedConfig& cfg) {
    Eigen::MatrixXd mat = m.derived().template cast<double>();
    if (mat.rows() == 0 || mat.cols() == 0) return 0;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(mat);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0 || !(sv(0) > 0.0)) return 0;
    const double cutoff = cfg.rank_rel_tol * sv(0);
    int r = 0;
    while (r < sv.size() && sv(r) > cutoff) ++r;
    return r;
}

/** Orthonormal basis of the right null space of m at the configured
 *  tolerance: the trailing right-singular vectors past the numeric rank.
 */
std::vector<Eigen::VectorXd> kernel_basis(const Eigen::MatrixXd& m, const RandomizedConfig& cfg);

/** Best numeric rank over cfg.trials random instantiations of p.
 *  Unlucky draws only lose rank, so the maximum estimates the rank of
 *  almost every matrix carrying the pattern.
 */
int generic_rank_numeric(const StructurePattern& p, const RandomizedConfig& cfg);

/** Numeric counterpart of null_nodes: per trial, a random combination of
 *  the kernel basis votes for every coordinate above coord_tol * |x|_inf;
 *  nodes reported in a majority of trials are returned.
 */
std::vector<int> null_nodes_numeric(const StructureGraph& g, const RandomizedConfig& cfg);

/// Structured linear system A x = b: a pattern for A plus the set of rows
/// where b may be nonzero.
struct StructuredLinearSystem {
    StructurePattern a_pattern;
    std::vector<bool> b_pattern;  // length a_pattern.rows()
};

enum class Solvability { AlmostAlways, AlmostNever };

struct SolvabilityVerdict {
    Solvability verdict;
    int agreeing_trials;  // trials agreeing with the majority outcome
};

/** Majority vote over trials of the test rank(A) == rank([A b]).
 *  Structured solvability has zero-or-full measure, so the per-trial
 *  outcomes agree except for numerical accidents.
 */
SolvabilityVerdict classify_solvability(const StructuredLinearSystem& s, const RandomizedConfig& cfg);

}  // namespace strucnet
