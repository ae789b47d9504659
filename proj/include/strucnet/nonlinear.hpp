#pragma once

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "strucnet/graph.hpp"
#include "strucnet/randomized.hpp"

namespace strucnet {

/// One dependency term inside equation `row`:
/// a * x_col + b * tanh(x_col) + d * x_col^2.
struct EdgeTerm {
    int row = 0;
    int col = 0;
    double a = 0.0;
    double b = 0.0;
    double d = 0.0;
};

/** Smooth map F : R^n -> R^n whose Jacobian carries pattern_of(graph).
 *
 *  F_i(x) = c_i + sum of the terms with row == i. Terms may sit only at
 *  allowed pattern positions, at most one per position.
 */
class StructuredFunction {
public:
    StructuredFunction(StructureGraph graph, std::vector<EdgeTerm> terms, Eigen::VectorXd constants);

    const StructureGraph& graph() const { return graph_; }
    const std::vector<EdgeTerm>& terms() const { return terms_; }
    const Eigen::VectorXd& constants() const { return constants_; }

private:
    StructureGraph graph_;
    std::vector<EdgeTerm> terms_;  // sorted by (row, col)
    Eigen::VectorXd constants_;
};

/// F(x). Throws std::invalid_argument on non-finite input.
Eigen::VectorXd evaluate(const StructuredFunction& f, const Eigen::VectorXd& x);

/// Analytic Jacobian DF(x); entry (i, j) is a + b * sech^2(x_j) + 2 d x_j.
Eigen::MatrixXd jacobian(const StructuredFunction& f, const Eigen::VectorXd& x);

/** Random member of the family: one term per allowed position plus one
 *  constant per equation, coefficients from cfg's entry band (re-drawn in
 *  the measure-zero case that a term comes out all zero). Deterministic
 *  per cfg.seed.
 */
StructuredFunction sample_function(const StructureGraph& g, const RandomizedConfig& cfg);

/// Uniform point of [-2, 2]^n, the sampling box for nonlinear checks.
Eigen::VectorXd random_point(int n, DrawStream& stream);

struct SweepResult {
    int min_rank = 0;
    int max_rank = 0;
};

/// Numeric rank of DF over `points` random points of the box. The maximum
/// never exceeds structural_rank(f.graph()).
SweepResult jacobian_rank_sweep(const StructuredFunction& f, int points, const RandomizedConfig& cfg);

struct NewtonResult {
    Eigen::VectorXd x;
    bool converged = false;   // final residual at or below the target
    int iterations = 0;
    double residual = 0.0;    // |F(x) - target|_inf at exit
};

inline constexpr double kNewtonResidualTol = 1e-10;
inline constexpr double kNewtonStepTol = 1e-14;
inline constexpr int kNewtonMaxIterations = 100;
inline constexpr int kNewtonMaxHalvings = 30;

/** Solves F(X) = F(x0) by damped Newton from x0 plus a small random
 *  offset (uniform per coordinate in [-offset_scale, offset_scale]).
 *  Stops on residual <= 1e-10, step <= 1e-14 or 100 iterations; failure
 *  to converge is reported in the result, not thrown. offset_scale 0
 *  returns x0 itself.
 */
NewtonResult solve_from_anchor(const StructuredFunction& f, const Eigen::VectorXd& x0,
                               const RandomizedConfig& cfg, double offset_scale = 1e-2);

enum class ProbeVerdict { RobustObserved, FragileObserved, Inconclusive };

struct RobustnessProbeResult {
    ProbeVerdict verdict = ProbeVerdict::Inconclusive;
    Eigen::VectorXd base_solution;
    std::optional<Eigen::VectorXd> perturbed_solution;  // present iff RobustObserved
    double perturbation_size = 0.0;
    double displacement = 0.0;  // |x* - x0| of the best iterate reached
    double residual = 0.0;      // |F*(x) - F(x0)|_inf at that iterate
};

/** Empirical robustness of the anchored solution x0 of F(X) = F(x0).
 *
 *  Every coefficient of f is shifted by an independent uniform draw from
 *  [-delta, delta]. On a coverable graph, Newton restarts from x0 on the
 *  perturbed system; RobustObserved requires convergence with
 *  displacement <= 100 * delta * (1 + |x0|). On a deficient graph the
 *  perturbed image generically misses F(x0), so the residual is instead
 *  minimized by damped Gauss-Newton from five starts; FragileObserved
 *  requires the best residual to stay above the fragile floor.
 *  Numerical failure yields Inconclusive, never an exception.
 */
RobustnessProbeResult probe_robustness(const StructuredFunction& f, const Eigen::VectorXd& x0,
                                       double delta, const RandomizedConfig& cfg);

/// Residual below which a deficient system would count as solved anyway.
double fragile_residual_floor(double delta);

/// size - numeric rank of DF(x0): the local solution-manifold dimension
/// of F(X) = F(x0) when the rank is attained generically.
int manifold_dimension_at(const StructuredFunction& f, const Eigen::VectorXd& x0,
                          const RandomizedConfig& cfg);

}  // namespace strucnet
