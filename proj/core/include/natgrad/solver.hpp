#pragma once

#include "natgrad/fisher.hpp"
#include "natgrad/metric.hpp"
#include "natgrad/model.hpp"
#include "natgrad/taylor.hpp"
#include "natgrad/types.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace natgrad {

using LinearOperator = std::function<Vector(const Vector&)>;

/// Conjugate-gradient run record. Residuals and search directions are kept
/// so the subspace behaviour of a run can be inspected afterwards; entry 0
/// of residuals/residual_norms is the initial residual b (the start is the
/// zero vector).
struct CgTrace {
  Vector solution;
  std::vector<double> residual_norms;
  std::vector<Vector> residuals;
  std::vector<Vector> search_directions;
  int iterations = 0;
  bool converged = false;
};

/// CG for a symmetric positive-definite operator, from the zero vector.
/// Converged means ||A x - b|| <= tol * ||b||. Exceeding max_iter yields an
/// unconverged trace; a non-finite iterate raises SolverFailure.
CgTrace conjugate_gradient(const LinearOperator& apply_a, const Vector& b,
                           double tol, int max_iter);

/// Steepest-descent step under the identity metric: -eta * grad.
TangentVector gd_step(const TangentVector& grad, double eta);

struct NgStepResult {
  TangentVector step;
  CgTrace trace;
};

/// Natural-gradient step: CG-solves metric * x = -grad and scales by eta.
/// An unconverged CG is flagged in the trace, not raised.
NgStepResult ng_step(const DampedMetric& metric, const TangentVector& grad,
                     double eta, double tol, int max_iter);

enum class Method { kGradientDescent, kNewton, kNaturalGradient };

std::string method_name(Method m);
Method parse_method(const std::string& name);  // "gd" | "newton" | "natural-gradient"

/// How the NG metric is produced each iteration: draws_per_obs = 0 uses the
/// exact Fisher, otherwise the Monte-Carlo estimate; epsilon_rel scales the
/// damping by the largest eigenvalue.
struct FisherConfig {
  int draws_per_obs = 0;
  double epsilon_rel = 1e-8;
  double rank_tol = 1e-10;
  std::uint64_t seed = 0;
  double cg_tol = 1e-10;
};

/// One optimizer run. All lists have the same length (iterations + 1,
/// fewer if truncated); entry 0 is the initial point with kl_step and
/// cg_iterations 0.
struct OptimizerRun {
  Method method = Method::kGradientDescent;
  double step_size = 0.0;
  std::vector<ParamPoint> iterates;
  std::vector<double> losses;
  std::vector<double> kl_steps;
  std::vector<int> cg_iterations;
  bool truncated = false;
  std::string diagnostic;
};

/// Runs gd / newton / natural-gradient on the mean NLL of (model, data).
/// Records the loss and the exact KL between consecutive predictive
/// distributions at every step; NG rebuilds the Fisher metric each
/// iteration per fisher_cfg. A non-finite loss truncates the run with a
/// diagnostic instead of raising.
OptimizerRun run_optimizer(const ModelSpec& model, const Dataset& data,
                           Method method, const ParamPoint& theta0, double eta,
                           int iterations, const FisherConfig& fisher_cfg,
                           double newton_lambda = 0.0);

/// Same loop on a bare objective (gd and newton only; no model means no
/// predictive KL, so kl_steps stay zero).
OptimizerRun run_optimizer_on(const Objective& obj, Method method,
                              const ParamPoint& theta0, double eta,
                              int iterations, double newton_lambda = 0.0);

struct SubspaceDiagnostics {
  std::vector<double> image_residual_norms;
  std::vector<double> kernel_residual_norms;
};

/// Splits every recorded CG residual into its components in the image and
/// kernel partitions of the metric the system was solved against.
SubspaceDiagnostics cg_subspace_diagnostics(const CgTrace& trace,
                                            const DampedMetric& metric);

}  // namespace natgrad
