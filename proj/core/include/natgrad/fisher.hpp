#pragma once

#include "natgrad/model.hpp"
#include "natgrad/taylor.hpp"
#include "natgrad/types.hpp"

#include <functional>

namespace natgrad {

/// Fisher information matrix of a model at a point, averaged over the
/// dataset's observations. Symmetric positive semi-definite.
struct FisherMatrix {
  enum class Kind { kExact, kMonteCarlo };

  Matrix matrix;
  Kind kind = Kind::kExact;
  long sample_count = 0;  // Monte-Carlo draws; 0 for exact
};

/// Expected score outer product with the expectation over hypotheses taken
/// by exact enumeration: (1/n) sum_i sum_h P(h|o_i) s_ih s_ih^T.
FisherMatrix exact_fisher(const ModelSpec& model, const ParamPoint& theta,
                          const Dataset& data);

/// Monte-Carlo estimate: hypotheses drawn from the model at each
/// observation (not the dataset labels). PSD by construction and
/// deterministic for a given rng state.
FisherMatrix mc_fisher(const ModelSpec& model, const ParamPoint& theta,
                       const Dataset& data, int draws_per_obs, Rng& rng);

/// (1/n) sum_i sum_h P(h|o_i) hessian(log P(h|o_i)). Equals the negative
/// of exact_fisher for regular models; the two are computed by independent
/// routes so the identity can be checked.
Matrix expected_hessian(const ModelSpec& model, const ParamPoint& theta,
                        const Dataset& data);

/// KL(P_theta || P_theta2) averaged over the dataset's observations, by
/// exact enumeration over hypotheses. Nonnegative.
double kl_exact(const ModelSpec& model, const ParamPoint& theta,
                const ParamPoint& theta2, const Dataset& data);

/// Quadratic KL approximation 1/2 step^T I step.
double kl_quadratic(const FisherMatrix& fisher, const TangentVector& step);

/// Length of a line segment under a matrix-valued metric field:
/// int_0^1 sqrt(offset^T M(c(t)) offset) dt by Gauss-Legendre quadrature.
double arc_length(const std::function<Matrix(const ParamPoint&)>& metric_field,
                  const LineSegmentCurve& curve, int quadrature_nodes = 16);

/// arc_length with the exact Fisher of (model, data) as the metric field.
double fisher_arc_length(const ModelSpec& model, const LineSegmentCurve& curve,
                         const Dataset& data, int quadrature_nodes = 16);

}  // namespace natgrad
