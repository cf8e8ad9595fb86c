#pragma once

#include "natgrad/types.hpp"

#include <vector>

namespace natgrad {

enum class Family { kBinaryLogistic, kSoftmax };

/// A discriminative probabilistic model P_theta(h | o) over a finite set of
/// K hypotheses. Two families:
///   binary-logistic: d features, K = 2, param_dim D = d;
///                    P(1 | x) = sigmoid(theta . x).
///   softmax:         d features, K classes, full K-block parameters,
///                    D = d * K; block k holds the weights of class k.
/// The full-block softmax parameterization is deliberately redundant, so its
/// Fisher matrix is rank-deficient.
struct ModelSpec {
  Family family;
  int feature_dim;
  int class_count;
  int param_dim;

  static ModelSpec binary_logistic(int feature_dim);
  static ModelSpec softmax(int feature_dim, int class_count);
};

/// Observations paired with hypothesis labels; features is n x d, one row
/// per observation.
struct Dataset {
  Matrix features;
  std::vector<int> labels;

  Index size() const { return features.rows(); }
  Vector observation(Index i) const { return features.row(i).transpose(); }
};

/// log P_theta(h | o) for every h, computed in log space (log-sum-exp), so
/// the result is finite for any finite theta. Returns a length-K vector.
Vector class_log_probs(const ModelSpec& model, const ParamPoint& theta,
                       const Vector& o);

/// P_theta(h | o) for every h; exp of class_log_probs.
Vector class_probs(const ModelSpec& model, const ParamPoint& theta,
                   const Vector& o);

double log_prob(const ModelSpec& model, const ParamPoint& theta,
                const Vector& o, int h);

/// Gradient of log_prob w.r.t. theta. Its exact expectation over
/// h ~ P_theta(. | o) is the zero vector.
TangentVector score(const ModelSpec& model, const ParamPoint& theta,
                    const Vector& o, int h);

/// Analytic Hessian of log_prob w.r.t. theta; symmetric, and for both
/// families independent of the label h.
Matrix log_prob_hessian(const ModelSpec& model, const ParamPoint& theta,
                        const Vector& o, int h);

/// Draws h with probability P_theta(h | o) by inverse CDF over the class
/// probabilities. Deterministic for a given rng state.
int sample_h(const ModelSpec& model, const ParamPoint& theta, const Vector& o,
             Rng& rng);

/// F(theta) = mean negative log-likelihood over the dataset.
double nll_loss(const ModelSpec& model, const ParamPoint& theta,
                const Dataset& data);

/// Gradient of nll_loss: -(1/n) sum_i score(theta, o_i, h_i).
TangentVector nll_grad(const ModelSpec& model, const ParamPoint& theta,
                       const Dataset& data);

/// Hessian of nll_loss: -(1/n) sum_i log_prob_hessian(theta, o_i, h_i).
Matrix nll_hessian(const ModelSpec& model, const ParamPoint& theta,
                   const Dataset& data);

}  // namespace natgrad
