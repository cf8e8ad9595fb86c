#include "natgrad/fisher.hpp"

#include "natgrad/quadrature.hpp"

#include <cmath>

namespace natgrad {

namespace {

void check_dataset(const ModelSpec& model, const Dataset& data) {
  require(data.size() >= 1, "fisher: empty dataset");
  require(data.features.cols() == model.feature_dim,
          "fisher: dataset feature dimension mismatch");
}

}  // namespace

FisherMatrix exact_fisher(const ModelSpec& model, const ParamPoint& theta,
                          const Dataset& data) {
  check_dataset(model, data);
  const Index d = model.param_dim;
  Matrix acc = Matrix::Zero(d, d);
  for (Index i = 0; i < data.size(); ++i) {
    const Vector o = data.observation(i);
    const Vector p = class_probs(model, theta, o);
    for (int h = 0; h < model.class_count; ++h) {
      if (p(h) == 0.0) continue;
      const Vector s = score(model, theta, o, h).vec();
      acc.noalias() += p(h) * (s * s.transpose());
    }
  }
  return FisherMatrix{acc / static_cast<double>(data.size()),
                      FisherMatrix::Kind::kExact, 0};
}

FisherMatrix mc_fisher(const ModelSpec& model, const ParamPoint& theta,
                       const Dataset& data, int draws_per_obs, Rng& rng) {
  check_dataset(model, data);
  require(draws_per_obs >= 1, "mc_fisher: draws_per_obs must be >= 1");
  const Index d = model.param_dim;
  Matrix acc = Matrix::Zero(d, d);
  for (Index i = 0; i < data.size(); ++i) {
    const Vector o = data.observation(i);
    for (int k = 0; k < draws_per_obs; ++k) {
      const int h = sample_h(model, theta, o, rng);
      const Vector s = score(model, theta, o, h).vec();
      acc.noalias() += s * s.transpose();
    }
  }
  const long total = static_cast<long>(data.size()) * draws_per_obs;
  return FisherMatrix{acc / static_cast<double>(total),
                      FisherMatrix::Kind::kMonteCarlo, total};
}

Matrix expected_hessian(const ModelSpec& model, const ParamPoint& theta,
                        const Dataset& data) {
  check_dataset(model, data);
  const Index d = model.param_dim;
  Matrix acc = Matrix::Zero(d, d);
  for (Index i = 0; i < data.size(); ++i) {
    const Vector o = data.observation(i);
    const Vector p = class_probs(model, theta, o);
    for (int h = 0; h < model.class_count; ++h) {
      if (p(h) == 0.0) continue;
      acc += p(h) * log_prob_hessian(model, theta, o, h);
    }
  }
  return acc / static_cast<double>(data.size());
}

double kl_exact(const ModelSpec& model, const ParamPoint& theta,
                const ParamPoint& theta2, const Dataset& data) {
  check_dataset(model, data);
  require(theta.dim() == theta2.dim(), "kl_exact: parameter dim mismatch");
  double total = 0.0;
  for (Index i = 0; i < data.size(); ++i) {
    const Vector o = data.observation(i);
    const Vector lp = class_log_probs(model, theta, o);
    const Vector lq = class_log_probs(model, theta2, o);
    double kl_i = 0.0;
    for (int h = 0; h < model.class_count; ++h) {
      const double p = std::exp(lp(h));
      if (p == 0.0) continue;
      kl_i += p * (lp(h) - lq(h));
    }
    // Gibbs: each per-observation divergence is >= 0; drop round-off noise.
    total += std::max(kl_i, 0.0);
  }
  return total / static_cast<double>(data.size());
}

double kl_quadratic(const FisherMatrix& fisher, const TangentVector& step) {
  require(fisher.matrix.rows() == step.dim(),
          "kl_quadratic: dimension mismatch");
  return 0.5 * step.vec().dot(fisher.matrix * step.vec());
}

double arc_length(const std::function<Matrix(const ParamPoint&)>& metric_field,
                  const LineSegmentCurve& curve, int quadrature_nodes) {
  require(curve.offset.norm() > 0.0, "arc_length: degenerate curve");
  const QuadratureRule rule = gauss_legendre_01(quadrature_nodes);
  double total = 0.0;
  for (int a = 0; a < quadrature_nodes; ++a) {
    const Matrix metric = metric_field(curve.at(rule.nodes(a)));
    const double quad_form = curve.offset.vec().dot(metric * curve.offset.vec());
    require(std::isfinite(quad_form), "arc_length: non-finite metric sample");
    total += rule.weights(a) * std::sqrt(std::max(quad_form, 0.0));
  }
  return total;
}

double fisher_arc_length(const ModelSpec& model, const LineSegmentCurve& curve,
                         const Dataset& data, int quadrature_nodes) {
  return arc_length(
      [&](const ParamPoint& p) { return exact_fisher(model, p, data).matrix; },
      curve, quadrature_nodes);
}

}  // namespace natgrad
