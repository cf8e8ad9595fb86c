#include "natgrad/model.hpp"

#include <cmath>

namespace natgrad {

namespace {

// log(1 + e^t) without overflow.
double softplus(double t) {
  if (t > 0.0) return t + std::log1p(std::exp(-t));
  return std::log1p(std::exp(t));
}

double sigmoid(double z) {
  if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

void check_inputs(const ModelSpec& model, const ParamPoint& theta,
                  const Vector& o) {
  require(theta.dim() == model.param_dim,
          "model: parameter dimension mismatch");
  require(o.size() == model.feature_dim, "model: feature dimension mismatch");
  require(all_finite(o), "model: non-finite observation");
}

void check_label(const ModelSpec& model, int h) {
  require(h >= 0 && h < model.class_count, "model: label out of range");
}

void check_dataset(const ModelSpec& model, const Dataset& data) {
  require(data.size() >= 1, "model: empty dataset");
  require(data.features.cols() == model.feature_dim,
          "model: dataset feature dimension mismatch");
  require(static_cast<Index>(data.labels.size()) == data.size(),
          "model: observation/label count mismatch");
}

// Per-class logits; for binary-logistic the two logits are (0, theta . x),
// which makes both families share the softmax code paths below.
Vector logits(const ModelSpec& model, const ParamPoint& theta,
              const Vector& o) {
  if (model.family == Family::kBinaryLogistic) {
    Vector z(2);
    z << 0.0, theta.vec().dot(o);
    return z;
  }
  const int d = model.feature_dim;
  Vector z(model.class_count);
  for (int k = 0; k < model.class_count; ++k)
    z(k) = theta.vec().segment(static_cast<Index>(k) * d, d).dot(o);
  return z;
}

}  // namespace

ModelSpec ModelSpec::binary_logistic(int feature_dim) {
  require(feature_dim >= 1, "binary_logistic: feature_dim must be >= 1");
  return ModelSpec{Family::kBinaryLogistic, feature_dim, 2, feature_dim};
}

ModelSpec ModelSpec::softmax(int feature_dim, int class_count) {
  require(feature_dim >= 1, "softmax: feature_dim must be >= 1");
  require(class_count >= 2, "softmax: class_count must be >= 2");
  return ModelSpec{Family::kSoftmax, feature_dim, class_count,
                   feature_dim * class_count};
}

Vector class_log_probs(const ModelSpec& model, const ParamPoint& theta,
                       const Vector& o) {
  check_inputs(model, theta, o);
  Vector z = logits(model, theta, o);
  const double zmax = z.maxCoeff();
  const double lse = zmax + std::log((z.array() - zmax).exp().sum());
  return z.array() - lse;
}

Vector class_probs(const ModelSpec& model, const ParamPoint& theta,
                   const Vector& o) {
  return class_log_probs(model, theta, o).array().exp();
}

double log_prob(const ModelSpec& model, const ParamPoint& theta,
                const Vector& o, int h) {
  check_label(model, h);
  if (model.family == Family::kBinaryLogistic) {
    check_inputs(model, theta, o);
    const double z = theta.vec().dot(o);
    // log sigma(z) = -softplus(-z), log (1 - sigma(z)) = -softplus(z)
    return h == 1 ? -softplus(-z) : -softplus(z);
  }
  return class_log_probs(model, theta, o)(h);
}

TangentVector score(const ModelSpec& model, const ParamPoint& theta,
                    const Vector& o, int h) {
  check_inputs(model, theta, o);
  check_label(model, h);
  if (model.family == Family::kBinaryLogistic) {
    const double p1 = sigmoid(theta.vec().dot(o));
    return TangentVector((static_cast<double>(h) - p1) * o);
  }
  const Vector p = class_probs(model, theta, o);
  const int d = model.feature_dim;
  Vector g(model.param_dim);
  for (int k = 0; k < model.class_count; ++k) {
    const double coeff = (k == h ? 1.0 : 0.0) - p(k);
    g.segment(static_cast<Index>(k) * d, d) = coeff * o;
  }
  return TangentVector(std::move(g));
}

Matrix log_prob_hessian(const ModelSpec& model, const ParamPoint& theta,
                        const Vector& o, int h) {
  check_inputs(model, theta, o);
  check_label(model, h);
  const Matrix xxT = o * o.transpose();
  if (model.family == Family::kBinaryLogistic) {
    const double p1 = sigmoid(theta.vec().dot(o));
    return -p1 * (1.0 - p1) * xxT;
  }
  const Vector p = class_probs(model, theta, o);
  const int d = model.feature_dim;
  const int K = model.class_count;
  Matrix hess(model.param_dim, model.param_dim);
  for (int k = 0; k < K; ++k) {
    for (int l = 0; l < K; ++l) {
      const double coeff = (k == l ? p(k) : 0.0) - p(k) * p(l);
      hess.block(static_cast<Index>(k) * d, static_cast<Index>(l) * d, d, d) =
          -coeff * xxT;
    }
  }
  return hess;
}

int sample_h(const ModelSpec& model, const ParamPoint& theta, const Vector& o,
             Rng& rng) {
  const Vector p = class_probs(model, theta, o);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const double u = unif(rng);
  double cdf = 0.0;
  for (int k = 0; k < model.class_count - 1; ++k) {
    cdf += p(k);
    if (u < cdf) return k;
  }
  return model.class_count - 1;
}

double nll_loss(const ModelSpec& model, const ParamPoint& theta,
                const Dataset& data) {
  check_dataset(model, data);
  double sum = 0.0;
  for (Index i = 0; i < data.size(); ++i)
    sum += log_prob(model, theta, data.observation(i), data.labels[i]);
  return -sum / static_cast<double>(data.size());
}

TangentVector nll_grad(const ModelSpec& model, const ParamPoint& theta,
                       const Dataset& data) {
  check_dataset(model, data);
  Vector g = Vector::Zero(model.param_dim);
  for (Index i = 0; i < data.size(); ++i)
    g += score(model, theta, data.observation(i), data.labels[i]).vec();
  return TangentVector(-g / static_cast<double>(data.size()));
}

Matrix nll_hessian(const ModelSpec& model, const ParamPoint& theta,
                   const Dataset& data) {
  check_dataset(model, data);
  Matrix hess = Matrix::Zero(model.param_dim, model.param_dim);
  for (Index i = 0; i < data.size(); ++i)
    hess += log_prob_hessian(model, theta, data.observation(i),
                             data.labels[i]);
  return -hess / static_cast<double>(data.size());
}

}  // namespace natgrad
