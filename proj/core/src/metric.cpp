#include "natgrad/metric.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace natgrad {

SpectralDecomposition spectral_decompose(const Matrix& a, double rank_tol) {
  require(a.rows() == a.cols(), "spectral_decompose: matrix must be square");
  require(all_finite(a), "spectral_decompose: non-finite entries");
  require(rank_tol >= 0.0, "spectral_decompose: rank_tol must be >= 0");
  const double asym = (a - a.transpose()).cwiseAbs().maxCoeff();
  require(asym <= 1e-8, "spectral_decompose: matrix not symmetric");

  const Matrix sym = (a + a.transpose()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Matrix> solver(sym);
  if (solver.info() != Eigen::Success)
    throw SolverFailure("spectral_decompose: eigensolver did not converge");

  const Index d = a.rows();
  const Vector vals = solver.eigenvalues();  // ascending
  const double lambda_max = std::max(vals.maxCoeff(), 0.0);
  const double threshold = rank_tol * lambda_max;

  // Image columns (eigenvalue strictly above the threshold) first, then the
  // kernel partition, each in descending eigenvalue order.
  std::vector<Index> order(static_cast<std::size_t>(d));
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Index i, Index j) {
    const bool img_i = vals(i) > threshold;
    const bool img_j = vals(j) > threshold;
    if (img_i != img_j) return img_i;
    return vals(i) > vals(j);
  });

  SpectralDecomposition dec;
  dec.eigvecs.resize(d, d);
  dec.eigvals.resize(d);
  dec.rank = 0;
  for (Index c = 0; c < d; ++c) {
    const Index src = order[static_cast<std::size_t>(c)];
    Vector col = solver.eigenvectors().col(src);
    for (Index r = 0; r < d; ++r) {
      if (std::abs(col(r)) > 1e-12) {
        if (col(r) < 0.0) col = -col;
        break;
      }
    }
    dec.eigvecs.col(c) = col;
    dec.eigvals(c) = vals(src);
    if (vals(src) > threshold) ++dec.rank;
  }
  return dec;
}

DampedMetric::DampedMetric(SpectralDecomposition dec, double epsilon)
    : dec_(std::move(dec)), epsilon_(epsilon) {
  require(epsilon_ > 0.0, "DampedMetric: epsilon must be > 0");
  damped_ = dec_.eigvals;
  for (Index i = dec_.rank; i < dec_.dim(); ++i) damped_(i) = epsilon_;
}

Vector DampedMetric::apply(const Vector& v) const {
  require(v.size() == dim(), "DampedMetric::apply: dimension mismatch");
  Vector w = dec_.eigvecs.transpose() * v;
  w.array() *= damped_.array();
  return dec_.eigvecs * w;
}

Vector DampedMetric::apply_inverse(const Vector& v) const {
  require(v.size() == dim(), "DampedMetric::apply_inverse: dimension mismatch");
  Vector w = dec_.eigvecs.transpose() * v;
  w.array() /= damped_.array();
  return dec_.eigvecs * w;
}

Vector DampedMetric::project_image(const Vector& v) const {
  require(v.size() == dim(), "DampedMetric::project_image: dimension mismatch");
  const auto img = dec_.eigvecs.leftCols(dec_.rank);
  return img * (img.transpose() * v);
}

Vector DampedMetric::project_kernel(const Vector& v) const {
  require(v.size() == dim(),
          "DampedMetric::project_kernel: dimension mismatch");
  const auto ker = dec_.eigvecs.rightCols(dim() - dec_.rank);
  return ker * (ker.transpose() * v);
}

Matrix DampedMetric::dense() const {
  return dec_.eigvecs * damped_.asDiagonal() * dec_.eigvecs.transpose();
}

DampedMetric damp(SpectralDecomposition dec, double epsilon) {
  return DampedMetric(std::move(dec), epsilon);
}

double damping_epsilon(const SpectralDecomposition& dec, double rel) {
  require(rel > 0.0, "damping_epsilon: relative factor must be > 0");
  if (dec.dim() == 0 || dec.rank == 0) return rel;
  const double lambda_max = dec.eigvals(0);
  return lambda_max > 0.0 ? rel * lambda_max : rel;
}

TangentVector metric_matvec(const DampedMetric& metric,
                            const TangentVector& v) {
  return TangentVector(metric.apply(v.vec()));
}

TangentVector project_image(const DampedMetric& metric,
                            const TangentVector& v) {
  return TangentVector(metric.project_image(v.vec()));
}

TangentVector project_kernel(const DampedMetric& metric,
                             const TangentVector& v) {
  return TangentVector(metric.project_kernel(v.vec()));
}

}  // namespace natgrad
