#pragma once

#include "natgrad/types.hpp"

namespace natgrad {

/// Eigendecomposition of a symmetric PSD matrix with the columns of V
/// re-arranged so the eigenvectors of the nonzero eigenvalues come first.
/// Eigenvalues are descending within each partition; eigenvector signs are
/// canonicalized (first nonzero component positive) so decompositions are
/// reproducible.
struct SpectralDecomposition {
  Matrix eigvecs;  // orthogonal, image columns [0, rank), kernel after
  Vector eigvals;
  Index rank = 0;  // m: eigenvalues above the rank threshold

  Index dim() const { return eigvals.size(); }
};

/// rank_tol is relative: eigenvalues above rank_tol * lambda_max count
/// toward the rank; ties at the threshold count as zero.
SpectralDecomposition spectral_decompose(const Matrix& a,
                                         double rank_tol = 1e-10);

/// The damped metric: keeps the nonzero eigenpairs of the decomposed
/// matrix and assigns epsilon to the kernel directions, which makes the
/// represented matrix V diag(lambda_1..lambda_m, eps..eps) V^T positive
/// definite. Applications never materialize the dense matrix.
class DampedMetric {
 public:
  DampedMetric(SpectralDecomposition dec, double epsilon);

  Index dim() const { return dec_.dim(); }
  Index rank() const { return dec_.rank; }
  double epsilon() const { return epsilon_; }
  const SpectralDecomposition& decomposition() const { return dec_; }

  /// Damped eigenvalues (lambda_1..lambda_m, eps..eps) in column order.
  const Vector& damped_eigvals() const { return damped_; }

  Vector apply(const Vector& v) const;
  Vector apply_inverse(const Vector& v) const;
  Vector project_image(const Vector& v) const;
  Vector project_kernel(const Vector& v) const;
  Matrix dense() const;

 private:
  SpectralDecomposition dec_;
  double epsilon_;
  Vector damped_;
};

DampedMetric damp(SpectralDecomposition dec, double epsilon);

/// Resolves a relative damping factor to an absolute epsilon:
/// rel * lambda_max, falling back to rel itself when the matrix is zero.
double damping_epsilon(const SpectralDecomposition& dec, double rel);

TangentVector metric_matvec(const DampedMetric& metric,
                            const TangentVector& v);
TangentVector project_image(const DampedMetric& metric,
                            const TangentVector& v);
TangentVector project_kernel(const DampedMetric& metric,
                             const TangentVector& v);

}  // namespace natgrad
