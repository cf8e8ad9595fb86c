#pragma once

#include <Eigen/Dense>

#include <random>
#include <stdexcept>
#include <string>

namespace natgrad {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using Index = Eigen::Index;
using Rng = std::mt19937_64;

/// Precondition or dimension-mismatch violation.
class ContractViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Numerical failure: factorization, eigensolver, or iterate breakdown.
class SolverFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// File or config parse failure; message names the offending location.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void require(bool cond, const std::string& what) {
  if (!cond) throw ContractViolation(what);
}

inline bool all_finite(const Vector& v) { return v.allFinite(); }
inline bool all_finite(const Matrix& m) { return m.allFinite(); }

/// A point theta on the parameter manifold. Entries are validated finite.
class ParamPoint {
 public:
  ParamPoint() = default;
  explicit ParamPoint(Vector coords) : coords_(std::move(coords)) {
    require(all_finite(coords_), "ParamPoint: non-finite coordinate");
  }

  const Vector& vec() const { return coords_; }
  Index dim() const { return coords_.size(); }

 private:
  Vector coords_;
};

/// An offset delta-theta in the tangent space at some ParamPoint.
/// Same coordinates as ParamPoint, distinct role: a candidate step.
class TangentVector {
 public:
  TangentVector() = default;
  explicit TangentVector(Vector coords) : coords_(std::move(coords)) {
    require(all_finite(coords_), "TangentVector: non-finite coordinate");
  }

  const Vector& vec() const { return coords_; }
  Index dim() const { return coords_.size(); }
  double norm() const { return coords_.norm(); }

 private:
  Vector coords_;
};

inline ParamPoint operator+(const ParamPoint& p, const TangentVector& d) {
  require(p.dim() == d.dim(), "ParamPoint + TangentVector: dimension mismatch");
  return ParamPoint(p.vec() + d.vec());
}

inline TangentVector operator*(double s, const TangentVector& d) {
  return TangentVector(s * d.vec());
}

inline TangentVector operator-(const TangentVector& d) {
  return TangentVector(-d.vec());
}

inline TangentVector operator+(const TangentVector& a, const TangentVector& b) {
  require(a.dim() == b.dim(), "TangentVector + TangentVector: dimension mismatch");
  return TangentVector(a.vec() + b.vec());
}

}  // namespace natgrad
