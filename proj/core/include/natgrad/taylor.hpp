#pragma once

#include "natgrad/model.hpp"
#include "natgrad/types.hpp"

#include <functional>

namespace natgrad {

/// A smooth objective given by callables. `hessian` may be left empty;
/// operations that need second derivatives then fall back to central
/// finite differences of the gradient.
struct Objective {
  std::function<double(const Vector&)> value;
  std::function<Vector(const Vector&)> gradient;
  std::function<Matrix(const Vector&)> hessian;
};

/// The mean-NLL objective of a model on a dataset, with analytic gradient
/// and Hessian.
Objective nll_objective(const ModelSpec& model, const Dataset& data);

enum class HessianMode { kAnalytic, kFiniteDifference };

/// Quadratic local model of an objective at an anchor point: value,
/// gradient, and curvature (Hessian) frozen at the anchor.
struct QuadraticModel {
  double base_value;
  TangentVector gradient;
  Matrix curvature;

  QuadraticModel(double base_value, TangentVector gradient, Matrix curvature);
};

/// The segment c(t) = anchor + t * offset, t in [0, 1].
struct LineSegmentCurve {
  ParamPoint anchor;
  TangentVector offset;

  LineSegmentCurve(ParamPoint anchor, TangentVector offset);
  ParamPoint at(double t) const;
};

/// Central-difference Hessian of the gradient, symmetrized exactly.
Matrix finite_difference_hessian(const Objective& obj, const Vector& x);

QuadraticModel build_quadratic(const Objective& obj, const ParamPoint& anchor,
                               HessianMode mode = HessianMode::kAnalytic);

/// base + <step, gradient> + 1/2 step^T curvature step.
double eval_quadratic(const QuadraticModel& q, const TangentVector& step);

/// First-order integral reconstruction along the segment anchor -> anchor +
/// step: F(anchor) + sum_i step_i * int_0^1 dF/dtheta_i(anchor + t step) dt,
/// by Gauss-Legendre quadrature. Equals F(anchor + step) up to quadrature
/// error.
double ftc_first_order(const Objective& obj, const ParamPoint& anchor,
                       const TangentVector& step, int quadrature_nodes);

/// Second-order iterated-integral reconstruction: the first-order term is
/// evaluated at the anchor and the curvature enters through the iterated
/// integral int_0^1 int_0^t step^T H(anchor + s step) step ds dt. Also
/// equals F(anchor + step) up to quadrature error.
double ftc_second_order(const Objective& obj, const ParamPoint& anchor,
                        const TangentVector& step, int quadrature_nodes);

/// Same as ftc_second_order but with the inner integrand frozen at the
/// anchor (s = 0). This is exactly the approximation that yields the
/// quadratic model: the result matches eval_quadratic of build_quadratic.
double ftc_second_order_frozen(const Objective& obj, const ParamPoint& anchor,
                               const TangentVector& step, int quadrature_nodes);

/// |F(anchor + step) - quadratic model at step|; decays cubically in the
/// step for smooth objectives.
double taylor_remainder(const Objective& obj, const ParamPoint& anchor,
                        const TangentVector& step);

/// argmin of the quadratic with curvature H + lambda I, i.e. the solution
/// of (H + lambda I) step = -gradient. Throws SolverFailure when the
/// regularized curvature is not positive definite.
TangentVector newton_step(const QuadraticModel& q, double lambda = 0.0);

}  // namespace natgrad
