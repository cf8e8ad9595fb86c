#include "natgrad/taylor.hpp"

#include "natgrad/quadrature.hpp"

#include <cmath>
#include <limits>

namespace natgrad {

namespace {

void check_segment(const ParamPoint& anchor, const TangentVector& step) {
  require(anchor.dim() == step.dim(),
          "taylor: anchor/step dimension mismatch");
}

Matrix hessian_at(const Objective& obj, const Vector& x) {
  if (obj.hessian) return obj.hessian(x);
  return finite_difference_hessian(obj, x);
}

}  // namespace

Objective nll_objective(const ModelSpec& model, const Dataset& data) {
  Objective obj;
  obj.value = [model, data](const Vector& x) {
    return nll_loss(model, ParamPoint(x), data);
  };
  obj.gradient = [model, data](const Vector& x) {
    return nll_grad(model, ParamPoint(x), data).vec();
  };
  obj.hessian = [model, data](const Vector& x) {
    return nll_hessian(model, ParamPoint(x), data);
  };
  return obj;
}

QuadraticModel::QuadraticModel(double base_value_, TangentVector gradient_,
                               Matrix curvature_)
    : base_value(base_value_),
      gradient(std::move(gradient_)),
      curvature(std::move(curvature_)) {
  require(std::isfinite(base_value), "QuadraticModel: non-finite base value");
  require(curvature.rows() == curvature.cols() &&
              curvature.rows() == gradient.dim(),
          "QuadraticModel: gradient/curvature dimension mismatch");
  require(all_finite(curvature), "QuadraticModel: non-finite curvature");
  const double asym =
      (curvature - curvature.transpose()).cwiseAbs().maxCoeff();
  require(asym <= 1e-10, "QuadraticModel: curvature not symmetric");
}

LineSegmentCurve::LineSegmentCurve(ParamPoint anchor_, TangentVector offset_)
    : anchor(std::move(anchor_)), offset(std::move(offset_)) {
  require(anchor.dim() == offset.dim(),
          "LineSegmentCurve: anchor/offset dimension mismatch");
}

ParamPoint LineSegmentCurve::at(double t) const {
  return ParamPoint(anchor.vec() + t * offset.vec());
}

Matrix finite_difference_hessian(const Objective& obj, const Vector& x) {
  require(static_cast<bool>(obj.gradient),
          "finite_difference_hessian: objective has no gradient");
  const Index d = x.size();
  // h ~ eps^(1/3) balances truncation against round-off for central
  // differences.
  const double base_h = std::cbrt(std::numeric_limits<double>::epsilon());
  Matrix hess(d, d);
  Vector xp = x, xm = x;
  for (Index i = 0; i < d; ++i) {
    const double h = base_h * std::max(1.0, std::abs(x(i)));
    xp(i) = x(i) + h;
    xm(i) = x(i) - h;
    hess.col(i) = (obj.gradient(xp) - obj.gradient(xm)) / (2.0 * h);
    xp(i) = x(i);
    xm(i) = x(i);
  }
  // Downstream factorizations rely on exact symmetry.
  return (hess + hess.transpose()) / 2.0;
}

QuadraticModel build_quadratic(const Objective& obj, const ParamPoint& anchor,
                               HessianMode mode) {
  const double f0 = obj.value(anchor.vec());
  Vector g = obj.gradient(anchor.vec());
  require(std::isfinite(f0), "build_quadratic: non-finite objective value");
  require(all_finite(g), "build_quadratic: non-finite gradient");
  Matrix hess;
  if (mode == HessianMode::kAnalytic) {
    require(static_cast<bool>(obj.hessian),
            "build_quadratic: analytic mode needs an objective Hessian");
    hess = obj.hessian(anchor.vec());
    hess = (hess + hess.transpose().eval()) / 2.0;
  } else {
    hess = finite_difference_hessian(obj, anchor.vec());
  }
  return QuadraticModel(f0, TangentVector(std::move(g)), std::move(hess));
}

double eval_quadratic(const QuadraticModel& q, const TangentVector& step) {
  require(step.dim() == q.gradient.dim(),
          "eval_quadratic: step dimension mismatch");
  const Vector& s = step.vec();
  return q.base_value + s.dot(q.gradient.vec()) +
         0.5 * s.dot(q.curvature * s);
}

double ftc_first_order(const Objective& obj, const ParamPoint& anchor,
                       const TangentVector& step, int quadrature_nodes) {
  check_segment(anchor, step);
  const QuadratureRule rule = gauss_legendre_01(quadrature_nodes);
  // int_0^1 step . grad F(anchor + t step) dt, one gradient per node.
  double integral = 0.0;
  for (int a = 0; a < quadrature_nodes; ++a) {
    const Vector g = obj.gradient(anchor.vec() + rule.nodes(a) * step.vec());
    require(all_finite(g), "ftc_first_order: non-finite integrand sample");
    integral += rule.weights(a) * step.vec().dot(g);
  }
  return obj.value(anchor.vec()) + integral;
}

double ftc_second_order(const Objective& obj, const ParamPoint& anchor,
                        const TangentVector& step, int quadrature_nodes) {
  check_segment(anchor, step);
  const QuadratureRule rule = gauss_legendre_01(quadrature_nodes);
  // Outer integral over t in [0,1]; inner over s in [0,t], realized by
  // scaling the [0,1] rule to [0,t].
  double outer = 0.0;
  for (int a = 0; a < quadrature_nodes; ++a) {
    const double t = rule.nodes(a);
    double inner = 0.0;
    for (int b = 0; b < quadrature_nodes; ++b) {
      const double s = t * rule.nodes(b);
      const Matrix hess = hessian_at(obj, anchor.vec() + s * step.vec());
      require(all_finite(hess),
              "ftc_second_order: non-finite integrand sample");
      inner += rule.weights(b) * step.vec().dot(hess * step.vec());
    }
    outer += rule.weights(a) * t * inner;
  }
  return obj.value(anchor.vec()) +
         step.vec().dot(obj.gradient(anchor.vec())) + outer;
}

double ftc_second_order_frozen(const Objective& obj, const ParamPoint& anchor,
                               const TangentVector& step,
                               int quadrature_nodes) {
  check_segment(anchor, step);
  const QuadratureRule rule = gauss_legendre_01(quadrature_nodes);
  const Matrix hess = hessian_at(obj, anchor.vec());
  require(all_finite(hess),
          "ftc_second_order_frozen: non-finite Hessian at anchor");
  const double quad_form = step.vec().dot(hess * step.vec());
  double outer = 0.0;
  for (int a = 0; a < quadrature_nodes; ++a) {
    const double t = rule.nodes(a);
    outer += rule.weights(a) * t * rule.weights.sum() * quad_form;
  }
  return obj.value(anchor.vec()) +
         step.vec().dot(obj.gradient(anchor.vec())) + outer;
}

double taylor_remainder(const Objective& obj, const ParamPoint& anchor,
                        const TangentVector& step) {
  check_segment(anchor, step);
  const QuadraticModel q = build_quadratic(obj, anchor);
  return std::abs(obj.value(anchor.vec() + step.vec()) -
                  eval_quadratic(q, step));
}

TangentVector newton_step(const QuadraticModel& q, double lambda) {
  require(lambda >= 0.0, "newton_step: regularizer must be >= 0");
  const Index d = q.gradient.dim();
  Matrix a = q.curvature;
  a.diagonal().array() += lambda;
  Eigen::LLT<Matrix> llt(a);
  if (llt.info() != Eigen::Success)
    throw SolverFailure(
        "newton_step: curvature is not positive definite; raise the "
        "regularizer lambda");
  Vector step = llt.solve(-q.gradient.vec());
  if (!all_finite(step))
    throw SolverFailure("newton_step: non-finite solution");
  require(step.size() == d, "newton_step: internal dimension error");
  return TangentVector(std::move(step));
}

}  // namespace natgrad
