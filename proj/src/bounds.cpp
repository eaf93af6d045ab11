#include "littlent/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace littlent {

BoundCheck BoundCheck::make(double lhs, double rhs, std::string context) {
  BoundCheck c;
  c.lhs = lhs;
  c.rhs = rhs;
  c.slack = rhs - lhs;
  c.pass = c.slack >= -kBoundSlackTol;
  c.context = std::move(context);
  return c;
}

double fannes_bound(double t, int d_dim) {
  if (d_dim < 2) throw std::invalid_argument("fannes_bound: need d >= 2");
  if (t < 0.0 || t > kFannesRegime + 1e-12)
    throw std::domain_error("fannes_bound: T must lie in [0, 1/(2e)]");
  if (t == 0.0) return 0.0;
  return 2.0 * t * std::log2(double(d_dim)) - 2.0 * t * std::log2(2.0 * t);
}

double entropy_bound(double eps, int size_a) {
  if (size_a < 1) throw std::invalid_argument("entropy_bound: need |A| >= 1");
  if (!(eps > 0.0) || eps > kFannesRegime + 1e-12)
    throw std::domain_error("entropy_bound: eps must lie in (0, 1/(2e)]");
  return 2.0 * eps * size_a - 2.0 * eps * std::log2(2.0 * eps);
}

TensorDistanceResult tensor_trace_distance(const StateVector& psi,
                                           const StateVector& phi, int k) {
  if (k < 1) throw std::invalid_argument("tensor_trace_distance: need k >= 1");
  double fid = std::norm(overlap(psi, phi));  // |<psi|phi>|^2
  double t = std::sqrt(std::max(0.0, 1.0 - fid));
  double t_k = std::sqrt(std::max(0.0, 1.0 - std::pow(fid, k)));
  TensorDistanceResult out;
  out.t_k = t_k;
  out.check = BoundCheck::make(t_k, 2.0 * k * t,
                               "T_k vs 2kT, k = " + std::to_string(k));
  return out;
}

PolynomialForm PolynomialForm::concurrence_form() {
  PolynomialForm f;
  f.k_ = 2;
  f.conjugated_ = false;
  f.op_ = Op::SymmetricProjectorProduct;
  f.a_norm_ = 1.0;
  return f;
}

PolynomialForm PolynomialForm::n_tangle_form() {
  PolynomialForm f;
  f.k_ = 1;
  f.conjugated_ = true;
  f.op_ = Op::YTensorPower;
  f.a_norm_ = 1.0;
  return f;
}

PolynomialForm PolynomialForm::explicit_form(int k, bool conjugated,
                                             Eigen::MatrixXcd a) {
  if (k < 1) throw std::invalid_argument("PolynomialForm: need k >= 1");
  PolynomialForm f;
  f.k_ = k;
  f.conjugated_ = conjugated;
  f.op_ = Op::Explicit;
  f.a_norm_ = operator_norm(a);
  f.a_ = std::move(a);
  return f;
}

cplx PolynomialForm::evaluate(const StateVector& psi) const {
  switch (op_) {
    case Op::SymmetricProjectorProduct:
      return symmetric_projector_overlap(psi);
    case Op::YTensorPower:
      return y_tensor_overlap(psi);
    case Op::Explicit: {
      const int nk = psi.num_qubits() * k_;
      if (nk > kDensityCap)
        throw cap_exceeded("PolynomialForm: n*k exceeds the doubled-space cap");
      Eigen::Index want = Eigen::Index(1) << nk;
      if (a_.rows() != want || a_.cols() != want)
        throw std::invalid_argument("PolynomialForm: operator dimension "
                                    "does not match n*k qubits");
      const std::int64_t dim = psi.dim();
      Eigen::VectorXcd tensor = Eigen::VectorXcd::Ones(1);
      for (int copy = 0; copy < k_; ++copy) {
        Eigen::VectorXcd next(tensor.size() * dim);
        for (Eigen::Index i = 0; i < tensor.size(); ++i)
          for (std::int64_t j = 0; j < dim; ++j)
            next(i * dim + j) = tensor(i) * psi.amplitudes()(j);
        tensor = std::move(next);
      }
      Eigen::VectorXcd rhs = conjugated_ ? tensor.conjugate() : tensor;
      return tensor.dot(a_ * rhs);
    }
  }
  return 0.0;
}

BoundCheck poly_continuity_check(const PolynomialForm& form,
                                 const StateVector& psi,
                                 const StateVector& phi) {
  double t = trace_distance_pure(psi, phi);
  double lhs = std::abs(form.evaluate(psi) - form.evaluate(phi));
  double factor = form.conjugated() ? 8.0 : 4.0;
  double rhs = factor * form.copies() * t * form.a_norm();
  return BoundCheck::make(
      lhs, rhs,
      std::string(form.conjugated() ? "g-form" : "f-form") +
          " continuity, k = " + std::to_string(form.copies()));
}

BoundCheck witness_norm_check(const Witness& w, const StateVector& psi,
                              double eps) {
  double dist = trace_distance_pure(psi, zero_state(psi.num_qubits()));
  if (dist > eps + 1e-9)
    throw std::domain_error(
        "witness_norm_check: state lies outside the eps-ball around |0>^n");
  double at_zero = witness_expectation(zero_state(psi.num_qubits()), w);
  if (at_zero < -1e-9)
    throw std::domain_error(
        "witness_norm_check: <0|W|0> is negative; not a witness for |0>^n");
  double lhs = -witness_expectation(psi, w);
  double rhs = 2.0 * eps * w.norm();
  return BoundCheck::make(lhs, rhs, "witness norm bound");
}

}  // namespace littlent
