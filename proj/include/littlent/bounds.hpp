#pragma once

#include <Eigen/Dense>
#include <string>

#include "littlent/measures.hpp"
#include "littlent/state.hpp"

namespace littlent {

// One inequality instance: pass iff slack = rhs - lhs >= -1e-9.
struct BoundCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  bool pass = false;
  std::string context;

  static BoundCheck make(double lhs, double rhs, std::string context);
};

inline constexpr double kBoundSlackTol = 1e-9;
inline constexpr double kFannesRegime = 0.18393972058572117;  // 1/(2e)

// 2T log2(d) - 2T log2(2T) for 0 <= T <= 1/(2e); 0 at T = 0.
// Out-of-regime T raises std::domain_error.
double fannes_bound(double t, int d_dim);

// 2 eps |A| - 2 eps log2(2 eps) for 0 < eps <= 1/(2e).
double entropy_bound(double eps, int size_a);

struct TensorDistanceResult {
  double t_k;        // sqrt(1 - |<psi|phi>|^(2k))
  BoundCheck check;  // t_k <= 2 k T
};

TensorDistanceResult tensor_trace_distance(const StateVector& psi,
                                           const StateVector& phi, int k);

// A degree-k polynomial form <psi|^k A |psi>^k (f) or <psi|^k A |psi*>^k (g),
// with A either explicit or one of the symbolic operators whose norm is 1.
class PolynomialForm {
 public:
  enum class Op { Explicit, SymmetricProjectorProduct, YTensorPower };

  static PolynomialForm concurrence_form();  // f, k = 2, norm 1
  static PolynomialForm n_tangle_form();     // g, k = 1, norm 1
  static PolynomialForm explicit_form(int k, bool conjugated,
                                      Eigen::MatrixXcd a);

  int copies() const { return k_; }
  bool conjugated() const { return conjugated_; }
  Op op() const { return op_; }
  double a_norm() const { return a_norm_; }
  const Eigen::MatrixXcd& a_matrix() const { return a_; }

  cplx evaluate(const StateVector& psi) const;

 private:
  PolynomialForm() = default;
  int k_ = 1;
  bool conjugated_ = false;
  Op op_ = Op::Explicit;
  Eigen::MatrixXcd a_;
  double a_norm_ = 1.0;
};

// |f(psi) - f(phi)| <= 4kT||A|| for f-forms, 8kT||A|| for g-forms.
BoundCheck poly_continuity_check(const PolynomialForm& form,
                                 const StateVector& psi,
                                 const StateVector& phi);

// -<psi|W|psi> <= 2 eps ||W|| for T(psi, |0>^n) <= eps and <0|W|0> >= 0.
// Precondition violations raise std::domain_error.
BoundCheck witness_norm_check(const Witness& w, const StateVector& psi,
                              double eps);

}  // namespace littlent
