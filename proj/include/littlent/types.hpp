#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace littlent {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

// Largest n for which dense 2^n statevectors are allocated. Overridable via
// the LITTLENT_CAP_QUBITS environment variable.
int statevector_cap();

// Largest n for which 2^n x 2^n density operators are allocated.
inline constexpr int kDensityCap = 12;

// Raised when an operation would exceed a resource cap.
class cap_exceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// x * log2(x), with the 0*log(0) = 0 convention.
double xlog2x(double x);

double log2d(double x);

}  // namespace littlent
