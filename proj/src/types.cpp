#include "littlent/types.hpp"

#include <cmath>
#include <cstdlib>

namespace littlent {

int statevector_cap() {
  static const int cap = [] {
    if (const char* env = std::getenv("LITTLENT_CAP_QUBITS")) {
      char* end = nullptr;
      long v = std::strtol(env, &end, 10);
      if (end != env && *end == '\0' && v >= 1 && v <= 30) return int(v);
    }
    return 24;
  }();
  return cap;
}

double xlog2x(double x) {
  if (x <= 0.0) return 0.0;
  return x * std::log2(x);
}

double log2d(double x) { return std::log2(x); }

}  // namespace littlent
