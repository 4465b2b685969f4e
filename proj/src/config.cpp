#include "nil6/config.hpp"

namespace nil6 {

namespace {
double& tolerance_storage() {
  static double tol = 1e-9;
  return tol;
}
}  // namespace

double tolerance() { return tolerance_storage(); }

void set_tolerance(double tol) { tolerance_storage() = tol; }

} // namespace nil6
