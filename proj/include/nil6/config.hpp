#pragma once

namespace nil6 {

/// Relative tolerance shared by every rank / kernel / equality decision.
/// Defaults to 1e-9.
double tolerance();
void set_tolerance(double tol);

} // namespace nil6
