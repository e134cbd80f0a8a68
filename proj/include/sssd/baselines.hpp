#pragma once

#include "sssd/params.hpp"
#include "sssd/stage_flow.hpp"

namespace sssd {

/// Explicit Euler step in x coordinates with the full drift
///   x + (a1/x - a2 + a3 x - a4 x^r) delta + sigma x^rho dW.
/// No boundary handling: the result may leave (0, inf) or turn non-finite,
/// which is what this baseline is for. Requires x_n != 0 (the a1/x term).
double euler_maruyama_step(double x_n, const AitSahaliaParams& p, double delta,
                           double dw);

/// Drift-implicit baseline: returns the positive root z of
///   z = x + (a1/z - a2 + a3 z - a4 z^r) delta + sigma x^rho dW
/// found by bracketing on (0, 2^60] plus bisection refined by Newton to a
/// residual below 1e-12 (1 + |z|). Throws std::runtime_error when no sign
/// change exists on that range.
double drift_implicit_step(double x_n, const AitSahaliaParams& p, double delta,
                           double dw);

/// Single-stage wrappers. The Euler scheme has an unbounded state domain so
/// non-finite states flow through to the analysis layer.
ComposedScheme make_euler_maruyama_scheme(const AitSahaliaParams& p);
ComposedScheme make_drift_implicit_scheme(const AitSahaliaParams& p);

} // namespace sssd
