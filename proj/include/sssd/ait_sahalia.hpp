#pragma once

#include "sssd/params.hpp"
#include "sssd/stage_flow.hpp"

namespace sssd {

/// y = x^2 change of variables that turns the Ait-Sahalia model into
///   dy = (a1 - a2 sqrt(y) + a3 y - a4 y^{(r+1)/2} + sigma^2 y^rho) dt
///        + 2 sigma y^{(rho+1)/2} dW.
/// Forward requires x > 0, inverse requires y >= 0.
double transform_to_y(double x0);
double to_x(double y);

/// Drift of the transformed SDE at state y.
double ait_sahalia_y_drift(double y, const AitSahaliaParams& p);

/// Sum of the scheme's split drift fragments evaluated at (state, frozen):
///   f1(x)    = a x - a2 sqrt(x)
///   f2(x, z) = a1 + x (a3 - a + sigma^2 z^{rho-1} - a4 z^{(r-1)/2}).
/// On the diagonal frozen == state this reproduces ait_sahalia_y_drift, which
/// is the consistency condition the split construction rests on.
double ait_sahalia_split_drift(double state, double frozen,
                               const AitSahaliaParams& p, const SplitConfig& cfg);

/// Exact flow over `delta` of the fragment y' = a y - a2 sqrt(y):
///   (a2/a + (sqrt(y) - a2/a) e^{a delta / 2})^2.
/// Nonnegative for every y_entry >= 0. This is the branch that continues
/// through the square-root root; see ait_sahalia_growth_stage_absorbed for
/// the branch that stays at 0.
double ait_sahalia_stage1(double y_entry, double a, double a2, double delta);

/// Noise stage: exact solution of the linear SDE with coefficients frozen at
/// y_frozen, with the a1 contribution added up front:
///   (a1 delta + y_entry) exp(-delta (sigma^2 z^{rho-1} + a4 z^{(r-1)/2})
///                            + 2 sigma z^{(rho-1)/2} dW),  z = y_frozen.
/// Strictly positive whenever a1 > 0 or y_entry > 0. The (a3 - a) y drift of
/// the f2 fragment is not carried by this flow; the one-step map therefore
/// advances the linear drift term with coefficient a rather than a3, which is
/// exact precisely when a == a3.
double ait_sahalia_stage2(double y_entry, double y_frozen,
                          const AitSahaliaParams& p, double delta, double dw);

/// One full step in y coordinates: stage 2 applied to the stage 1 endpoint,
/// both frozen at y_n. Identical floating-point operations to calling the
/// stages directly. Requires y_n > 0; keep delta < 1 when cfg.a is the
/// default ln(4/3).
double ait_sahalia_step(double y_n, const AitSahaliaParams& p,
                        const SplitConfig& cfg, double delta, double dw);

/// Stage-flow wrappers for composing through the framework. The growth stage
/// has two solution branches; the scheme uses the first.
StageFlow ait_sahalia_growth_stage(double a, double a2);
StageFlow ait_sahalia_growth_stage_absorbed(double a, double a2);
StageFlow ait_sahalia_noise_stage(const AitSahaliaParams& p);

/// Two-stage scheme on y with initial state x0^2 and state domain [0, inf).
/// When cfg.a is exactly the default ln(4/3), the scheme carries the
/// delta < 1 ceiling for the experiment layer to enforce.
ComposedScheme make_ait_sahalia_scheme(const AitSahaliaParams& p,
                                       const SplitConfig& cfg = SplitConfig{});

} // namespace sssd
