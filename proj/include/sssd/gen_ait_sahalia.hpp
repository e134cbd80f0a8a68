#pragma once

#include "sssd/params.hpp"
#include "sssd/stage_flow.hpp"

namespace sssd {

/// Drift of the transformed (y = x^2) extended model:
///   a1 - a2 sqrt(y) - b1 y^{3/4} - b2 y^{5/4} - b3 sqrt(y) ln(1+y)
///   + a3 y - a4 y^{(r+1)/2} + sigma^2 y^rho.
double gen_ait_sahalia_y_drift(double y, const GenAitSahaliaParams& p);

/// Sum of the five split drift fragments at (state, frozen); equals
/// gen_ait_sahalia_y_drift on the diagonal frozen == state.
double gen_ait_sahalia_split_drift(double state, double frozen,
                                   const GenAitSahaliaParams& p);

/// Stage flows of the five-stage scheme, frozen arguments = y_n throughout:
///   1. (sqrt(y) - (b3/2) ln(1+z) delta)^2, inner root clamped at 0
///   2. y e^{-b2 z^{1/4} delta}
///   3. (y^{1/4} - b1 delta / 4)^4, inner root clamped at 0
///   4. the sqrt-affine growth flow with a := a3
///   5. the frozen exponential noise flow.
/// The clamps in 1 and 3 reproduce the absorbed exact flows of
/// y' = -b3 sqrt(y) ln(1+z) and y' = -b1 y^{3/4}, whose closed forms are only
/// valid until the root reaches 0. A stage whose coefficient is 0 is the
/// identity.
double gen_stage_sqrt_log_decay(double y_entry, double y_frozen, double b3,
                                double delta);
double gen_stage_quarter_power_decay(double y_entry, double y_frozen, double b2,
                                     double delta);
double gen_stage_three_quarter_decay(double y_entry, double b1, double delta);

/// One full step through the five stages. Requires y_n > 0 and a3 > 0 (the
/// stage-4 flow divides by a3). With b1 = b2 = b3 = 0 this equals
/// ait_sahalia_step with split parameter a3, operation for operation.
double gen_ait_sahalia_step(double y_n, const GenAitSahaliaParams& p, double delta,
                            double dw);

ComposedScheme make_gen_ait_sahalia_scheme(const GenAitSahaliaParams& p);

} // namespace sssd
