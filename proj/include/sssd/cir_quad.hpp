#pragma once

#include "sssd/params.hpp"
#include "sssd/stage_flow.hpp"

namespace sssd {

/// Drift k(l - x) - d x^2 of the quadratic mean-reverting model.
double cir_quad_drift(double x, const CirQuadParams& p);

/// Split fragments at (state, frozen): f1 = -k x - d x z (the linearized
/// decay, quadratic term frozen) and f2 = k l. Diagonal-consistent with
/// cir_quad_drift.
double cir_quad_split_drift(double state, double frozen, const CirQuadParams& p);

/// Stage 1: exact flow of y' = -(k + d z) y, i.e. y e^{-(k + d z) delta}.
double cir_quad_stage1(double y_entry, double y_frozen, const CirQuadParams& p,
                       double delta);

/// Stage 2: square-root noise step
///   (sqrt(y + (k l - sigma^2/4) delta) + (sigma/2) dW)^2
/// with the radicand clamped at 0. Nonnegative for every dW; requires
/// k l >= sigma^2/4, enforced at validation.
double cir_quad_stage2(double y_entry, const CirQuadParams& p, double delta,
                       double dw);

/// One full step: stage 2 applied to the stage 1 endpoint. Requires y_n > 0.
double cir_quad_step(double y_n, const CirQuadParams& p, double delta, double dw);

ComposedScheme make_cir_quad_scheme(const CirQuadParams& p);

} // namespace sssd
