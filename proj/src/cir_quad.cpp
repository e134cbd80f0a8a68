#include "sssd/cir_quad.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace sssd {

double cir_quad_drift(double x, const CirQuadParams& p) {
    return p.k * (p.l - x) - p.d * x * x;
}

double cir_quad_split_drift(double state, double frozen, const CirQuadParams& p) {
    const double f1 = -p.k * state - p.d * state * frozen;
    const double f2 = p.k * p.l;
    return f1 + f2;
}

double cir_quad_stage1(double y_entry, double y_frozen, const CirQuadParams& p,
                       double delta) {
    if (!(y_entry >= 0.0)) {
        throw std::domain_error("cir_quad_stage1: y must be >= 0");
    }
    return y_entry * std::exp(-(p.k + p.d * y_frozen) * delta);
}

double cir_quad_stage2(double y_entry, const CirQuadParams& p, double delta,
                       double dw) {
    if (!(y_entry >= 0.0)) {
        throw std::domain_error("cir_quad_stage2: y must be >= 0");
    }
    if (delta == 0.0 && dw == 0.0) return y_entry;
    const double radicand = std::max(
        y_entry + (p.k * p.l - 0.25 * p.sigma * p.sigma) * delta, 0.0);
    const double root = std::sqrt(radicand) + 0.5 * p.sigma * dw;
    return root * root;
}

double cir_quad_step(double y_n, const CirQuadParams& p, double delta, double dw) {
    if (!(y_n > 0.0)) {
        throw std::domain_error("cir_quad_step: y must be > 0, got " +
                                std::to_string(y_n));
    }
    return cir_quad_stage2(cir_quad_stage1(y_n, y_n, p, delta), p, delta, dw);
}

ComposedScheme make_cir_quad_scheme(const CirQuadParams& p) {
    validate(p);
    ComposedScheme s;
    s.initial_state = p.x0;
    s.domain_lower_bound = 0.0;
    s.stages = {
        {StageKind::deterministic, "linearized-decay",
         [p](double entry, double frozen, double delta, double) {
             return cir_quad_stage1(entry, frozen, p, delta);
         }},
        {StageKind::stochastic, "sqrt-noise",
         [p](double entry, double, double delta, double dw) {
             return cir_quad_stage2(entry, p, delta, dw);
         }},
    };
    validate_scheme(s);
    return s;
}

} // namespace sssd
