#include "sssd/gen_ait_sahalia.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "sssd/ait_sahalia.hpp"

namespace sssd {

double gen_ait_sahalia_y_drift(double y, const GenAitSahaliaParams& p) {
    const auto& b = p.base;
    return b.a1 - b.a2 * std::sqrt(y) - p.b1 * std::pow(y, 0.75) -
           p.b2 * std::pow(y, 1.25) - p.b3 * std::sqrt(y) * std::log1p(y) +
           b.a3 * y - b.a4 * std::pow(y, 0.5 * (b.r + 1.0)) +
           b.sigma * b.sigma * std::pow(y, b.rho);
}

double gen_ait_sahalia_split_drift(double state, double frozen,
                                   const GenAitSahaliaParams& p) {
    const auto& b = p.base;
    const double f1 = -p.b3 * std::sqrt(state) * std::log1p(frozen);
    const double f2 = -p.b2 * state * std::pow(frozen, 0.25);
    const double f3 = -p.b1 * std::pow(state, 0.75);
    const double f4 = b.a3 * state - b.a2 * std::sqrt(state);
    const double f5 =
        b.a1 + state * (b.sigma * b.sigma * std::pow(frozen, b.rho - 1.0) -
                        b.a4 * std::pow(frozen, 0.5 * (b.r - 1.0)));
    return f1 + f2 + f3 + f4 + f5;
}

double gen_stage_sqrt_log_decay(double y_entry, double y_frozen, double b3,
                                double delta) {
    if (!(y_entry >= 0.0)) {
        throw std::domain_error("gen_stage_sqrt_log_decay: y must be >= 0");
    }
    const double w = 0.5 * b3 * std::log1p(y_frozen) * delta;
    if (w == 0.0) return y_entry;
    const double root = std::max(std::sqrt(y_entry) - w, 0.0);
    return root * root;
}

double gen_stage_quarter_power_decay(double y_entry, double y_frozen, double b2,
                                     double delta) {
    if (b2 == 0.0 || delta == 0.0) return y_entry;
    return y_entry * std::exp(-b2 * std::pow(y_frozen, 0.25) * delta);
}

double gen_stage_three_quarter_decay(double y_entry, double b1, double delta) {
    if (!(y_entry >= 0.0)) {
        throw std::domain_error("gen_stage_three_quarter_decay: y must be >= 0");
    }
    const double u = 0.25 * b1 * delta;
    if (u == 0.0) return y_entry;
    const double root = std::max(std::pow(y_entry, 0.25) - u, 0.0);
    const double sq = root * root;
    return sq * sq;
}

double gen_ait_sahalia_step(double y_n, const GenAitSahaliaParams& p, double delta,
                            double dw) {
    if (!(y_n > 0.0)) {
        throw std::domain_error("gen_ait_sahalia_step: y must be > 0, got " +
                                std::to_string(y_n));
    }
    if (p.base.a3 == 0.0) {
        throw std::invalid_argument(
            "gen_ait_sahalia_step: a3 must be > 0, the growth stage divides by it");
    }
    const double y1 = gen_stage_sqrt_log_decay(y_n, y_n, p.b3, delta);
    const double y2 = gen_stage_quarter_power_decay(y1, y_n, p.b2, delta);
    const double y3 = gen_stage_three_quarter_decay(y2, p.b1, delta);
    const double y4 = ait_sahalia_stage1(y3, p.base.a3, p.base.a2, delta);
    return ait_sahalia_stage2(y4, y_n, p.base, delta, dw);
}

ComposedScheme make_gen_ait_sahalia_scheme(const GenAitSahaliaParams& p) {
    validate(p);
    if (p.base.a3 == 0.0) {
        throw std::invalid_argument(
            "gen scheme: a3 must be > 0, the growth stage divides by it");
    }
    ComposedScheme s;
    s.initial_state = transform_to_y(p.base.x0);
    s.domain_lower_bound = 0.0;
    s.stages = {
        {StageKind::deterministic, "sqrt-log-decay",
         [b3 = p.b3](double entry, double frozen, double delta, double) {
             return gen_stage_sqrt_log_decay(entry, frozen, b3, delta);
         }},
        {StageKind::deterministic, "quarter-power-decay",
         [b2 = p.b2](double entry, double frozen, double delta, double) {
             return gen_stage_quarter_power_decay(entry, frozen, b2, delta);
         }},
        {StageKind::deterministic, "three-quarter-decay",
         [b1 = p.b1](double entry, double, double delta, double) {
             return gen_stage_three_quarter_decay(entry, b1, delta);
         }},
        ait_sahalia_growth_stage(p.base.a3, p.base.a2),
        ait_sahalia_noise_stage(p.base),
    };
    validate_scheme(s);
    return s;
}

} // namespace sssd
