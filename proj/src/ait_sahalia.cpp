#include "sssd/ait_sahalia.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace sssd {

double transform_to_y(double x0) {
    if (!(x0 > 0.0)) {
        throw std::domain_error("transform_to_y: x must be > 0, got " +
                                std::to_string(x0));
    }
    return x0 * x0;
}

double to_x(double y) {
    if (!(y >= 0.0)) {
        throw std::domain_error("to_x: y must be >= 0, got " + std::to_string(y));
    }
    return std::sqrt(y);
}

double ait_sahalia_y_drift(double y, const AitSahaliaParams& p) {
    return p.a1 - p.a2 * std::sqrt(y) + p.a3 * y -
           p.a4 * std::pow(y, 0.5 * (p.r + 1.0)) +
           p.sigma * p.sigma * std::pow(y, p.rho);
}

double ait_sahalia_split_drift(double state, double frozen,
                               const AitSahaliaParams& p, const SplitConfig& cfg) {
    const double f1 = cfg.a * state - p.a2 * std::sqrt(state);
    const double f2 =
        p.a1 + state * (p.a3 - cfg.a +
                        p.sigma * p.sigma * std::pow(frozen, p.rho - 1.0) -
                        p.a4 * std::pow(frozen, 0.5 * (p.r - 1.0)));
    return f1 + f2;
}

double ait_sahalia_stage1(double y_entry, double a, double a2, double delta) {
    if (!(y_entry >= 0.0)) {
        throw std::domain_error("ait_sahalia_stage1: y must be >= 0, got " +
                                std::to_string(y_entry));
    }
    if (!(a > 0.0)) {
        throw std::invalid_argument("ait_sahalia_stage1: a must be > 0");
    }
    if (delta == 0.0) return y_entry;
    const double c = a2 / a;
    const double root = c + (std::sqrt(y_entry) - c) * std::exp(0.5 * a * delta);
    return root * root;
}

double ait_sahalia_stage2(double y_entry, double y_frozen,
                          const AitSahaliaParams& p, double delta, double dw) {
    if (!(y_entry >= 0.0)) {
        throw std::domain_error("ait_sahalia_stage2: y must be >= 0, got " +
                                std::to_string(y_entry));
    }
    if (!(y_frozen > 0.0)) {
        throw std::domain_error("ait_sahalia_stage2: frozen state must be > 0, got " +
                                std::to_string(y_frozen));
    }
    const double decay = p.sigma * p.sigma * std::pow(y_frozen, p.rho - 1.0) +
                         p.a4 * std::pow(y_frozen, 0.5 * (p.r - 1.0));
    const double noise = 2.0 * p.sigma * std::pow(y_frozen, 0.5 * (p.rho - 1.0)) * dw;
    return (p.a1 * delta + y_entry) * std::exp(-delta * decay + noise);
}

double ait_sahalia_step(double y_n, const AitSahaliaParams& p,
                        const SplitConfig& cfg, double delta, double dw) {
    if (!(y_n > 0.0)) {
        throw std::domain_error("ait_sahalia_step: y must be > 0, got " +
                                std::to_string(y_n));
    }
    return ait_sahalia_stage2(ait_sahalia_stage1(y_n, cfg.a, p.a2, delta), y_n, p,
                              delta, dw);
}

StageFlow ait_sahalia_growth_stage(double a, double a2) {
    return {StageKind::deterministic, "sqrt-affine-growth",
            [a, a2](double entry, double, double delta, double) {
                return ait_sahalia_stage1(entry, a, a2, delta);
            }};
}

StageFlow ait_sahalia_growth_stage_absorbed(double a, double a2) {
    return {StageKind::deterministic, "sqrt-affine-growth-absorbed",
            [a, a2](double entry, double, double delta, double) {
                if (delta == 0.0) return entry;
                const double c = a2 / a;
                const double root =
                    std::max(c + (std::sqrt(entry) - c) * std::exp(0.5 * a * delta),
                             0.0);
                return root * root;
            }};
}

StageFlow ait_sahalia_noise_stage(const AitSahaliaParams& p) {
    return {StageKind::stochastic, "frozen-exponential-noise",
            [p](double entry, double frozen, double delta, double dw) {
                return ait_sahalia_stage2(entry, frozen, p, delta, dw);
            }};
}

ComposedScheme make_ait_sahalia_scheme(const AitSahaliaParams& p,
                                       const SplitConfig& cfg) {
    validate(p);
    validate(cfg);
    ComposedScheme s;
    s.initial_state = transform_to_y(p.x0);
    s.domain_lower_bound = 0.0;
    s.stages = {ait_sahalia_growth_stage(cfg.a, p.a2), ait_sahalia_noise_stage(p)};
    if (cfg.a == SplitConfig::default_split_parameter()) {
        s.max_delta = 1.0;
        s.max_delta_reason =
            "split parameter a = ln(4/3) keeps moments bounded only for delta < 1";
    }
    validate_scheme(s);
    return s;
}

} // namespace sssd
