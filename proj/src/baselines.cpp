#include "sssd/baselines.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace sssd {
namespace {

double full_drift(double x, const AitSahaliaParams& p) {
    return p.a1 / x - p.a2 + p.a3 * x - p.a4 * std::pow(x, p.r);
}

} // namespace

double euler_maruyama_step(double x_n, const AitSahaliaParams& p, double delta,
                           double dw) {
    if (x_n == 0.0) {
        throw std::domain_error("euler_maruyama_step: a1/x undefined at x = 0");
    }
    return x_n + full_drift(x_n, p) * delta + p.sigma * std::pow(x_n, p.rho) * dw;
}

double drift_implicit_step(double x_n, const AitSahaliaParams& p, double delta,
                           double dw) {
    if (!(x_n > 0.0)) {
        throw std::domain_error("drift_implicit_step: x must be > 0, got " +
                                std::to_string(x_n));
    }
    const double rhs = x_n + p.sigma * std::pow(x_n, p.rho) * dw;
    if (delta == 0.0) return rhs;

    const auto g = [&](double z) { return z - full_drift(z, p) * delta - rhs; };

    // Bracket by doubling from far below x_n up to 2^60.
    double lo = std::ldexp(1.0, -60);
    double g_lo = g(lo);
    double hi = lo;
    double g_hi = g_lo;
    bool bracketed = false;
    while (hi < std::ldexp(1.0, 60)) {
        hi *= 2.0;
        g_hi = g(hi);
        if ((g_lo < 0.0 && g_hi >= 0.0) || (g_lo > 0.0 && g_hi <= 0.0)) {
            bracketed = true;
            break;
        }
        lo = hi;
        g_lo = g_hi;
    }
    if (!bracketed) {
        throw std::runtime_error(
            "drift_implicit_step: no sign change of the residual on (0, 2^60]");
    }

    for (int i = 0; i < 200 && hi - lo > 1e-16 * (1.0 + hi); ++i) {
        const double mid = 0.5 * (lo + hi);
        const double g_mid = g(mid);
        if ((g_lo < 0.0) == (g_mid < 0.0)) {
            lo = mid;
            g_lo = g_mid;
        } else {
            hi = mid;
        }
    }

    double z = 0.5 * (lo + hi);
    for (int i = 0; i < 4; ++i) {
        const double deriv =
            1.0 - delta * (-p.a1 / (z * z) + p.a3 -
                           p.a4 * p.r * std::pow(z, p.r - 1.0));
        if (deriv == 0.0) break;
        const double next = z - g(z) / deriv;
        if (!(next > lo && next < hi)) break;
        z = next;
    }
    if (!(std::abs(g(z)) <= 1e-12 * (1.0 + std::abs(z)))) {
        throw std::runtime_error("drift_implicit_step: residual did not converge");
    }
    return z;
}

ComposedScheme make_euler_maruyama_scheme(const AitSahaliaParams& p) {
    validate(p);
    ComposedScheme s;
    s.initial_state = p.x0;
    s.stages = {{StageKind::stochastic, "euler-maruyama",
                 [p](double entry, double, double delta, double dw) {
                     return euler_maruyama_step(entry, p, delta, dw);
                 }}};
    validate_scheme(s);
    return s;
}

ComposedScheme make_drift_implicit_scheme(const AitSahaliaParams& p) {
    validate(p);
    ComposedScheme s;
    s.initial_state = p.x0;
    s.domain_lower_bound = 0.0;
    s.stages = {{StageKind::stochastic, "drift-implicit",
                 [p](double entry, double, double delta, double dw) {
                     return drift_implicit_step(entry, p, delta, dw);
                 }}};
    validate_scheme(s);
    return s;
}

} // namespace sssd
