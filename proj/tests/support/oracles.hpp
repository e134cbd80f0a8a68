#pragma once

// Test-only reference implementations, kept independent of the library code
// they check.

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <functional>

namespace oracles {

/// Classical 4th-order Runge-Kutta with fixed step h over duration tau.
inline double rk4(const std::function<double(double)>& f, double y0, double tau,
                  double h) {
    const long steps = std::lround(tau / h);
    double y = y0;
    for (long i = 0; i < steps; ++i) {
        const double k1 = f(y);
        const double k2 = f(y + 0.5 * h * k1);
        const double k3 = f(y + 0.5 * h * k2);
        const double k4 = f(y + h * k3);
        y += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    return y;
}

using mp = boost::multiprecision::cpp_bin_float_50;

/// 50-digit evaluation of the noise-stage closed form
///   (a1 d + y) exp(-d (sigma^2 z^{rho-1} + a4 z^{(r-1)/2}) + 2 sigma z^{(rho-1)/2} w).
inline double noise_stage_mp(double y_entry, double z, double a1, double a4,
                             double sigma, double r, double rho, double delta,
                             double dw) {
    const mp y(y_entry), zf(z), s(sigma), d(delta), w(dw);
    const mp decay = s * s * pow(zf, mp(rho) - 1) + mp(a4) * pow(zf, (mp(r) - 1) / 2);
    const mp noise = 2 * s * pow(zf, (mp(rho) - 1) / 2) * w;
    const mp out = (mp(a1) * d + y) * exp(-d * decay + noise);
    return static_cast<double>(out);
}

/// 50-digit evaluation of the growth-stage closed form
///   (a2/a + (sqrt(y) - a2/a) e^{a d / 2})^2.
inline double growth_stage_mp(double y_entry, double a, double a2, double delta) {
    const mp c = mp(a2) / mp(a);
    const mp root = c + (sqrt(mp(y_entry)) - c) * exp(mp(a) * mp(delta) / 2);
    return static_cast<double>(root * root);
}

/// 50-digit evaluation of the full five-stage composition with every frozen
/// argument equal to y_n.
inline double five_stage_mp(double y_n, double a1, double a2, double a3, double a4,
                            double sigma, double r, double rho, double b1,
                            double b2, double b3, double delta, double dw) {
    const mp y(y_n), d(delta);
    mp root1 = sqrt(y) - mp(b3) / 2 * log(1 + y) * d;
    if (root1 < 0) root1 = 0;
    const mp y1 = root1 * root1;
    const mp y2 = y1 * exp(-mp(b2) * pow(y, mp(0.25)) * d);
    mp root3 = pow(y2, mp(0.25)) - mp(b1) * d / 4;
    if (root3 < 0) root3 = 0;
    const mp y3 = pow(root3, 4);
    const mp c = mp(a2) / mp(a3);
    const mp root4 = c + (sqrt(y3) - c) * exp(mp(a3) * d / 2);
    const mp y4 = root4 * root4;
    const mp s(sigma);
    const mp decay = s * s * pow(y, mp(rho) - 1) + mp(a4) * pow(y, (mp(r) - 1) / 2);
    const mp noise = 2 * s * pow(y, (mp(rho) - 1) / 2) * mp(dw);
    return static_cast<double>((y4 + mp(a1) * d) * exp(-d * decay + noise));
}

/// 50-digit evaluation of the two-stage quadratic-drift composition
///   y1 = y e^{-(k + d y) delta};  (sqrt(y1 + (k l - sigma^2/4) delta) + sigma/2 w)^2.
inline double cir_quad_mp(double y_n, double k, double l, double dcoef,
                          double sigma, double delta, double dw) {
    const mp y(y_n), d(delta), s(sigma);
    const mp y1 = y * exp(-(mp(k) + mp(dcoef) * y) * d);
    mp radicand = y1 + (mp(k) * mp(l) - s * s / 4) * d;
    if (radicand < 0) radicand = 0;
    const mp root = sqrt(radicand) + s / 2 * mp(dw);
    return static_cast<double>(root * root);
}

/// Standard normal CDF.
inline double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

} // namespace oracles
