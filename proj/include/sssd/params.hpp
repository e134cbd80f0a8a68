#pragma once

#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace sssd {

/// Thrown when a coefficient bundle violates a model constraint. The message
/// names the offending field and the inequality.
class validation_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Ait-Sahalia interest-rate model
///   dx = 1/2 (a1/x - a2 + a3 x - a4 x^r) dt + sigma x^rho dW
/// with nonnegative coefficients, x0 > 0, r, rho > 1 and r + 1 > 2 rho.
struct AitSahaliaParams {
    double a1 = 0.0;
    double a2 = 0.0;
    double a3 = 0.0;
    double a4 = 0.0;
    double sigma = 0.0;
    double r = 2.0;   // superlinear drift exponent, > 1
    double rho = 1.5; // diffusion exponent, > 1
    double x0 = 1.0;
};

/// Free split parameter of the square-root growth stage. The default
/// a = ln(4/3) keeps the scheme's moments bounded for every delta < 1; a
/// larger a requires a smaller step ceiling supplied by the caller.
struct SplitConfig {
    double a;
    SplitConfig() : a(default_split_parameter()) {}
    explicit SplitConfig(double a_) : a(a_) {}

    static double default_split_parameter() { return std::log(4.0 / 3.0); }
};

/// Diagnostic for the moment-bound condition: the scheme's p-th moments stay
/// bounded when (3^p / 2) (e^{a delta} - 1)^p < 1. Equals 1/2 at the default
/// a for every delta < 1 and every p.
inline double moment_bound_margin(double a, double delta, double p) {
    return 0.5 * std::pow(3.0, p) * std::pow(std::expm1(a * delta), p);
}

/// Extended model of the five-stage scheme: three extra drift terms
///   -b1 sqrt(x), -b2 x^{3/2}, -b3 ln(1 + x^2)
/// inside the 1/2(...) bracket. a3 doubles as the split parameter of the
/// square-root growth stage, so it must be positive here.
struct GenAitSahaliaParams {
    AitSahaliaParams base;
    double b1 = 0.0;
    double b2 = 0.0;
    double b3 = 0.0;
};

/// Mean-reverting model with quadratic drift and square-root diffusion
///   dx = (k(l - x) - d x^2) dt + sigma sqrt(x) dW.
/// The square-root noise stage requires k l >= sigma^2 / 4.
struct CirQuadParams {
    double k = 0.0;
    double l = 0.0;
    double d = 0.0;
    double sigma = 0.0;
    double x0 = 1.0;
};

/// Each validate() returns its argument unchanged when every invariant holds
/// and throws validation_error otherwise.
AitSahaliaParams validate(const AitSahaliaParams& p);
SplitConfig validate(const SplitConfig& c);
GenAitSahaliaParams validate(const GenAitSahaliaParams& p);
CirQuadParams validate(const CirQuadParams& p);

/// Flat key-value serialization of the coefficient bundles. Keys are exactly
/// the coefficient names (a1, a2, a3, a4, sigma, r, rho, x0, a, b1, b2, b3,
/// k, l, d); readers reject unknown keys and name any missing one.
using KvMap = std::map<std::string, std::string>;

std::vector<std::pair<std::string, std::string>> to_kv(const AitSahaliaParams& p);
std::vector<std::pair<std::string, std::string>> to_kv(const GenAitSahaliaParams& p);
std::vector<std::pair<std::string, std::string>> to_kv(const CirQuadParams& p);
std::vector<std::pair<std::string, std::string>> to_kv(const SplitConfig& c);

AitSahaliaParams ait_sahalia_from_kv(const KvMap& kv);
GenAitSahaliaParams gen_ait_sahalia_from_kv(const KvMap& kv);
CirQuadParams cir_quad_from_kv(const KvMap& kv);
/// The `a` key is optional and defaults to ln(4/3).
SplitConfig split_config_from_kv(const KvMap& kv);

} // namespace sssd
