#include "sssd/params.hpp"

#include <charconv>
#include <cmath>
#include <set>

#include "sssd/format.hpp"

namespace sssd {
namespace {

void require_nonnegative(double v, const char* field) {
    if (!(v >= 0.0)) {
        throw validation_error(std::string(field) + " = " + std::to_string(v) +
                               " violates " + field + " >= 0");
    }
}

void require_positive(double v, const char* field) {
    if (!(v > 0.0)) {
        throw validation_error(std::string(field) + " = " + std::to_string(v) +
                               " violates " + field + " > 0");
    }
}

std::string fmt(double v) { return format_double(v); }

double parse_double(const KvMap& kv, const std::string& key) {
    auto it = kv.find(key);
    if (it == kv.end()) {
        throw validation_error("missing key " + key);
    }
    const std::string& s = it->second;
    double v{};
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        throw validation_error("key " + key + ": cannot parse value '" + s + "'");
    }
    return v;
}

void reject_unknown(const KvMap& kv, const std::set<std::string>& known) {
    for (const auto& [key, value] : kv) {
        if (!known.contains(key)) {
            throw validation_error("unknown key " + key);
        }
    }
}

} // namespace

AitSahaliaParams validate(const AitSahaliaParams& p) {
    require_nonnegative(p.a1, "a1");
    require_nonnegative(p.a2, "a2");
    require_nonnegative(p.a3, "a3");
    require_nonnegative(p.a4, "a4");
    require_nonnegative(p.sigma, "sigma");
    require_positive(p.x0, "x0");
    if (!(p.r > 1.0)) {
        throw validation_error("r = " + std::to_string(p.r) + " violates r > 1");
    }
    if (!(p.rho > 1.0)) {
        throw validation_error("rho = " + std::to_string(p.rho) + " violates rho > 1");
    }
    if (!(p.r + 1.0 > 2.0 * p.rho)) {
        throw validation_error("r = " + std::to_string(p.r) + ", rho = " +
                               std::to_string(p.rho) + " violate r + 1 > 2 rho");
    }
    return p;
}

SplitConfig validate(const SplitConfig& c) {
    if (!(c.a > 0.0)) {
        throw validation_error("a = " + std::to_string(c.a) + " violates a > 0");
    }
    return c;
}

GenAitSahaliaParams validate(const GenAitSahaliaParams& p) {
    validate(p.base);
    require_nonnegative(p.b1, "b1");
    require_nonnegative(p.b2, "b2");
    require_nonnegative(p.b3, "b3");
    return p;
}

CirQuadParams validate(const CirQuadParams& p) {
    require_nonnegative(p.k, "k");
    require_nonnegative(p.l, "l");
    require_nonnegative(p.d, "d");
    require_nonnegative(p.sigma, "sigma");
    require_positive(p.x0, "x0");
    if (!(p.k * p.l >= 0.25 * p.sigma * p.sigma)) {
        throw validation_error("k*l = " + std::to_string(p.k * p.l) +
                               " violates k*l >= sigma^2/4 required by the "
                               "square-root noise stage");
    }
    return p;
}

std::vector<std::pair<std::string, std::string>> to_kv(const AitSahaliaParams& p) {
    return {{"a1", fmt(p.a1)}, {"a2", fmt(p.a2)},       {"a3", fmt(p.a3)},
            {"a4", fmt(p.a4)}, {"sigma", fmt(p.sigma)}, {"r", fmt(p.r)},
            {"rho", fmt(p.rho)}, {"x0", fmt(p.x0)}};
}

std::vector<std::pair<std::string, std::string>> to_kv(const GenAitSahaliaParams& p) {
    auto out = to_kv(p.base);
    out.emplace_back("b1", fmt(p.b1));
    out.emplace_back("b2", fmt(p.b2));
    out.emplace_back("b3", fmt(p.b3));
    return out;
}

std::vector<std::pair<std::string, std::string>> to_kv(const CirQuadParams& p) {
    return {{"k", fmt(p.k)},
            {"l", fmt(p.l)},
            {"d", fmt(p.d)},
            {"sigma", fmt(p.sigma)},
            {"x0", fmt(p.x0)}};
}

std::vector<std::pair<std::string, std::string>> to_kv(const SplitConfig& c) {
    return {{"a", fmt(c.a)}};
}

AitSahaliaParams ait_sahalia_from_kv(const KvMap& kv) {
    reject_unknown(kv, {"a1", "a2", "a3", "a4", "sigma", "r", "rho", "x0"});
    AitSahaliaParams p;
    p.a1 = parse_double(kv, "a1");
    p.a2 = parse_double(kv, "a2");
    p.a3 = parse_double(kv, "a3");
    p.a4 = parse_double(kv, "a4");
    p.sigma = parse_double(kv, "sigma");
    p.r = parse_double(kv, "r");
    p.rho = parse_double(kv, "rho");
    p.x0 = parse_double(kv, "x0");
    return validate(p);
}

GenAitSahaliaParams gen_ait_sahalia_from_kv(const KvMap& kv) {
    reject_unknown(kv, {"a1", "a2", "a3", "a4", "sigma", "r", "rho", "x0", "b1",
                        "b2", "b3"});
    GenAitSahaliaParams p;
    KvMap base(kv);
    base.erase("b1");
    base.erase("b2");
    base.erase("b3");
    p.base = ait_sahalia_from_kv(base);
    p.b1 = parse_double(kv, "b1");
    p.b2 = parse_double(kv, "b2");
    p.b3 = parse_double(kv, "b3");
    return validate(p);
}

CirQuadParams cir_quad_from_kv(const KvMap& kv) {
    reject_unknown(kv, {"k", "l", "d", "sigma", "x0"});
    CirQuadParams p;
    p.k = parse_double(kv, "k");
    p.l = parse_double(kv, "l");
    p.d = parse_double(kv, "d");
    p.sigma = parse_double(kv, "sigma");
    p.x0 = parse_double(kv, "x0");
    return validate(p);
}

SplitConfig split_config_from_kv(const KvMap& kv) {
    reject_unknown(kv, {"a"});
    if (kv.find("a") == kv.end()) {
        return SplitConfig{};
    }
    return validate(SplitConfig{parse_double(kv, "a")});
}

} // namespace sssd
