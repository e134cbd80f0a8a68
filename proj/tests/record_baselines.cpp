// Regenerates the frozen baseline numbers quoted in support/pinned.hpp and
// the sanity margins behind them. Run after any intentional change to the
// random stream or the schemes, then update pinned.hpp to match.

#include <cmath>
#include <cstdio>
#include <vector>

#include "sssd/ait_sahalia.hpp"
#include "sssd/analysis.hpp"
#include "sssd/baselines.hpp"
#include "sssd/brownian.hpp"
#include "sssd/cir_quad.hpp"
#include "sssd/gen_ait_sahalia.hpp"
#include "sssd/rng.hpp"

#include "support/oracles.hpp"

using namespace sssd;

namespace {

AitSahaliaParams demo_params() {
    return {0.1, 0.2, 0.3, 0.4, 0.3, 3.0, 1.5, 1.0};
}

void print(const char* name, double v) { std::printf("%-34s %.17g\n", name, v); }

} // namespace

int main() {
    const AitSahaliaParams p = demo_params();
    const SplitConfig cfg; // a = ln(4/3)

    // Terminal ensemble mean, T = 1, n = 2^10, 10^4 paths, seed 42.
    {
        const auto scheme = make_ait_sahalia_scheme(p, cfg);
        const TimeGrid grid = make_grid(1.0, 1 << 10);
        double sum = 0.0;
        for (std::uint64_t path = 0; path < 10000; ++path) {
            const auto inc = sample_increments(42, path, grid);
            double y = scheme.initial_state;
            for (std::uint64_t k = 0; k < grid.steps; ++k) {
                y = step(scheme, y, grid.delta, inc.values[k]);
            }
            sum += y;
        }
        print("regression_terminal_mean", sum / 10000.0);
    }

    // Strong-error study, finest_n = 2^14, 6 levels, 10^3 paths, seed 42.
    {
        const auto scheme = make_ait_sahalia_scheme(p, cfg);
        const auto report = strong_error_study(scheme, 1.0, 1 << 14, 6, 1000, 42);
        print("study_estimated_order", report.estimated_order);
        print("study_r2", report.regression_r2);
        int strict_decreases = 0;
        for (std::size_t i = 0; i + 1 < report.levels.size(); ++i) {
            std::printf("  level delta=%.8f rms=%.17g\n", report.levels[i].delta,
                        report.levels[i].rms_error);
            if (report.levels[i].rms_error > report.levels[i + 1].rms_error) {
                ++strict_decreases;
            }
        }
        std::printf("  reference delta=%.8f rms=%.17g\n",
                    report.levels.back().delta, report.levels.back().rms_error);
        std::printf("%-34s %d of %zu\n", "study_strict_decreases", strict_decreases,
                    report.levels.size() - 1);
    }

    // Moment bands, p in {2, 4}, deltas 2^-4..2^-8, 10^4 paths, seed 42.
    {
        const auto scheme = make_ait_sahalia_scheme(p, cfg);
        const std::vector<double> deltas = {1.0 / 16, 1.0 / 32, 1.0 / 64,
                                            1.0 / 128, 1.0 / 256};
        for (double pm : {2.0, 4.0}) {
            const auto report = moment_study(scheme, pm, deltas, 1.0, 10000, 42);
            double lo = report.per_delta[0].empirical_moment, hi = lo;
            for (const auto& l : report.per_delta) {
                lo = std::min(lo, l.empirical_moment);
                hi = std::max(hi, l.empirical_moment);
            }
            std::printf("moment p=%g max=%.17g min=%.17g ratio=%.17g\n", pm, hi,
                        lo, hi / lo);
        }
    }

    // Baseline contrast, delta = 0.5, T = 1: first seed with Euler violations.
    {
        for (std::uint64_t seed = 7; seed < 12; ++seed) {
            const auto summary = baseline_contrast(p, cfg, 1.0, 0.5, 512, seed);
            std::printf("contrast seed=%llu", static_cast<unsigned long long>(seed));
            for (const auto& row : summary.rows) {
                std::printf("  %s: violations=%llu nonfinite=%llu", row.scheme.c_str(),
                            static_cast<unsigned long long>(row.violations),
                            static_cast<unsigned long long>(row.nonfinite));
            }
            std::printf("\n");
        }
    }

    // Zero-noise trajectories at delta = 2^-12 against RK4 (step 1e-5).
    {
        AitSahaliaParams q = p;
        q.sigma = 0.0;
        const double y0 = transform_to_y(q.x0);
        const auto traj = [&](double a) {
            const SplitConfig c{a};
            const double delta = std::ldexp(1.0, -12);
            double y = y0;
            for (int k = 0; k < (1 << 12); ++k) {
                y = ait_sahalia_step(y, q, c, delta, 0.0);
            }
            return y;
        };
        const auto drift = [&](double a_lin) {
            return [&, a_lin](double y) {
                return q.a1 - q.a2 * std::sqrt(y) + a_lin * y -
                       q.a4 * std::pow(y, 0.5 * (q.r + 1.0));
            };
        };
        const double ref_true = oracles::rk4(drift(q.a3), y0, 1.0, 1e-5);
        const double ref_mod =
            oracles::rk4(drift(SplitConfig::default_split_parameter()), y0, 1.0, 1e-5);
        const double at_a3 = traj(q.a3);
        const double at_default = traj(SplitConfig::default_split_parameter());
        print("zero_noise_rk4_true_drift", ref_true);
        print("zero_noise_traj_a_eq_a3", at_a3);
        print("zero_noise_rel_err_a_eq_a3", std::abs(at_a3 - ref_true) / ref_true);
        print("zero_noise_rk4_mod_drift", ref_mod);
        print("zero_noise_traj_default_a", at_default);
        print("zero_noise_rel_err_default_a",
              std::abs(at_default - ref_mod) / ref_mod);
        print("zero_noise_gap_default_vs_true",
              std::abs(at_default - ref_true) / ref_true);
    }

    // Kolmogorov-Smirnov statistic of 1e5 draws, seed 20240111.
    {
        RngStream rng(20240111, 0);
        std::vector<double> draws(100000);
        for (auto& d : draws) d = rng.next_normal();
        std::sort(draws.begin(), draws.end());
        double ks = 0.0;
        const double n = static_cast<double>(draws.size());
        for (std::size_t i = 0; i < draws.size(); ++i) {
            const double cdf = oracles::normal_cdf(draws[i]);
            ks = std::max(ks, std::max(cdf - static_cast<double>(i) / n,
                                       static_cast<double>(i + 1) / n - cdf));
        }
        print("ks_statistic_1e5", ks);
        print("ks_critical_0.001", 1.94947 / std::sqrt(n));
    }

    // Pooled increment variance, 1e6 draws at delta = 0.01, seed 987654321.
    {
        const TimeGrid grid = make_grid(10.0, 1000);
        double sum = 0.0, sum_sq = 0.0;
        for (std::uint64_t path = 0; path < 1000; ++path) {
            const auto inc = sample_increments(987654321, path, grid);
            for (double v : inc.values) {
                sum += v;
                sum_sq += v * v;
            }
        }
        const double n = 1e6;
        const double mean = sum / n;
        print("pooled_variance_1e6", (sum_sq - n * mean * mean) / (n - 1.0));
    }

    // Diagonal consistency margins over 100 log-spaced states in [1e-3, 1e3].
    {
        const GenAitSahaliaParams gp{p, 0.1, 0.1, 0.1};
        const CirQuadParams cp{1.0, 1.0, 0.5, 0.4, 1.0};
        double worst_ait = 0.0, worst_gen = 0.0, worst_cir = 0.0;
        for (int i = 0; i < 100; ++i) {
            const double y = std::pow(10.0, -3.0 + 6.0 * i / 99.0);
            const auto rel = [](double a, double b) {
                return std::abs(a - b) / std::max(std::abs(a), std::abs(b));
            };
            worst_ait = std::max(rel(ait_sahalia_split_drift(y, y, p, cfg),
                                     ait_sahalia_y_drift(y, p)),
                                 worst_ait);
            worst_gen = std::max(rel(gen_ait_sahalia_split_drift(y, y, gp),
                                     gen_ait_sahalia_y_drift(y, gp)),
                                 worst_gen);
            worst_cir = std::max(rel(cir_quad_split_drift(y, y, cp),
                                     cir_quad_drift(y, cp)),
                                 worst_cir);
        }
        print("diag_rel_err_ait", worst_ait);
        print("diag_rel_err_gen", worst_gen);
        print("diag_rel_err_cir", worst_cir);
    }

    return 0;
}
