#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sssd/params.hpp"
#include "sssd/stage_flow.hpp"

namespace sssd {

/// Exit-code contract shared by every subcommand: 0 success, 1 audit failure
/// (or undefined convergence order), 2 configuration error.
enum ExitCode : int { exit_ok = 0, exit_audit_failure = 1, exit_config_error = 2 };

enum class OutputFormat { csv, json, both };

/// Parsed form of the flat key-value experiment file. Grammar: one
/// `key = value` per line, `#` starts a comment, list values are
/// comma-separated. Keys not consumed by the requested command are rejected.
struct ExperimentConfig {
    std::string model;  // ait-sahalia | gen-ait-sahalia | cir-quad
    std::string scheme; // sssd | euler-maruyama | drift-implicit

    std::optional<double> horizon;       // T
    std::optional<std::uint64_t> steps;  // n       (simulate, positivity)
    std::optional<std::uint64_t> finest_n; // and levels (convergence)
    std::optional<unsigned> levels;
    std::optional<double> delta;         // contrast
    std::vector<double> deltas;          // moments
    std::vector<double> p_values;        // moments

    std::optional<std::uint64_t> paths;
    std::optional<std::uint64_t> seed;
    bool full_paths = false;             // simulate: also write every state
    std::optional<bool> strict;          // positivity boundary semantics

    KvMap model_params; // coefficient keys handed to the bundle parsers
};

/// Parses config text; throws validation_error with the offending key or line
/// on malformed input. Does not yet validate command-specific requirements.
ExperimentConfig parse_experiment_config(const std::string& text);
ExperimentConfig load_experiment_config(const std::string& path);

/// Builds the configured integrator. Supported combinations: ait-sahalia with
/// any scheme; gen-ait-sahalia and cir-quad with sssd only.
ComposedScheme build_scheme(const ExperimentConfig& cfg);

/// Subcommands. Reports are written under out_dir (created if needed) in the
/// requested format(s); a short human summary goes to `log`. All outputs are
/// pure functions of (config, seed): identical runs produce identical bytes.
int cmd_simulate(const ExperimentConfig& cfg, const std::string& out_dir,
                 OutputFormat format, std::ostream& log);
int cmd_convergence(const ExperimentConfig& cfg, const std::string& out_dir,
                    OutputFormat format, std::ostream& log);
int cmd_moments(const ExperimentConfig& cfg, const std::string& out_dir,
                OutputFormat format, std::ostream& log);
int cmd_positivity(const ExperimentConfig& cfg, const std::string& out_dir,
                   OutputFormat format, std::ostream& log);
int cmd_contrast(const ExperimentConfig& cfg, const std::string& out_dir,
                 OutputFormat format, std::ostream& log);

} // namespace sssd
