#pragma once

#include <map>
#include <string>
#include <vector>

namespace schro {

/// Names of the shipped experiment presets, in documentation order.
const std::vector<std::string>& preset_names();

/// True while the transported envelope center lies within 15% of the
/// circumference of the identified grid ends (the crossing window used for
/// convergence-index minima and norm-drift splits).
bool pulse_near_interface(double t, double wave_number, double envelope_center,
                          double length);

/// Fully resolved run parameters. Every field is written to the manifest, so
/// re-running from a manifest reproduces the run exactly.
struct ResolvedConfig {
    std::string preset;
    std::string scale = "full";  ///< "full" or "ci" (scaled-down variant)
    std::string out_dir;

    int n = 0;            ///< base grid intervals (ladders use n and 2n)
    int n_reference = 0;  ///< reference grid intervals
    int order = 8;
    int samples = 100;
    std::string integrator = "imex";  ///< "rk4" or "imex"

    /// "explicit-bound", "dx2", "dx3", or "both" (run dx2 and dx3 ladders).
    std::string l_mode = "dx2";
    double l_coeff = 1000.0;

    double epsilon = 0.0;
    std::vector<double> epsilon_sweep;  ///< dissipation preset only

    double t_final = 0.0;
    double cfl = 0.25;
    double cfl_reference = 0.5;
    double cfl_periodic = 0.25;

    double length = 2.0;
    double wave_number = 0.0;
    double envelope_center = 1.0;
    double envelope_denominator = 20.0;
};

/// Builds the configuration for `overrides["preset"]`: preset and scale
/// defaults first, then the remaining override keys (config file entries and
/// CLI flags) applied on top. Throws ConfigError for unknown presets, keys,
/// or unparsable values.
ResolvedConfig resolve_config(
    const std::map<std::string, std::string>& overrides);

/// Key=value file (one per line, '#' comments); later keys override earlier
/// ones. Manifests written by run_preset parse back with this.
std::map<std::string, std::string> read_config_file(const std::string& path);

void write_manifest(const ResolvedConfig& cfg, const std::string& path);

/// Executes the preset and writes manifest, norm/error CSV series and
/// snapshots under cfg.out_dir. Deterministic for a fixed config. Throws
/// ConfigError/UsageError for bad settings and InstabilityError (with step
/// context) if an evolution blows up.
void run_preset(const ResolvedConfig& cfg);

}  // namespace schro
