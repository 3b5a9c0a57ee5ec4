#pragma once

#include <cstdint>
#include <string>

#include "rbcom/link.hpp"

namespace rbcom {

struct GridSpec {
    double lo = 0.0;
    double hi = 0.0;
    int points = 2;
};

// Run-level knobs shared by the analyses.
struct RunConfig {
    double P_laser = 0.2;          // received laser power [W]
    double distance = 1.0;         // transmitter-receiver distance [m]
    std::uint64_t seed = 1;
    GridSpec frequency_grid{1e5, 3e9, 2000};      // log-spaced [Hz]
    GridSpec power_grid{0.05, 0.6, 23};           // linear [W]
    GridSpec distance_grid{0.1, 100.0, 200};      // log-spaced [m]
    int iv_points = 200;                          // I-V curve resolution
    MonteCarloParams monte_carlo;
};

// Full simulator input: one link plus run parameters. Maps 1:1 onto the
// JSON configuration file.
struct SystemConfig {
    std::string description;
    double I_bias = 3.1816;  // pump drive bias [A]
    LinkSystem sys;
    RunConfig run;
};

// Table-reference defaults (the 120 nH / 300 ohm network case).
SystemConfig default_config();

// Parse and validate a JSON configuration string. Unknown keys are
// rejected; missing keys take their defaults.
SystemConfig parse_config(const std::string& json_text);

// Load a configuration file.
SystemConfig load_config(const std::string& path);

// Canonical JSON serialization (sorted keys, round-trip numeric format).
std::string write_config(const SystemConfig& cfg);

// Apply a named network case: "L120" (120 nH, 300 ohm, 120 subchannels)
// or "L10" (10 nH, 140 ohm, 200 subchannels).
void apply_case(SystemConfig& cfg, const std::string& name);

// FNV-1a hash of the canonical serialization, as a hex string.
std::string config_hash(const SystemConfig& cfg);

// Validate every section; throws ConfigError/DomainError on violations.
void validate(const SystemConfig& cfg);

}  // namespace rbcom
