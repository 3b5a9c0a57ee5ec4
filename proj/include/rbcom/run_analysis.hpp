#pragma once

#include <string>
#include <vector>

#include "rbcom/system_config.hpp"

namespace rbcom {

inline const std::vector<std::string> kAnalyses = {
    "iv-curve",    "operating-point", "small-signal",
    "freq-response", "noise",         "snr-capacity",
    "power-sweep", "distance-sweep",  "monte-carlo",
};

struct RunResult {
    std::string analysis;
    std::string summary_json;            // contents of summary.json
    std::vector<std::string> files;      // paths written, summary included
};

// Execute one analysis: writes the analysis CSVs plus a summary.json into
// out_dir and returns the same content. Identical configs produce
// byte-identical files.
RunResult run_analysis(const SystemConfig& cfg, const std::string& analysis,
                       const std::string& out_dir);

}  // namespace rbcom
