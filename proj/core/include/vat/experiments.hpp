#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "vat/config.hpp"

namespace vat {

/// Files produced by one run. summary is also written to <out>/summary.txt.
struct RunArtifacts {
    std::vector<std::filesystem::path> files;
    std::string summary;
};

/// Execute the configured experiment and write its CSV + summary artifacts
/// under config.output_dir. Every output byte is a pure function of the
/// config (master seed included), independent of the worker count. Throws on
/// failure after removing any partially written files.
RunArtifacts run_experiment(const RunConfig& config);

} // namespace vat
