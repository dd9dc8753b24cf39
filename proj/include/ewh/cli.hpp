#pragma once

#include "ewh/config.hpp"
#include "ewh/report.hpp"

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ewh {

/// Process exit statuses.
enum ExitCode : int {
    kExitOk = 0,
    kExitConfig = 2,
    kExitDomain = 3,
    kExitIo = 4,
};

/// One command invocation: which config, what to compute, where to write it.
struct RunManifest {
    std::filesystem::path config_path;
    std::string command = "sweep";  // scenario | sweep | breakeven | curve | penalty
    OutputFormat format = OutputFormat::Table;
    std::optional<std::filesystem::path> output_path;  // stdout when absent

    // Command-specific overrides of the config's defaults.
    std::optional<std::string> plant;
    std::optional<std::string> product;
    std::optional<double> beta;
    std::optional<std::string> distances;  // "60,260,300" (km) or "60 km,0.3 km"
    std::optional<std::string> flows;      // "0,50,100" (m3/h)
    std::optional<double> tolerance_km;
    bool dump_config = false;  // print the resolved config instead of running
    unsigned threads = 1;
};

/// Default preset shipped with the engine.
std::filesystem::path default_config_path();

/// Parses a comma-separated list of quantities. Bare numbers take `default_unit`.
std::vector<Quantity> parse_quantity_list(std::string_view text, std::string_view default_unit, Dimension dim);

/// Validates the config, executes the command and writes its output. Every
/// diagnostic goes to `err`; the return value is an ExitCode.
int run(const RunManifest& manifest, std::ostream& out, std::ostream& err);

}  // namespace ewh
