#pragma once

#include "ewh/analysis.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace ewh {

struct WaterChoice {
    std::string mode = "desalination";  // desalination | network_transfer | solar_seawater
    Quantity distance{250.0, units::km};
    std::optional<Quantity> w_max;

    WaterMode to_mode() const;
};

struct ScenarioSection {
    std::string plant;    // empty: first plant
    std::string product;  // empty: first product
    double beta = 1.0;
    WaterChoice water;
};

struct SweepSection {
    std::vector<double> betas{0.5, 1.0};
    WaterChoice water;
};

struct BreakevenSection {
    std::string product;  // empty: first product
    Quantity d_lo{1.0, units::km};
    Quantity d_hi{1000.0, units::km};
    Quantity tolerance{0.5, units::km};
};

struct CurveSection {
    std::string product;
    std::vector<Quantity> distances{Quantity{60.0, units::km}, Quantity{260.0, units::km},
                                    Quantity{300.0, units::km}};
    std::vector<Quantity> flows{Quantity{0.0, units::m3 / units::h}, Quantity{35.0, units::m3 / units::h},
                                Quantity{70.0, units::m3 / units::h}, Quantity{105.0, units::m3 / units::h},
                                Quantity{140.0, units::m3 / units::h}};
};

/// Fully validated run configuration.
struct Config {
    EconParams econ;
    std::vector<PlantSpec> plants;
    std::vector<ProductSpec> products;
    ScenarioSection scenario;
    SweepSection sweep;
    BreakevenSection breakeven;
    CurveSection curve;

    const PlantSpec& plant(std::string_view name) const;      // throws ConfigError
    const ProductSpec& product(std::string_view name) const;  // throws ConfigError
};

/// Parses and validates configuration text (JSON). Unknown keys, unit
/// mismatches, out-of-range values and missing required keys are all
/// collected and reported together in one ConfigError.
Config parse_config(std::string_view text);

/// Reads `path` and parses it. Throws IoError when the file cannot be read.
Config load_config(const std::filesystem::path& path);

/// Serialises a resolved configuration, every default made explicit. Loading
/// the output reproduces `config` bit for bit.
std::string export_config(const Config& config);

}  // namespace ewh
