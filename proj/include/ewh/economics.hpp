#pragma once

#include "ewh/conversion.hpp"
#include "ewh/ledger.hpp"
#include "ewh/water.hpp"

#include <optional>

namespace ewh {

/// Capital-to-daily conversion: capital * (1 + lambda)^(N-1) / (365 N).
struct AnnualizationPolicy {
    int horizon_years = 20;
    double interest_rate = 0.05;
    bool include_hydrogen_capital = false;

    static AnnualizationPolicy from(const EconParams& econ);
};

/// One plant/product/beta evaluation.
struct ScenarioConfig {
    PlantSpec plant;
    std::optional<ProductSpec> product;  // not needed when beta == 0
    double beta = 0.0;
    WaterMode water = Desalination{};
    std::optional<Quantity> w_max;  // defaults to the electrolysis water demand
    EconParams econ;
};

struct ScenarioResult {
    std::string plant;
    std::string product;  // empty for pure storage
    double beta = 0.0;
    std::string water_mode;
    CostLedger ledger;
    Quantity capital;         // $ entering the capital charge
    Quantity operational;     // $/day
    Quantity revenue;         // $/day, <= 0
    Quantity daily_cost;      // $/day, equals the ledger's daily total
    Quantity increased_price; // $/kWh
    Quantity carbon_penalty;  // $/ton
};

Quantity daily_capital_charge(const Quantity& capital, const AnnualizationPolicy& policy);

/// Assembles every capital, operational and revenue term of a scenario into
/// its ledger and derives the decision metrics. Domain errors are rethrown
/// prefixed with the term that raised them.
ScenarioResult total_daily_cost(const ScenarioConfig& scenario);

/// Electricity price uplift that recovers `daily_cost`: daily cost divided by
/// one hour of full-load generation. This reproduces the reference price
/// table; spreading over a full day of generation would be 24x smaller.
Quantity increased_price(const Quantity& daily_cost, const PlantSpec& plant);

/// Break-even emission penalty: daily cost over the carbon emitted in a day at full load.
Quantity carbon_penalty(const Quantity& daily_cost, const PlantSpec& plant);

}  // namespace ewh
