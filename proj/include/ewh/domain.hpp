#pragma once

#include "ewh/quantity.hpp"

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ewh {

namespace dims {
inline constexpr Dimension emission_factor = mass / energy;
inline constexpr Dimension unit_price_energy = money / energy;      // $/kWh
inline constexpr Dimension unit_price_mass = money / mass;          // $/ton
inline constexpr Dimension capital_per_mass_flow = money / mass_flow;    // $/(ton/day), $/(kg/h)
inline constexpr Dimension capital_per_power = money / power;            // $/kW
inline constexpr Dimension capital_per_volume_flow = money / volume_flow;  // $/(m3/h)
inline constexpr Dimension capital_per_length = money / length;          // $/m
inline constexpr Dimension specific_energy_mass = energy / mass;         // kWh/kg
inline constexpr Dimension specific_energy_volume = energy / volume;     // kWh/m3
inline constexpr Dimension head_loss_coefficient = time.pow(2) / length.pow(5);  // h2/m5
}  // namespace dims

/// A conventional power plant retrofitted with carbon capture.
class PlantSpec {
public:
    /// Throws DomainError unless capacity >= 0 and emission_factor >= 0.
    PlantSpec(std::string name, Quantity capacity, Quantity emission_factor);

    const std::string& name() const noexcept { return name_; }
    const Quantity& capacity() const noexcept { return capacity_; }
    const Quantity& emission_factor() const noexcept { return emission_factor_; }

private:
    std::string name_;
    Quantity capacity_;
    Quantity emission_factor_;
};

/// The three plants analysed in the reference study: 500 MW each at 820, 490
/// and 230 g/kWh.
std::vector<PlantSpec> reference_plants();

/// Carbon emitted at full load (C-bar), as a mass flow.
Quantity emissions_at_capacity(const PlantSpec& plant);

/// One capital-cost step: applies to plants whose full-load carbon flow is at
/// least `min_flow`.
struct CostTier {
    Quantity min_flow;  // mass flow
    Quantity cost;      // $ per unit mass flow of capacity
};

/// Unit capital cost of the carbon transfer pipeline. Larger daily carbon flows
/// get cheaper per-ton pipelines, so the cost is a step function of C-bar.
class TieredCost {
public:
    TieredCost() = default;
    explicit TieredCost(Quantity flat);
    explicit TieredCost(std::vector<CostTier> tiers);

    /// Cost of the highest tier whose threshold does not exceed `flow`.
    Quantity at(const Quantity& flow) const;
    const std::vector<CostTier>& tiers() const noexcept { return tiers_; }

private:
    std::vector<CostTier> tiers_;
};

/// Default transfer capital: 1 $/(ton/day) per km of a 250 km pipeline for
/// flows of at least 2000 ton/day, 6 $/(ton/day) per km below that.
TieredCost default_transfer_capital();

/// How the transfer-pipe unit cost multiplies into capital.
enum class PipeCostBasis {
    CapacityLength,  // W-bar * c_tw * d; c_tw in $/(m * m3/h)
    Length,          // c_tw * d; c_tw in $/m is the whole per-meter pipe cost
};

/// Economic and technical parameters. Every field is unit-checked on
/// validation; magnitudes are stored in canonical units.
struct EconParams {
    Quantity elec_price{0.25, units::usd / units::kWh};
    Quantity r_cts{15.0, units::usd / units::ton};
    Quantity r_ccs{45.0, units::usd / units::ton};
    TieredCost c_cts = default_transfer_capital();
    Quantity c_ccs{0.0, units::usd / (units::ton / units::day)};
    Quantity c_wind{1030.0, units::usd / units::kW};
    Quantity c_des{0.2, units::musd / (units::m3 / units::h)};
    Quantity c_tw{160.0, units::usd / units::m};
    PipeCostBasis pipe_cost_basis = PipeCostBasis::Length;
    std::optional<Quantity> c_sw;
    Quantity c_we{500.0, units::usd / (units::kg / units::h)};
    Quantity xi_p{52.5, units::kWh / units::kg};
    double wind_capacity_factor = 0.423;
    double eta_pump = 0.9;
    /// Head-loss coefficient of a pipe of `r_w_reference_length`; scales linearly with distance.
    Quantity r_w{2e-4, Unit{1.0, dims::head_loss_coefficient}};
    Quantity r_w_reference_length{100.0, units::km};
    std::array<Quantity, 4> e_des{Quantity{3.5, units::kWh / units::m3}, Quantity{3.8, units::kWh / units::m3},
                                  Quantity{4.1, units::kWh / units::m3}, Quantity{4.4, units::kWh / units::m3}};
    double interest_rate = 0.05;
    int horizon_years = 20;
    bool include_hydrogen_capital = false;
    double capture_efficiency = 1.0;
    int operating_hours = 24;
    std::map<std::string, Quantity, std::less<>> product_prices{
        {"methane", Quantity{1400.0, units::usd / units::ton}},
        {"methanol", Quantity{616.0, units::usd / units::ton}},
        {"ethanol", Quantity{493.0, units::usd / units::ton}},
    };

    /// Throws DomainError or DimensionError naming the first violated invariant.
    void validate() const;

    /// Head-loss coefficient of a pipe of the given length.
    Quantity r_w_at(const Quantity& distance) const;

    /// Unit price of a product; throws DomainError when none is configured.
    const Quantity& price_of(std::string_view product) const;
};

/// Hourly series of quantities sharing one unit.
class TimeSeries {
public:
    /// Throws DomainError on an empty series or a negative entry.
    TimeSeries(Dimension dim, std::vector<double> canonical_values);

    Dimension dimension() const noexcept { return dim_; }
    std::size_t size() const noexcept { return values_.size(); }
    std::span<const double> values() const noexcept { return values_; }
    Quantity at(std::size_t i) const { return {values_.at(i), dim_}; }
    Quantity step() const { return {1.0, dims::time}; }
    Quantity duration() const { return {static_cast<double>(values_.size()), dims::time}; }

    /// Integral over the series (each step lasts one hour).
    Quantity integral() const;

private:
    Dimension dim_;
    std::vector<double> values_;
};

/// `hours` equal entries of `rate`. Throws DomainError for hours < 1 or rate < 0.
TimeSeries constant_profile(const Quantity& rate, int hours);

}  // namespace ewh
