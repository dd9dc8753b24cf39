#include "ewh/domain.hpp"

#include "ewh/error.hpp"

#include <algorithm>
#include <cmath>

namespace ewh {

PlantSpec::PlantSpec(std::string name, Quantity capacity, Quantity emission_factor)
    : name_(std::move(name)), capacity_(std::move(capacity)), emission_factor_(std::move(emission_factor))
{
    capacity_.require(dims::power, "plant capacity");
    emission_factor_.require(dims::emission_factor, "plant emission factor");
    if (capacity_.value() < 0.0) {
        throw DomainError("plant '" + name_ + "': capacity must be >= 0");
    }
    if (emission_factor_.value() < 0.0) {
        throw DomainError("plant '" + name_ + "': emission factor must be >= 0");
    }
}

std::vector<PlantSpec> reference_plants()
{
    const Unit g_per_kWh = units::g / units::kWh;
    return {
        PlantSpec("coal", 500.0 * units::MW, 820.0 * g_per_kWh),
        PlantSpec("natural_gas", 500.0 * units::MW, 490.0 * g_per_kWh),
        PlantSpec("biomass", 500.0 * units::MW, 230.0 * g_per_kWh),
    };
}

Quantity emissions_at_capacity(const PlantSpec& plant)
{
    return plant.capacity() * plant.emission_factor();
}

TieredCost::TieredCost(Quantity flat) : TieredCost(std::vector<CostTier>{{Quantity{0.0, dims::mass_flow}, flat}}) {}

TieredCost::TieredCost(std::vector<CostTier> tiers) : tiers_(std::move(tiers))
{
    if (tiers_.empty()) {
        throw DomainError("tiered cost needs at least one tier");
    }
    for (const auto& t : tiers_) {
        t.min_flow.require(dims::mass_flow, "tier threshold");
        t.cost.require(dims::capital_per_mass_flow, "tier cost");
        if (t.cost.value() < 0.0 || t.min_flow.value() < 0.0) {
            throw DomainError("tier thresholds and costs must be >= 0");
        }
    }
    std::sort(tiers_.begin(), tiers_.end(),
              [](const CostTier& a, const CostTier& b) { return a.min_flow.value() < b.min_flow.value(); });
    for (std::size_t i = 1; i < tiers_.size(); ++i) {
        if (tiers_[i].min_flow.value() == tiers_[i - 1].min_flow.value()) {
            throw DomainError("duplicate tier threshold");
        }
    }
}

Quantity TieredCost::at(const Quantity& flow) const
{
    flow.require(dims::mass_flow, "tier lookup flow");
    if (tiers_.empty()) {
        return Quantity{0.0, dims::capital_per_mass_flow};
    }
    // Flows below the first threshold use the first tier.
    const CostTier* chosen = &tiers_.front();
    for (const auto& t : tiers_) {
        if (t.min_flow.value() <= flow.value()) {
            chosen = &t;
        }
    }
    return chosen->cost;
}

TieredCost default_transfer_capital()
{
    const Unit per_tpd = units::usd / (units::ton / units::day);
    const Unit tpd = units::ton / units::day;
    return TieredCost({{0.0 * tpd, 1500.0 * per_tpd}, {2000.0 * tpd, 250.0 * per_tpd}});
}

void EconParams::validate() const
{
    auto non_negative = [](const Quantity& q, Dimension dim, const char* name) {
        q.require(dim, name);
        if (q.value() < 0.0) {
            throw DomainError(std::string(name) + " must be >= 0");
        }
    };
    non_negative(elec_price, dims::unit_price_energy, "elec_price");
    non_negative(r_cts, dims::unit_price_mass, "r_cts");
    non_negative(r_ccs, dims::unit_price_mass, "r_ccs");
    non_negative(c_ccs, dims::capital_per_mass_flow, "c_ccs");
    non_negative(c_wind, dims::capital_per_power, "c_wind");
    non_negative(c_des, dims::capital_per_volume_flow, "c_des");
    if (pipe_cost_basis == PipeCostBasis::CapacityLength) {
        non_negative(c_tw, dims::money / (dims::length * dims::volume_flow), "c_tw");
    } else {
        non_negative(c_tw, dims::capital_per_length, "c_tw");
    }
    if (c_sw) {
        non_negative(*c_sw, dims::capital_per_volume_flow, "c_sw");
    }
    non_negative(c_we, dims::capital_per_mass_flow, "c_we");
    non_negative(xi_p, dims::specific_energy_mass, "xi_p");
    non_negative(r_w, dims::head_loss_coefficient, "r_w");
    r_w_reference_length.require(dims::length, "r_w_reference_length");
    if (r_w_reference_length.value() <= 0.0) {
        throw DomainError("r_w_reference_length must be > 0");
    }
    for (const auto& e : e_des) {
        non_negative(e, dims::specific_energy_volume, "e_des");
    }
    if (!(wind_capacity_factor > 0.0 && wind_capacity_factor <= 1.0)) {
        throw DomainError("wind_capacity_factor must lie in (0, 1]");
    }
    if (!(eta_pump > 0.0 && eta_pump <= 1.0)) {
        throw DomainError("eta_pump must lie in (0, 1]");
    }
    if (!(interest_rate >= 0.0) || !std::isfinite(interest_rate)) {
        throw DomainError("interest_rate must be >= 0");
    }
    if (horizon_years < 1) {
        throw DomainError("horizon_years must be >= 1");
    }
    if (!(capture_efficiency >= 0.0 && capture_efficiency <= 1.0)) {
        throw DomainError("capture_efficiency must lie in [0, 1]");
    }
    if (operating_hours < 1) {
        throw DomainError("operating_hours must be >= 1");
    }
    for (const auto& [name, price] : product_prices) {
        non_negative(price, dims::unit_price_mass, "product price");
    }
}

Quantity EconParams::r_w_at(const Quantity& distance) const
{
    distance.require(dims::length, "pipe distance");
    if (distance.value() < 0.0) {
        throw DomainError("pipe distance must be >= 0");
    }
    return r_w * (distance / r_w_reference_length).value();
}

const Quantity& EconParams::price_of(std::string_view product) const
{
    auto it = product_prices.find(product);
    if (it == product_prices.end()) {
        throw DomainError("no market price configured for product '" + std::string(product) + "'");
    }
    return it->second;
}

TimeSeries::TimeSeries(Dimension dim, std::vector<double> canonical_values)
    : dim_(dim), values_(std::move(canonical_values))
{
    if (values_.empty()) {
        throw DomainError("time series must not be empty");
    }
    for (double v : values_) {
        if (!std::isfinite(v)) {
            throw DomainError("time series entries must be finite");
        }
        if (v < 0.0) {
            throw DomainError("time series entries must be >= 0");
        }
    }
}

Quantity TimeSeries::integral() const
{
    double sum = 0.0;
    for (double v : values_) {
        sum += v;
    }
    return Quantity{sum, dim_} * step();
}

TimeSeries constant_profile(const Quantity& rate, int hours)
{
    if (hours < 1) {
        throw DomainError("profile length must be at least one hour");
    }
    if (rate.value() < 0.0) {
        throw DomainError("profile rate must be >= 0");
    }
    return TimeSeries(rate.dimension(), std::vector<double>(static_cast<std::size_t>(hours), rate.value()));
}

}  // namespace ewh
