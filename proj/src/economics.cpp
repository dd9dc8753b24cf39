#include "ewh/economics.hpp"

#include "ewh/ccss.hpp"
#include "ewh/error.hpp"

#include <cmath>

namespace ewh {

namespace {

template <class F>
auto term(std::string_view name, F&& f)
{
    try {
        return f();
    } catch (const DomainError& e) {
        throw DomainError(std::string(name) + ": " + e.what());
    }
}

}  // namespace

AnnualizationPolicy AnnualizationPolicy::from(const EconParams& econ)
{
    return {econ.horizon_years, econ.interest_rate, econ.include_hydrogen_capital};
}

Quantity daily_capital_charge(const Quantity& capital, const AnnualizationPolicy& policy)
{
    capital.require(dims::money, "capital");
    if (capital.value() < 0.0) {
        throw DomainError("capital must be >= 0");
    }
    if (policy.horizon_years < 1 || !(policy.interest_rate >= 0.0)) {
        throw DomainError("annualisation needs N >= 1 and lambda >= 0");
    }
    const double n = policy.horizon_years;
    const double growth = std::pow(1.0 + policy.interest_rate, n - 1.0);
    return Quantity{capital.in(units::usd) * growth / (365.0 * n), units::usd / units::day};
}

ScenarioResult total_daily_cost(const ScenarioConfig& s)
{
    s.econ.validate();
    const EconParams& econ = s.econ;
    const CcssPlan plan = term("ccss", [&] { return CcssPlan(s.beta); });
    const TimeSeries captured = full_load_capture(s.plant, econ);

    ScenarioResult r;
    r.plant = s.plant.name();
    r.beta = s.beta;
    r.water_mode = std::string(mode_name(s.water));
    CostLedger& ledger = r.ledger;

    ledger.add("capture and transfer capital", CostTerm::CcssCapital, CostKind::Capital,
               term("ccss capital", [&] { return ccss_capital(plan, s.plant, econ); }));
    ledger.add("capture and transfer operation", CostTerm::CcssOperational, CostKind::Operational,
               term("ccss operational", [&] { return ccss_operational(plan, captured, econ); }));

    if (s.beta > 0.0) {
        if (!s.product) {
            throw DomainError("scenario with beta > 0 needs a chemical product");
        }
        const ProductSpec& product = *s.product;
        r.product = product.name();
        const NexusRates rates = nexus_rates(s.plant, product, s.beta);
        const MassRatios ratios = stoichiometry(product);

        ledger.add("wind farm", CostTerm::PowerCapital, CostKind::Capital,
                   term("power capital", [&] { return power_capital(rates.hydrogen, econ); }));

        if (AnnualizationPolicy::from(econ).include_hydrogen_capital) {
            ledger.add("electrolysers", CostTerm::HydrogenCapital, CostKind::Capital,
                       term("hydrogen capital", [&] { return hydrogen_capital(s.plant, product, s.beta, econ); }));
        }

        const WaterSupplyPlan water =
            term("water plan", [&] { return WaterSupplyPlan(s.water, s.w_max.value_or(rates.water)); });
        // Electrolysis feed follows the captured carbon hour by hour.
        std::vector<double> flow;
        flow.reserve(captured.size());
        for (std::size_t t = 0; t < captured.size(); ++t) {
            flow.push_back(electrolysis_water(ratios, captured.at(t), s.beta).value());
        }
        const TimeSeries water_flow(dims::volume_flow, std::move(flow));

        ledger.add("water supply (" + r.water_mode + ")", CostTerm::WaterCapital, CostKind::Capital,
                   term("water capital", [&] { return water_capital(water, econ); }));
        ledger.add("water supply energy (" + r.water_mode + ")", CostTerm::WaterOperational, CostKind::Operational,
                   term("water operational", [&] { return water_operational(water, water_flow, econ); }));
        ledger.add(product.name() + " sales", CostTerm::ChemicalRevenue, CostKind::Revenue,
                   term("chemical revenue", [&] { return chemical_revenue(product, captured, s.beta, econ); }));
    } else if (s.product) {
        r.product = s.product->name();
    }

    r.capital = ledger.capital_total();
    ledger.add("annualised capital", CostTerm::CapitalCharge, CostKind::CapitalCharge,
               daily_capital_charge(r.capital, AnnualizationPolicy::from(econ)));

    r.operational = ledger.total(CostKind::Operational);
    r.revenue = ledger.total(CostKind::Revenue);
    r.daily_cost = ledger.daily_total();
    r.increased_price = term("increased price", [&] { return increased_price(r.daily_cost, s.plant); });
    r.carbon_penalty = term("carbon penalty", [&] { return carbon_penalty(r.daily_cost, s.plant); });
    return r;
}

Quantity increased_price(const Quantity& daily_cost, const PlantSpec& plant)
{
    daily_cost.require(dims::money_rate, "daily cost");
    const double kw = plant.capacity().in(units::kW);
    if (!(kw > 0.0)) {
        throw DomainError("plant '" + plant.name() + "' has zero capacity; price uplift undefined");
    }
    return Quantity{daily_cost.in(units::usd / units::day) / kw, units::usd / units::kWh};
}

Quantity carbon_penalty(const Quantity& daily_cost, const PlantSpec& plant)
{
    daily_cost.require(dims::money_rate, "daily cost");
    const double tons_per_day = emissions_at_capacity(plant).in(units::ton / units::day);
    if (!(tons_per_day > 0.0)) {
        throw DomainError("plant '" + plant.name() + "' emits no carbon; penalty threshold undefined");
    }
    return Quantity{daily_cost.in(units::usd / units::day) / tons_per_day, units::usd / units::ton};
}

}  // namespace ewh
