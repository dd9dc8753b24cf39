#include "ewh/conversion.hpp"

#include "ewh/ccss.hpp"
#include "ewh/error.hpp"

namespace ewh {

namespace {

// Conventional standard atomic weights, g/mol.
constexpr double kCarbon = 12.011;
constexpr double kHydrogen = 1.008;
constexpr double kOxygen = 15.999;

constexpr Formula kCO2{1, 0, 2};
constexpr Formula kH2{0, 2, 0};
constexpr Formula kH2O{0, 2, 1};

void check_beta(double beta)
{
    if (!(beta >= 0.0 && beta <= 1.0)) {
        throw DomainError("reuse fraction beta must lie in [0, 1], got " + format_double(beta));
    }
}

}  // namespace

Formula Formula::parse(std::string_view text)
{
    Formula f;
    std::size_t i = 0;
    if (text.empty()) {
        throw DomainError("empty chemical formula");
    }
    while (i < text.size()) {
        char element = text[i++];
        int count = 0;
        bool has_count = false;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
            count = count * 10 + (text[i++] - '0');
            has_count = true;
        }
        if (!has_count) {
            count = 1;
        }
        switch (element) {
        case 'C': f.c += count; break;
        case 'H': f.h += count; break;
        case 'O': f.o += count; break;
        default:
            throw DomainError("unsupported element '" + std::string(1, element) + "' in formula '" +
                              std::string(text) + "' (only C, H, O)");
        }
    }
    return f;
}

double Formula::molar_mass() const
{
    return (c * kCarbon + h * kHydrogen + o * kOxygen) / 1000.0;
}

ProductSpec::ProductSpec(std::string name, Formula formula, Reaction reaction)
    : name_(std::move(name)), formula_(formula), reaction_(reaction)
{
    if (reaction_.co2 <= 0 || reaction_.h2 < 0 || reaction_.product <= 0 || reaction_.h2o < 0) {
        throw DomainError("product '" + name_ + "': reaction coefficients must be positive");
    }
    const auto& r = reaction_;
    const int c_in = r.co2 * kCO2.c;
    const int h_in = r.h2 * kH2.h;
    const int o_in = r.co2 * kCO2.o;
    const int c_out = r.product * formula_.c;
    const int h_out = r.product * formula_.h + r.h2o * kH2O.h;
    const int o_out = r.product * formula_.o + r.h2o * kH2O.o;
    if (c_in != c_out || h_in != h_out || o_in != o_out) {
        throw DomainError("product '" + name_ + "': reaction is not balanced (C " + std::to_string(c_in) + "->" +
                          std::to_string(c_out) + ", H " + std::to_string(h_in) + "->" + std::to_string(h_out) +
                          ", O " + std::to_string(o_in) + "->" + std::to_string(o_out) + ")");
    }
}

ProductSpec methane()
{
    return {"methane", Formula::parse("CH4"), Reaction{1, 4, 1, 2}};
}

ProductSpec methanol()
{
    return {"methanol", Formula::parse("CH3OH"), Reaction{1, 3, 1, 1}};
}

ProductSpec ethanol()
{
    return {"ethanol", Formula::parse("C2H6O"), Reaction{2, 6, 1, 3}};
}

std::vector<ProductSpec> builtin_products()
{
    return {methane(), methanol(), ethanol()};
}

MassRatios stoichiometry(const ProductSpec& product)
{
    const auto& r = product.reaction();
    const double co2_mass = r.co2 * kCO2.molar_mass();
    MassRatios m;
    m.xi_h = r.h2 * kH2.molar_mass() / co2_mass;
    m.xi_chi = r.product * product.formula().molar_mass() / co2_mass;
    // Electrolysis splits one H2O per H2 delivered.
    m.water_demand = r.h2 * kH2O.molar_mass() / co2_mass;
    m.water_byproduct = r.h2o * kH2O.molar_mass() / co2_mass;
    return m;
}

NexusRates nexus_rates(const PlantSpec& plant, const ProductSpec& product, double beta)
{
    check_beta(beta);
    const MassRatios m = stoichiometry(product);
    const Quantity c_bar = emissions_at_capacity(plant);
    const Quantity reused = beta * c_bar;
    return {m.xi_h * reused, electrolysis_water(m, c_bar, beta), m.xi_chi * reused};
}

Quantity electrolysis_water(const MassRatios& ratios, const Quantity& carbon_flow, double beta)
{
    carbon_flow.require(dims::mass_flow, "carbon flow");
    // 1 kg of water == 1 L == 1e-3 m3.
    const Quantity litre_per_kg{1e-3, dims::volume / dims::mass};
    return ratios.water_demand * (beta * carbon_flow) * litre_per_kg;
}

Quantity power_capital(const Quantity& h_max, const EconParams& econ)
{
    h_max.require(dims::mass_flow, "hydrogen capacity H-bar");
    if (h_max.value() < 0.0) {
        throw DomainError("hydrogen capacity H-bar must be >= 0");
    }
    const Quantity electrolyser_load = econ.xi_p * h_max;
    return econ.c_wind * electrolyser_load / econ.wind_capacity_factor;
}

Quantity hydrogen_capital(const PlantSpec& plant, const ProductSpec& product, double beta, const EconParams& econ)
{
    return nexus_rates(plant, product, beta).hydrogen * econ.c_we;
}

Quantity chemical_revenue(const ProductSpec& product, const TimeSeries& captured, double beta,
                          const EconParams& econ)
{
    check_beta(beta);
    if (captured.dimension() != dims::mass_flow) {
        throw DimensionError("captured carbon series must be a mass flow");
    }
    const Quantity& price = econ.price_of(product.name());
    const double xi_chi = stoichiometry(product).xi_chi;
    const Quantity sales = price * (xi_chi * beta * captured.integral()) / captured.duration();
    if (sales.value() == 0.0) {
        return sales;
    }
    return -sales;
}

}  // namespace ewh
