#pragma once

#include "ewh/domain.hpp"

#include <string>
#include <vector>

namespace ewh {

/// Element counts of a C/H/O molecule.
struct Formula {
    int c = 0;
    int h = 0;
    int o = 0;

    /// Parses formulas such as "CH4", "CH3OH" or "C2H6O". Only C, H and O are accepted.
    static Formula parse(std::string_view text);

    /// Molar mass in kg/mol from standard atomic weights.
    double molar_mass() const;
    bool operator==(const Formula&) const = default;
};

/// Synthesis route a CO2 + b H2 -> c product + d H2O.
struct Reaction {
    int co2 = 1;
    int h2 = 0;
    int product = 1;
    int h2o = 0;
};

/// Mass ratios per kg of CO2 reused.
struct MassRatios {
    double xi_h = 0.0;          // kg H2
    double xi_chi = 0.0;        // kg product
    double water_demand = 0.0;  // litres of electrolysis feed water (1 kg == 1 L)
    double water_byproduct = 0.0;  // kg H2O released by the synthesis
};

/// A chemical product made from captured CO2 and electrolytic hydrogen.
class ProductSpec {
public:
    /// Throws DomainError if the reaction does not balance in C, H and O.
    ProductSpec(std::string name, Formula formula, Reaction reaction);

    const std::string& name() const noexcept { return name_; }
    const Formula& formula() const noexcept { return formula_; }
    const Reaction& reaction() const noexcept { return reaction_; }

private:
    std::string name_;
    Formula formula_;
    Reaction reaction_;
};

ProductSpec methane();   // CO2 + 4 H2 -> CH4 + 2 H2O
ProductSpec methanol();  // CO2 + 3 H2 -> CH3OH + H2O
ProductSpec ethanol();   // 2 CO2 + 6 H2 -> C2H6O + 3 H2O
std::vector<ProductSpec> builtin_products();

/// Mass ratios derived from the balanced reaction.
MassRatios stoichiometry(const ProductSpec& product);

struct NexusRates {
    Quantity hydrogen;  // mass flow
    Quantity water;     // volume flow
    Quantity product;   // mass flow
};

/// Hydrogen, electrolysis water and product flows when a fraction beta of the
/// plant's full-load carbon is reused.
NexusRates nexus_rates(const PlantSpec& plant, const ProductSpec& product, double beta);

/// Electrolysis feed water for a carbon flow of which a fraction beta is reused.
Quantity electrolysis_water(const MassRatios& ratios, const Quantity& carbon_flow, double beta);

/// Wind farm sized to run electrolysers producing `h_max` at the wind capacity factor:
/// c_wind * xi_p * H-bar / capacity_factor.
Quantity power_capital(const Quantity& h_max, const EconParams& econ);

/// Electrolyser fleet sized to the peak hydrogen demand: xi_h * beta * C-bar * c_we.
Quantity hydrogen_capital(const PlantSpec& plant, const ProductSpec& product, double beta, const EconParams& econ);

/// Product sales as a negative daily cost: -sum_t price * xi_chi * beta * c_t.
Quantity chemical_revenue(const ProductSpec& product, const TimeSeries& captured, double beta,
                          const EconParams& econ);

}  // namespace ewh
