#include "ewh/ccss.hpp"

#include "ewh/error.hpp"

namespace ewh {

CcssPlan::CcssPlan(double beta) : beta_(beta)
{
    if (!(beta >= 0.0 && beta <= 1.0)) {
        throw DomainError("reuse fraction beta must lie in [0, 1], got " + format_double(beta));
    }
}

Quantity ccss_capital(const CcssPlan& plan, const PlantSpec& plant, const EconParams& econ)
{
    const Quantity c_bar = emissions_at_capacity(plant);
    const Quantity c_cts = econ.c_cts.at(c_bar);
    return ((1.0 - plan.beta()) * c_cts + econ.c_ccs) * c_bar;
}

Quantity ccss_operational(const CcssPlan& plan, const TimeSeries& captured, const EconParams& econ)
{
    if (captured.dimension() != dims::mass_flow) {
        throw DimensionError("captured carbon series must be a mass flow");
    }
    // Sum the carbon first; the rates then multiply one exact total.
    const Quantity carbon = captured.integral();
    const Quantity cost = (1.0 - plan.beta()) * carbon * econ.r_cts + carbon * econ.r_ccs;
    return cost / captured.duration();
}

TimeSeries full_load_capture(const PlantSpec& plant, const EconParams& econ)
{
    return constant_profile(emissions_at_capacity(plant) * econ.capture_efficiency, econ.operating_hours);
}

}  // namespace ewh
