#include "ewh/water.hpp"

#include "ewh/error.hpp"

#include <cmath>

namespace ewh {

namespace {

// W per (m * m3/h): rho * g / 3600 for water, as used by the pump relation.
constexpr double kPumpConstant = 2.725;

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void check_flow(const Quantity& flow)
{
    flow.require(dims::volume_flow, "water flow");
    if (flow.value() < 0.0) {
        throw DomainError("water flow must be >= 0, got " + flow.format("m3/h"));
    }
}

}  // namespace

std::string_view mode_name(const WaterMode& mode)
{
    return std::visit(overloaded{
                          [](const Desalination&) { return std::string_view("desalination"); },
                          [](const NetworkTransfer&) { return std::string_view("network_transfer"); },
                          [](const SolarSeawater&) { return std::string_view("solar_seawater"); },
                      },
                      mode);
}

WaterSupplyPlan::WaterSupplyPlan(WaterMode mode, Quantity w_max) : mode_(std::move(mode)), w_max_(std::move(w_max))
{
    w_max_.require(dims::volume_flow, "water capacity W-bar");
    if (!(w_max_.value() > 0.0)) {
        throw DomainError("water capacity W-bar must be > 0");
    }
    if (const auto* t = std::get_if<NetworkTransfer>(&mode_)) {
        t->distance.require(dims::length, "transfer distance");
        if (t->distance.value() < 0.0) {
            throw DomainError("transfer distance must be >= 0");
        }
    }
}

std::array<int, 3> WaterSupplyPlan::alpha() const noexcept
{
    std::array<int, 3> a{0, 0, 0};
    a[mode_.index()] = 1;
    return a;
}

int desal_segment(const Quantity& flow, const Quantity& w_max)
{
    check_flow(flow);
    w_max.require(dims::volume_flow, "water capacity W-bar");
    if (flow.value() > w_max.value()) {
        throw DomainError("water flow " + flow.format("m3/h") + " exceeds capacity W-bar " + w_max.format("m3/h"));
    }
    const double f = flow.value();
    const double w = w_max.value();
    for (int k = 1; k < 4; ++k) {
        if (f <= 0.25 * k * w) {
            return k;
        }
    }
    return 4;
}

Quantity desal_power(const Quantity& flow, const Quantity& w_max, const EconParams& econ)
{
    const int k = desal_segment(flow, w_max);
    return econ.e_des[static_cast<std::size_t>(k - 1)] * flow;
}

Quantity head_loss(const Quantity& flow, const Quantity& r_w)
{
    check_flow(flow);
    r_w.require(dims::head_loss_coefficient, "head-loss coefficient");
    return r_w * flow * flow;
}

Quantity pump_power(const Quantity& flow, const Quantity& r_w, double eta)
{
    if (!(eta > 0.0 && eta <= 1.0)) {
        throw DomainError("pump efficiency must lie in (0, 1], got " + format_double(eta));
    }
    const double head_m = head_loss(flow, r_w).in(units::m);
    const double f = flow.in(units::m3 / units::h);
    return Quantity{kPumpConstant * head_m * f / eta, units::W};
}

Quantity water_capital(const WaterSupplyPlan& plan, const EconParams& econ)
{
    return std::visit(overloaded{
                          [&](const Desalination&) { return plan.w_max() * econ.c_des; },
                          [&](const NetworkTransfer& t) {
                              if (econ.pipe_cost_basis == PipeCostBasis::CapacityLength) {
                                  return plan.w_max() * econ.c_tw * t.distance;
                              }
                              return econ.c_tw * t.distance;
                          },
                          [&](const SolarSeawater&) {
                              if (!econ.c_sw) {
                                  throw DomainError(
                                      "solar-seawater water supply needs c_sw (unit capital cost); none configured");
                              }
                              return plan.w_max() * *econ.c_sw;
                          },
                      },
                      plan.mode());
}

Quantity water_operational(const WaterSupplyPlan& plan, const TimeSeries& flow, const EconParams& econ)
{
    if (flow.dimension() != dims::volume_flow) {
        throw DimensionError("water flow series must be a volume flow");
    }
    const Quantity zero{0.0, dims::money_rate};
    if (std::holds_alternative<SolarSeawater>(plan.mode())) {
        return zero;
    }
    Quantity energy{0.0, dims::energy};
    for (std::size_t t = 0; t < flow.size(); ++t) {
        const Quantity f = flow.at(t);
        Quantity p = std::visit(overloaded{
                                    [&](const Desalination&) { return desal_power(f, plan.w_max(), econ); },
                                    [&](const NetworkTransfer& tr) {
                                        if (f > plan.w_max()) {
                                            throw DomainError("water flow " + f.format("m3/h") +
                                                              " exceeds capacity W-bar " + plan.w_max().format("m3/h"));
                                        }
                                        return pump_power(f, econ.r_w_at(tr.distance), econ.eta_pump);
                                    },
                                    [&](const SolarSeawater&) { return Quantity{0.0, dims::power}; },
                                },
                                plan.mode());
        energy += p * flow.step();
    }
    return econ.elec_price * energy / flow.duration();
}

}  // namespace ewh
