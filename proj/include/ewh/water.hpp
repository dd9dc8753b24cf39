#pragma once

#include "ewh/domain.hpp"

#include <array>
#include <variant>

namespace ewh {

struct Desalination {};
struct NetworkTransfer {
    Quantity distance;  // pipe length between the water network and the plant
};
struct SolarSeawater {};

/// Exactly one supply method; the variant makes any other mix unrepresentable.
using WaterMode = std::variant<Desalination, NetworkTransfer, SolarSeawater>;

std::string_view mode_name(const WaterMode& mode);

/// Water supply for the electrolysers: the chosen method and the maximum
/// production capacity W-bar it is built for.
class WaterSupplyPlan {
public:
    /// Throws DomainError unless w_max > 0 and any transfer distance is >= 0.
    WaterSupplyPlan(WaterMode mode, Quantity w_max);

    const WaterMode& mode() const noexcept { return mode_; }
    const Quantity& w_max() const noexcept { return w_max_; }

    /// Binary selector (desalination, transfer, solar-seawater); always sums to 1.
    std::array<int, 3> alpha() const noexcept;

private:
    WaterMode mode_;
    Quantity w_max_;
};

/// Index (1..4) of the desalination load segment containing f. Segments are
/// (0.25(k-1) W-bar, 0.25k W-bar], with f = 0 assigned to segment 1.
int desal_segment(const Quantity& flow, const Quantity& w_max);

/// Reverse-osmosis power demand e_des[k] * f. Throws DomainError for f < 0 or f > W-bar.
Quantity desal_power(const Quantity& flow, const Quantity& w_max, const EconParams& econ);

/// Friction head along the pipe, r_w * f^2.
Quantity head_loss(const Quantity& flow, const Quantity& r_w);

/// Pump electrical power needed to restore the friction head:
/// 2.725 * head * f / eta watts, for f in m3/h and head in m.
Quantity pump_power(const Quantity& flow, const Quantity& r_w, double eta);

/// Capital of the water section for the selected method.
Quantity water_capital(const WaterSupplyPlan& plan, const EconParams& econ);

/// Daily electricity cost of desalination or pumping over a flow series;
/// zero for the solar-seawater method.
Quantity water_operational(const WaterSupplyPlan& plan, const TimeSeries& flow, const EconParams& econ);

}  // namespace ewh
