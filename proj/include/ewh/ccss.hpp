#pragma once

#include "ewh/domain.hpp"

namespace ewh {

/// Split of captured carbon between storage and reuse. beta = 0 sends all of
/// it through the transfer pipeline to storage; beta = 1 reuses all of it.
/// Transfer is always by pipeline.
class CcssPlan {
public:
    /// Throws DomainError unless 0 <= beta <= 1.
    explicit CcssPlan(double beta);

    double beta() const noexcept { return beta_; }

private:
    double beta_;
};

/// Capital of the capture plant plus the transfer pipeline:
/// ((1 - beta) * c_cts + c_ccs) * C-bar. The transfer unit cost is looked up
/// from its tier table at the plant's full-load carbon flow.
Quantity ccss_capital(const CcssPlan& plan, const PlantSpec& plant, const EconParams& econ);

/// Daily running cost of capture and transfer over a captured-carbon series:
/// sum_t ((1 - beta) * c_t * r_cts + c_t * r_ccs), reported per day.
Quantity ccss_operational(const CcssPlan& plan, const TimeSeries& captured, const EconParams& econ);

/// Captured carbon at full load over the econ's operating horizon.
TimeSeries full_load_capture(const PlantSpec& plant, const EconParams& econ);

}  // namespace ewh
