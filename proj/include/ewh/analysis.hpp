#pragma once

#include "ewh/economics.hpp"
#include "ewh/error.hpp"

#include <variant>
#include <vector>

namespace ewh {

/// Axes of a scenario sweep. Every plant also gets a pure-storage row.
struct SweepGrid {
    std::vector<PlantSpec> plants;
    std::vector<ProductSpec> products;
    std::vector<double> betas{0.5, 1.0};
    WaterMode water = Desalination{};
    std::optional<Quantity> w_max;
};

struct SweepRow {
    std::string plant;
    std::string product;  // empty for the storage row
    double beta = 0.0;
    std::optional<ScenarioResult> result;
    std::string error;  // set when the cell failed; the rest of the sweep still runs
};

/// Rows ordered by plant, then storage row, then product, then ascending beta.
/// Cells are independent and may be evaluated on `threads` workers (0 = hardware
/// concurrency); the output order never depends on completion order.
std::vector<SweepRow> scenario_sweep(const SweepGrid& grid, const EconParams& econ, unsigned threads = 1);

struct BreakevenQuery {
    PlantSpec plant;
    ProductSpec product;
    Quantity d_lo{1.0, units::km};
    Quantity d_hi{1000.0, units::km};
    Quantity tolerance{0.5, units::km};
    double beta = 1.0;
};

/// No break-even inside the search bounds.
class NoCrossingError : public DomainError {
public:
    NoCrossingError(std::string message, Quantity gap_lo, Quantity gap_hi);
    const Quantity& gap_lo() const noexcept { return gap_lo_; }
    const Quantity& gap_hi() const noexcept { return gap_hi_; }

private:
    Quantity gap_lo_;
    Quantity gap_hi_;
};

struct BreakevenResult {
    Quantity distance;
    int iterations = 0;
};

/// Daily cost of supplying water over a pipe of length `distance` minus the
/// daily cost of local desalination, for otherwise identical scenarios.
Quantity breakeven_gap(const BreakevenQuery& query, const EconParams& econ, const Quantity& distance);

/// Pipe length at which network transfer and desalination cost the same,
/// found by bisection to within the query tolerance. Throws NoCrossingError
/// when the gap does not change sign over the bounds.
BreakevenResult breakeven_distance(const BreakevenQuery& query, const EconParams& econ);

struct CurveCell {
    Quantity distance;
    Quantity flow;
    std::optional<Quantity> capital;      // annualised pipe capital, $/day
    std::optional<Quantity> operational;  // pumping electricity, $/day
    std::optional<Quantity> total;
    std::string error;
};

/// Daily cost of transferring each flow over each distance, for a pipe built
/// to the plant's full-reuse water demand of `product`. Row-major over distances.
std::vector<CurveCell> transfer_cost_curve(const PlantSpec& plant, const ProductSpec& product,
                                           const std::vector<Quantity>& distances,
                                           const std::vector<Quantity>& flows, const EconParams& econ);

struct StoreAll {};
struct ReuseAll {
    ProductSpec product;
};
using CarbonStrategy = std::variant<StoreAll, ReuseAll>;

/// Lowest emission penalty at which adopting `strategy` beats emitting and
/// paying. Negative when the strategy earns money outright.
Quantity penalty_threshold(const PlantSpec& plant, const CarbonStrategy& strategy, const EconParams& econ,
                           const WaterMode& water = Desalination{});

}  // namespace ewh
