#include "ewh/analysis.hpp"

#include "ewh/error.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

namespace ewh {

std::vector<SweepRow> scenario_sweep(const SweepGrid& grid, const EconParams& econ, unsigned threads)
{
    if (grid.plants.empty()) {
        throw DomainError("sweep needs at least one plant");
    }
    if (grid.betas.empty()) {
        throw DomainError("sweep needs at least one reuse fraction");
    }
    for (double b : grid.betas) {
        if (!(b >= 0.0 && b <= 1.0)) {
            throw DomainError("sweep reuse fraction " + format_double(b) + " outside [0, 1]");
        }
    }
    std::vector<double> betas;
    for (double b : grid.betas) {
        if (b > 0.0) {
            betas.push_back(b);
        }
    }
    std::sort(betas.begin(), betas.end());
    betas.erase(std::unique(betas.begin(), betas.end()), betas.end());

    struct Cell {
        const PlantSpec* plant;
        const ProductSpec* product;
        double beta;
    };
    std::vector<Cell> cells;
    for (const auto& plant : grid.plants) {
        cells.push_back({&plant, nullptr, 0.0});
        for (const auto& product : grid.products) {
            for (double b : betas) {
                cells.push_back({&plant, &product, b});
            }
        }
    }

    std::vector<SweepRow> rows(cells.size());
    auto evaluate = [&](std::size_t i) {
        const Cell& c = cells[i];
        SweepRow& row = rows[i];
        row.plant = c.plant->name();
        row.product = c.product ? c.product->name() : "";
        row.beta = c.beta;
        try {
            ScenarioConfig s{*c.plant, std::nullopt, c.beta, grid.water, grid.w_max, econ};
            if (c.product) {
                s.product = *c.product;
            }
            row.result = total_daily_cost(s);
        } catch (const Error& e) {
            row.error = "plant=" + row.plant + " product=" + (row.product.empty() ? "-" : row.product) +
                        " beta=" + format_double(row.beta) + ": " + e.what();
        }
    };

    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    threads = std::min<unsigned>(threads, static_cast<unsigned>(cells.size()));
    if (threads <= 1) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            evaluate(i);
        }
        return rows;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> workers;
    for (unsigned t = 0; t < threads; ++t) {
        workers.emplace_back([&] {
            for (std::size_t i = next++; i < cells.size(); i = next++) {
                evaluate(i);
            }
        });
    }
    workers.clear();
    return rows;
}

NoCrossingError::NoCrossingError(std::string message, Quantity gap_lo, Quantity gap_hi)
    : DomainError(std::move(message)), gap_lo_(gap_lo), gap_hi_(gap_hi)
{
}

Quantity breakeven_gap(const BreakevenQuery& q, const EconParams& econ, const Quantity& distance)
{
    ScenarioConfig base{q.plant, q.product, q.beta, Desalination{}, std::nullopt, econ};
    ScenarioConfig pipe = base;
    pipe.water = NetworkTransfer{distance};
    return total_daily_cost(pipe).daily_cost - total_daily_cost(base).daily_cost;
}

BreakevenResult breakeven_distance(const BreakevenQuery& q, const EconParams& econ)
{
    q.d_lo.require(dims::length, "lower distance bound");
    q.d_hi.require(dims::length, "upper distance bound");
    q.tolerance.require(dims::length, "tolerance");
    if (!(q.d_lo < q.d_hi)) {
        throw DomainError("break-even bounds need d_lo < d_hi");
    }
    if (!(q.tolerance.value() > 0.0)) {
        throw DomainError("break-even tolerance must be > 0");
    }

    Quantity lo = q.d_lo;
    Quantity hi = q.d_hi;
    const Quantity g_lo = breakeven_gap(q, econ, lo);
    const Quantity g_hi = breakeven_gap(q, econ, hi);
    const auto km = [](const Quantity& d) { return d.format("km"); };
    const auto usd = [](const Quantity& g) { return g.format("$/day"); };
    if (g_lo.value() > 0.0 || g_hi.value() < 0.0) {
        throw NoCrossingError("no break-even for plant '" + q.plant.name() + "' between " + km(lo) + " and " +
                                  km(hi) + ": transfer minus desalination is " + usd(g_lo) + " at " + km(lo) +
                                  " and " + usd(g_hi) + " at " + km(hi),
                              g_lo, g_hi);
    }

    // The gap grows with distance (pipe capital and friction both do), so
    // plain bisection on its sign converges.
    int iterations = 0;
    while ((hi - lo) > q.tolerance) {
        const Quantity mid = 0.5 * (lo + hi);
        if (breakeven_gap(q, econ, mid).value() < 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
        ++iterations;
    }
    return {0.5 * (lo + hi), iterations};
}

std::vector<CurveCell> transfer_cost_curve(const PlantSpec& plant, const ProductSpec& product,
                                           const std::vector<Quantity>& distances,
                                           const std::vector<Quantity>& flows, const EconParams& econ)
{
    if (distances.empty() || flows.empty()) {
        throw DomainError("transfer cost curve needs at least one distance and one flow");
    }
    econ.validate();
    const Quantity w_max = nexus_rates(plant, product, 1.0).water;
    const AnnualizationPolicy policy = AnnualizationPolicy::from(econ);

    std::vector<CurveCell> cells;
    for (const auto& d : distances) {
        for (const auto& f : flows) {
            CurveCell cell{d, f, std::nullopt, std::nullopt, std::nullopt, {}};
            try {
                f.require(dims::volume_flow, "flow");
                if (f > w_max) {
                    throw DomainError("flow " + f.format("m3/h") + " exceeds the pipe capacity " +
                                      w_max.format("m3/h"));
                }
                const WaterSupplyPlan plan(NetworkTransfer{d}, w_max);
                cell.capital = daily_capital_charge(water_capital(plan, econ), policy);
                cell.operational = water_operational(plan, constant_profile(f, econ.operating_hours), econ);
                cell.total = *cell.capital + *cell.operational;
            } catch (const Error& e) {
                cell.error = e.what();
            }
            cells.push_back(std::move(cell));
        }
    }
    return cells;
}

Quantity penalty_threshold(const PlantSpec& plant, const CarbonStrategy& strategy, const EconParams& econ,
                           const WaterMode& water)
{
    ScenarioConfig s{plant, std::nullopt, 0.0, water, std::nullopt, econ};
    if (const auto* reuse = std::get_if<ReuseAll>(&strategy)) {
        s.product = reuse->product;
        s.beta = 1.0;
    }
    return total_daily_cost(s).carbon_penalty;
}

}  // namespace ewh
