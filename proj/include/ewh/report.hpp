#pragma once

#include "ewh/analysis.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace ewh {

enum class OutputFormat { Table, Csv, Json };

/// Parses "table", "csv" or "json".
OutputFormat parse_format(std::string_view name);

/// Exact header of the sweep CSV.
inline constexpr std::string_view kSweepCsvHeader =
    "plant,product,beta,capital_usd,operational_usd_per_day,revenue_usd_per_day,daily_cost_usd_per_day,"
    "increased_price_usd_per_kwh,carbon_penalty_usd_per_ton";

/// Four significant digits, '.' separator, no exponent for ordinary magnitudes.
std::string significant(double v, int digits = 4);

void write_sweep(std::ostream& out, const std::vector<SweepRow>& rows, OutputFormat format);

void write_scenario(std::ostream& out, const ScenarioResult& result, OutputFormat format);

struct BreakevenReport {
    std::string plant;
    std::string product;
    std::optional<BreakevenResult> result;
    std::string error;  // no crossing inside the bounds
};

void write_breakeven(std::ostream& out, const std::vector<BreakevenReport>& reports, OutputFormat format);

struct CurveReport {
    std::string plant;
    std::string product;
    std::vector<CurveCell> cells;
};

void write_curve(std::ostream& out, const CurveReport& curve, OutputFormat format);

struct PenaltyRow {
    std::string plant;
    std::string strategy;  // "store_all" or "reuse_all:<product>"
    std::optional<Quantity> threshold;
    std::string error;
};

void write_penalties(std::ostream& out, const std::vector<PenaltyRow>& rows, OutputFormat format);

}  // namespace ewh
