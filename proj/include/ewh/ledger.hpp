#pragma once

#include "ewh/quantity.hpp"

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ewh {

/// Which cost formula produced a ledger entry.
enum class CostTerm {
    CcssCapital,        // capture plant plus transfer pipeline
    CcssOperational,    // capture and transfer running cost
    PowerCapital,       // wind farm feeding the electrolysers
    WaterCapital,       // desalination plant, transfer pipe or solar-seawater unit
    WaterOperational,   // desalination or pumping electricity
    HydrogenCapital,    // electrolyser fleet
    ChemicalRevenue,    // product sales (negative cost)
    CapitalCharge,      // annualised capital, per day
};

std::string_view to_string(CostTerm term);

enum class CostKind {
    Capital,      // $
    CapitalCharge,  // $/day
    Operational,  // $/day
    Revenue,      // $/day, negative
};

std::string_view to_string(CostKind kind);

struct LedgerItem {
    std::string label;
    CostTerm term;
    CostKind kind;
    Quantity amount;
};

/// Itemised capital and daily flows of one scenario.
class CostLedger {
public:
    /// Throws DimensionError if `amount` does not match `kind` ($ for capital, $/day otherwise).
    void add(std::string label, CostTerm term, CostKind kind, Quantity amount);

    std::span<const LedgerItem> items() const noexcept { return items_; }

    /// Sum of the capital items, in $.
    Quantity capital_total() const;
    /// Sum of every per-day item (capital charge, operational, revenue).
    Quantity daily_total() const;
    /// Sum of the items of one kind.
    Quantity total(CostKind kind) const;

private:
    std::vector<LedgerItem> items_;
};

/// Order-independent sum: the result does not depend on the order of `values`.
double stable_sum(std::vector<double> values);

}  // namespace ewh
