#include "ewh/ledger.hpp"

#include "ewh/error.hpp"

#include <algorithm>
#include <cmath>

namespace ewh {

std::string_view to_string(CostTerm term)
{
    switch (term) {
    case CostTerm::CcssCapital: return "ccss_capital";
    case CostTerm::CcssOperational: return "ccss_operational";
    case CostTerm::PowerCapital: return "power_capital";
    case CostTerm::WaterCapital: return "water_capital";
    case CostTerm::WaterOperational: return "water_operational";
    case CostTerm::HydrogenCapital: return "hydrogen_capital";
    case CostTerm::ChemicalRevenue: return "chemical_revenue";
    case CostTerm::CapitalCharge: return "capital_charge";
    }
    return "unknown";
}

std::string_view to_string(CostKind kind)
{
    switch (kind) {
    case CostKind::Capital: return "capital";
    case CostKind::CapitalCharge: return "capital_charge";
    case CostKind::Operational: return "operational";
    case CostKind::Revenue: return "revenue";
    }
    return "unknown";
}

void CostLedger::add(std::string label, CostTerm term, CostKind kind, Quantity amount)
{
    amount.require(kind == CostKind::Capital ? dims::money : dims::money_rate, label);
    items_.push_back({std::move(label), term, kind, amount});
}

Quantity CostLedger::total(CostKind kind) const
{
    std::vector<double> v;
    for (const auto& i : items_) {
        if (i.kind == kind) {
            v.push_back(i.amount.value());
        }
    }
    return {stable_sum(std::move(v)), kind == CostKind::Capital ? dims::money : dims::money_rate};
}

Quantity CostLedger::capital_total() const
{
    return total(CostKind::Capital);
}

Quantity CostLedger::daily_total() const
{
    std::vector<double> v;
    for (const auto& i : items_) {
        if (i.kind != CostKind::Capital) {
            v.push_back(i.amount.value());
        }
    }
    return {stable_sum(std::move(v)), dims::money_rate};
}

double stable_sum(std::vector<double> values)
{
    // Sorting fixes the summation order; Neumaier compensation keeps the
    // result close to the exact sum.
    std::sort(values.begin(), values.end(), [](double a, double b) {
        if (std::abs(a) != std::abs(b)) {
            return std::abs(a) < std::abs(b);
        }
        return a < b;
    });
    double sum = 0.0;
    double comp = 0.0;
    for (double x : values) {
        double t = sum + x;
        if (std::abs(sum) >= std::abs(x)) {
            comp += (sum - t) + x;
        } else {
            comp += (x - t) + sum;
        }
        sum = t;
    }
    return sum + comp;
}

}  // namespace ewh
