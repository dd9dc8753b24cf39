#include "ewh/report.hpp"

#include "ewh/error.hpp"

#include "json.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>

namespace ewh {

using ordered_json = nlohmann::ordered_json;

namespace {

constexpr Unit kPerDay = units::usd / units::day;
constexpr Unit kPerKWh = units::usd / units::kWh;
constexpr Unit kPerTon = units::usd / units::ton;
constexpr Unit kMusdPerDay = units::musd / units::day;
constexpr Unit kFlow = units::m3 / units::h;

// Shortest round-trip text; -0 is printed as 0 so reruns diff cleanly.
std::string full(double v)
{
    return format_double(v == 0.0 ? 0.0 : v);
}

class TextTable {
public:
    explicit TextTable(std::vector<std::string> header, std::size_t left_columns = 1)
        : header_(std::move(header)), left_(left_columns)
    {
    }

    void row(std::vector<std::string> cells) { rows_.push_back(std::move(cells)); }

    void print(std::ostream& out) const
    {
        std::vector<std::size_t> width(header_.size(), 0);
        auto grow = [&](const std::vector<std::string>& r) {
            for (std::size_t i = 0; i < r.size() && i < width.size(); ++i) {
                width[i] = std::max(width[i], r[i].size());
            }
        };
        grow(header_);
        for (const auto& r : rows_) {
            grow(r);
        }
        auto line = [&](const std::vector<std::string>& r) {
            for (std::size_t i = 0; i < r.size(); ++i) {
                const std::string pad(width[i] - r[i].size(), ' ');
                out << (i ? "  " : "") << (i < left_ ? r[i] + pad : pad + r[i]);
            }
            out << '\n';
        };
        line(header_);
        std::size_t total = 0;
        for (auto w : width) {
            total += w + 2;
        }
        out << std::string(total - 2, '-') << '\n';
        for (const auto& r : rows_) {
            line(r);
        }
    }

private:
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
    std::size_t left_;
};

std::string product_label(const std::string& product)
{
    return product.empty() ? "storage" : product;
}

}  // namespace

OutputFormat parse_format(std::string_view name)
{
    if (name == "table") {
        return OutputFormat::Table;
    }
    if (name == "csv") {
        return OutputFormat::Csv;
    }
    if (name == "json") {
        return OutputFormat::Json;
    }
    throw ConfigError({"unknown output format '" + std::string(name) + "' (table, csv, json)"});
}

std::string significant(double v, int digits)
{
    if (v == 0.0) {
        return "0";
    }
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, digits);
    if (ec != std::errc{}) {
        throw Error("number formatting failed");
    }
    return std::string(buf, ptr);
}

void write_sweep(std::ostream& out, const std::vector<SweepRow>& rows, OutputFormat format)
{
    switch (format) {
    case OutputFormat::Csv:
        out << kSweepCsvHeader << '\n';
        for (const auto& row : rows) {
            out << row.plant << ',' << row.product << ',' << full(row.beta);
            if (const auto& r = row.result) {
                out << ',' << full(r->capital.in(units::usd)) << ',' << full(r->operational.in(kPerDay)) << ','
                    << full(r->revenue.in(kPerDay)) << ',' << full(r->daily_cost.in(kPerDay)) << ','
                    << full(r->increased_price.in(kPerKWh)) << ',' << full(r->carbon_penalty.in(kPerTon));
            } else {
                out << ",,,,,,";
            }
            out << '\n';
        }
        return;
    case OutputFormat::Json: {
        ordered_json arr = ordered_json::array();
        for (const auto& row : rows) {
            ordered_json j;
            j["plant"] = row.plant;
            j["product"] = row.product;
            j["beta"] = row.beta;
            if (const auto& r = row.result) {
                j["capital_usd"] = r->capital.in(units::usd);
                j["operational_usd_per_day"] = r->operational.in(kPerDay);
                j["revenue_usd_per_day"] = r->revenue.in(kPerDay);
                j["daily_cost_usd_per_day"] = r->daily_cost.in(kPerDay);
                j["increased_price_usd_per_kwh"] = r->increased_price.in(kPerKWh);
                j["carbon_penalty_usd_per_ton"] = r->carbon_penalty.in(kPerTon);
            } else {
                j["error"] = row.error;
            }
            arr.push_back(std::move(j));
        }
        out << ordered_json{{"sweep", arr}}.dump(2) << '\n';
        return;
    }
    case OutputFormat::Table: {
        TextTable t({"plant", "product", "beta", "capital M$", "operation M$/day", "revenue M$/day",
                     "daily cost M$/day", "price $/kWh", "penalty $/ton"},
                    2);
        for (const auto& row : rows) {
            if (const auto& r = row.result) {
                t.row({row.plant, product_label(row.product), full(row.beta), significant(r->capital.in(units::musd)),
                       significant(r->operational.in(kMusdPerDay)), significant(r->revenue.in(kMusdPerDay)),
                       significant(r->daily_cost.in(kMusdPerDay)), significant(r->increased_price.in(kPerKWh)),
                       significant(r->carbon_penalty.in(kPerTon))});
            } else {
                t.row({row.plant, product_label(row.product), full(row.beta), "error", "", "", "", "", ""});
            }
        }
        t.print(out);
        for (const auto& row : rows) {
            if (!row.result) {
                out << "error: " << row.error << '\n';
            }
        }
        return;
    }
    }
}

void write_scenario(std::ostream& out, const ScenarioResult& r, OutputFormat format)
{
    auto amount = [](const LedgerItem& item) {
        return item.kind == CostKind::Capital ? item.amount.in(units::usd) : item.amount.in(kPerDay);
    };
    auto unit = [](const LedgerItem& item) { return item.kind == CostKind::Capital ? "$" : "$/day"; };

    switch (format) {
    case OutputFormat::Csv:
        out << "item,term,kind,value,unit\n";
        for (const auto& item : r.ledger.items()) {
            out << item.label << ',' << to_string(item.term) << ',' << to_string(item.kind) << ','
                << full(amount(item)) << ',' << unit(item) << '\n';
        }
        out << "capital,total,capital," << full(r.capital.in(units::usd)) << ",$\n";
        out << "daily cost,total,daily," << full(r.daily_cost.in(kPerDay)) << ",$/day\n";
        out << "increased price,metric,price," << full(r.increased_price.in(kPerKWh)) << ",$/kWh\n";
        out << "carbon penalty,metric,penalty," << full(r.carbon_penalty.in(kPerTon)) << ",$/ton\n";
        return;
    case OutputFormat::Json: {
        ordered_json items = ordered_json::array();
        for (const auto& item : r.ledger.items()) {
            items.push_back({{"label", item.label},
                             {"term", to_string(item.term)},
                             {"kind", to_string(item.kind)},
                             {"value", amount(item)},
                             {"unit", unit(item)}});
        }
        ordered_json j;
        j["plant"] = r.plant;
        j["product"] = r.product;
        j["beta"] = r.beta;
        j["water_mode"] = r.water_mode;
        j["ledger"] = items;
        j["capital_usd"] = r.capital.in(units::usd);
        j["operational_usd_per_day"] = r.operational.in(kPerDay);
        j["revenue_usd_per_day"] = r.revenue.in(kPerDay);
        j["daily_cost_usd_per_day"] = r.daily_cost.in(kPerDay);
        j["increased_price_usd_per_kwh"] = r.increased_price.in(kPerKWh);
        j["carbon_penalty_usd_per_ton"] = r.carbon_penalty.in(kPerTon);
        out << j.dump(2) << '\n';
        return;
    }
    case OutputFormat::Table: {
        out << "plant " << r.plant << ", " << product_label(r.product) << ", beta " << full(r.beta) << ", water "
            << r.water_mode << "\n\n";
        TextTable t({"item", "kind", "M$ or M$/day"}, 2);
        for (const auto& item : r.ledger.items()) {
            t.row({item.label, std::string(to_string(item.kind)), significant(amount(item) / 1e6)});
        }
        t.print(out);
        out << "\ncapital          " << significant(r.capital.in(units::musd)) << " M$\n"
            << "daily cost       " << significant(r.daily_cost.in(kMusdPerDay)) << " M$/day\n"
            << "increased price  " << significant(r.increased_price.in(kPerKWh)) << " $/kWh\n"
            << "carbon penalty   " << significant(r.carbon_penalty.in(kPerTon)) << " $/ton\n";
        return;
    }
    }
}

void write_breakeven(std::ostream& out, const std::vector<BreakevenReport>& reports, OutputFormat format)
{
    switch (format) {
    case OutputFormat::Csv:
        out << "plant,product,distance_km,iterations\n";
        for (const auto& b : reports) {
            out << b.plant << ',' << b.product << ',';
            if (b.result) {
                out << full(b.result->distance.in(units::km)) << ',' << b.result->iterations;
            } else {
                out << ',';
            }
            out << '\n';
        }
        return;
    case OutputFormat::Json: {
        ordered_json arr = ordered_json::array();
        for (const auto& b : reports) {
            ordered_json j{{"plant", b.plant}, {"product", b.product}};
            if (b.result) {
                j["distance_km"] = b.result->distance.in(units::km);
                j["iterations"] = b.result->iterations;
            } else {
                j["error"] = b.error;
            }
            arr.push_back(std::move(j));
        }
        out << ordered_json{{"breakeven", arr}}.dump(2) << '\n';
        return;
    }
    case OutputFormat::Table: {
        TextTable t({"plant", "product", "break-even km"}, 2);
        for (const auto& b : reports) {
            t.row({b.plant, b.product, b.result ? significant(b.result->distance.in(units::km)) : "none"});
        }
        t.print(out);
        for (const auto& b : reports) {
            if (!b.result) {
                out << "note: " << b.error << '\n';
            }
        }
        return;
    }
    }
}

void write_curve(std::ostream& out, const CurveReport& curve, OutputFormat format)
{
    auto opt = [](const std::optional<Quantity>& q) { return q ? full(q->in(kPerDay)) : std::string(); };
    switch (format) {
    case OutputFormat::Csv:
        out << "distance_km,flow_m3_per_h,capital_usd_per_day,operational_usd_per_day,total_usd_per_day\n";
        for (const auto& c : curve.cells) {
            out << full(c.distance.in(units::km)) << ',' << full(c.flow.in(kFlow)) << ',' << opt(c.capital) << ','
                << opt(c.operational) << ',' << opt(c.total) << '\n';
        }
        return;
    case OutputFormat::Json: {
        ordered_json panels = ordered_json::array();
        for (std::size_t i = 0; i < curve.cells.size();) {
            const Quantity d = curve.cells[i].distance;
            ordered_json points = ordered_json::array();
            for (; i < curve.cells.size() && curve.cells[i].distance.value() == d.value(); ++i) {
                const auto& c = curve.cells[i];
                ordered_json p{{"flow_m3_per_h", c.flow.in(kFlow)}};
                if (c.total) {
                    p["capital_usd_per_day"] = c.capital->in(kPerDay);
                    p["operational_usd_per_day"] = c.operational->in(kPerDay);
                    p["total_usd_per_day"] = c.total->in(kPerDay);
                } else {
                    p["error"] = c.error;
                }
                points.push_back(std::move(p));
            }
            panels.push_back({{"distance_km", d.in(units::km)}, {"points", points}});
        }
        out << ordered_json{{"plant", curve.plant}, {"product", curve.product}, {"panels", panels}}.dump(2) << '\n';
        return;
    }
    case OutputFormat::Table: {
        out << "transfer cost, plant " << curve.plant << ", pipe sized for " << curve.product << "\n\n";
        TextTable t({"distance km", "flow m3/h", "capital $/day", "pumping $/day", "total $/day"});
        for (const auto& c : curve.cells) {
            auto cell = [](const std::optional<Quantity>& q) { return q ? significant(q->in(kPerDay)) : "-"; };
            t.row({significant(c.distance.in(units::km)), significant(c.flow.in(kFlow)), cell(c.capital),
                   cell(c.operational), cell(c.total)});
        }
        t.print(out);
        for (const auto& c : curve.cells) {
            if (!c.error.empty()) {
                out << "error at " << c.distance.format("km") << ", " << c.flow.format("m3/h") << ": " << c.error
                    << '\n';
            }
        }
        return;
    }
    }
}

void write_penalties(std::ostream& out, const std::vector<PenaltyRow>& rows, OutputFormat format)
{
    switch (format) {
    case OutputFormat::Csv:
        out << "plant,strategy,penalty_usd_per_ton\n";
        for (const auto& r : rows) {
            out << r.plant << ',' << r.strategy << ',' << (r.threshold ? full(r.threshold->in(kPerTon)) : "") << '\n';
        }
        return;
    case OutputFormat::Json: {
        ordered_json arr = ordered_json::array();
        for (const auto& r : rows) {
            ordered_json j{{"plant", r.plant}, {"strategy", r.strategy}};
            if (r.threshold) {
                j["penalty_usd_per_ton"] = r.threshold->in(kPerTon);
            } else {
                j["error"] = r.error;
            }
            arr.push_back(std::move(j));
        }
        out << ordered_json{{"penalty", arr}}.dump(2) << '\n';
        return;
    }
    case OutputFormat::Table: {
        TextTable t({"plant", "strategy", "penalty $/ton"}, 2);
        for (const auto& r : rows) {
            t.row({r.plant, r.strategy, r.threshold ? significant(r.threshold->in(kPerTon)) : "error"});
        }
        t.print(out);
        for (const auto& r : rows) {
            if (!r.threshold) {
                out << "error: " << r.plant << " " << r.strategy << ": " << r.error << '\n';
            }
        }
        return;
    }
    }
}

}  // namespace ewh
