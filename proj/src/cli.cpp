#include "ewh/cli.hpp"

#include "ewh/error.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#ifndef EWH_CONFIG_DIR
#define EWH_CONFIG_DIR "configs"
#endif

namespace ewh {

namespace {

// Counts failed cells so the caller can exit nonzero after the full table
// has been written.
struct Outcome {
    std::vector<std::string> failures;
};

const PlantSpec& pick_plant(const Config& cfg, const RunManifest& m, const std::string& fallback)
{
    return cfg.plant(m.plant.value_or(fallback));
}

const ProductSpec& pick_product(const Config& cfg, const RunManifest& m, const std::string& fallback)
{
    return cfg.product(m.product.value_or(fallback));
}

void run_scenario(const Config& cfg, const RunManifest& m, std::ostream& out)
{
    ScenarioConfig s{pick_plant(cfg, m, cfg.scenario.plant), std::nullopt, m.beta.value_or(cfg.scenario.beta),
                     cfg.scenario.water.to_mode(), cfg.scenario.water.w_max, cfg.econ};
    if (m.product || s.beta > 0.0) {
        s.product = pick_product(cfg, m, cfg.scenario.product);
    }
    write_scenario(out, total_daily_cost(s), m.format);
}

Outcome run_sweep(const Config& cfg, const RunManifest& m, std::ostream& out)
{
    SweepGrid grid;
    grid.plants = m.plant ? std::vector<PlantSpec>{cfg.plant(*m.plant)} : cfg.plants;
    grid.products = m.product ? std::vector<ProductSpec>{cfg.product(*m.product)} : cfg.products;
    grid.betas = m.beta ? std::vector<double>{*m.beta} : cfg.sweep.betas;
    grid.water = cfg.sweep.water.to_mode();
    grid.w_max = cfg.sweep.water.w_max;
    const auto rows = scenario_sweep(grid, cfg.econ, m.threads);
    write_sweep(out, rows, m.format);
    Outcome o;
    for (const auto& r : rows) {
        if (!r.result) {
            o.failures.push_back(r.error);
        }
    }
    return o;
}

Outcome run_breakeven(const Config& cfg, const RunManifest& m, std::ostream& out)
{
    const ProductSpec& product = pick_product(cfg, m, cfg.breakeven.product);
    std::vector<PlantSpec> plants = m.plant ? std::vector<PlantSpec>{cfg.plant(*m.plant)} : cfg.plants;
    std::vector<BreakevenReport> reports;
    Outcome o;
    for (const auto& plant : plants) {
        BreakevenQuery q{plant, product, cfg.breakeven.d_lo, cfg.breakeven.d_hi, cfg.breakeven.tolerance, 1.0};
        if (m.tolerance_km) {
            q.tolerance = Quantity{*m.tolerance_km, units::km};
        }
        if (m.beta) {
            q.beta = *m.beta;
        }
        BreakevenReport rep{plant.name(), product.name(), std::nullopt, {}};
        try {
            rep.result = breakeven_distance(q, cfg.econ);
        } catch (const NoCrossingError& e) {
            rep.error = e.what();
            o.failures.push_back(e.what());
        }
        reports.push_back(std::move(rep));
    }
    write_breakeven(out, reports, m.format);
    return o;
}

Outcome run_curve(const Config& cfg, const RunManifest& m, std::ostream& out)
{
    const PlantSpec& plant = pick_plant(cfg, m, cfg.scenario.plant);
    const ProductSpec& product = pick_product(cfg, m, cfg.curve.product);
    const auto distances = m.distances ? parse_quantity_list(*m.distances, "km", dims::length) : cfg.curve.distances;
    const auto flows = m.flows ? parse_quantity_list(*m.flows, "m3/h", dims::volume_flow) : cfg.curve.flows;
    CurveReport curve{plant.name(), product.name(), transfer_cost_curve(plant, product, distances, flows, cfg.econ)};
    write_curve(out, curve, m.format);
    Outcome o;
    for (const auto& c : curve.cells) {
        if (!c.error.empty()) {
            o.failures.push_back("distance=" + c.distance.format("km") + " flow=" + c.flow.format("m3/h") + ": " +
                                 c.error);
        }
    }
    return o;
}

Outcome run_penalty(const Config& cfg, const RunManifest& m, std::ostream& out)
{
    std::vector<PlantSpec> plants = m.plant ? std::vector<PlantSpec>{cfg.plant(*m.plant)} : cfg.plants;
    std::vector<ProductSpec> products = m.product ? std::vector<ProductSpec>{cfg.product(*m.product)} : cfg.products;
    std::vector<PenaltyRow> rows;
    Outcome o;
    auto eval = [&](const PlantSpec& plant, std::string label, const CarbonStrategy& strategy) {
        PenaltyRow row{plant.name(), std::move(label), std::nullopt, {}};
        try {
            row.threshold = penalty_threshold(plant, strategy, cfg.econ, cfg.scenario.water.to_mode());
        } catch (const DomainError& e) {
            row.error = e.what();
            o.failures.push_back(row.plant + " " + row.strategy + ": " + e.what());
        }
        rows.push_back(std::move(row));
    };
    for (const auto& plant : plants) {
        eval(plant, "store_all", StoreAll{});
        for (const auto& product : products) {
            eval(plant, "reuse_all:" + product.name(), ReuseAll{product});
        }
    }
    write_penalties(out, rows, m.format);
    return o;
}

void check_overrides(const RunManifest& m)
{
    std::vector<std::string> issues;
    if (m.beta && !(*m.beta >= 0.0 && *m.beta <= 1.0)) {
        issues.push_back("--beta: " + format_double(*m.beta) + " outside [0, 1]");
    }
    if (m.tolerance_km && !(*m.tolerance_km > 0.0)) {
        issues.push_back("--tolerance: must be > 0 km");
    }
    static const std::vector<std::string> commands{"scenario", "sweep", "breakeven", "curve", "penalty"};
    if (std::find(commands.begin(), commands.end(), m.command) == commands.end()) {
        issues.push_back("--command: unknown command '" + m.command +
                         "' (scenario, sweep, breakeven, curve, penalty)");
    }
    if (!issues.empty()) {
        throw ConfigError(issues);
    }
}

}  // namespace

std::filesystem::path default_config_path()
{
    return std::filesystem::path(EWH_CONFIG_DIR) / "paper-2024.json";
}

std::vector<Quantity> parse_quantity_list(std::string_view text, std::string_view default_unit, Dimension dim)
{
    std::vector<Quantity> out;
    std::vector<std::string> issues;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        std::string item(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
        start = comma == std::string_view::npos ? text.size() + 1 : comma + 1;
        while (!item.empty() && item.back() == ' ') {
            item.pop_back();
        }
        try {
            Quantity q = Quantity::parse(item);
            if (q.dimension().dimensionless()) {
                q = Quantity(q.value(), Unit::parse(default_unit));
            }
            q.require(dim, "'" + item + "'");
            if (q.value() < 0.0) {
                throw DomainError("'" + item + "' must be >= 0");
            }
            out.push_back(q);
        } catch (const Error& e) {
            issues.push_back(std::string(e.what()) + " (expected " + std::string(default_unit) + ")");
        }
    }
    if (!issues.empty()) {
        throw ConfigError(issues);
    }
    return out;
}

int run(const RunManifest& m, std::ostream& out, std::ostream& err)
{
    try {
        check_overrides(m);
        const Config cfg = load_config(m.config_path.empty() ? default_config_path() : m.config_path);

        std::ostringstream buf;
        Outcome outcome;
        if (m.dump_config) {
            buf << export_config(cfg);
        } else if (m.command == "scenario") {
            run_scenario(cfg, m, buf);
        } else if (m.command == "sweep") {
            outcome = run_sweep(cfg, m, buf);
        } else if (m.command == "breakeven") {
            outcome = run_breakeven(cfg, m, buf);
        } else if (m.command == "curve") {
            outcome = run_curve(cfg, m, buf);
        } else {
            outcome = run_penalty(cfg, m, buf);
        }

        if (m.output_path) {
            std::ofstream file(*m.output_path, std::ios::binary);
            if (!(file << buf.str()) || !file.flush()) {
                throw IoError("cannot write '" + m.output_path->string() + "'");
            }
        } else {
            out << buf.str();
        }
        for (const auto& f : outcome.failures) {
            err << "error: " << f << '\n';
        }
        return outcome.failures.empty() ? kExitOk : kExitDomain;
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomain;
    }
}

}  // namespace ewh
