#include "ewh/config.hpp"

#include "ewh/error.hpp"

#include "json.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace ewh {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

namespace {

// Display units used in messages and in exported configs.
constexpr std::string_view kPerTonDay = "$/(ton/day)";
constexpr std::string_view kFlowM3h = "m3/h";

struct KeySpec {
    std::string_view unit;  // empty for plain numbers
    Dimension dim;
};

std::string join(const std::string& path, std::string_view key)
{
    return path.empty() ? std::string(key) : path + "." + std::string(key);
}

class Reader {
public:
    std::vector<std::string> issues;

    void issue(const std::string& path, const std::string& msg) { issues.push_back(path + ": " + msg); }

    bool object(const json& j, const std::string& path)
    {
        if (!j.is_object()) {
            issue(path, "expected an object");
            return false;
        }
        return true;
    }

    void allow(const json& obj, const std::string& path, std::initializer_list<std::string_view> keys)
    {
        std::set<std::string_view> allowed(keys);
        for (const auto& [k, v] : obj.items()) {
            if (!allowed.contains(k)) {
                issue(join(path, k), "unknown key");
            }
        }
    }

    std::optional<Quantity> quantity_value(const json& v, const std::string& path, Dimension dim,
                                           std::string_view unit)
    {
        try {
            Quantity q;
            if (v.is_number()) {
                q = Quantity(v.get<double>(), dims::none);
            } else if (v.is_string()) {
                q = Quantity::parse(v.get<std::string>());
            } else {
                issue(path, "expected a '<value> <unit>' string in " + std::string(unit));
                return std::nullopt;
            }
            if (q.dimension() != dim) {
                issue(path, "unit mismatch: expected " + std::string(unit.empty() ? "a plain number" : unit));
                return std::nullopt;
            }
            return q;
        } catch (const Error& e) {
            issue(path, std::string(e.what()) + " (expected " + std::string(unit) + ")");
            return std::nullopt;
        }
    }

    // Reads an optional key into `out`; leaves it untouched when absent.
    void quantity(const json& obj, const std::string& path, std::string_view key, Quantity& out, Dimension dim,
                  std::string_view unit)
    {
        if (auto it = obj.find(key); it != obj.end()) {
            if (auto q = quantity_value(*it, join(path, key), dim, unit)) {
                out = *q;
            }
        }
    }

    template <class T>
    void number(const json& obj, const std::string& path, std::string_view key, T& out)
    {
        auto it = obj.find(key);
        if (it == obj.end()) {
            return;
        }
        if constexpr (std::is_same_v<T, int>) {
            if (!it->is_number_integer()) {
                issue(join(path, key), "expected an integer");
                return;
            }
        } else {
            if (!it->is_number()) {
                issue(join(path, key), "expected a number");
                return;
            }
        }
        out = it->get<T>();
    }

    void boolean(const json& obj, const std::string& path, std::string_view key, bool& out)
    {
        auto it = obj.find(key);
        if (it == obj.end()) {
            return;
        }
        if (!it->is_boolean()) {
            issue(join(path, key), "expected true or false");
            return;
        }
        out = it->get<bool>();
    }

    void string(const json& obj, const std::string& path, std::string_view key, std::string& out)
    {
        auto it = obj.find(key);
        if (it == obj.end()) {
            return;
        }
        if (!it->is_string()) {
            issue(join(path, key), "expected a string");
            return;
        }
        out = it->get<std::string>();
    }

    void unit_interval(double v, const std::string& path, bool open_low)
    {
        bool ok = open_low ? (v > 0.0 && v <= 1.0) : (v >= 0.0 && v <= 1.0);
        if (!ok) {
            issue(path, format_double(v) + " outside " + (open_low ? "(0, 1]" : "[0, 1]"));
        }
    }
};

void read_water(Reader& rd, const json& obj, const std::string& path, WaterChoice& out)
{
    if (!rd.object(obj, path)) {
        return;
    }
    rd.allow(obj, path, {"mode", "distance", "w_max"});
    rd.string(obj, path, "mode", out.mode);
    if (out.mode != "desalination" && out.mode != "network_transfer" && out.mode != "solar_seawater") {
        rd.issue(join(path, "mode"), "'" + out.mode + "' is not one of desalination, network_transfer, solar_seawater");
    }
    rd.quantity(obj, path, "distance", out.distance, dims::length, "km");
    if (out.distance.value() < 0.0) {
        rd.issue(join(path, "distance"), "must be >= 0");
    }
    if (obj.contains("w_max")) {
        Quantity w{0.0, dims::volume_flow};
        rd.quantity(obj, path, "w_max", w, dims::volume_flow, kFlowM3h);
        if (!(w.value() > 0.0)) {
            rd.issue(join(path, "w_max"), "must be > 0");
        }
        out.w_max = w;
    }
}

void read_economics(Reader& rd, const json& obj, const std::string& path, EconParams& e)
{
    if (!rd.object(obj, path)) {
        return;
    }
    rd.allow(obj, path,
             {"elec_price", "r_cts", "r_ccs", "c_cts", "c_ccs", "c_wind", "c_des", "c_tw", "pipe_cost_basis", "c_sw",
              "c_we", "xi_p", "wind_capacity_factor", "eta_pump", "r_w", "r_w_reference_length", "e_des",
              "interest_rate", "horizon_years", "include_hydrogen_capital", "capture_efficiency", "operating_hours",
              "product_prices"});

    auto nonneg = [&](std::string_view key, Quantity& q, Dimension dim, std::string_view unit) {
        rd.quantity(obj, path, key, q, dim, unit);
        if (q.value() < 0.0) {
            rd.issue(join(path, key), "must be >= 0");
        }
    };
    nonneg("elec_price", e.elec_price, dims::unit_price_energy, "$/kWh");
    nonneg("r_cts", e.r_cts, dims::unit_price_mass, "$/ton");
    nonneg("r_ccs", e.r_ccs, dims::unit_price_mass, "$/ton");

    if (!obj.contains("c_ccs")) {
        rd.issue(join(path, "c_ccs"), "missing required key (capture plant unit capital, expected " +
                                          std::string(kPerTonDay) + ")");
    }
    nonneg("c_ccs", e.c_ccs, dims::capital_per_mass_flow, kPerTonDay);

    if (auto it = obj.find("c_cts"); it != obj.end()) {
        const std::string p = join(path, "c_cts");
        try {
            if (it->is_array()) {
                std::vector<CostTier> tiers;
                for (std::size_t i = 0; i < it->size(); ++i) {
                    const json& t = (*it)[i];
                    const std::string tp = p + "[" + std::to_string(i) + "]";
                    if (!rd.object(t, tp)) {
                        continue;
                    }
                    rd.allow(t, tp, {"min_flow", "cost"});
                    if (!t.contains("min_flow") || !t.contains("cost")) {
                        rd.issue(tp, "tier needs min_flow (ton/day) and cost (" + std::string(kPerTonDay) + ")");
                        continue;
                    }
                    auto lo = rd.quantity_value(t["min_flow"], tp + ".min_flow", dims::mass_flow, "ton/day");
                    auto c = rd.quantity_value(t["cost"], tp + ".cost", dims::capital_per_mass_flow, kPerTonDay);
                    if (lo && c) {
                        tiers.push_back({*lo, *c});
                    }
                }
                e.c_cts = TieredCost(std::move(tiers));
            } else if (auto q = rd.quantity_value(*it, p, dims::capital_per_mass_flow, kPerTonDay)) {
                e.c_cts = TieredCost(*q);
            }
        } catch (const DomainError& err) {
            rd.issue(p, err.what());
        }
    }

    nonneg("c_wind", e.c_wind, dims::capital_per_power, "$/kW");
    nonneg("c_des", e.c_des, dims::capital_per_volume_flow, "$/(m3/h)");

    std::string basis = e.pipe_cost_basis == PipeCostBasis::Length ? "length" : "capacity_length";
    rd.string(obj, path, "pipe_cost_basis", basis);
    if (basis == "length") {
        e.pipe_cost_basis = PipeCostBasis::Length;
        nonneg("c_tw", e.c_tw, dims::capital_per_length, "$/m");
    } else if (basis == "capacity_length") {
        e.pipe_cost_basis = PipeCostBasis::CapacityLength;
        if (!obj.contains("c_tw")) {
            rd.issue(join(path, "c_tw"), "required when pipe_cost_basis is capacity_length (expected $/(m*m3/h))");
        }
        nonneg("c_tw", e.c_tw, dims::money / (dims::length * dims::volume_flow), "$/(m*m3/h)");
    } else {
        rd.issue(join(path, "pipe_cost_basis"), "'" + basis + "' is not one of length, capacity_length");
    }

    if (obj.contains("c_sw")) {
        Quantity c_sw{0.0, dims::capital_per_volume_flow};
        nonneg("c_sw", c_sw, dims::capital_per_volume_flow, "$/(m3/h)");
        e.c_sw = c_sw;
    }
    nonneg("c_we", e.c_we, dims::capital_per_mass_flow, "$/(kg/h)");
    nonneg("xi_p", e.xi_p, dims::specific_energy_mass, "kWh/kg");
    rd.number(obj, path, "wind_capacity_factor", e.wind_capacity_factor);
    rd.unit_interval(e.wind_capacity_factor, join(path, "wind_capacity_factor"), true);
    rd.number(obj, path, "eta_pump", e.eta_pump);
    rd.unit_interval(e.eta_pump, join(path, "eta_pump"), true);
    nonneg("r_w", e.r_w, dims::head_loss_coefficient, "h^2/m^5");
    rd.quantity(obj, path, "r_w_reference_length", e.r_w_reference_length, dims::length, "km");
    if (!(e.r_w_reference_length.value() > 0.0)) {
        rd.issue(join(path, "r_w_reference_length"), "must be > 0");
    }

    if (auto it = obj.find("e_des"); it != obj.end()) {
        const std::string p = join(path, "e_des");
        if (!it->is_array() || it->size() != 4) {
            rd.issue(p, "expected exactly 4 segment coefficients in kWh/m3");
        } else {
            for (std::size_t k = 0; k < 4; ++k) {
                auto q = rd.quantity_value((*it)[k], p + "[" + std::to_string(k) + "]", dims::specific_energy_volume,
                                           "kWh/m3");
                if (q && q->value() < 0.0) {
                    rd.issue(p + "[" + std::to_string(k) + "]", "must be >= 0");
                } else if (q) {
                    e.e_des[k] = *q;
                }
            }
        }
    }

    rd.number(obj, path, "interest_rate", e.interest_rate);
    if (!(e.interest_rate >= 0.0)) {
        rd.issue(join(path, "interest_rate"), "must be >= 0");
    }
    rd.number(obj, path, "horizon_years", e.horizon_years);
    if (e.horizon_years < 1) {
        rd.issue(join(path, "horizon_years"), "must be >= 1");
    }
    rd.boolean(obj, path, "include_hydrogen_capital", e.include_hydrogen_capital);
    rd.number(obj, path, "capture_efficiency", e.capture_efficiency);
    rd.unit_interval(e.capture_efficiency, join(path, "capture_efficiency"), false);
    rd.number(obj, path, "operating_hours", e.operating_hours);
    if (e.operating_hours < 1) {
        rd.issue(join(path, "operating_hours"), "must be >= 1");
    }

    if (auto it = obj.find("product_prices"); it != obj.end()) {
        const std::string p = join(path, "product_prices");
        if (rd.object(*it, p)) {
            for (const auto& [name, v] : it->items()) {
                if (auto q = rd.quantity_value(v, join(p, name), dims::unit_price_mass, "$/ton")) {
                    if (q->value() < 0.0) {
                        rd.issue(join(p, name), "must be >= 0");
                    }
                    e.product_prices.insert_or_assign(name, *q);
                }
            }
        }
    }
}

std::optional<PlantSpec> read_plant(Reader& rd, const json& obj, const std::string& path)
{
    if (!rd.object(obj, path)) {
        return std::nullopt;
    }
    rd.allow(obj, path, {"name", "capacity", "emission_factor"});
    std::string name;
    rd.string(obj, path, "name", name);
    if (name.empty()) {
        rd.issue(join(path, "name"), "missing required key");
    }
    for (std::string_view key : {"capacity", "emission_factor"}) {
        if (!obj.contains(key)) {
            rd.issue(join(path, key), "missing required key");
        }
    }
    Quantity cap{-1.0, dims::power};
    Quantity ef{-1.0, dims::emission_factor};
    rd.quantity(obj, path, "capacity", cap, dims::power, "MW");
    rd.quantity(obj, path, "emission_factor", ef, dims::emission_factor, "g/kWh");
    if (name.empty() || cap.value() < 0.0 || ef.value() < 0.0) {
        if (obj.contains("capacity") && cap.value() < 0.0) {
            rd.issue(join(path, "capacity"), "must be >= 0");
        }
        if (obj.contains("emission_factor") && ef.value() < 0.0) {
            rd.issue(join(path, "emission_factor"), "must be >= 0");
        }
        return std::nullopt;
    }
    return PlantSpec(name, cap, ef);
}

std::optional<ProductSpec> read_product(Reader& rd, const json& v, const std::string& path)
{
    if (v.is_string()) {
        const std::string name = v.get<std::string>();
        for (auto& p : builtin_products()) {
            if (p.name() == name) {
                return p;
            }
        }
        rd.issue(path, "unknown built-in product '" + name + "' (methane, methanol, ethanol)");
        return std::nullopt;
    }
    if (!rd.object(v, path)) {
        return std::nullopt;
    }
    rd.allow(v, path, {"name", "formula", "reaction"});
    std::string name;
    std::string formula;
    rd.string(v, path, "name", name);
    rd.string(v, path, "formula", formula);
    Reaction r;
    if (auto it = v.find("reaction"); it != v.end() && rd.object(*it, join(path, "reaction"))) {
        const std::string rp = join(path, "reaction");
        rd.allow(*it, rp, {"co2", "h2", "product", "h2o"});
        rd.number(*it, rp, "co2", r.co2);
        rd.number(*it, rp, "h2", r.h2);
        rd.number(*it, rp, "product", r.product);
        rd.number(*it, rp, "h2o", r.h2o);
    } else if (it == v.end()) {
        rd.issue(join(path, "reaction"), "missing required key");
    }
    if (name.empty() || formula.empty()) {
        rd.issue(path, "custom product needs name and formula");
        return std::nullopt;
    }
    try {
        return ProductSpec(name, Formula::parse(formula), r);
    } catch (const DomainError& e) {
        rd.issue(path, e.what());
        return std::nullopt;
    }
}

template <class T>
bool has_name(const std::vector<T>& items, std::string_view name)
{
    for (const auto& i : items) {
        if (i.name() == name) {
            return true;
        }
    }
    return false;
}

std::vector<Quantity> read_quantity_list(Reader& rd, const json& obj, const std::string& path, std::string_view key,
                                         Dimension dim, std::string_view unit, std::vector<Quantity> fallback)
{
    auto it = obj.find(key);
    if (it == obj.end()) {
        return fallback;
    }
    const std::string p = join(path, key);
    if (!it->is_array() || it->empty()) {
        rd.issue(p, "expected a non-empty list of quantities in " + std::string(unit));
        return fallback;
    }
    std::vector<Quantity> out;
    for (std::size_t i = 0; i < it->size(); ++i) {
        if (auto q = rd.quantity_value((*it)[i], p + "[" + std::to_string(i) + "]", dim, unit)) {
            if (q->value() < 0.0) {
                rd.issue(p + "[" + std::to_string(i) + "]", "must be >= 0");
            }
            out.push_back(*q);
        }
    }
    return out;
}

// Quantities are written in their display unit when that reproduces the
// stored magnitude exactly, otherwise in canonical units.
std::string write_quantity(const Quantity& q, std::string_view unit)
{
    std::string s = q.format(unit);
    if (Quantity::parse(s).value() == q.value()) {
        return s;
    }
    std::string canonical = format_double(q.value());
    std::string cu = q.dimension().canonical_unit();
    return cu.empty() ? canonical : canonical + " " + cu;
}

ordered_json write_water(const WaterChoice& w)
{
    ordered_json j;
    j["mode"] = w.mode;
    j["distance"] = write_quantity(w.distance, "km");
    if (w.w_max) {
        j["w_max"] = write_quantity(*w.w_max, kFlowM3h);
    }
    return j;
}

}  // namespace

WaterMode WaterChoice::to_mode() const
{
    if (mode == "network_transfer") {
        return NetworkTransfer{distance};
    }
    if (mode == "solar_seawater") {
        return SolarSeawater{};
    }
    return Desalination{};
}

const PlantSpec& Config::plant(std::string_view name) const
{
    for (const auto& p : plants) {
        if (p.name() == name) {
            return p;
        }
    }
    throw ConfigError({"unknown plant '" + std::string(name) + "'"});
}

const ProductSpec& Config::product(std::string_view name) const
{
    for (const auto& p : products) {
        if (p.name() == name) {
            return p;
        }
    }
    throw ConfigError({"unknown product '" + std::string(name) + "'"});
}

Config parse_config(std::string_view text)
{
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError({std::string("malformed configuration: ") + e.what()});
    }
    Reader rd;
    Config cfg;
    if (!rd.object(root, "<root>")) {
        throw ConfigError(rd.issues);
    }
    rd.allow(root, "", {"economics", "plants", "products", "scenario", "sweep", "breakeven", "curve"});

    if (auto it = root.find("economics"); it != root.end()) {
        read_economics(rd, *it, "economics", cfg.econ);
    } else {
        rd.issue("economics", "missing required section (needs at least c_ccs)");
    }

    if (auto it = root.find("plants"); it != root.end()) {
        if (!it->is_array() || it->empty()) {
            rd.issue("plants", "expected a non-empty list");
        } else {
            for (std::size_t i = 0; i < it->size(); ++i) {
                const std::string p = "plants[" + std::to_string(i) + "]";
                if (auto plant = read_plant(rd, (*it)[i], p)) {
                    if (has_name(cfg.plants, plant->name())) {
                        rd.issue(p, "duplicate plant name '" + plant->name() + "'");
                    }
                    cfg.plants.push_back(*plant);
                }
            }
        }
    } else {
        cfg.plants = reference_plants();
    }

    if (auto it = root.find("products"); it != root.end()) {
        if (!it->is_array()) {
            rd.issue("products", "expected a list");
        } else {
            for (std::size_t i = 0; i < it->size(); ++i) {
                const std::string p = "products[" + std::to_string(i) + "]";
                if (auto product = read_product(rd, (*it)[i], p)) {
                    if (has_name(cfg.products, product->name())) {
                        rd.issue(p, "duplicate product name '" + product->name() + "'");
                    }
                    cfg.products.push_back(*product);
                }
            }
        }
    } else {
        cfg.products = builtin_products();
    }
    for (const auto& p : cfg.products) {
        if (!cfg.econ.product_prices.contains(p.name())) {
            rd.issue("economics.product_prices." + p.name(), "missing price for product (expected $/ton)");
        }
    }

    bool solar_requested = false;
    auto check_product_ref = [&](const std::string& path, std::string& name) {
        if (name.empty()) {
            if (!cfg.products.empty()) {
                name = cfg.products.front().name();
            }
        } else if (!has_name(cfg.products, name)) {
            rd.issue(path, "unknown product '" + name + "'");
        }
    };

    if (auto it = root.find("scenario"); it != root.end() && rd.object(*it, "scenario")) {
        rd.allow(*it, "scenario", {"plant", "product", "beta", "water"});
        rd.string(*it, "scenario", "plant", cfg.scenario.plant);
        rd.string(*it, "scenario", "product", cfg.scenario.product);
        rd.number(*it, "scenario", "beta", cfg.scenario.beta);
        if (auto w = it->find("water"); w != it->end()) {
            read_water(rd, *w, "scenario.water", cfg.scenario.water);
        }
    }
    rd.unit_interval(cfg.scenario.beta, "scenario.beta", false);
    if (cfg.scenario.plant.empty()) {
        if (!cfg.plants.empty()) {
            cfg.scenario.plant = cfg.plants.front().name();
        }
    } else if (!has_name(cfg.plants, cfg.scenario.plant)) {
        rd.issue("scenario.plant", "unknown plant '" + cfg.scenario.plant + "'");
    }
    check_product_ref("scenario.product", cfg.scenario.product);
    solar_requested |= cfg.scenario.water.mode == "solar_seawater";

    if (auto it = root.find("sweep"); it != root.end() && rd.object(*it, "sweep")) {
        rd.allow(*it, "sweep", {"betas", "water"});
        if (auto b = it->find("betas"); b != it->end()) {
            if (!b->is_array() || b->empty()) {
                rd.issue("sweep.betas", "expected a non-empty list of numbers in [0, 1]");
            } else {
                cfg.sweep.betas.clear();
                for (std::size_t i = 0; i < b->size(); ++i) {
                    const std::string p = "sweep.betas[" + std::to_string(i) + "]";
                    if (!(*b)[i].is_number()) {
                        rd.issue(p, "expected a number");
                        continue;
                    }
                    double beta = (*b)[i].get<double>();
                    rd.unit_interval(beta, p, false);
                    cfg.sweep.betas.push_back(beta);
                }
            }
        }
        if (auto w = it->find("water"); w != it->end()) {
            read_water(rd, *w, "sweep.water", cfg.sweep.water);
        }
    }
    solar_requested |= cfg.sweep.water.mode == "solar_seawater";

    if (auto it = root.find("breakeven"); it != root.end() && rd.object(*it, "breakeven")) {
        rd.allow(*it, "breakeven", {"product", "d_lo", "d_hi", "tolerance"});
        rd.string(*it, "breakeven", "product", cfg.breakeven.product);
        rd.quantity(*it, "breakeven", "d_lo", cfg.breakeven.d_lo, dims::length, "km");
        rd.quantity(*it, "breakeven", "d_hi", cfg.breakeven.d_hi, dims::length, "km");
        rd.quantity(*it, "breakeven", "tolerance", cfg.breakeven.tolerance, dims::length, "km");
    }
    check_product_ref("breakeven.product", cfg.breakeven.product);
    if (!(cfg.breakeven.d_lo.value() < cfg.breakeven.d_hi.value())) {
        rd.issue("breakeven", "d_lo must be below d_hi");
    }
    if (!(cfg.breakeven.tolerance.value() > 0.0)) {
        rd.issue("breakeven.tolerance", "must be > 0");
    }

    if (auto it = root.find("curve"); it != root.end() && rd.object(*it, "curve")) {
        rd.allow(*it, "curve", {"product", "distances", "flows"});
        rd.string(*it, "curve", "product", cfg.curve.product);
        cfg.curve.distances =
            read_quantity_list(rd, *it, "curve", "distances", dims::length, "km", cfg.curve.distances);
        cfg.curve.flows = read_quantity_list(rd, *it, "curve", "flows", dims::volume_flow, kFlowM3h, cfg.curve.flows);
    }
    check_product_ref("curve.product", cfg.curve.product);

    if (solar_requested && !cfg.econ.c_sw) {
        rd.issue("economics.c_sw",
                 "missing required key: solar_seawater water supply requested (expected $/(m3/h))");
    }

    if (!rd.issues.empty()) {
        throw ConfigError(rd.issues);
    }
    try {
        cfg.econ.validate();
    } catch (const Error& e) {
        throw ConfigError({std::string("economics: ") + e.what()});
    }
    return cfg;
}

Config load_config(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot read configuration file '" + path.string() + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

std::string export_config(const Config& cfg)
{
    const EconParams& e = cfg.econ;
    ordered_json econ;
    econ["elec_price"] = write_quantity(e.elec_price, "$/kWh");
    econ["r_cts"] = write_quantity(e.r_cts, "$/ton");
    econ["r_ccs"] = write_quantity(e.r_ccs, "$/ton");
    ordered_json tiers = ordered_json::array();
    for (const auto& t : e.c_cts.tiers()) {
        tiers.push_back({{"min_flow", write_quantity(t.min_flow, "ton/day")}, {"cost", write_quantity(t.cost, kPerTonDay)}});
    }
    econ["c_cts"] = tiers;
    econ["c_ccs"] = write_quantity(e.c_ccs, kPerTonDay);
    econ["c_wind"] = write_quantity(e.c_wind, "$/kW");
    econ["c_des"] = write_quantity(e.c_des, "$/(m3/h)");
    if (e.pipe_cost_basis == PipeCostBasis::Length) {
        econ["pipe_cost_basis"] = "length";
        econ["c_tw"] = write_quantity(e.c_tw, "$/m");
    } else {
        econ["pipe_cost_basis"] = "capacity_length";
        econ["c_tw"] = write_quantity(e.c_tw, "$/(m*m3/h)");
    }
    if (e.c_sw) {
        econ["c_sw"] = write_quantity(*e.c_sw, "$/(m3/h)");
    }
    econ["c_we"] = write_quantity(e.c_we, "$/(kg/h)");
    econ["xi_p"] = write_quantity(e.xi_p, "kWh/kg");
    econ["wind_capacity_factor"] = e.wind_capacity_factor;
    econ["eta_pump"] = e.eta_pump;
    econ["r_w"] = write_quantity(e.r_w, "h^2/m^5");
    econ["r_w_reference_length"] = write_quantity(e.r_w_reference_length, "km");
    ordered_json e_des = ordered_json::array();
    for (const auto& q : e.e_des) {
        e_des.push_back(write_quantity(q, "kWh/m3"));
    }
    econ["e_des"] = e_des;
    econ["interest_rate"] = e.interest_rate;
    econ["horizon_years"] = e.horizon_years;
    econ["include_hydrogen_capital"] = e.include_hydrogen_capital;
    econ["capture_efficiency"] = e.capture_efficiency;
    econ["operating_hours"] = e.operating_hours;
    ordered_json prices;
    for (const auto& [name, q] : e.product_prices) {
        prices[name] = write_quantity(q, "$/ton");
    }
    econ["product_prices"] = prices;

    ordered_json root;
    root["economics"] = econ;
    ordered_json plants = ordered_json::array();
    for (const auto& p : cfg.plants) {
        plants.push_back({{"name", p.name()},
                          {"capacity", write_quantity(p.capacity(), "MW")},
                          {"emission_factor", write_quantity(p.emission_factor(), "g/kWh")}});
    }
    root["plants"] = plants;
    ordered_json products = ordered_json::array();
    for (const auto& p : cfg.products) {
        const auto& f = p.formula();
        std::string formula;
        auto atom = [&](char sym, int n) {
            if (n > 0) {
                formula += sym;
                if (n > 1) {
                    formula += std::to_string(n);
                }
            }
        };
        atom('C', f.c);
        atom('H', f.h);
        atom('O', f.o);
        const auto& r = p.reaction();
        products.push_back({{"name", p.name()},
                            {"formula", formula},
                            {"reaction", {{"co2", r.co2}, {"h2", r.h2}, {"product", r.product}, {"h2o", r.h2o}}}});
    }
    root["products"] = products;
    root["scenario"] = {{"plant", cfg.scenario.plant},
                        {"product", cfg.scenario.product},
                        {"beta", cfg.scenario.beta},
                        {"water", write_water(cfg.scenario.water)}};
    root["sweep"] = {{"betas", cfg.sweep.betas}, {"water", write_water(cfg.sweep.water)}};
    root["breakeven"] = {{"product", cfg.breakeven.product},
                         {"d_lo", write_quantity(cfg.breakeven.d_lo, "km")},
                         {"d_hi", write_quantity(cfg.breakeven.d_hi, "km")},
                         {"tolerance", write_quantity(cfg.breakeven.tolerance, "km")}};
    ordered_json distances = ordered_json::array();
    for (const auto& d : cfg.curve.distances) {
        distances.push_back(write_quantity(d, "km"));
    }
    ordered_json flows = ordered_json::array();
    for (const auto& f : cfg.curve.flows) {
        flows.push_back(write_quantity(f, kFlowM3h));
    }
    root["curve"] = {{"product", cfg.curve.product}, {"distances", distances}, {"flows", flows}};
    return root.dump(2) + "\n";
}

}  // namespace ewh
