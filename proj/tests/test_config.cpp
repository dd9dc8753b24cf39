#include "ewh/cli.hpp"
#include "ewh/config.hpp"
#include "ewh/error.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

using namespace ewh;

namespace {

std::string preset_text()
{
    std::ifstream in(default_config_path());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> issues_of(const std::string& text)
{
    try {
        parse_config(text);
    } catch (const ConfigError& e) {
        return e.issues();
    }
    return {};
}

bool mentions(const std::vector<std::string>& issues, std::string_view a, std::string_view b = "")
{
    for (const auto& i : issues) {
        if (i.find(a) != std::string::npos && i.find(b) != std::string::npos) {
            return true;
        }
    }
    return false;
}

const std::string kMinimal = R"j({"economics": {"c_ccs": "10000 $/(ton/day)"}})j";

}  // namespace

TEST(Config, PresetLoads)
{
    const Config cfg = load_config(default_config_path());
    EXPECT_EQ(cfg.plants.size(), 3u);
    EXPECT_EQ(cfg.products.size(), 3u);
    EXPECT_EQ(cfg.econ.c_cts.tiers().size(), 3u);
    EXPECT_DOUBLE_EQ(cfg.econ.c_ccs.in(units::usd / (units::ton / units::day)), 10000.0);
    EXPECT_EQ(cfg.econ.horizon_years, 20);
}

TEST(Config, MinimalConfigAppliesDefaults)
{
    const Config cfg = parse_config(kMinimal);
    EXPECT_EQ(cfg.plants.size(), 3u);
    EXPECT_EQ(cfg.scenario.plant, "coal");
    EXPECT_DOUBLE_EQ(cfg.econ.xi_p.in(units::kWh / units::kg), 52.5);
}

TEST(Config, RoundTripIsBitExact)
{
    const Config a = load_config(default_config_path());
    const std::string text = export_config(a);
    const Config b = parse_config(text);
    EXPECT_EQ(export_config(b), text);

    SweepGrid grid{a.plants, a.products, a.sweep.betas, Desalination{}, std::nullopt};
    const auto ra = scenario_sweep(grid, a.econ);
    SweepGrid grid_b{b.plants, b.products, b.sweep.betas, Desalination{}, std::nullopt};
    const auto rb = scenario_sweep(grid_b, b.econ);
    ASSERT_EQ(ra.size(), rb.size());
    for (std::size_t i = 0; i < ra.size(); ++i) {
        EXPECT_EQ(ra[i].result->daily_cost.value(), rb[i].result->daily_cost.value());
        EXPECT_EQ(ra[i].result->capital.value(), rb[i].result->capital.value());
    }
}

TEST(Config, RoundTripKeepsAwkwardMagnitudes)
{
    Config a = parse_config(kMinimal);
    a.econ.elec_price = Quantity{0.1 + 0.2, units::usd / units::kWh};
    a.econ.c_des = Quantity{1.0 / 3.0, units::musd / (units::m3 / units::h)};
    a.econ.interest_rate = 0.1 + 0.2;
    const Config b = parse_config(export_config(a));
    EXPECT_EQ(b.econ.elec_price.value(), a.econ.elec_price.value());
    EXPECT_EQ(b.econ.c_des.value(), a.econ.c_des.value());
    EXPECT_EQ(b.econ.interest_rate, a.econ.interest_rate);
}

TEST(Config, BetaOutsideUnitIntervalNamesBound)
{
    const auto issues =
        issues_of(R"j({"economics": {"c_ccs": "1 $/(ton/day)"}, "scenario": {"beta": 1.2}})j");
    EXPECT_TRUE(mentions(issues, "scenario.beta", "[0, 1]"));
}

TEST(Config, XiPOverrideFlowsDownstream)
{
    const Config cfg = parse_config(R"j({"economics": {"c_ccs": "1 $/(ton/day)", "xi_p": "50 kWh/kg"}})j");
    EXPECT_DOUBLE_EQ(cfg.econ.xi_p.in(units::kWh / units::kg), 50.0);
    const Quantity h{21.0, units::ton / units::h};
    EXPECT_DOUBLE_EQ(power_capital(h, cfg.econ).in(units::usd), 1030.0 * 50.0 * 21000.0 / 0.423);
}

TEST(Config, UnknownKeyIsHardError)
{
    const auto issues = issues_of(R"j({"economics": {"c_ccs": "1 $/(ton/day)", "r_ccz": "45 $/ton"}})j");
    EXPECT_TRUE(mentions(issues, "economics.r_ccz", "unknown key"));
    EXPECT_TRUE(mentions(issues_of(R"j({"economics": {"c_ccs": "1 $/(ton/day)"}, "sweeps": {}})j"), "sweeps"));
}

TEST(Config, UnitMismatchNamesExpectedUnit)
{
    const auto issues = issues_of(R"j({"economics": {"c_ccs": "1 $/(ton/day)", "c_wind": "1030 $/kWh"}})j");
    EXPECT_TRUE(mentions(issues, "economics.c_wind", "$/kW"));
}

TEST(Config, MissingRequiredKeys)
{
    EXPECT_TRUE(mentions(issues_of(R"j({"economics": {}})j"), "economics.c_ccs", "missing"));
    const auto solar = issues_of(
        R"j({"economics": {"c_ccs": "1 $/(ton/day)"}, "scenario": {"water": {"mode": "solar_seawater"}}})j");
    EXPECT_TRUE(mentions(solar, "economics.c_sw", "$/(m3/h)"));
}

TEST(Config, AllIssuesReportedInOnePass)
{
    const auto issues = issues_of(R"j({
        "economics": {"c_wind": "1 kg", "eta_pump": 2, "typo": 1},
        "scenario": {"beta": -1, "plant": "nuclear"}
    })j");
    EXPECT_TRUE(mentions(issues, "economics.c_ccs"));
    EXPECT_TRUE(mentions(issues, "economics.c_wind"));
    EXPECT_TRUE(mentions(issues, "economics.eta_pump"));
    EXPECT_TRUE(mentions(issues, "economics.typo"));
    EXPECT_TRUE(mentions(issues, "scenario.beta"));
    EXPECT_TRUE(mentions(issues, "scenario.plant", "nuclear"));
}

TEST(Config, CustomProductAndScalarTransferCost)
{
    const Config cfg = parse_config(R"j({
        "economics": {"c_ccs": "1 $/(ton/day)", "c_cts": "250 $/(ton/day)",
                      "product_prices": {"formic_acid": "700 $/ton"}},
        "products": ["methane", {"name": "formic_acid", "formula": "CH2O2",
                                 "reaction": {"co2": 1, "h2": 1, "product": 1, "h2o": 0}}]
    })j");
    EXPECT_EQ(cfg.products.size(), 2u);
    EXPECT_EQ(cfg.product("formic_acid").formula(), (Formula{1, 2, 2}));
    EXPECT_EQ(cfg.econ.c_cts.tiers().size(), 1u);
}

TEST(Config, UnbalancedCustomProductRejected)
{
    const auto issues = issues_of(R"j({
        "economics": {"c_ccs": "1 $/(ton/day)", "product_prices": {"x": "1 $/ton"}},
        "products": [{"name": "x", "formula": "CH4", "reaction": {"co2": 1, "h2": 1, "product": 1, "h2o": 0}}]
    })j");
    EXPECT_TRUE(mentions(issues, "products[0]"));
}

TEST(Config, MalformedJsonAndMissingFile)
{
    EXPECT_THROW(parse_config("{"), ConfigError);
    EXPECT_THROW(load_config("/nonexistent/ewh.json"), IoError);
}

TEST(Config, PresetTextHasNoHiddenDefaults)
{
    // The shipped preset lists every economics key so nothing is silently defaulted.
    const std::string text = preset_text();
    for (const char* key : {"elec_price", "r_cts", "r_ccs", "c_cts", "c_ccs", "c_wind", "c_des", "c_tw", "c_we",
                            "xi_p", "r_w", "e_des", "interest_rate", "horizon_years"}) {
        EXPECT_NE(text.find(std::string("\"") + key + "\""), std::string::npos) << key;
    }
}
