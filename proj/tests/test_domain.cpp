#include "ewh/domain.hpp"
#include "ewh/error.hpp"

#include <gtest/gtest.h>

using namespace ewh;

namespace {

constexpr Unit kTonPerHour = units::ton / units::h;
constexpr Unit kPerTonDay = units::usd / (units::ton / units::day);

PlantSpec plant(double mw, double g_per_kwh)
{
    return PlantSpec("p", Quantity{mw, units::MW}, Quantity{g_per_kwh, units::g / units::kWh});
}

}  // namespace

TEST(Plant, EmissionsAtCapacity)
{
    EXPECT_DOUBLE_EQ(emissions_at_capacity(plant(500, 230)).in(kTonPerHour), 115.0);
    EXPECT_DOUBLE_EQ(emissions_at_capacity(plant(500, 820)).in(kTonPerHour), 410.0);
    EXPECT_DOUBLE_EQ(emissions_at_capacity(plant(500, 490)).in(kTonPerHour), 245.0);
    EXPECT_EQ(emissions_at_capacity(plant(0, 820)).value(), 0.0);
}

TEST(Plant, ReferencePlants)
{
    const auto plants = reference_plants();
    ASSERT_EQ(plants.size(), 3u);
    EXPECT_EQ(plants[0].name(), "coal");
    EXPECT_EQ(plants[2].name(), "biomass");
    for (const auto& p : plants) {
        EXPECT_DOUBLE_EQ(p.capacity().in(units::MW), 500.0);
    }
}

TEST(Plant, RejectsNegativeOrMisdimensionedInputs)
{
    EXPECT_THROW(plant(-1, 230), DomainError);
    EXPECT_THROW(plant(500, -1), DomainError);
    EXPECT_THROW(PlantSpec("p", Quantity{500, units::kg}, Quantity{0.23, units::kg / units::kWh}), DimensionError);
}

TEST(TimeSeries, ConstantProfileIntegrals)
{
    const auto s = constant_profile(Quantity{115.0, kTonPerHour}, 24);
    EXPECT_EQ(s.size(), 24u);
    EXPECT_DOUBLE_EQ(s.integral().in(units::ton), 2760.0);
    EXPECT_DOUBLE_EQ(constant_profile(Quantity{245.0, kTonPerHour}, 24).integral().in(units::ton), 5880.0);
    const auto zero = constant_profile(Quantity{0.0, kTonPerHour}, 24);
    for (double v : zero.values()) {
        EXPECT_EQ(v, 0.0);
    }
}

TEST(TimeSeries, RejectsBadInput)
{
    EXPECT_THROW(TimeSeries(dims::mass_flow, {}), DomainError);
    EXPECT_THROW(TimeSeries(dims::mass_flow, {1.0, -1.0}), DomainError);
    EXPECT_THROW(constant_profile(Quantity{1.0, kTonPerHour}, 0), DomainError);
}

TEST(TieredCost, PicksHighestTierAtOrBelowFlow)
{
    const TieredCost c({{Quantity{0.0, units::ton / units::day}, Quantity{30.0, kPerTonDay}},
                        {Quantity{8000.0, units::ton / units::day}, Quantity{10.0, kPerTonDay}},
                        {Quantity{4000.0, units::ton / units::day}, Quantity{20.0, kPerTonDay}}});
    auto at = [&](double tpd) { return c.at(Quantity{tpd, units::ton / units::day}).in(kPerTonDay); };
    EXPECT_EQ(at(0), 30.0);
    EXPECT_EQ(at(3999.9), 30.0);
    EXPECT_EQ(at(4000), 20.0);
    EXPECT_EQ(at(7999), 20.0);
    EXPECT_EQ(at(9840), 10.0);
}

TEST(TieredCost, DefaultTransferCapital)
{
    const TieredCost c = default_transfer_capital();
    EXPECT_DOUBLE_EQ(c.at(Quantity{2760.0, units::ton / units::day}).in(kPerTonDay), 250.0);
    EXPECT_DOUBLE_EQ(c.at(Quantity{1000.0, units::ton / units::day}).in(kPerTonDay), 1500.0);
}

TEST(TieredCost, RejectsDuplicateThresholds)
{
    EXPECT_THROW(TieredCost({{Quantity{0.0, units::ton / units::day}, Quantity{1.0, kPerTonDay}},
                             {Quantity{0.0, units::ton / units::day}, Quantity{2.0, kPerTonDay}}}),
                 DomainError);
}

TEST(EconParams, DefaultsValidateAndScaleFriction)
{
    EconParams e;
    EXPECT_NO_THROW(e.validate());
    EXPECT_DOUBLE_EQ(e.r_w_at(Quantity{250.0, units::km}).value(), 5e-4);
    EXPECT_DOUBLE_EQ(e.price_of("methanol").in(units::usd / units::ton), 616.0);
    EXPECT_THROW(e.price_of("butanol"), DomainError);
}

TEST(EconParams, RejectsWrongUnits)
{
    EconParams e;
    e.c_wind = Quantity{1030.0, units::usd / units::kWh};
    EXPECT_THROW(e.validate(), DimensionError);
    EconParams f;
    f.eta_pump = 1.5;
    EXPECT_THROW(f.validate(), DomainError);
}
