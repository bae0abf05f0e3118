#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mhorizon/catalog.hpp"
#include "mhorizon/errors.hpp"

using namespace mhorizon;

namespace {

Topology demo_topology() {
    Topology t;
    t.nodes = {"N1", "N2"};
    t.commodities = {
        {"power", CommodityKind::Flow, 0.0},
        {"gas", CommodityKind::Flow, 0.202},
        {"hydrogen", CommodityKind::Flow, 0.0},
        {"co2", CommodityKind::Flow, 0.0},
        {"steel", CommodityKind::Sector, 0.0},
        {"cement", CommodityKind::Sector, 0.0},
    };
    return t;
}

AssetSpec electrolyzer() {
    AssetSpec a;
    a.id = "elz";
    a.node = "N1";
    a.category = AssetCategory::Converter;
    a.primary_commodity = "hydrogen";
    a.conversion = {{"hydrogen", 1.0}, {"power", -1.35}};
    return a;
}

} // namespace

TEST_CASE("electrolyzer lands in the power sinks and hydrogen sources") {
    ValidatedCatalog cat = validate_catalog({electrolyzer()}, demo_topology());
    const auto& h2_sources = cat.sources("hydrogen");
    const auto& power_sinks = cat.sinks("power");
    REQUIRE(h2_sources.size() == 1);
    REQUIRE(power_sinks.size() == 1);
    CHECK(h2_sources[0] == "elz");
    CHECK(power_sinks[0] == "elz");
}

TEST_CASE("duplicate asset ids are rejected") {
    CHECK_THROWS_WITH_AS(validate_catalog({electrolyzer(), electrolyzer()}, demo_topology()),
                         doctest::Contains("DuplicateAssetId"), Error);
}

TEST_CASE("steel route with capture registers as co2 and steel source") {
    AssetSpec route;
    route.id = "bfbof_ccs";
    route.node = "N1";
    route.category = AssetCategory::ProcessRoute;
    route.sector = "steel";
    route.primary_commodity = "steel";
    route.emission_factor = 1.8;
    route.capture_rate = 0.6;
    ValidatedCatalog cat = validate_catalog({route}, demo_topology());
    const auto& steel = cat.sources("steel");
    const auto& co2 = cat.sources("co2");
    REQUIRE(steel.size() == 1);
    REQUIRE(co2.size() == 1);
    CHECK(steel[0] == "bfbof_ccs");
    CHECK(co2[0] == "bfbof_ccs");
}

TEST_CASE("unknown references are named") {
    AssetSpec a = electrolyzer();
    a.node = "nowhere";
    CHECK_THROWS_WITH_AS(validate_catalog({a}, demo_topology()), doctest::Contains("UnknownNode"),
                         Error);

    AssetSpec b = electrolyzer();
    b.conversion.push_back({"unobtainium", -1.0});
    CHECK_THROWS_WITH_AS(validate_catalog({b}, demo_topology()),
                         doctest::Contains("UnknownCommodity"), Error);
}

TEST_CASE("non-route assets may not touch sector commodities") {
    AssetSpec a = electrolyzer();
    a.conversion.push_back({"steel", -0.1});
    CHECK_THROWS_WITH_AS(validate_catalog({a}, demo_topology()),
                         doctest::Contains("DanglingConversion"), Error);
}

TEST_CASE("capture without a co2 balance is dangling") {
    Topology t = demo_topology();
    t.commodities.erase(t.commodities.begin() + 3); // drop co2
    AssetSpec a = electrolyzer();
    a.emission_factor = 0.1;
    a.capture_rate = 0.9;
    CHECK_THROWS_WITH_AS(validate_catalog({a}, t), doctest::Contains("DanglingConversion"),
                         Error);
}

TEST_CASE("capture split honors the quoted 60 percent steel rate") {
    CaptureSplit s = capture_split(100.0, 0.6);
    CHECK(s.captured == 60.0);
    CHECK(s.atmospheric == 40.0);

    CaptureSplit none = capture_split(100.0, 0.0);
    CHECK(none.captured == 0.0);
    CHECK(none.atmospheric == 100.0);
}

TEST_CASE("capture split conserves mass bit-exactly over random draws") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> emitted(0.0, 1e6), rate(0.0, 1.0);
    for (int i = 0; i < 1000; ++i) {
        const double x = emitted(rng);
        const double r = rate(rng);
        CaptureSplit s = capture_split(x, r);
        CHECK(s.captured + s.atmospheric == x);
    }
}

TEST_CASE("capture split input validation") {
    CHECK_THROWS_WITH_AS(capture_split(-1.0, 0.5), doctest::Contains("NegativeEmission"), Error);
    CHECK_THROWS_WITH_AS(capture_split(1.0, 1.5), doctest::Contains("RateOutOfRange"), Error);
}

TEST_CASE("clinker process emissions are fuel-independent") {
    Topology t = demo_topology();
    AssetSpec kiln;
    kiln.id = "kiln_h2";
    kiln.node = "N1";
    kiln.category = AssetCategory::ProcessRoute;
    kiln.sector = "cement";
    kiln.primary_commodity = "cement";
    kiln.process_emission = 0.78;
    kiln.conversion = {{"cement", 1.0}, {"hydrogen", -0.9}};
    ValidatedCatalog cat = validate_catalog({kiln}, t);

    EmissionParts parts = process_emissions(*cat.find("kiln_h2"), 1e6, t);
    CHECK(parts.process == doctest::Approx(0.78e6).epsilon(1e-12));
    CHECK(parts.fuel == 0.0);

    AssetSpec gas_kiln = kiln;
    gas_kiln.id = "kiln_gas";
    gas_kiln.conversion = {{"cement", 1.0}, {"gas", -0.9}};
    ValidatedCatalog cat2 = validate_catalog({gas_kiln}, t);
    EmissionParts gp = process_emissions(*cat2.find("kiln_gas"), 1e6, t);
    CHECK(gp.fuel == doctest::Approx(0.202 * 0.9 * 1e6).epsilon(1e-12));
    CHECK(gp.process == doctest::Approx(0.78e6).epsilon(1e-12));

    EmissionParts zero = process_emissions(*cat.find("kiln_h2"), 0.0, t);
    CHECK(zero.fuel == 0.0);
    CHECK(zero.process == 0.0);

    CHECK_THROWS_WITH_AS(process_emissions(kiln, -1.0, t), doctest::Contains("NegativeOutput"),
                         Error);
}

TEST_CASE("heat pump output covers the quoted COP range") {
    CHECK(heatpump_output(1.0, 1.83) == doctest::Approx(1.83));
    CHECK(heatpump_output(1.0, 3.33) == doctest::Approx(3.33));
    CHECK(heatpump_output(0.0, 2.5) == 0.0);
    CHECK_THROWS_WITH_AS(heatpump_output(1.0, 0.0), doctest::Contains("NonPositiveCOP"), Error);
}

TEST_CASE("storage efficiency bounds are enforced") {
    AssetSpec s;
    s.id = "battery";
    s.node = "N1";
    s.category = AssetCategory::Storage;
    s.primary_commodity = "power";
    s.charge_eff = 0.0;
    CHECK_THROWS_WITH_AS(validate_catalog({s}, demo_topology()),
                         doctest::Contains("RateOutOfRange"), Error);
    s.charge_eff = 0.95;
    s.discharge_eff = 0.95;
    CHECK_NOTHROW(validate_catalog({s}, demo_topology()));
}

TEST_CASE("sector commodities cannot be stored") {
    AssetSpec s;
    s.id = "steel_pile";
    s.node = "N1";
    s.category = AssetCategory::Storage;
    s.primary_commodity = "steel";
    CHECK_THROWS_WITH_AS(validate_catalog({s}, demo_topology()),
                         doctest::Contains("only flow commodities"), Error);
}
