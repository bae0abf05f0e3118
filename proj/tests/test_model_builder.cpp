#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <map>
#include <random>

#include "mhorizon/case_io.hpp"
#include "mhorizon/errors.hpp"
#include "mhorizon/model_builder.hpp"
#include "mhorizon/simplex.hpp"
#include "mhorizon/solution_check.hpp"
#include "test_support.hpp"

using namespace mhorizon;
using namespace mhorizon::testing;
namespace fs = std::filesystem;

namespace {
const fs::path kCases = MHORIZON_CASES_DIR;

// activity of one row under a partial assignment (absent columns are zero)
double row_activity(const lp::SparseLP& lp, int row, const std::map<int, double>& values) {
    double acc = 0.0;
    for (const lp::Triplet& t : lp.triplets)
        if (t.row == row) {
            auto it = values.find(t.col);
            if (it != values.end()) acc += t.value * it->second;
        }
    return acc;
}

int row_by_name(const lp::SparseLP& lp, const std::string& name) {
    for (int r = 0; r < lp.n_rows; ++r)
        if (lp.row_name[r] == name) return r;
    FAIL("row not found: ", name);
    return -1;
}

AssetSpec generator(const std::string& id, const std::string& commodity = "power") {
    AssetSpec a;
    a.id = id;
    a.node = "N";
    a.category = AssetCategory::Generator;
    a.primary_commodity = commodity;
    return a;
}
} // namespace

TEST_CASE("flow balance instantiates sources minus sinks minus exports") {
    UnitCase unit = single_hour_case();
    unit.c.topology.nodes = {"N", "M"};
    AssetSpec gen = generator("gen");
    AssetSpec elz;
    elz.id = "elz";
    elz.node = "N";
    elz.category = AssetCategory::Converter;
    elz.primary_commodity = "hydrogen";
    elz.conversion = {{"hydrogen", 1.0}, {"power", -1.0}};
    unit.refresh({gen, elz});
    unit.c.arcs.push_back({"line", "power", "N", "M", 0, 0, 1, false, lp::kInf, 0.0, false});
    unit.c.demands.push_back({"power", "N", 1, 5.0, ""});
    unit.c.demands.push_back({"power", "M", 1, 2.0, ""});
    unit.c.initial_capacity[{"line", 1}] = 10.0;

    ModelArtifacts m = build_model(unit.c);
    int fb = row_by_name(m.lp, "fb.power.N.p1.w1.s1.h1");
    CHECK(m.lp.rhs[fb] == 5.0);
    CHECK(m.lp.row_sense[fb] == lp::Sense::EQ);

    // gen 10, electrolyzer sink 3, export 2 -> 10 - 3 - 2 = 5 balances
    std::map<int, double> values{
        {m.registry.column(VarKind::Operation, "gen", 0, 0, 0, 1), 10.0},
        {m.registry.column(VarKind::Operation, "elz", 0, 0, 0, 1), 3.0},
        {m.registry.column(VarKind::Flow, "line", 0, 0, 0, 1, 0), 2.0},
    };
    CHECK(row_activity(m.lp, fb, values) == 5.0);

    // hydrogen carries no exogenous demand here: rhs 0, demanded endogenously
    int fbh = row_by_name(m.lp, "fb.hydrogen.N.p1.w1.s1.h1");
    CHECK(m.lp.rhs[fbh] == 0.0);
}

TEST_CASE("curtailment closes the power balance when sources are absent") {
    UnitCase unit = single_hour_case();
    AssetSpec gen = generator("gen");
    unit.refresh({gen});
    unit.c.demands.push_back({"power", "N", 1, 5.0, ""});
    // no initial capacity and nothing investable: only loss of load remains
    ModelArtifacts m = build_model(unit.c);
    lp::Solution sol = solve_simplex(m.lp);
    REQUIRE(sol.status == lp::SolveStatus::Optimal);
    CHECK(sol.x[m.registry.column(VarKind::LossOfLoad, "N", 0, 0, 0, 1)] ==
          doctest::Approx(5.0));
    CHECK(sol.objective == doctest::Approx(5.0 * 3000.0));
}

TEST_CASE("demand without any supply path is rejected") {
    UnitCase unit = single_hour_case();
    unit.refresh({});
    unit.c.demands.push_back({"gas", "N", 1, 5.0, ""});
    CHECK_THROWS_WITH_AS(build_model(unit.c), doctest::Contains("NoSupplyPath"), Error);
}

TEST_CASE("lifetime coupling reproduces the worked examples") {
    UnitCase unit(3, {{"s", 1, false, 1.0}}, {{"w", 1.0}}, 1.0, 5);
    AssetSpec gen = generator("gen");
    gen.lifetime_periods = 2;
    gen.investable = true;
    unit.refresh({gen});
    ModelArtifacts m = build_model(unit.c);

    auto implied_v = [&](const std::vector<double>& invest, const std::vector<double>& initial) {
        // read v from the equality row: v_i = sum(window x) + xbar_i
        std::vector<double> v(3, 0.0);
        for (int i = 0; i < 3; ++i) {
            int row = row_by_name(m.lp, "life.gen.N.p" + std::to_string(i + 1));
            std::map<int, double> values;
            for (int j = 0; j < 3; ++j)
                values[m.registry.column(VarKind::Invest, "gen", j)] = invest[j];
            // activity = sum_window x - v; row rhs = -xbar so v = activity(x) + xbar
            v[i] = row_activity(m.lp, row, values) + initial[i];
        }
        return v;
    };

    SUBCASE("invest 1 GW in period 1, lifetime 2") {
        auto v = implied_v({1.0, 0.0, 0.0}, {0.0, 0.0, 0.0});
        CHECK(v[0] == 1.0);
        CHECK(v[1] == 1.0);
        CHECK(v[2] == 0.0);
    }
    SUBCASE("initial 5 GW retiring after period 2") {
        auto v = implied_v({0.0, 0.0, 0.0}, {5.0, 5.0, 0.0});
        CHECK(v[0] == 5.0);
        CHECK(v[1] == 5.0);
        CHECK(v[2] == 0.0);
    }
}

TEST_CASE("random investment schedules match the rolling-window oracle exactly") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> life_dist(1, 6), invest_dist(0, 7);
    for (int trial = 0; trial < 100; ++trial) {
        UnitCase unit(8, {{"s", 1, false, 1.0}}, {{"w", 1.0}}, 1.0, 5);
        AssetSpec gen = generator("gen");
        gen.lifetime_periods = life_dist(rng);
        gen.investable = true;
        unit.refresh({gen});
        ModelArtifacts m = build_model(unit.c);

        std::vector<double> invest(8);
        for (double& x : invest) x = invest_dist(rng);

        for (int i = 0; i < 8; ++i) {
            int row = row_by_name(m.lp, "life.gen.N.p" + std::to_string(i + 1));
            std::map<int, double> values;
            for (int j = 0; j < 8; ++j)
                values[m.registry.column(VarKind::Invest, "gen", j)] = invest[j];
            double constraint_v = row_activity(m.lp, row, values);
            double oracle_v = 0.0; // independent rolling-window sum
            for (int j = std::max(0, i - gen.lifetime_periods + 1); j <= i; ++j)
                oracle_v += invest[j];
            CHECK(constraint_v == oracle_v);
        }
    }
}

TEST_CASE("operation bounds scale capacity by the availability profile") {
    UnitCase unit(1, {{"s", 2, false, 1.0}}, {{"w", 1.0}}, 2.0, 1);
    AssetSpec gen = generator("gen");
    gen.availability_profile = "av";
    unit.refresh({gen});
    unit.c.profiles["av"] = {0.5, 0.0};

    ModelBuilder b(unit.c);
    b.register_variables();
    b.add_operation_bounds();
    const lp::SparseLP& raw = b.lp();

    // v = 2, availability 0.5 -> y <= 1; availability 0 -> y forced to 0
    int r1 = row_by_name(raw, "capbnd.gen.N.p1.w1.s1.h1");
    int r2 = row_by_name(raw, "capbnd.gen.N.p1.w1.s1.h2");
    std::map<int, double> values{{b.registry().column(VarKind::Capacity, "gen", 0), 2.0},
                                 {b.registry().column(VarKind::Operation, "gen", 0, 0, 0, 1), 1.0}};
    CHECK(row_activity(raw, r1, values) == 0.0); // 1 - 0.5 * 2 = 0: binding at y = 1
    std::map<int, double> v2{{b.registry().column(VarKind::Capacity, "gen", 0), 2.0},
                             {b.registry().column(VarKind::Operation, "gen", 0, 0, 0, 2), 0.1}};
    CHECK(row_activity(raw, r2, v2) == doctest::Approx(0.1)); // any positive y violates
}

TEST_CASE("storage dynamics follow the half-full convention") {
    UnitCase unit(1, {{"s", 3, false, 1.0}}, {{"w", 1.0}}, 3.0, 1);
    AssetSpec st;
    st.id = "store";
    st.node = "N";
    st.category = AssetCategory::Storage;
    st.primary_commodity = "power";
    unit.refresh({st});

    ModelBuilder b(unit.c);
    b.register_variables();
    b.add_storage_dynamics();
    const lp::SparseLP& raw = b.lp();
    const VariableRegistry& reg = b.registry();

    SUBCASE("interior hour: w_prev + charge - discharge = w") {
        int row = row_by_name(raw, "stor.store.N.p1.w1.s1.h2");
        std::map<int, double> values{
            {reg.column(VarKind::StorageLevel, "store", 0, 0, 0, 1), 5.0},
            {reg.column(VarKind::StorageCharge, "store", 0, 0, 0, 2), 2.0},
            {reg.column(VarKind::StorageDischarge, "store", 0, 0, 0, 2), 1.0},
            {reg.column(VarKind::StorageLevel, "store", 0, 0, 0, 2), 6.0},
        };
        CHECK(row_activity(raw, row, values) == 0.0); // 6 - 5 - 2 + 1 = 0
    }

    SUBCASE("random feasible schedules end the season half-full") {
        std::mt19937 rng(5);
        std::uniform_real_distribution<double> amount(0.0, 3.0);
        for (int trial = 0; trial < 200; ++trial) {
            const double cap = 10.0;
            double level = 0.5 * cap;
            std::map<int, double> values{{reg.column(VarKind::Capacity, "store", 0), cap}};
            for (int h = 1; h <= 3; ++h) {
                double charge = amount(rng), discharge = amount(rng);
                double next = (h == 1 ? 0.5 * cap : level) + charge - discharge;
                values[reg.column(VarKind::StorageCharge, "store", 0, 0, 0, h)] = charge;
                values[reg.column(VarKind::StorageDischarge, "store", 0, 0, 0, h)] = discharge;
                values[reg.column(VarKind::StorageLevel, "store", 0, 0, 0, h)] = next;
                level = next;
                int row = row_by_name(raw, "stor.store.N.p1.w1.s1.h" + std::to_string(h));
                CHECK(std::abs(row_activity(raw, row, values)) <= 1e-12);
            }
            // the season-neutral row forces the final level back to half
            int endr = row_by_name(raw, "storend.store.N.p1.w1.s1");
            double residual = row_activity(raw, endr, values);
            CHECK(residual == doctest::Approx(level - 0.5 * cap).epsilon(1e-12));
        }
    }
}

TEST_CASE("one-hour seasons apply the first-hour and last-hour forms together") {
    UnitCase unit = single_hour_case();
    AssetSpec st;
    st.id = "store";
    st.node = "N";
    st.category = AssetCategory::Storage;
    st.primary_commodity = "power";
    unit.refresh({st});
    ModelBuilder b(unit.c);
    b.register_variables();
    b.add_storage_dynamics();
    CHECK_NOTHROW(row_by_name(b.lp(), "stor.store.N.p1.w1.s1.h1"));
    CHECK_NOTHROW(row_by_name(b.lp(), "storend.store.N.p1.w1.s1"));
}

TEST_CASE("cumulative limits bind production against reserves") {
    UnitCase unit(1, {{"s", 168, false, 1.0}}, {{"w", 1.0}}, 168.0, 5);
    unit.refresh({});
    unit.c.gas_supplies.push_back(
        {"field", "N", GasSupplyKind::PipelineField, 10.0, 840.0, false});

    ModelBuilder b(unit.c);
    b.register_variables();
    b.add_cumulative_limits();
    int row = row_by_name(b.lp(), "cum.field.N.w1");
    CHECK(b.lp().rhs[row] == 840.0);
    // producing 1 MWh/h for 168 hours exactly exhausts 840 MWh at L=5
    std::map<int, double> values;
    for (int h = 1; h <= 168; ++h)
        values[b.registry().column(VarKind::Supply, "field", 0, 0, 0, h)] = 1.0;
    CHECK(row_activity(b.lp(), row, values) == 840.0);
}

TEST_CASE("emission cap weighs atmospheric intensity only") {
    UnitCase unit = single_hour_case();
    AssetSpec plant = generator("plant");
    plant.emission_factor = 0.4;
    plant.capture_rate = 0.9;
    AssetSpec kiln;
    kiln.id = "kiln";
    kiln.node = "N";
    kiln.category = AssetCategory::ProcessRoute;
    kiln.primary_commodity = "cement";
    kiln.process_emission = 0.78;
    kiln.conversion = {{"cement", 1.0}, {"hydrogen", -0.9}};
    unit.refresh({plant, kiln});
    unit.c.carbon_cap = {0.0};

    ModelBuilder b(unit.c);
    b.register_variables();
    b.add_emission_cap();
    int row = row_by_name(b.lp(), "cap.co2.all.p1.w1");
    CHECK(b.lp().rhs[row] == 0.0);

    // gas plant 0.4 t/MWh at 90% capture costs 0.04 t/MWh of cap (L = 1 here)
    std::map<int, double> plant_only{{b.registry().column(VarKind::Operation, "plant", 0, 0, 0, 1), 1.0}};
    CHECK(row_activity(b.lp(), row, plant_only) ==
          doctest::Approx(0.4 * (1.0 - 0.9)).epsilon(1e-12));

    // hydrogen-fired clinker still spends 0.78 t per tonne of cap
    std::map<int, double> kiln_only{{b.registry().column(VarKind::Operation, "kiln", 0, 0, 0, 1), 1.0}};
    CHECK(row_activity(b.lp(), row, kiln_only) == doctest::Approx(0.78).epsilon(1e-12));
}

TEST_CASE("a missing cap trajectory is refused") {
    UnitCase unit = single_hour_case();
    unit.refresh({});
    unit.c.carbon_cap.clear();
    ModelBuilder b(unit.c);
    b.register_variables();
    CHECK_THROWS_WITH_AS(b.add_emission_cap(), doctest::Contains("MissingCapTrajectory"), Error);
}

TEST_CASE("industry rows: scrap share cap and flexibility band") {
    UnitCase unit(1, {{"s", 2, false, 4380.0}}, {{"w", 1.0}}, 8760.0, 5);
    AssetSpec scrap;
    scrap.id = "scrap";
    scrap.node = "N";
    scrap.category = AssetCategory::ProcessRoute;
    scrap.primary_commodity = "steel";
    scrap.feedstock_cap = 0.45;
    scrap.investable = true;
    AssetSpec bf = scrap;
    bf.id = "bf";
    bf.feedstock_cap = -1.0;
    unit.refresh({scrap, bf});
    const double annual = 100.0 * unit.c.annual_equiv_hours(); // nominal rate 100/h
    unit.c.annual_demands.push_back({"steel", "N", 1, annual});
    unit.c.options.flexible_industry = true;
    unit.c.options.flexibility_fraction = 0.2;

    ModelBuilder b(unit.c);
    b.register_variables();
    b.add_industry_demand();
    const lp::SparseLP& raw = b.lp();

    int share = row_by_name(raw, "feed.scrap.N.p1.w1");
    CHECK(raw.rhs[share] == doctest::Approx(5.0 * 0.45 * annual).epsilon(1e-12));

    int lo = row_by_name(raw, "indlo.steel.N.p1.w1.s1.h1");
    int hi = row_by_name(raw, "indhi.steel.N.p1.w1.s1.h1");
    CHECK(raw.rhs[lo] == doctest::Approx(80.0).epsilon(1e-12));
    CHECK(raw.rhs[hi] == doctest::Approx(120.0).epsilon(1e-12));

    int annual_row = row_by_name(raw, "ind.steel.N.p1.w1");
    CHECK(raw.rhs[annual_row] == doctest::Approx(5.0 * annual).epsilon(1e-12));
    CHECK(raw.row_sense[annual_row] == lp::Sense::GE);
}

TEST_CASE("a single route sized exactly to demand runs flat out all year") {
    UnitCase unit(1, {{"s", 2, false, 4380.0}}, {{"w", 1.0}}, 8760.0, 5);
    AssetSpec route;
    route.id = "mill";
    route.node = "N";
    route.category = AssetCategory::ProcessRoute;
    route.primary_commodity = "steel";
    route.var_cost = 10.0;
    unit.refresh({route});
    unit.c.initial_capacity[{"mill", 1}] = 100.0;
    unit.c.annual_demands.push_back({"steel", "N", 1, 100.0 * unit.c.annual_equiv_hours()});

    ModelArtifacts m = build_model(unit.c);
    lp::Solution sol = solve_simplex(m.lp);
    REQUIRE(sol.status == lp::SolveStatus::Optimal);
    for (int h = 1; h <= 2; ++h)
        CHECK(sol.x[m.registry.column(VarKind::Operation, "mill", 0, 0, 0, h)] ==
              doctest::Approx(100.0));
}

TEST_CASE("demand beyond any route capacity is infeasible by construction") {
    UnitCase unit = single_hour_case();
    AssetSpec route;
    route.id = "mill";
    route.node = "N";
    route.category = AssetCategory::ProcessRoute;
    route.primary_commodity = "steel";
    unit.refresh({route});
    unit.c.initial_capacity[{"mill", 1}] = 1.0;
    unit.c.annual_demands.push_back({"steel", "N", 1, 100.0});
    ModelBuilder b(unit.c);
    b.register_variables();
    CHECK_THROWS_WITH_AS(b.add_industry_demand(), doctest::Contains("InfeasibleDemand"), Error);
}

TEST_CASE("investment limits by kind") {
    CaseData c = load_case(kCases / "northsea-mini");
    ModelArtifacts m = build_model(c);
    // fixed gas pipelines never receive investment
    for (int i = 0; i < 2; ++i) {
        int col = m.registry.column(VarKind::Invest, "gpipe_ru_de", i);
        CHECK(m.lp.col_upper[col] == 0.0);
        // co2 and hydrogen pipelines are open
        int free_col = m.registry.column(VarKind::Invest, "cpipe_de_gb", i);
        CHECK(m.lp.col_upper[free_col] == lp::kInf);
        int h2_col = m.registry.column(VarKind::Invest, "h2pipe_de_nl", i);
        CHECK(m.lp.col_upper[h2_col] == lp::kInf);
    }
}

TEST_CASE("per-node build limits bound the investment column") {
    UnitCase unit = single_hour_case();
    AssetSpec wind = generator("wind");
    wind.investable = true;
    wind.invest_limit = 50.0;
    unit.refresh({wind});
    ModelArtifacts m = build_model(unit.c);
    CHECK(m.lp.col_upper[m.registry.column(VarKind::Invest, "wind", 0)] == 50.0);
}

TEST_CASE("objective is the probability-weighted expectation") {
    // two equiprobable scenarios with operational costs 10 and 20
    UnitCase unit(1, {{"s", 1, false, 1.0}}, {{"w1", 0.5}, {"w2", 0.5}}, 1.0, 1);
    AssetSpec gen = generator("gen");
    gen.var_cost = 10.0;
    unit.refresh({gen});
    unit.c.initial_capacity[{"gen", 1}] = 10.0;
    unit.c.demands.push_back({"power", "N", 1, 1.0, "load"});
    unit.c.profiles["load"] = {1.0, 2.0}; // scenario demands 1 and 2

    ModelArtifacts m = build_model(unit.c);
    lp::Solution sol = solve_simplex(m.lp);
    REQUIRE(sol.status == lp::SolveStatus::Optimal);
    CHECK(sol.objective == doctest::Approx(15.0).epsilon(1e-12));
}

TEST_CASE("single-scenario objective is the plain cost sum") {
    UnitCase unit = single_hour_case();
    AssetSpec gen = generator("gen");
    gen.var_cost = 7.0;
    unit.refresh({gen});
    unit.c.initial_capacity[{"gen", 1}] = 10.0;
    unit.c.demands.push_back({"power", "N", 1, 3.0, ""});
    ModelArtifacts m = build_model(unit.c);
    lp::Solution sol = solve_simplex(m.lp);
    REQUIRE(sol.status == lp::SolveStatus::Optimal);
    CHECK(sol.objective == doctest::Approx(21.0).epsilon(1e-12));
}

TEST_CASE("gas cost flag doubles the production coefficient") {
    CaseData base = load_case(kCases / "3node");
    ModelArtifacts cheap = build_model(apply_scenario_flags(base, {true, GasCost::Affordable}));
    ModelArtifacts steep = build_model(apply_scenario_flags(base, {true, GasCost::Costly}));
    int col = cheap.registry.column(VarKind::Supply, "field_a", 0, 0, 0, 1);
    CHECK(steep.lp.objective[col] == doctest::Approx(2.0 * cheap.lp.objective[col]));
}

TEST_CASE("row names round-trip losslessly") {
    CaseData c = load_case(kCases / "3node");
    ModelArtifacts m = build_model(c);
    for (const std::string& name : m.lp.row_name) {
        RowName parsed = parse_row_name(name);
        CHECK(format_row_name(parsed) == name);
    }
    CHECK(m.lp.n_rows > 0);
}

TEST_CASE("fixture models solve to optimality with clean residuals") {
    for (const char* name : {"1node", "3node", "northsea-mini"}) {
        CaseData c = load_case(kCases / name);
        ModelArtifacts m = build_model(c);
        lp::Solution sol = solve_simplex(m.lp);
        INFO(name, " cols=", m.lp.n_cols, " rows=", m.lp.n_rows, " iters=", sol.iterations);
        REQUIRE(sol.status == lp::SolveStatus::Optimal);
        lp::ResidualReport rep = check_solution(m.lp, sol);
        CHECK(rep.max_row_residual <= 1e-6);
        CHECK(rep.max_bound_violation <= 1e-6);
        CHECK(rep.duality_gap <= 1e-6 * (1.0 + std::abs(sol.objective)));
    }
}

TEST_CASE("dropping an arc or asset never improves the optimum") {
    CaseData base = load_case(kCases / "3node");
    ModelArtifacts m = build_model(base);
    lp::Solution ref = solve_simplex(m.lp);
    REQUIRE(ref.status == lp::SolveStatus::Optimal);

    CaseData no_arc = base;
    no_arc.arcs.erase(no_arc.arcs.begin() + 1); // pipe_b_c
    lp::Solution without_arc = solve_simplex(build_model(no_arc).lp);
    REQUIRE(without_arc.status == lp::SolveStatus::Optimal);
    CHECK(without_arc.objective >= ref.objective - 1e-6 * (1.0 + std::abs(ref.objective)));

    CaseData no_wind = base;
    std::vector<AssetSpec> kept;
    for (const AssetSpec& a : no_wind.catalog.assets())
        if (a.id != "wind") kept.push_back(a);
    no_wind.catalog = validate_catalog(kept, no_wind.topology);
    lp::Solution without_wind = solve_simplex(build_model(no_wind).lp);
    REQUIRE(without_wind.status == lp::SolveStatus::Optimal);
    CHECK(without_wind.objective >= ref.objective - 1e-6 * (1.0 + std::abs(ref.objective)));
}

TEST_CASE("constraint audit names every family") {
    CaseData c = load_case(kCases / "northsea-mini");
    ModelArtifacts m = build_model(c);
    std::string audit = constraint_audit(m);
    for (const auto& [tag, count] : m.row_families) {
        CHECK(audit.find(tag + ": " + std::to_string(count)) != std::string::npos);
        CHECK(audit.find("(unknown family)") == std::string::npos);
    }
}

TEST_CASE("scaling every cost by lambda rescales the optimum and keeps the argmin") {
    CaseData c = load_case(kCases / "1node");
    ModelArtifacts m = build_model(c);
    lp::Solution base = solve_simplex(m.lp);
    REQUIRE(base.status == lp::SolveStatus::Optimal);

    const double lambda = 2.75;
    lp::SparseLP scaled = m.lp;
    for (double& v : scaled.objective) v *= lambda;
    lp::Solution again = solve_simplex(scaled);
    REQUIRE(again.status == lp::SolveStatus::Optimal);
    CHECK(again.objective ==
          doctest::Approx(lambda * base.objective).epsilon(1e-8));
    double reval = 0.0;
    for (int j = 0; j < scaled.n_cols; ++j) reval += scaled.objective[j] * base.x[j];
    CHECK(reval == doctest::Approx(again.objective).epsilon(1e-8));
    CHECK(check_solution(scaled, base).max_row_residual <= 1e-6);
}
