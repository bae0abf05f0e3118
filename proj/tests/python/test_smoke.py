"""Smoke tests for the python module against the bundled cases."""

import os

import pytest

import mhorizon

CASES = os.environ.get("MHORIZON_CASE_DIR", os.path.join(os.path.dirname(__file__), "..", "..", "cases"))


def case_path(name):
    return os.path.join(CASES, name)


def test_load_case_dimensions():
    case = mhorizon.load_case(case_path("3node"))
    assert case.name == "3node"
    assert sorted(case.nodes) == ["A", "B", "C"]
    assert case.periods == 2
    assert case.scenarios == 2
    dims = case.dimensions()
    assert dims["columns"] > 0
    assert dims["rows"] > 0


def test_build_solve_and_check():
    case = mhorizon.load_case(case_path("1node"))
    model = mhorizon.build_model(case)
    assert model.n_cols == case.dimensions()["columns"]
    solution = model.solve()
    assert solution.status == "optimal"
    assert solution.objective > 0

    residuals = model.check(solution)
    assert residuals["max_row_residual"] <= 1e-6
    assert residuals["duality_gap"] <= 1e-6 * (1 + abs(solution.objective))

    values = model.values(solution)
    assert len(values) == model.n_cols


def test_scenario_flags_change_the_objective():
    case = mhorizon.load_case(case_path("3node"))
    cheap = mhorizon.build_model(case.apply_flags(russian_gas=True, gas_cost="affordable"))
    steep = mhorizon.build_model(case.apply_flags(russian_gas=False, gas_cost="costly"))
    z_cheap = cheap.solve().objective
    z_steep = steep.solve().objective
    assert z_steep >= z_cheap


def test_untagged_russian_supply_raises():
    case = mhorizon.load_case(case_path("1node"))
    with pytest.raises(mhorizon.ModelError):
        case.apply_flags(russian_gas=False)


def test_mps_round_trip_objective():
    case = mhorizon.load_case(case_path("1node"))
    model = mhorizon.build_model(case)
    direct = model.solve()
    status, objective = mhorizon.solve_mps(model.to_mps())
    assert status == "optimal"
    assert objective == pytest.approx(direct.objective, rel=1e-8)


def test_reports_shape():
    case = mhorizon.load_case(case_path("northsea-mini"))
    model = mhorizon.build_model(case)
    solution = model.solve()
    assert solution.status == "optimal"
    reports = model.reports(solution)
    assert reports["periods"] == 2
    assert "electrolysis" in reports["hydrogen_capacity_tph"]
    assert set(reports["industry_shares"]) == {"steel", "cement", "ammonia", "refined"}
    for sector, routes in reports["industry_shares"].items():
        for period in range(reports["periods"]):
            total = sum(series[period] for series in routes.values())
            assert total == pytest.approx(1.0, abs=1e-9), sector
    assert reports["objective"] == pytest.approx(
        reports["investment_cost"] + reports["expected_operational_cost"], rel=1e-12
    )
