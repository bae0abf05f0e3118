#!/usr/bin/env python3
"""Regenerates the bundled desk-scale case directories.

Run from the repository root:  python3 cases/make_fixtures.py
The CSV schemas are documented in docs/case_format.md.
"""
import os

HERE = os.path.dirname(os.path.abspath(__file__))

# LNG import price track, EUR/MWh (affordable / costly)
LNG_PRICE = [
    (2020, 20.86, 50.98),
    (2025, 22.57, 55.15),
    (2030, 24.55, 59.98),
    (2035, 26.22, 64.06),
    (2040, 27.10, 66.22),
    (2045, 27.66, 67.57),
    (2050, 28.08, 68.62),
    (2055, 28.08, 68.62),
]

# offshore sequestration capacity, Gt
SEQUESTRATION_GT = {"NO2": 29.5, "NO3": 30.7, "NO5": 0.2, "DK": 0.3, "NL": 4.0, "GB": 78.0}

ASSET_HEADER = ("id,node,category,sector,group,primary,invest_cost,fixed_om,var_cost,"
                "lifetime,investable,investable_from,max_built,emission_factor,capture_rate,"
                "charge_eff,discharge_eff,availability_profile,output_profile")


def write(case, name, lines):
    path = os.path.join(HERE, case)
    os.makedirs(path, exist_ok=True)
    with open(os.path.join(path, name), "w") as f:
        f.write("\n".join(lines) + "\n")


def manifest(case, periods, extra_options=()):
    lines = [
        "[case]",
        f'name = "{case}"',
        "schema = 1",
        "",
        "[time]",
        f"periods = {periods}",
        "period_length_years = 5",
        "first_year = 2020",
        "discount_rate = 0.05",
        "annual_hours = 8736",
        "",
        "[options]",
        "loss_of_load_penalty = 3000",
    ]
    lines += list(extra_options)
    lines += [
        "",
        "[gas]",
        "production_cost_affordable = 10",
        "production_cost_costly = 20",
    ]
    write(case, "manifest.toml", lines)


def profile_rows(profile, values):
    """values: {(scenario, season): [v per hour]}"""
    rows = []
    for (scen, season), series in values.items():
        for h, v in enumerate(series, start=1):
            rows.append(f"{profile},{scen},{season},{h},{v}")
    return rows


def lng_table(case, years):
    write(case, "lng_price.csv", ["year,affordable,costly"] +
          [f"{y},{a},{c}" for (y, a, c) in LNG_PRICE if y in years])


# --------------------------------------------------------------------------
# 1node: a single bus with power, hydrogen, gas, CO2 and the steel and
# cement sectors; the final-period emission cap is zero.
# --------------------------------------------------------------------------
def make_1node():
    case = "1node"
    manifest(case, periods=2, extra_options=[
        'industry_mode = "flexible"',
        "flexibility_fraction = 0.2",
    ])
    write(case, "nodes.csv", ["node", "N"])
    write(case, "commodities.csv", [
        "commodity,kind,emission_factor",
        "power,flow,0",
        "gas,flow,0.202",
        "hydrogen,flow,0",
        "co2,flow,0",
        "steel,sector,0",
        "cement,sector,0",
    ])
    write(case, "scenarios.csv", ["scenario,probability", "base,1.0"])
    write(case, "seasons.csv", ["season,hours,peak,weight", "year,4,0,2184"])
    write(case, "assets.csv", [
        ASSET_HEADER,
        "wind,N,generator,power,wind,power,1100000,9000,0,2,1,1,,0,0,,,wind_n,",
        "gasccgt,N,generator,power,gas-power,power,900000,12000,1.5,2,1,1,,0,0,,,,",
        "elz,N,converter,hydrogen,electrolysis,hydrogen,600000,8000,0.5,2,1,1,,0,0,,,,",
        "bfbof_ccs,N,process-route,steel,steel-ccs,steel,300000,4000,60,2,1,1,,1.8,0.6,,,,",
        "h2dri,N,process-route,steel,steel-h2,steel,400000,5000,80,2,1,1,,0,0,,,,",
        "scrap_eaf,N,process-route,steel,steel-scrap,steel,200000,3000,40,2,1,1,,0,0,,,,",
        "kiln_gas,N,process-route,cement,cement-gas,cement,150000,2000,20,2,1,1,,0,0,,,,",
        "kiln_ccs,N,process-route,cement,cement-ccs,cement,250000,3000,35,2,1,1,,0,1.0,,,,",
    ])
    write(case, "conversions.csv", [
        "asset,commodity,coefficient",
        "gasccgt,gas,-2.0",
        "elz,power,-1.35",
        "bfbof_ccs,power,-0.1",
        "h2dri,hydrogen,-2.0",
        "h2dri,power,-0.6",
        "scrap_eaf,power,-0.5",
        "kiln_gas,gas,-1.1",
        "kiln_ccs,gas,-1.3",
    ])
    write(case, "routes.csv", [
        "asset,process_emission,feedstock_cap",
        "bfbof_ccs,0,",
        "h2dri,0,",
        "scrap_eaf,0,0.45",
        "kiln_gas,0.78,",
        "kiln_ccs,0.78,",
    ])
    write(case, "gas_supply.csv", [
        "id,node,kind,capacity,reserves,tag",
        "field_n,N,field,400,unbounded,",
    ])
    write(case, "sequestration.csv", ["node,max_gt", f"N,{SEQUESTRATION_GT['DK']}"])
    write(case, "demand.csv", [
        "commodity,node,period,base,profile",
        "power,N,1,80,dem_n",
        "power,N,2,90,dem_n",
        "hydrogen,N,1,5,",
        "hydrogen,N,2,8,",
    ])
    write(case, "annual_demand.csv", [
        "sector,node,period,demand",
        "steel,N,1,200000",
        "steel,N,2,200000",
        "cement,N,1,100000",
        "cement,N,2,100000",
    ])
    write(case, "initial_capacity.csv", [
        "id,period,capacity",
        "gasccgt,1,120",
        "gasccgt,2,120",
        "bfbof_ccs,1,60",
        "bfbof_ccs,2,60",
        "kiln_gas,1,30",
        "kiln_gas,2,30",
    ])
    write(case, "carbon_cap.csv", ["period,cap", "1,5000000", "2,0"])
    write(case, "profiles.csv", ["profile,scenario,season,hour,value"] + profile_rows(
        "wind_n", {("base", "year"): [0.8, 0.3, 0.6, 0.4]}) + profile_rows(
        "dem_n", {("base", "year"): [1.05, 0.95, 1.0, 1.0]}))


# --------------------------------------------------------------------------
# 3node: gas field (A) + import hub with LNG and a tagged pipeline
# supply (B) + demand node (C) with a battery; two scenarios.
# --------------------------------------------------------------------------
def make_3node():
    case = "3node"
    manifest(case, periods=2)
    write(case, "nodes.csv", ["node", "A", "B", "C"])
    write(case, "commodities.csv", [
        "commodity,kind,emission_factor",
        "power,flow,0",
        "gas,flow,0.202",
    ])
    write(case, "scenarios.csv", ["scenario,probability", "w1,0.5", "w2,0.5"])
    write(case, "seasons.csv", [
        "season,hours,peak,weight",
        "s1,4,0,1092",
        "s2,4,0,1092",
        "peak,2,1,1",
    ])
    write(case, "assets.csv", [
        ASSET_HEADER,
        "gasplant,C,generator,power,gas-power,power,900000,12000,1.5,2,1,1,,0,0,,,,",
        "wind,C,generator,power,wind,power,1200000,15000,0,2,1,1,,0,0,,,wind_c,",
        "battery,C,storage,power,storage,power,300000,2000,0,2,1,1,,0,0,0.95,0.95,,",
    ])
    write(case, "arcs.csv", [
        "id,commodity,from,to,invest_cost,fixed_om,lifetime,investable,max_built,loss,tag",
        "pipe_a_c,gas,A,C,0,0,2,0,,0,",
        "pipe_b_c,gas,B,C,0,0,2,0,,0,",
    ])
    write(case, "gas_supply.csv", [
        "id,node,kind,capacity,reserves,tag",
        "field_a,A,field,500,8000000,",
        "russ_b,B,field,300,unbounded,russian",
        "lng_b,B,lng,300,unbounded,",
    ])
    write(case, "demand.csv", [
        "commodity,node,period,base,profile",
        "power,C,1,100,dem_c",
        "power,C,2,120,dem_c",
        "gas,C,1,50,",
        "gas,C,2,40,",
    ])
    write(case, "initial_capacity.csv", [
        "id,period,capacity",
        "gasplant,1,150",
        "gasplant,2,150",
        "battery,1,50",
        "battery,2,50",
        "pipe_a_c,1,400",
        "pipe_a_c,2,400",
        "pipe_b_c,1,400",
        "pipe_b_c,2,400",
    ])
    write(case, "carbon_cap.csv", ["period,cap", "1,2000000", "2,2000000"])
    lng_table(case, years={2020, 2025})
    wind = {
        ("w1", "s1"): [0.9, 0.5, 0.2, 0.7],
        ("w1", "s2"): [0.4, 0.8, 0.6, 0.3],
        ("w1", "peak"): [0.1, 0.2],
        ("w2", "s1"): [0.3, 0.6, 0.8, 0.2],
        ("w2", "s2"): [0.7, 0.2, 0.4, 0.6],
        ("w2", "peak"): [0.2, 0.1],
    }
    dem = {
        ("w1", "s1"): [1.0, 1.1, 0.9, 1.0],
        ("w1", "s2"): [0.95, 1.0, 1.05, 1.0],
        ("w1", "peak"): [1.3, 1.25],
        ("w2", "s1"): [1.05, 0.95, 1.0, 1.1],
        ("w2", "s2"): [1.0, 1.05, 0.9, 1.0],
        ("w2", "peak"): [1.2, 1.3],
    }
    write(case, "profiles.csv", ["profile,scenario,season,hour,value"] +
          profile_rows("wind_c", wind) + profile_rows("dem_c", dem))


# --------------------------------------------------------------------------
# northsea-mini: six nodes, the printed sequestration caps and LNG price
# track, a hydrogen production mix and a full industry block at DE.
# --------------------------------------------------------------------------
def make_northsea():
    case = "northsea-mini"
    manifest(case, periods=2)
    write(case, "nodes.csv", ["node", "RU", "NO2", "NO3", "DE", "NL", "GB"])
    write(case, "commodities.csv", [
        "commodity,kind,emission_factor",
        "power,flow,0",
        "gas,flow,0.202",
        "hydrogen,flow,0",
        "heat,flow,0",
        "co2,flow,0",
        "steel,sector,0",
        "cement,sector,0",
        "ammonia,sector,0",
        "refined,sector,0",
    ])
    write(case, "scenarios.csv", ["scenario,probability", "w1,0.5", "w2,0.5"])
    write(case, "seasons.csv", ["season,hours,peak,weight", "year,4,0,2184"])
    write(case, "assets.csv", [
        ASSET_HEADER,
        "wind_de,DE,generator,power,wind,power,1100000,9000,0,2,1,1,,0,0,,,wind_de,",
        "gasccs_de,DE,generator,power,gas-ccs,power,1600000,20000,2,2,1,1,,0,0.9,,,,",
        "hp_de,DE,heater,heat,heat-pump,heat,500000,5000,0.5,2,1,1,,0,0,,,,cop_de",
        "boiler_de,DE,heater,heat,gas-boiler,heat,0,1000,1,2,0,1,,0,0,,,,",
        "smr_de,DE,converter,hydrogen,smr,hydrogen,550000,7000,2,2,1,1,,0,0,,,,",
        "smrccs_de,DE,converter,hydrogen,smr-ccs,hydrogen,700000,8000,2.2,2,1,1,,0,0.9,,,,",
        "atr_de,DE,converter,hydrogen,atr-ccs,hydrogen,800000,9000,2.5,2,1,1,,0,0.95,,,,",
        "elz_de,DE,converter,hydrogen,electrolysis,hydrogen,700000,8000,0.5,2,1,1,,0,0,,,,",
        "bfbof_de,DE,process-route,steel,steel-bf,steel,250000,4000,50,2,1,1,,1.8,0,,,,",
        "bfbofccs_de,DE,process-route,steel,steel-ccs,steel,300000,5000,55,2,1,1,,1.8,0.6,,,,",
        "h2dri_de,DE,process-route,steel,steel-h2,steel,400000,5000,70,2,1,1,,0,0,,,,",
        "scrap_de,DE,process-route,steel,steel-scrap,steel,200000,3000,45,2,1,1,,0,0,,,,",
        "kilngas_de,DE,process-route,cement,cement-gas,cement,150000,2000,15,2,1,1,,0,0,,,,",
        "kilnccs_de,DE,process-route,cement,cement-ccs,cement,250000,3000,25,2,1,1,,0,0.9,,,,",
        "kilnh2_de,DE,process-route,cement,cement-h2,cement,150000,2000,18,2,1,1,,0,0,,,,",
        "nh3smr_de,DE,process-route,ammonia,ammonia-smr,ammonia,350000,4000,30,2,1,1,,0,0,,,,",
        "nh3h2_de,DE,process-route,ammonia,ammonia-h2,ammonia,300000,4000,35,2,1,1,,0,0,,,,",
        "ref_de,DE,process-route,refined,refinery,refined,0,2000,10,2,0,1,,0,0,,,,",
    ])
    write(case, "conversions.csv", [
        "asset,commodity,coefficient",
        "gasccs_de,gas,-2.2",
        "hp_de,power,-1",
        "boiler_de,gas,-1.05",
        "smr_de,gas,-1.4",
        "smrccs_de,gas,-1.45",
        "atr_de,gas,-1.25",
        "elz_de,power,-1.4",
        "bfbof_de,power,-0.1",
        "bfbofccs_de,power,-0.15",
        "h2dri_de,hydrogen,-2.0",
        "h2dri_de,power,-0.6",
        "scrap_de,power,-0.5",
        "kilngas_de,gas,-1.1",
        "kilnccs_de,gas,-1.3",
        "kilnh2_de,hydrogen,-1.2",
        "nh3smr_de,gas,-9.0",
        "nh3h2_de,hydrogen,-6.2",
        "nh3h2_de,power,-0.3",
        "ref_de,hydrogen,-0.6",
    ])
    write(case, "routes.csv", [
        "asset,process_emission,feedstock_cap",
        "bfbof_de,0,",
        "bfbofccs_de,0,",
        "h2dri_de,0,",
        "scrap_de,0,0.45",
        "kilngas_de,0.78,",
        "kilnccs_de,0.78,",
        "kilnh2_de,0.78,",
        "nh3smr_de,0,",
        "nh3h2_de,0,",
        "ref_de,0,",
    ])
    write(case, "arcs.csv", [
        "id,commodity,from,to,invest_cost,fixed_om,lifetime,investable,max_built,loss,tag",
        "gpipe_ru_de,gas,RU,DE,0,0,2,0,,0,russian",
        "gpipe_no2_de,gas,NO2,DE,0,0,2,0,,0,",
        "cpipe_de_no2,co2,DE,NO2,10000,100,2,1,,0,",
        "cpipe_de_nl,co2,DE,NL,8000,100,2,1,,0,",
        "cpipe_de_gb,co2,DE,GB,12000,100,2,1,,0,",
        "cpipe_no2_no3,co2,NO2,NO3,6000,100,2,1,,0,",
        "h2pipe_de_nl,hydrogen,DE,NL,9000,100,2,1,,0,",
    ])
    write(case, "gas_supply.csv", [
        "id,node,kind,capacity,reserves,tag",
        "ru_field,RU,field,800,unbounded,russian",
        "no2_field,NO2,field,250,6000000,",
        "lng_de,DE,lng,250,unbounded,",
    ])
    write(case, "sequestration.csv", ["node,max_gt"] +
          [f"{n},{SEQUESTRATION_GT[n]}" for n in ("NO2", "NO3", "NL", "GB")])
    write(case, "demand.csv", [
        "commodity,node,period,base,profile",
        "power,DE,1,300,dem_de",
        "power,DE,2,350,dem_de",
        "heat,DE,1,100,heat_de",
        "heat,DE,2,110,heat_de",
        "hydrogen,DE,1,60,",
        "hydrogen,DE,2,90,",
        "hydrogen,NL,1,5,",
        "hydrogen,NL,2,10,",
    ])
    write(case, "annual_demand.csv", [
        "sector,node,period,demand",
        "steel,DE,1,250000",
        "steel,DE,2,250000",
        "cement,DE,1,120000",
        "cement,DE,2,120000",
        "ammonia,DE,1,80000",
        "ammonia,DE,2,80000",
        "refined,DE,1,250000",
        "refined,DE,2,200000",
    ])
    write(case, "initial_capacity.csv", [
        "id,period,capacity",
        "boiler_de,1,150",
        "boiler_de,2,150",
        "smr_de,1,60",
        "smr_de,2,60",
        "bfbof_de,1,40",
        "bfbof_de,2,40",
        "kilngas_de,1,25",
        "kilngas_de,2,25",
        "nh3smr_de,1,15",
        "nh3smr_de,2,15",
        "ref_de,1,40",
        "ref_de,2,40",
        "gpipe_ru_de,1,600",
        "gpipe_ru_de,2,600",
        "gpipe_no2_de,1,250",
        "gpipe_no2_de,2,250",
    ])
    write(case, "carbon_cap.csv", ["period,cap", "1,3000000", "2,600000"])
    lng_table(case, years={2020, 2025})
    write(case, "profiles.csv", ["profile,scenario,season,hour,value"] + profile_rows(
        "wind_de", {("w1", "year"): [0.9, 0.2, 0.5, 0.7],
                    ("w2", "year"): [0.3, 0.1, 0.6, 0.4]}) + profile_rows(
        "dem_de", {("w1", "year"): [1.1, 0.95, 1.0, 1.05],
                   ("w2", "year"): [1.05, 1.0, 0.9, 1.15]}) + profile_rows(
        "heat_de", {("w1", "year"): [1.2, 1.0, 0.8, 1.0],
                    ("w2", "year"): [1.1, 0.9, 1.0, 1.0]}) + profile_rows(
        "cop_de", {("w1", "year"): [2.8, 2.5, 1.9, 2.2],
                   ("w2", "year"): [3.3, 2.9, 2.1, 1.85]}))


if __name__ == "__main__":
    make_1node()
    make_3node()
    make_northsea()
    print("fixtures written under", HERE)
