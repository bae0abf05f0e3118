#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <string>

#include "mhorizon/case_io.hpp"
#include "mhorizon/errors.hpp"
#include "mhorizon/model_builder.hpp"
#include "mhorizon/mps.hpp"
#include "mhorizon/report.hpp"
#include "mhorizon/simplex.hpp"
#include "mhorizon/solution_check.hpp"

namespace py = pybind11;
using namespace mhorizon;

namespace {

ScenarioFlags make_flags(bool russian_gas, const std::string& gas_cost) {
    if (gas_cost != "affordable" && gas_cost != "costly")
        fail(Errc::SchemaMismatch, "gas_cost must be 'affordable' or 'costly'");
    return {russian_gas, gas_cost == "costly" ? GasCost::Costly : GasCost::Affordable};
}

struct PyCase {
    CaseData data;
};

struct PySolution {
    lp::Solution sol;
};

struct PyModel {
    CaseData data;
    ModelArtifacts artifacts;

    PySolution solve(int max_iters, double tol) const {
        lp::SimplexOptions opts;
        opts.max_iters = max_iters;
        opts.tol = tol;
        return {lp::solve_simplex(artifacts.lp, opts)};
    }

    py::dict check(const PySolution& s) const {
        lp::ResidualReport rep = lp::check_solution(artifacts.lp, s.sol);
        py::dict out;
        out["max_row_residual"] = rep.max_row_residual;
        out["max_bound_violation"] = rep.max_bound_violation;
        out["duality_gap"] = rep.duality_gap;
        out["complementarity_gap"] = rep.complementarity_gap;
        out["primal_objective"] = rep.primal_objective;
        out["dual_objective"] = rep.dual_objective;
        return out;
    }

    py::dict reports(const PySolution& s) const {
        ReportBundle b = extract_reports(data, artifacts, s.sol);
        py::dict out;
        out["capacity_mix_gw"] = b.capacity_mix_gw;
        out["hydrogen_capacity_tph"] = b.hydrogen_capacity_tph;
        out["industry_shares"] = b.industry_shares;
        out["sequestered_gt"] = b.sequestered_gt;
        out["emissions_t"] = b.emissions_t;
        out["emissions_by_node_t"] = b.emissions_by_node_t;
        out["arc_capacity"] = b.arc_capacity;
        out["investment_cost"] = b.investment_cost;
        out["expected_operational_cost"] = b.expected_operational_cost;
        out["objective"] = b.objective;
        out["periods"] = b.periods;
        return out;
    }
};

} // namespace

PYBIND11_MODULE(_mhorizon, m) {
    m.doc() = "multi-horizon stochastic capacity-expansion modeling";

    py::register_exception<Error>(m, "ModelError");

    py::class_<PyCase>(m, "Case")
        .def_property_readonly("name", [](const PyCase& c) { return c.data.name; })
        .def_property_readonly("nodes", [](const PyCase& c) { return c.data.topology.nodes; })
        .def_property_readonly(
            "periods", [](const PyCase& c) { return c.data.time.periods().size(); })
        .def_property_readonly(
            "scenarios", [](const PyCase& c) { return c.data.time.scenarios().size(); })
        .def(
            "apply_flags",
            [](const PyCase& c, bool russian_gas, const std::string& gas_cost) {
                return PyCase{apply_scenario_flags(c.data, make_flags(russian_gas, gas_cost))};
            },
            py::arg("russian_gas") = true, py::arg("gas_cost") = "affordable")
        .def("dimensions", [](const PyCase& c) {
            DimensionReport rep = expand_deterministic_equivalent(c.data);
            py::dict out;
            out["columns"] = rep.total_cols();
            out["rows"] = rep.total_rows();
            out["investment"] = rep.invest_cols;
            out["capacity"] = rep.capacity_cols;
            out["operation"] = rep.operation_cols;
            out["flow"] = rep.flow_cols;
            out["loss_of_load"] = rep.loss_of_load_cols;
            out["storage"] = rep.storage_cols;
            out["supply"] = rep.supply_cols;
            out["injection"] = rep.injection_cols;
            return out;
        });

    py::class_<PySolution>(m, "Solution")
        .def_property_readonly(
            "status", [](const PySolution& s) { return std::string(lp::status_name(s.sol.status)); })
        .def_property_readonly("objective", [](const PySolution& s) { return s.sol.objective; })
        .def_property_readonly("iterations", [](const PySolution& s) { return s.sol.iterations; })
        .def_property_readonly(
            "max_primal_residual",
            [](const PySolution& s) { return s.sol.max_primal_residual; })
        .def_property_readonly("max_dual_residual",
                               [](const PySolution& s) { return s.sol.max_dual_residual; });

    py::class_<PyModel>(m, "Model")
        .def_property_readonly("n_cols", [](const PyModel& m_) { return m_.artifacts.lp.n_cols; })
        .def_property_readonly("n_rows", [](const PyModel& m_) { return m_.artifacts.lp.n_rows; })
        .def("to_mps", [](const PyModel& m_) { return lp::export_mps(m_.artifacts.lp); })
        .def("audit", [](const PyModel& m_) { return constraint_audit(m_.artifacts); })
        .def("solve", &PyModel::solve, py::arg("max_iters") = 50000, py::arg("tol") = 1e-7)
        .def("check", &PyModel::check, py::arg("solution"))
        .def("reports", &PyModel::reports, py::arg("solution"))
        .def("values",
             [](const PyModel& m_, const PySolution& s) {
                 std::map<std::string, double> out;
                 for (int j = 0; j < m_.artifacts.lp.n_cols; ++j)
                     out[m_.artifacts.lp.col_name[j]] = s.sol.x[j];
                 return out;
             },
             py::arg("solution"));

    m.def("load_case", [](const std::string& path) { return PyCase{load_case(path)}; },
          py::arg("path"));
    m.def("build_model",
          [](const PyCase& c) { return PyModel{c.data, build_model(c.data)}; },
          py::arg("case"));
    m.def(
        "solve_mps",
        [](const std::string& text, int max_iters, double tol) {
            lp::SimplexOptions opts;
            opts.max_iters = max_iters;
            opts.tol = tol;
            lp::Solution sol = lp::solve_simplex(lp::parse_mps(text), opts);
            return py::make_tuple(std::string(lp::status_name(sol.status)), sol.objective);
        },
        py::arg("mps_text"), py::arg("max_iters") = 50000, py::arg("tol") = 1e-7);
}
