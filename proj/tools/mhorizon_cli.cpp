#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "mhorizon/case_io.hpp"
#include "mhorizon/errors.hpp"
#include "mhorizon/model_builder.hpp"
#include "mhorizon/mps.hpp"
#include "mhorizon/report.hpp"
#include "mhorizon/simplex.hpp"
#include "mhorizon/solution_check.hpp"

namespace fs = std::filesystem;
using namespace mhorizon;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitSolver = 2;

fs::path resolve_case(const std::string& arg) {
    fs::path direct(arg);
    if (fs::exists(direct / "manifest.toml")) return direct;
    if (const char* root = std::getenv("MHORIZON_CASE_DIR")) {
        fs::path under = fs::path(root) / arg;
        if (fs::exists(under / "manifest.toml")) return under;
    }
    fail(Errc::MissingTable, "no case at '" + arg + "' (checked MHORIZON_CASE_DIR)");
}

uint64_t fnv1a(const std::string& bytes, uint64_t hash) {
    for (unsigned char ch : bytes) {
        hash ^= ch;
        hash *= 1099511628211ULL;
    }
    return hash;
}

std::string case_digest(const fs::path& dir) {
    std::map<std::string, std::string> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (!entry.is_regular_file()) continue;
        std::ifstream in(entry.path(), std::ios::binary);
        files[entry.path().filename().string()] =
            std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    }
    uint64_t hash = 1469598103934665603ULL;
    for (const auto& [name, bytes] : files) {
        hash = fnv1a(name, hash);
        hash = fnv1a(bytes, hash);
    }
    char buf[20];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(hash));
    return buf;
}

struct SolveFlags {
    bool no_russian = false;
    std::string gas = "affordable";
    int max_iters = 50000;
    double tol = 1e-7;

    ScenarioFlags scenario() const {
        if (gas != "affordable" && gas != "costly")
            fail(Errc::SchemaMismatch, "--gas must be affordable or costly");
        return {!no_russian, gas == "affordable" ? GasCost::Affordable : GasCost::Costly};
    }
    lp::SimplexOptions simplex() const {
        lp::SimplexOptions o;
        o.max_iters = max_iters;
        o.tol = tol;
        return o;
    }
};

void add_solve_flags(CLI::App* cmd, SolveFlags& f) {
    cmd->add_flag("--no-russian-gas", f.no_russian, "remove tagged Russian supplies and arcs");
    cmd->add_option("--gas", f.gas, "gas price track: affordable or costly");
    cmd->add_option("--max-iters", f.max_iters, "simplex iteration limit");
    cmd->add_option("--tol", f.tol, "simplex feasibility tolerance");
}

void write_text(const fs::path& p, const std::string& text) {
    fs::create_directories(p.parent_path());
    std::ofstream out(p, std::ios::binary | std::ios::trunc);
    if (!out) fail(Errc::IoFailure, "cannot write " + p.string());
    out << text;
}

std::string run_manifest(const CaseData& c, const fs::path& case_dir, const SolveFlags& f) {
    std::string text;
    text += "case = " + c.name + "\n";
    text += "input_digest = " + case_digest(case_dir) + "\n";
    text += "russian_gas = " + std::string(f.no_russian ? "false" : "true") + "\n";
    text += "gas_cost = " + f.gas + "\n";
    text += "max_iters = " + std::to_string(f.max_iters) + "\n";
    text += "tol = " + format_exact(f.tol) + "\n";
    return text;
}

std::string solution_text(const CaseData& c, const SolveFlags& f, const ModelArtifacts& m,
                          const lp::Solution& sol) {
    std::string text;
    text += "case = " + c.name + "\n";
    text += "russian_gas = " + std::string(f.no_russian ? "false" : "true") + "\n";
    text += "gas_cost = " + f.gas + "\n";
    text += "status = " + std::string(lp::status_name(sol.status)) + "\n";
    text += "objective = " + format_exact(sol.objective) + "\n";
    text += "iterations = " + std::to_string(sol.iterations) + "\n";
    text += "max_primal_residual = " + format_exact(sol.max_primal_residual) + "\n";
    text += "max_dual_residual = " + format_exact(sol.max_dual_residual) + "\n";
    text += "[columns]\n";
    for (int j = 0; j < m.lp.n_cols; ++j)
        text += m.lp.col_name[j] + " " + format_exact(sol.x[j]) + "\n";
    text += "[duals]\n";
    for (int r = 0; r < m.lp.n_rows; ++r)
        text += m.lp.row_name[r] + " " + format_exact(sol.y[r]) + "\n";
    return text;
}

std::string residual_text(const lp::SparseLP& model, const lp::Solution& sol) {
    lp::ResidualReport rep = lp::check_solution(model, sol);
    std::string text;
    text += "status = " + std::string(lp::status_name(sol.status)) + "\n";
    text += "objective = " + format_exact(sol.objective) + "\n";
    text += "dual_objective = " + format_exact(rep.dual_objective) + "\n";
    text += "max_row_residual = " + format_exact(rep.max_row_residual) + "\n";
    text += "max_bound_violation = " + format_exact(rep.max_bound_violation) + "\n";
    text += "duality_gap = " + format_exact(rep.duality_gap) + "\n";
    text += "complementarity_gap = " + format_exact(rep.complementarity_gap) + "\n";
    return text;
}

struct LoadedSolution {
    ScenarioFlags flags;
    std::string gas = "affordable";
    std::string status;
    std::map<std::string, double> columns;
};

LoadedSolution read_solution(const fs::path& file) {
    std::ifstream in(file);
    if (!in) fail(Errc::IoFailure, "cannot read " + file.string());
    LoadedSolution out;
    std::string line;
    enum { Head, Columns, Duals } section = Head;
    while (std::getline(in, line)) {
        if (line == "[columns]") {
            section = Columns;
            continue;
        }
        if (line == "[duals]") {
            section = Duals;
            continue;
        }
        if (section == Head) {
            auto eq = line.find(" = ");
            if (eq == std::string::npos) continue;
            std::string key = line.substr(0, eq), value = line.substr(eq + 3);
            if (key == "russian_gas") out.flags.russian_gas = value == "true";
            if (key == "gas_cost") {
                out.gas = value;
                out.flags.gas_cost =
                    value == "costly" ? GasCost::Costly : GasCost::Affordable;
            }
            if (key == "status") out.status = value;
        } else if (section == Columns) {
            auto space = line.rfind(' ');
            if (space == std::string::npos) continue;
            out.columns[line.substr(0, space)] = std::strtod(line.c_str() + space + 1, nullptr);
        }
    }
    return out;
}

int cmd_validate(const std::string& case_arg) {
    fs::path dir = resolve_case(case_arg);
    CaseData c = load_case(dir);
    DimensionReport rep = expand_deterministic_equivalent(c);
    std::cout << "case " << c.name << " is valid\n"
              << "  nodes: " << c.topology.nodes.size()
              << ", commodities: " << c.topology.commodities.size()
              << ", assets: " << c.catalog.assets().size() << ", arcs: " << c.arcs.size() << "\n"
              << "  periods: " << c.time.periods().size()
              << ", scenarios: " << c.time.scenarios().size()
              << ", hour slices: " << c.time.hour_slice_count() << "\n"
              << "  deterministic equivalent: " << rep.total_cols() << " columns, "
              << rep.total_rows() << " rows\n";
    return kExitOk;
}

int cmd_build(const std::string& case_arg, const SolveFlags& flags, const std::string& mps_path,
              const std::string& audit_path) {
    CaseData c = apply_scenario_flags(load_case(resolve_case(case_arg)), flags.scenario());
    ModelArtifacts m = build_model(c);
    std::cout << "assembled " << c.name << ": " << m.lp.n_cols << " columns, " << m.lp.n_rows
              << " rows, " << m.lp.triplets.size() << " nonzeros\n";
    if (!mps_path.empty()) {
        write_text(mps_path, lp::export_mps(m.lp));
        std::cout << "wrote " << mps_path << "\n";
    }
    if (!audit_path.empty()) {
        write_text(audit_path, constraint_audit(m));
        std::cout << "wrote " << audit_path << "\n";
    }
    return kExitOk;
}

int solve_into(const CaseData& flagged, const fs::path& case_dir, const SolveFlags& flags,
               const fs::path& out_dir, bool quiet, double* objective_out = nullptr,
               ReportBundle* bundle_out = nullptr) {
    ModelArtifacts m = build_model(flagged);
    lp::Solution sol = lp::solve_simplex(m.lp, flags.simplex());

    write_text(out_dir / "run_manifest.txt", run_manifest(flagged, case_dir, flags));
    write_text(out_dir / "solution.txt", solution_text(flagged, flags, m, sol));
    std::string residuals = residual_text(m.lp, sol);
    write_text(out_dir / "residuals.txt", residuals);
    if (!quiet) {
        std::cout << "solve " << flagged.name << " [russian_gas="
                  << (flags.no_russian ? "false" : "true") << ", gas=" << flags.gas << "]\n"
                  << residuals;
    }
    if (sol.status != lp::SolveStatus::Optimal) {
        std::cerr << "solver finished with status " << lp::status_name(sol.status) << "\n";
        return kExitSolver;
    }
    if (objective_out != nullptr) *objective_out = sol.objective;
    if (bundle_out != nullptr) *bundle_out = extract_reports(flagged, m, sol);
    return kExitOk;
}

int cmd_solve(const std::string& case_arg, const SolveFlags& flags, const fs::path& out_dir) {
    fs::path dir = resolve_case(case_arg);
    CaseData c = apply_scenario_flags(load_case(dir), flags.scenario());
    return solve_into(c, dir, flags, out_dir, false);
}

int cmd_report(const std::string& case_arg, const fs::path& solution_path,
               const fs::path& out_dir) {
    fs::path dir = resolve_case(case_arg);
    fs::path file = fs::is_directory(solution_path) ? solution_path / "solution.txt"
                                                    : solution_path;
    LoadedSolution loaded = read_solution(file);
    if (loaded.status != "optimal")
        fail(Errc::NonOptimalSolution, "solution file reports status '" + loaded.status + "'");

    CaseData c = apply_scenario_flags(load_case(dir), loaded.flags);
    ModelArtifacts m = build_model(c);
    lp::Solution sol;
    sol.status = lp::SolveStatus::Optimal;
    sol.x.assign(m.lp.n_cols, 0.0);
    sol.y.assign(m.lp.n_rows, 0.0);
    for (int j = 0; j < m.lp.n_cols; ++j) {
        auto it = loaded.columns.find(m.lp.col_name[j]);
        if (it == loaded.columns.end())
            fail(Errc::DimensionMismatch, "solution lacks column " + m.lp.col_name[j]);
        sol.x[j] = it->second;
    }
    ReportBundle bundle = extract_reports(c, m, sol);
    emit_tables(bundle, out_dir / "tables");
    emit_plots(bundle, out_dir / "plots");
    std::cout << "wrote report tables and plots under " << out_dir.string() << "\n";
    return kExitOk;
}

int cmd_study(const std::string& case_arg, SolveFlags flags, const fs::path& out_dir) {
    fs::path dir = resolve_case(case_arg);
    CaseData base = load_case(dir);

    struct Permutation {
        const char* name;
        bool no_russian;
        const char* gas;
    };
    const Permutation permutations[] = {
        {"ru_affordable", false, "affordable"},
        {"ru_costly", false, "costly"},
        {"noru_affordable", true, "affordable"},
        {"noru_costly", true, "costly"},
    };

    std::string comparison = "permutation,status,objective,final_electrolysis_share\n";
    int worst = kExitOk;
    for (const Permutation& p : permutations) {
        SolveFlags f = flags;
        f.no_russian = p.no_russian;
        f.gas = p.gas;
        CaseData c = apply_scenario_flags(base, f.scenario());
        double objective = 0.0;
        ReportBundle bundle;
        int rc = solve_into(c, dir, f, out_dir / p.name, true, &objective, &bundle);
        if (rc == kExitOk) {
            emit_tables(bundle, out_dir / p.name / "tables");
            emit_plots(bundle, out_dir / p.name / "plots");
            double total = 0.0, elz = 0.0;
            for (const auto& [group, values] : bundle.hydrogen_capacity_tph) {
                if (values.empty()) continue;
                total += values.back();
                if (group == "electrolysis") elz += values.back();
            }
            comparison += std::string(p.name) + ",optimal," + format_exact(objective) + "," +
                          format_exact(total > 0.0 ? elz / total : 0.0) + "\n";
            std::cout << p.name << ": objective " << format_exact(objective) << "\n";
        } else {
            comparison += std::string(p.name) + ",failed,,\n";
            worst = std::max(worst, rc);
        }
    }
    write_text(out_dir / "comparison.csv", comparison);
    std::cout << "study written under " << out_dir.string() << "\n";
    return worst;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"multi-horizon stochastic capacity-expansion modeling"};
    app.require_subcommand(1);

    std::string case_arg, mps_path, audit_path, out_dir = "out", solution_arg;
    SolveFlags flags;

    CLI::App* validate = app.add_subcommand("validate", "load a case and report its invariants");
    validate->add_option("case", case_arg)->required();

    CLI::App* build = app.add_subcommand("build", "assemble the LP, optionally exporting MPS");
    build->add_option("case", case_arg)->required();
    add_solve_flags(build, flags);
    build->add_option("--mps", mps_path, "write the LP in MPS format");
    build->add_option("--audit", audit_path, "write the constraint audit listing");

    CLI::App* solve = app.add_subcommand("solve", "assemble and solve with the embedded simplex");
    solve->add_option("case", case_arg)->required();
    add_solve_flags(solve, flags);
    solve->add_option("--out", out_dir, "output directory");

    CLI::App* report = app.add_subcommand("report", "turn a solution into tables and plots");
    report->add_option("case", case_arg)->required();
    report->add_option("solution", solution_arg, "solution file or solve output directory")
        ->required();
    report->add_option("--out", out_dir, "output directory");

    CLI::App* study = app.add_subcommand("study", "run all four gas-scenario permutations");
    study->add_option("case", case_arg)->required();
    add_solve_flags(study, flags);
    study->add_option("--out", out_dir, "output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitValidation;
    }

    try {
        if (validate->parsed()) return cmd_validate(case_arg);
        if (build->parsed()) return cmd_build(case_arg, flags, mps_path, audit_path);
        if (solve->parsed()) return cmd_solve(case_arg, flags, out_dir);
        if (report->parsed()) return cmd_report(case_arg, solution_arg, out_dir);
        if (study->parsed()) return cmd_study(case_arg, flags, out_dir);
        fail(Errc::UnknownSubcommand, "no subcommand selected");
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == Errc::IterationLimit || e.code() == Errc::NumericalBreakdown
                   ? kExitSolver
                   : kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitOk;
}
