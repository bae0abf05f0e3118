#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

namespace fs = std::filesystem;

namespace {
const std::string kCli = MHORIZON_CLI_PATH;
const fs::path kCases = MHORIZON_CASES_DIR;

int run(const std::string& args) {
    std::string cmd = kCli + " " + args + " > /dev/null 2>&1";
    int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

fs::path fresh_dir(const std::string& name) {
    fs::path dir = fs::temp_directory_path() / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}
} // namespace

TEST_CASE("validate succeeds on every bundled case") {
    for (const char* name : {"1node", "3node", "northsea-mini"})
        CHECK(run("validate " + (kCases / name).string()) == 0);
}

TEST_CASE("validate reports schema errors with exit code 1") {
    fs::path dir = fresh_dir("cli_broken_case");
    fs::copy(kCases / "3node", dir, fs::copy_options::recursive | fs::copy_options::overwrite_existing);
    std::ofstream(dir / "nodes.csv") << "node\nA\nA\n"; // duplicate is fine; break a number instead
    std::ofstream(dir / "carbon_cap.csv") << "period,cap\n1,xyz\n2,1\n";
    CHECK(run("validate " + dir.string()) == 1);
}

TEST_CASE("unknown subcommands and missing cases fail") {
    CHECK(run("frobnicate") != 0);
    CHECK(run("validate /nonexistent/case") == 1);
}

TEST_CASE("cases resolve through MHORIZON_CASE_DIR") {
    std::string cmd = "MHORIZON_CASE_DIR=" + kCases.string() + " " + kCli +
                      " validate 3node > /dev/null 2>&1";
    CHECK(WEXITSTATUS(std::system(cmd.c_str())) == 0);
}

TEST_CASE("build exports MPS and the constraint audit") {
    fs::path dir = fresh_dir("cli_build");
    CHECK(run("build " + (kCases / "3node").string() + " --mps " + (dir / "m.mps").string() +
              " --audit " + (dir / "audit.txt").string()) == 0);
    std::string mps = slurp(dir / "m.mps");
    CHECK(mps.rfind("NAME", 0) == 0);
    CHECK(mps.find("ENDATA") != std::string::npos);
    std::string audit = slurp(dir / "audit.txt");
    CHECK(audit.find("fb:") != std::string::npos);
    CHECK(audit.find("life:") != std::string::npos);
}

TEST_CASE("solve then report produces tables and plots") {
    fs::path dir = fresh_dir("cli_solve_report");
    CHECK(run("solve " + (kCases / "1node").string() + " --out " + (dir / "run").string()) == 0);
    CHECK(fs::exists(dir / "run" / "solution.txt"));
    CHECK(fs::exists(dir / "run" / "residuals.txt"));
    CHECK(fs::exists(dir / "run" / "run_manifest.txt"));
    CHECK(run("report " + (kCases / "1node").string() + " " + (dir / "run").string() + " --out " +
              (dir / "rep").string()) == 0);
    CHECK(fs::exists(dir / "rep" / "tables" / "capacity_mix.csv"));
    CHECK(fs::exists(dir / "rep" / "plots" / "capacity_mix.svg"));
}

TEST_CASE("solver failures exit with code 2") {
    fs::path dir = fresh_dir("cli_iterlimit");
    CHECK(run("solve " + (kCases / "3node").string() + " --max-iters 3 --out " +
              (dir / "run").string()) == 2);
}

TEST_CASE("solve flags are recorded and reused by report") {
    fs::path dir = fresh_dir("cli_flags");
    CHECK(run("solve " + (kCases / "3node").string() + " --no-russian-gas --gas costly --out " +
              (dir / "run").string()) == 0);
    std::string sol = slurp(dir / "run" / "solution.txt");
    CHECK(sol.find("russian_gas = false") != std::string::npos);
    CHECK(sol.find("gas_cost = costly") != std::string::npos);
    CHECK(run("report " + (kCases / "3node").string() + " " + (dir / "run").string() + " --out " +
              (dir / "rep").string()) == 0);
}

TEST_CASE("two identical solves write byte-identical outputs") {
    fs::path dir = fresh_dir("cli_determinism");
    REQUIRE(run("solve " + (kCases / "3node").string() + " --out " + (dir / "a").string()) == 0);
    REQUIRE(run("solve " + (kCases / "3node").string() + " --out " + (dir / "b").string()) == 0);
    for (const char* file : {"solution.txt", "residuals.txt", "run_manifest.txt"}) {
        INFO(file);
        CHECK(slurp(dir / "a" / file) == slurp(dir / "b" / file));
        CHECK(!slurp(dir / "a" / file).empty());
    }
}

TEST_CASE("study writes one directory per permutation and a comparison") {
    fs::path dir = fresh_dir("cli_study");
    CHECK(run("study " + (kCases / "3node").string() + " --out " + dir.string()) == 0);
    for (const char* perm : {"ru_affordable", "ru_costly", "noru_affordable", "noru_costly"}) {
        CHECK(fs::exists(dir / perm / "solution.txt"));
        CHECK(fs::exists(dir / perm / "tables" / "objective.csv"));
    }
    std::string comparison = slurp(dir / "comparison.csv");
    CHECK(comparison.find("permutation,status,objective") == 0);
    CHECK(comparison.find("noru_costly,optimal") != std::string::npos);
}
