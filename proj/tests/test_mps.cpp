#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mhorizon/errors.hpp"
#include "mhorizon/lp_oracle.hpp"
#include "mhorizon/mps.hpp"
#include "mhorizon/sparse_lp.hpp"

using namespace mhorizon;
using namespace mhorizon::lp;

namespace {

SparseLP tiny_max_x() {
    SparseLP lp;
    lp.name = "TINY";
    int x = lp.add_col("x", 0.0, kInf, -1.0);
    lp.add_coeff(lp.add_row("r0", Sense::LE, 1.0), x, 1.0);
    return lp;
}

SparseLP random_named_lp(unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> nd(1, 8), md(0, 8), coef(-9, 9);
    std::uniform_real_distribution<double> density(0.0, 1.0);
    SparseLP lp;
    lp.name = "RAND" + std::to_string(seed);
    const int n = nd(rng), m = md(rng);
    for (int j = 0; j < n; ++j) {
        double l = coef(rng);
        double u = l + std::abs(coef(rng)) + (density(rng) < 0.3 ? kInf : 0.25);
        if (density(rng) < 0.2) l = -kInf;
        lp.add_col("col." + std::to_string(j), l, u, coef(rng) * 0.5);
    }
    for (int r = 0; r < m; ++r) {
        Sense s = r % 3 == 0 ? Sense::LE : (r % 3 == 1 ? Sense::GE : Sense::EQ);
        int row = lp.add_row("row." + std::to_string(r), s, coef(rng));
        for (int j = 0; j < n; ++j)
            if (density(rng) < 0.6 && coef(rng) != 0) lp.add_coeff(row, j, coef(rng) * 0.25);
    }
    return canonicalize(lp);
}

} // namespace

TEST_CASE("tiny LP exports the expected sections") {
    std::string text = export_mps(tiny_max_x());
    CHECK(text.find("NAME") == 0);
    CHECK(text.find(" L  r0") != std::string::npos);
    CHECK(text.find("ROWS") != std::string::npos);
    CHECK(text.find("COLUMNS") != std::string::npos);
    CHECK(text.find("RHS") != std::string::npos);
    CHECK(text.find("ENDATA") != std::string::npos);
    // one constraint entry plus the objective entry for x
    CHECK(text.find("r0") != std::string::npos);
    CHECK(text.find("1") != std::string::npos);
}

TEST_CASE("export -> parse recovers the LP field-by-field") {
    SparseLP lp = canonicalize(tiny_max_x());
    SparseLP back = parse_mps(export_mps(lp));
    CHECK(back.equals(lp));
}

TEST_CASE("export -> parse -> export is byte-identical on random LPs") {
    for (unsigned seed = 0; seed < 40; ++seed) {
        SparseLP lp = random_named_lp(seed);
        std::string first = export_mps(lp);
        SparseLP back = parse_mps(first);
        std::string second = export_mps(back);
        INFO("seed ", seed);
        REQUIRE(first == second);
        CHECK(back.equals(canonicalize(lp)));
    }
}

TEST_CASE("an LP with no rows and one unreferenced column survives round trip") {
    SparseLP lp;
    lp.name = "EMPTY";
    lp.add_col("only", 0.0, kInf, 0.0);
    std::string text = export_mps(lp);
    SparseLP back = parse_mps(text);
    REQUIRE(back.n_cols == 1);
    CHECK(back.n_rows == 0);
    CHECK(export_mps(back) == text);
    OracleResult oracle = vertex_enumeration_oracle(back);
    REQUIRE(oracle.feasible);
    CHECK(oracle.objective == 0.0);
    CHECK(oracle.point[0] == 0.0); // sits at the lower bound
}

TEST_CASE("names beyond 255 characters are rejected") {
    SparseLP lp;
    lp.add_col(std::string(300, 'x'), 0.0, 1.0, 1.0);
    CHECK_THROWS_WITH_AS(export_mps(lp), doctest::Contains("NameTooLong"), Error);
}

TEST_CASE("parser handles RANGES by splitting the row") {
    std::string text =
        "NAME          RNG\n"
        "ROWS\n"
        " N  OBJ\n"
        " L  r0\n"
        "COLUMNS\n"
        "    x         OBJ       1         r0        1\n"
        "RHS\n"
        "    RHS       r0        5\n"
        "RANGES\n"
        "    RNG       r0        2\n"
        "BOUNDS\n"
        " UP BND       x         9\n"
        "ENDATA\n";
    SparseLP lp = parse_mps(text);
    REQUIRE(lp.n_rows == 2); // 3 <= x <= 5
    CHECK(lp.row_sense[0] == Sense::LE);
    CHECK(lp.row_sense[1] == Sense::GE);
    CHECK(lp.rhs[1] == 3.0);
}
