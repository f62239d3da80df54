#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <random>

#include "doctest.h"
#include "lp/expr.hpp"

using namespace lp;

TEST_CASE("parse examples") {
    CHECK(parse_poly("x1*x2 + 1", 3) ==
          LaurentPoly::variable(1) * LaurentPoly::variable(2) + LaurentPoly(1L));
    CHECK(parse_poly("x1*x3 + x2^2", 4) ==
          LaurentPoly::variable(1) * LaurentPoly::variable(3) +
              LaurentPoly::variable(2) * LaurentPoly::variable(2));
    CHECK(parse_poly("3*(x1 + x2) + 2", 3) ==
          parse_poly("3*x1 + 3*x2 + 2", 3));
    CHECK(parse_poly("-x1 + x2 - 1", 3) == -parse_poly("x1 - x2 + 1", 3));
    CHECK(parse_poly("  7 ", 2) == LaurentPoly(7L));
}

TEST_CASE("parse errors carry columns") {
    try {
        parse_poly("x1 + (", 3);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.column() == 6);
        CHECK(std::string(e.what()).find('^') != std::string::npos);
    }
    CHECK_THROWS_AS(parse_poly("x1x2", 3), ParseError);
    CHECK_THROWS_AS(parse_poly("2x1", 3), ParseError);
    CHECK_THROWS_AS(parse_poly("x3 + 1", 3), ParseError);  // index >= arity
    CHECK_THROWS_AS(parse_poly("x1^-2", 3), ParseError);
    CHECK_THROWS_AS(parse_poly("", 3), ParseError);
    CHECK_THROWS_AS(parse_poly("x + 1", 3), ParseError);
    try {
        parse_poly("x1 + x9", 4);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("arity") != std::string::npos);
    }
}

TEST_CASE("precedence") {
    CHECK(parse_poly("x1*x2^2", 3) ==
          LaurentPoly::variable(1) * LaurentPoly::variable(2, 2));
    CHECK(parse_poly("-x1^2", 3) == -LaurentPoly::variable(1, 2));
    CHECK(parse_poly("(x1 + x2)^2", 3) ==
          parse_poly("x1^2 + 2*x1*x2 + x2^2", 3));
    CHECK(parse_poly("2^3", 2) == LaurentPoly(8L));
}

TEST_CASE("print examples") {
    CHECK(print_poly(parse_poly("x1*x2 + 1", 3)) == "x1*x2 + 1");
    CHECK(print_poly(parse_poly("-x1 + x2 - 1", 3)) == "-x1 + x2 - 1");
    CHECK(print_poly(LaurentPoly{}) == "0");
    CHECK(print_poly(LaurentPoly::variable(2, -1) + LaurentPoly(1L)) ==
          "laurent: 1 + x2^-1");
    CHECK(print_laurent_fraction(
              parse_poly("x1*x2 + 1", 3) * Monomial::variable(0, -1)) ==
          "(x1*x2 + 1)/(x0)");
}

TEST_CASE("parse of print is the identity on random polynomials") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 1000; ++trial) {
        std::vector<Term> ts;
        int count = 1 + static_cast<int>(rng() % 6);
        for (int t = 0; t < count; ++t) {
            Monomial::Storage st;
            for (int v = 0; v < 4; ++v) {
                int e = static_cast<int>(rng() % 4);
                if (e > 0) st.emplace_back(v, e);
            }
            long c = static_cast<long>(rng() % 19) - 9;
            if (c == 0) c = 1;
            ts.push_back({Monomial::from_entries(std::move(st)), Int(c)});
        }
        LaurentPoly p = LaurentPoly::from_terms(std::move(ts));
        if (p.is_zero()) continue;
        CHECK(parse_poly(print_poly(p), 4) == p);
    }
}

TEST_CASE("seed files") {
    const char* text = R"({"n":3,"polys":["x1*x2 + 1","x0 + x2","x0*x1 + 1"]})";
    LoadedSeed loaded = seed_from_json_text(text);
    CHECK(loaded.seed.n == 3);
    CHECK(loaded.seed.polys[1] == parse_poly("x0 + x2", 3));
    CHECK(loaded.warnings.empty());

    CHECK_THROWS_WITH(
        seed_from_json_text(R"({"n":3,"polys":["x0 + x1","x0 + x2","x0*x1 + 1"]})"),
        doctest::Contains("P_0 depends on x_0"));
    CHECK_THROWS_WITH(seed_from_json_text(R"({"n":3,"polys":["x1"]})"),
                      doctest::Contains("exactly n"));
    CHECK_THROWS(seed_from_json_text("not json"));
    CHECK_THROWS_WITH(
        seed_from_json_text(R"({"n":2,"polys":["x1^2","x0 + 1"]})"),
        doctest::Contains("divisible"));

    // round trip through a temp file
    std::string path = "test_seed_roundtrip.json";
    save_seed(loaded.seed, path);
    LoadedSeed again = load_seed(path);
    CHECK(again.seed == loaded.seed);
    std::remove(path.c_str());
}
