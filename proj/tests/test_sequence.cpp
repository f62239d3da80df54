#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "lp/expr.hpp"
#include "lp/sequence.hpp"

using namespace lp;

namespace {

std::vector<Rat> ones(int n) { return std::vector<Rat>(static_cast<std::size_t>(n), Rat(1)); }

}  // namespace

TEST_CASE("symbolic terms of the x1*x2 + 1 recurrence") {
    LaurentPoly P = parse_poly("x1*x2 + 1", 3);
    auto t = symbolic_terms(P, 3, 8);
    LaurentPoly x0 = LaurentPoly::variable(0);
    LaurentPoly x1 = LaurentPoly::variable(1);
    LaurentPoly x2 = LaurentPoly::variable(2);
    CHECK(t[3] * x0 == parse_poly("x1*x2 + 1", 3));
    CHECK(t[4] * (x0 * x1) == parse_poly("x1*x2^2 + x0 + x2", 3));
    // the displayed sixth term (denominator corrected to x0^2*x1*x2; the
    // numerator is not divisible by x2)
    CHECK(t[5] * (x0 * x0 * x1 * x2) ==
          parse_poly("(x1*x2 + 1)*(x1*x2^2 + x0 + x2) + x0^2*x1", 3));
    CHECK(!exact_div(parse_poly("(x1*x2 + 1)*(x1*x2^2 + x0 + x2) + x0^2*x1", 3),
                     x2)
               ->is_polynomial());
    CHECK(t[6] * (x0 * x0 * x1 * x1 * x2) ==
          parse_poly("(x1*x2^2 + x0 + x2)^2 + x0^2*x1*(x0 + x2)", 3));
}

TEST_CASE("Laurent violation is a finding, not a crash") {
    // x1^2 + x2 for n = 3 is not period 1 and loses Laurentness quickly
    SymbolicState st = make_symbolic_state(parse_poly("x1^2 + x2 + 1", 3), 3);
    bool violated = false;
    for (int i = 0; i < 10; ++i) {
        SymbolicStep step = step_symbolic(st);
        if (!step.term) {
            violated = true;
            CHECK(step.violation_at >= 0);
            CHECK(!step.numerator.is_zero());
            break;
        }
    }
    CHECK(violated);
}

TEST_CASE("periodic negative control x1 + x2 + 1") {
    LaurentPoly P = parse_poly("x1 + x2 + 1", 3);
    auto t = symbolic_terms(P, 3, 20);
    // displayed closed forms (in window variables x0, x1, x2)
    CHECK(t[3] * LaurentPoly::variable(0) == parse_poly("x1 + x2 + 1", 3));
    CHECK(t[4] * parse_poly("x0*x1", 3) ==
          parse_poly("x0*x2 + x0 + x1 + x2 + 1", 3));
    CHECK(t[5] * parse_poly("x0*x1*x2", 3) ==
          parse_poly("x0*x1 + x1^2 + x0*x2 + x1*x2 + x0 + 2*x1 + x2 + 1", 3));
    // the sequence is periodic with period 8
    int period = 0;
    for (int p = 1; p <= 10; ++p) {
        bool ok = true;
        for (int i = 0; i + p < 20; ++i)
            if (!(t[static_cast<std::size_t>(i)] ==
                  t[static_cast<std::size_t>(i + p)]))
                ok = false;
        if (ok) {
            period = p;
            break;
        }
    }
    CHECK(period == 8);
}

TEST_CASE("Somos-4 and Somos-5 numeric prefixes") {
    auto s4 = numeric_terms(parse_poly("x1*x3 + x2^2", 4), 4, ones(4), 12);
    const long want4[] = {1, 1, 1, 1, 2, 3, 7, 23, 59, 314, 1529, 8209};
    for (int i = 0; i < 12; ++i) CHECK(s4[static_cast<std::size_t>(i)] == Rat(want4[i]));

    auto s5 = numeric_terms(parse_poly("x1*x4 + x2*x3", 5), 5, ones(5), 20);
    for (auto& v : s5) {
        Rat c = v;
        c.canonicalize();
        CHECK(c.get_den() == 1);
        CHECK(c > 0);
    }
    CHECK(s5[10] == Rat(83));
    CHECK(s5[19] == Rat(1013908933));
}

TEST_CASE("all-ones integer sequence for x1*x2 + 1") {
    auto t = numeric_terms(parse_poly("x1*x2 + 1", 3), 3, ones(3), 10);
    const long want[] = {1, 1, 1, 2, 3, 7, 11, 26, 41, 97};
    for (int i = 0; i < 10; ++i) CHECK(t[static_cast<std::size_t>(i)] == Rat(want[i]));
}

TEST_CASE("numeric and symbolic modes agree at the all-ones point") {
    for (const char* text : {"x1*x2 + 1", "x1*x3 + x2^2"}) {
        int n = std::string(text).find("x3") != std::string::npos ? 4 : 3;
        LaurentPoly P = parse_poly(text, n);
        auto sym = symbolic_terms(P, n, 12);
        auto num = numeric_terms(P, n, ones(n), 12);
        std::vector<Rat> at(static_cast<std::size_t>(n), Rat(1));
        for (int i = 0; i < 12; ++i) {
            LaurentPoly s = sym[static_cast<std::size_t>(i)];
            // evaluate the Laurent term at all-ones: clear denominators first
            UnitSplit u = strip_units(s);
            CHECK(u.core.evaluate(at) == num[static_cast<std::size_t>(i)]);
        }
    }
}

TEST_CASE("singularity reporting") {
    NumericState st = make_numeric_state(parse_poly("x1*x2 + 1", 3), 3,
                                         {Rat(0), Rat(1), Rat(1)});
    NumericStep step = step_numeric(st);
    CHECK(!step.term);
    CHECK(step.singularity_at == 0);
}

TEST_CASE("term budget guard") {
    CHECK_THROWS_AS(symbolic_terms(parse_poly("x1*x3 + x2^2", 4), 4, 12, 50),
                    TermBudgetExceeded);
}

TEST_CASE("symmetric second powers invariant and linearization") {
    InvariantSpec s{InvariantFamily::SymmetricSecondPowers, 3, 2, 5, 0, 0, 0};
    auto inv = check_invariant(s, 10);
    CHECK(inv.ok);
    CHECK(inv.k_period == 1);
    CHECK(check_multilinearization(s, 10).ok);
    InvariantSpec zero{InvariantFamily::SymmetricSecondPowers, 3, 0, 1, 0, 0, 0};
    CHECK(check_invariant(zero, 10).ok);
    CHECK(check_multilinearization(zero, 10).ok);
}

TEST_CASE("jumping invariant (k = 1)") {
    InvariantSpec s{InvariantFamily::Jumping, 7, 0, 0, 3, 0, 0};
    CHECK(check_invariant(s, 10).ok);
    CHECK(check_multilinearization(s, 10).ok);
    InvariantSpec withA{InvariantFamily::Jumping, 5, 2, 0, 2, 0, 0};
    CHECK(check_invariant(withA, 10).ok);
    CHECK(check_multilinearization(withA, 10).ok);
}

TEST_CASE("sink binomial k-invariant is k-periodic but not conserved") {
    InvariantSpec s{InvariantFamily::SinkBinomial, 5, 0, 0, 0, 2, 0};
    auto rep = check_invariant(s, 10);
    CHECK(rep.ok);
    CHECK(rep.k_period == 3);
    CHECK(check_multilinearization(s, 10).ok);
    // J_m != J_{m+1} generically: check m = 0 directly
    LaurentPoly P = invariant_polynomial(s);
    auto t = symbolic_terms(P, 5, 12);
    LaurentPoly num0 = t[0] + t[4];
    LaurentPoly den0 = t[2];
    LaurentPoly num1 = t[1] + t[5];
    LaurentPoly den1 = t[3];
    CHECK(!(num0 * den1 == num1 * den0));
}

TEST_CASE("extreme (n-1)-invariant") {
    InvariantSpec s{InvariantFamily::Extreme, 4, 3, 2, 0, 0, 0};
    auto rep = check_invariant(s, 10);
    CHECK(rep.ok);
    CHECK(rep.k_period == 3);
    CHECK(check_multilinearization(s, 10).ok);
}

TEST_CASE("chain 2-invariant") {
    InvariantSpec s{InvariantFamily::Chain, 5, 2, 3, 0, 0, 0};
    auto rep = check_invariant(s, 10);
    CHECK(rep.ok);
    CHECK(rep.k_period == 2);
    CHECK(check_multilinearization(s, 10).ok);
}

TEST_CASE("multilinear symmetric 2-invariant") {
    InvariantSpec s{InvariantFamily::MultilinearSymmetric, 5, -3, 1, 0, 0, 0};
    CHECK(check_invariant(s, 10).ok);
    CHECK(check_multilinearization(s, 10).ok);
}

TEST_CASE("perturbed invariants are detected") {
    InvariantSpec s{InvariantFamily::SymmetricSecondPowers, 3, 2, 5, 0, 0, 1};
    CHECK(!check_invariant(s, 10).ok);
    CHECK(!check_multilinearization(s, 10).ok);
    InvariantSpec chain{InvariantFamily::Chain, 5, 2, 3, 0, 0, -1};
    CHECK(!check_invariant(chain, 10).ok);
    InvariantSpec ext{InvariantFamily::Extreme, 4, 3, 2, 0, 0, 2};
    CHECK(!check_invariant(ext, 10).ok);
}
