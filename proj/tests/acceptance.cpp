// Acceptance suite: one criterion per invocation argument (1..9), all when
// run without arguments. Prints one PASS/FAIL line per criterion.
#include <array>
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "lp/expr.hpp"
#include "lp/families.hpp"
#include "lp/lpseed.hpp"
#include "lp/polycore.hpp"
#include "lp/quiver.hpp"
#include "lp/sequence.hpp"

using namespace lp;
using Clock = std::chrono::steady_clock;

namespace {

struct Checker {
    bool ok = true;
    std::string first_failure;

    void expect(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            first_failure = what;
        }
    }
};

Seed seed_of(int n, std::initializer_list<const char*> polys) {
    Seed s;
    s.n = n;
    for (const char* t : polys) s.polys.push_back(parse_poly(t, n));
    return s;
}

std::vector<Rat> ones(int n) {
    return std::vector<Rat>(static_cast<std::size_t>(n), Rat(1));
}

// ---- criterion 1: golden seeds ------------------------------------------

void golden(Checker& c, const char* name, const LaurentPoly& P, int n,
            const Seed& want, int pivot = -1) {
    GenerateResult gen = generate_seed(P, n, pivot);
    c.expect(gen.seed == want, std::string(name) + ": seed mismatch");
}

void criterion1(Checker& c) {
    golden(c, "classic n=3 seed", parse_poly("x1*x2 + 1", 3), 3,
           seed_of(3, {"x1*x2 + 1", "x0 + x2", "x0*x1 + 1"}));
    // this seed arises from the pure forward chain; the polynomial itself
    // is not pseudoperiodic (its all-ones sequence leaves the integers at
    // term 9)
    golden(c, "n=4 generator x1*x2+x3^2", parse_poly("x1*x2 + x3^2", 4), 4,
           seed_of(4, {"x1*x2 + x3^2", "x2^3 + x0*x3^2", "x0^2 + x1*x3",
                       "x0*x1 + x2^2"}),
           1);
    {
        FamilySpec s;
        s.family = Family::SinkBinomial;
        s.n = 6;
        s.exps = {2, 0, 3, 0, 1};
        golden(c, "sink binomial n=6", build(s), 6,
               seed_of(6, {"x1^2*x3^3*x5 + 1", "x2^2*x4^3 + x0", "x3^2*x5^3 + x1",
                           "x0^3*x2 + x4^2", "x1^3*x3 + x5^2",
                           "x0^2*x2^3*x4 + 1"}));
        auto exp = expected_seed(s);
        c.expect(exp.seed && generate_seed(build(s), 6).seed == *exp.seed,
                 "sink binomial closed form");
    }
    {
        FamilySpec s;
        s.family = Family::Extreme;
        s.n = 4;
        s.A = 3;
        s.B = 2;
        golden(c, "extreme n=4", build(s), 4,
               seed_of(4, {"x1*x3 + 3*(x1 + x2 + x3) + 2", "x0 + x2 + 3",
                           "x1 + x3 + 3", "x0*x2 + 3*(x0 + x1 + x2) + 2"}));
    }
    {
        FamilySpec s;
        s.family = Family::Singleton;
        s.n = 4;
        s.A = 2;
        s.B = -7;
        golden(c, "singleton n=4", build(s), 4,
               seed_of(4, {"x2^2 + 2*x2 - 7", "x3^2 + 2*x3 - 7",
                           "x0^2 + 2*x0 - 7", "x1^2 + 2*x1 - 7"}));
    }
    {
        // the printed jumping intermediates carry spurious monomial factors;
        // the generated seed is the LP-normalized form
        FamilySpec s;
        s.family = Family::Jumping;
        s.n = 7;
        s.r = 3;
        golden(c, "jumping n=7 r=3", build(s), 7,
               seed_of(7, {"x1*x3 + x4*x6", "x0*x2 + x5*x6",
                           "x0*x1*x3 + x1*x3*x6 + x4*x6^2",
                           "x0^2*x1*x2 + x0*x2*x4*x6 + x4*x5*x6^2",
                           "x0^2*x2 + x0*x3*x5 + x3*x5*x6", "x0*x1 + x4*x6",
                           "x0*x2 + x3*x5"}));
    }
    {
        FamilySpec s;
        s.family = Family::FlipSymmetric;
        s.n = 8;
        s.exps = {3, -1, 0, -3, 0, -1, 2};
        golden(c, "flip-symmetric n=8", build(s), 8,
               seed_of(8, {"x1^3*x7^2 + x2*x4^3*x6",
                           "x0^2*x3*x5^3*x7 + x2^5*x4^6*x6^2",
                           "x0*x3^5*x5^6 + x1^5*x4*x6^3",
                           "x1*x4^5*x6^6 + x2^5*x5*x7^3",
                           "x0^3*x2*x5^5 + x1^9*x3^5*x6",
                           "x1^3*x3*x6^5 + x2^9*x4^5*x7",
                           "x0*x2^3*x4*x7^3 + x1^3*x3^9*x5^5",
                           "x0^3*x6^2 + x1*x3^3*x5"}));
    }
    {
        FamilySpec s;
        s.family = Family::VectorSum;
        s.n = 5;
        s.exps = {3, 2, 4, 2};
        s.terms = {{{1, 1, 2, 1}, 2}};
        golden(c, "vector sum n=5", build(s), 5,
               seed_of(5, {"1 + x1^3*x2^2*x3^4*x4^2 + 2*x1*x2*x3^2*x4 + "
                           "2*x1^2*x2*x3^2*x4",
                           "x0^2 + x2^3*x3^2*x4^4 + 2*x0*x2^2*x3*x4^2 + "
                           "2*x0*x2*x3*x4^2",
                           "x3^3*x4^2 + x0^4*x1^2 + 2*x0^2*x1*x3^2*x4 + "
                           "2*x0^2*x1*x3*x4",
                           "x4^3 + x0^2*x1^4*x2^2 + 2*x0*x1^2*x2*x4^2 + "
                           "2*x0*x1^2*x2*x4",
                           "1 + x0^3*x1^2*x2^4*x3^2 + 2*x0*x1*x2^2*x3 + "
                           "2*x0^2*x1*x2^2*x3"}));
    }
    {
        FamilySpec s;
        s.family = Family::Pi;
        s.n = 8;
        s.k = 2;
        s.A = -2;
        s.B = 3;
        s.a1 = 3;
        s.b1 = 2;
        s.a2 = 2;
        s.b2 = 3;
        golden(c, "pi n=8", build(s), 8,
               seed_of(8, {"-2*x2^3*x6^2 + 3*x2^2*x6^3 + x4^2",
                           "-2*x3^3*x7^2 + 3*x3^2*x7^3 + x5^2",
                           "-2*x0*x4^7 + 3*x4^8 + x0^3*x6^2",
                           "-2*x1*x5^7 + 3*x5^8 + x1^3*x7^2",
                           "-2*x2^8 + 3*x2^7*x6 + x0^2*x6^3",
                           "-2*x3^8 + 3*x3^7*x7 + x1^2*x7^3",
                           "-2*x0^3*x4^2 + 3*x0^2*x4^3 + x2^2",
                           "-2*x1^3*x5^2 + 3*x1^2*x5^3 + x3^2"}));
        auto exp = expected_seed(s);
        c.expect(exp.seed && generate_seed(build(s), 8).seed == *exp.seed,
                 "pi closed form");
    }
}

// ---- criterion 2: negative control ---------------------------------------

void criterion2(Checker& c) {
    LaurentPoly P = parse_poly("x1 + x2 + 1", 3);
    PeriodReport rep = is_period1(P, 3);
    c.expect(rep.verdict == Verdict::NotPeriod1, "x1+x2+1 must not be period 1");
    auto t = symbolic_terms(P, 3, 20);
    c.expect(t[3] * LaurentPoly::variable(0) == parse_poly("x1 + x2 + 1", 3),
             "displayed term 3");
    c.expect(t[4] * parse_poly("x0*x1", 3) ==
                 parse_poly("x0*x2 + x0 + x1 + x2 + 1", 3),
             "displayed term 4");
    c.expect(
        t[5] * parse_poly("x0*x1*x2", 3) ==
            parse_poly("x0*x1 + x1^2 + x0*x2 + x1*x2 + x0 + 2*x1 + x2 + 1", 3),
        "displayed term 5");
    bool periodic = true;
    for (int i = 0; i + 8 < 20; ++i)
        if (!(t[static_cast<std::size_t>(i)] == t[static_cast<std::size_t>(i + 8)]))
            periodic = false;
    c.expect(periodic, "sequence must be periodic with period 8");
    for (int p = 1; p < 8; ++p) {
        bool early = true;
        for (int i = 0; i + p < 20; ++i)
            if (!(t[static_cast<std::size_t>(i)] ==
                  t[static_cast<std::size_t>(i + p)]))
                early = false;
        c.expect(!early, "period must be exactly 8");
    }
}

// ---- criterion 3: family regression grid ---------------------------------

void check_member(Checker& c, const FamilySpec& spec, long& count) {
    LaurentPoly P;
    try {
        P = build(spec);
    } catch (const std::invalid_argument&) {
        return;  // infeasible parameters are not members
    }
    // the family statements require coefficients keeping P irreducible
    if (is_irreducible_best_effort(P).verdict == Irreducibility::Reducible)
        return;
    ++count;
    PeriodReport rep = is_period1(P, spec.n);
    if (rep.verdict != Verdict::Period1) {
        std::ostringstream os;
        os << family_name(spec.family) << " n=" << spec.n
           << " P=" << print_poly(P) << " -> not period 1 (" << rep.detail << ")";
        c.expect(false, os.str());
        return;
    }
    if (!verify_period1_by_mutation(*rep.seed)) {
        std::ostringstream os;
        os << family_name(spec.family) << " n=" << spec.n
           << " P=" << print_poly(P) << " -> mutation oracle failed";
        c.expect(false, os.str());
    }
}

void criterion3(Checker& c) {
    long count = 0;
    for (int n = 2; n <= 9; ++n)
        for (long A = -3; A <= 3; ++A)
            for (long B = -3; B <= 3; ++B) {
                FamilySpec s;
                s.family = Family::SymmetricSecondPowers;
                s.n = n;
                if (A != 0) s.elem = {A};
                s.B = B;
                check_member(c, s, count);
            }
    for (int n = 4; n <= 7; ++n)
        for (long A2 : {-2L, 1L, 3L})
            for (long A3 : {-1L, 2L}) {
                FamilySpec s;
                s.family = Family::SymmetricSecondPowers;
                s.n = n;
                s.elem = {1, A2, A3};
                s.B = -2;
                check_member(c, s, count);
            }
    for (int n = 2; n <= 9; ++n) {
        // all support-symmetric exponent vectors with entries <= 3
        std::vector<long> a(static_cast<std::size_t>(n - 1), 0);
        int pairs = (n - 1) / 2;
        bool self = (n % 2 == 0);
        std::function<void(int)> rec = [&](int cls) {
            if (cls == pairs + (self ? 1 : 0)) {
                bool any = false;
                for (long v : a)
                    if (v) any = true;
                if (!any) return;
                FamilySpec s;
                s.family = Family::SinkBinomial;
                s.n = n;
                s.exps = a;
                check_member(c, s, count);
                return;
            }
            bool is_self = self && cls == pairs;
            int i = cls + 1;
            if (is_self) {
                for (long v = 0; v <= 3; ++v) {
                    a[static_cast<std::size_t>(i - 1)] = v;
                    rec(cls + 1);
                }
                a[static_cast<std::size_t>(i - 1)] = 0;
                return;
            }
            for (long v1 = 0; v1 <= 3; ++v1)
                for (long v2 = 0; v2 <= 3; ++v2) {
                    if ((v1 == 0) != (v2 == 0)) continue;
                    a[static_cast<std::size_t>(i - 1)] = v1;
                    a[static_cast<std::size_t>(n - i - 1)] = v2;
                    rec(cls + 1);
                }
            a[static_cast<std::size_t>(i - 1)] = 0;
            a[static_cast<std::size_t>(n - i - 1)] = 0;
        };
        rec(0);
    }
    for (int n = 3; n <= 9; ++n)
        for (long A = -3; A <= 3; ++A)
            for (long B = -3; B <= 3; ++B) {
                FamilySpec s;
                s.family = Family::Extreme;
                s.n = n;
                s.A = A;
                s.B = B;
                check_member(c, s, count);
            }
    for (int n : {2, 4, 6, 8})
        for (long A = -3; A <= 3; ++A)
            for (long B = -3; B <= 3; ++B) {
                if (B == 0) continue;
                FamilySpec s;
                s.family = Family::Singleton;
                s.n = n;
                s.A = A;
                s.B = B;
                check_member(c, s, count);
            }
    for (int n : {4, 6})
        for (long a0 = -3; a0 <= 3; ++a0)
            for (long a1 = -3; a1 <= 3; ++a1)
                for (long a2 = -3; a2 <= 3; ++a2)
                    for (long a3 = -3; a3 <= 3; ++a3) {
                        if (a0 == 0) continue;
                        std::vector<long> coeffs = {a0, a1, a2, a3, 1};
                        LaurentPoly uni;
                        for (std::size_t j = 0; j < coeffs.size(); ++j)
                            uni += LaurentPoly::term(
                                Monomial::variable(1, static_cast<int>(j)),
                                Int(coeffs[j]));
                        if (classify_n2(uni) == N2Class::None) continue;
                        FamilySpec s;
                        s.family = Family::Singleton;
                        s.n = n;
                        s.coeffs = coeffs;
                        check_member(c, s, count);
                    }
    for (int n : {3, 5, 7, 9})
        for (long A = -3; A <= 3; ++A)
            for (long B = -3; B <= 3; ++B) {
                FamilySpec s;
                s.family = Family::Chain;
                s.n = n;
                s.A = A;
                s.B = B;
                check_member(c, s, count);
                s.family = Family::MultilinearSymmetric;
                check_member(c, s, count);
            }
    for (int n = 3; n <= 9; ++n)
        for (long r = 1; 2 * r + 1 <= n; ++r) {
            if ((n - 1) % r != 0) continue;
            for (long A = -3; A <= 3; ++A) {
                FamilySpec s;
                s.family = Family::Jumping;
                s.n = n;
                s.r = r;
                s.A = A;
                check_member(c, s, count);
            }
            if (r < 2) continue;
            for (long A = -3; A <= 3; ++A)
                for (long B = -3; B <= 3; ++B) {
                    if (A == 0) continue;
                    FamilySpec s;
                    s.family = Family::Hopping;
                    s.n = n;
                    s.r = r;
                    s.A = A;
                    s.B = B;
                    check_member(c, s, count);
                }
        }
    for (int n = 3; n <= 9; ++n) {
        std::vector<long> e(static_cast<std::size_t>(n - 1), 0);
        int pairs = (n - 1) / 2;
        bool self = (n % 2 == 0);
        long maxexp = n <= 6 ? 2 : 1;
        std::function<void(int)> rec = [&](int cls) {
            if (cls == pairs + (self ? 1 : 0)) {
                bool any = false;
                for (long v : e)
                    if (v) any = true;
                if (!any) return;
                FamilySpec s;
                s.family = Family::FlipSymmetric;
                s.n = n;
                s.exps = e;
                check_member(c, s, count);
                return;
            }
            bool is_self = self && cls == pairs;
            int i = cls + 1;
            auto assign = [&](long v1, long v2) {
                e[static_cast<std::size_t>(i - 1)] = v1;
                if (!is_self) e[static_cast<std::size_t>(n - i - 1)] = v2;
                rec(cls + 1);
            };
            assign(0, 0);
            for (long v1 = 1; v1 <= maxexp; ++v1)
                for (long v2 = 1; v2 <= maxexp; ++v2) {
                    if (is_self && v2 != v1) continue;
                    assign(v1, v2);
                    assign(-v1, -v2);
                    if (is_self) break;
                }
            e[static_cast<std::size_t>(i - 1)] = 0;
            if (!is_self) e[static_cast<std::size_t>(n - i - 1)] = 0;
        };
        rec(0);
    }
    for (int n : {4, 5, 6})
        for (long m : {2L, 3L})
            for (long A1 = -2; A1 <= 2; ++A1) {
                FamilySpec s;
                s.family = Family::Balanced;
                s.n = n;
                s.m = m;
                s.balanced_A = {A1};
                if (n == 4) s.exps = {1, -1, 1};
                if (n == 5) s.exps = {1, -1, -1, 1};
                if (n == 6) s.exps = {2, -1, 1, -1, 2};
                check_member(c, s, count);
            }
    for (int n : {3, 4, 5})
        for (long a = 2; a <= 3; ++a)
            for (long C = 1; C <= 3; ++C) {
                FamilySpec s;
                s.family = Family::VectorSum;
                s.n = n;
                s.exps.assign(static_cast<std::size_t>(n - 1), a);
                VectorSumTerm t;
                t.b.assign(static_cast<std::size_t>(n - 1), 1);
                t.coeff = C;
                s.terms = {t};
                check_member(c, s, count);
                if (a == 3) {
                    VectorSumTerm t2;
                    t2.b.assign(static_cast<std::size_t>(n - 1), 2);
                    t2.coeff = 2;
                    s.terms.push_back(t2);
                    check_member(c, s, count);
                }
            }
    for (int n = 5; n <= 9; ++n)
        for (long k = 1; 2 * k < n; ++k) {
            if (n == 3 * k) continue;
            for (long A = -3; A <= 3; ++A) {
                if (A == 0) continue;
                FamilySpec s;
                s.family = Family::LittlePi;
                s.n = n;
                s.k = k;
                s.A = A;
                check_member(c, s, count);
            }
        }
    for (int n = 5; n <= 9; ++n)
        for (long k = 1; 2 * k < n; ++k) {
            if (n == 3 * k) continue;
            const std::array<std::array<long, 4>, 3> splits = {
                {{1, 2, 2, 1}, {1, 3, 3, 1}, {2, 3, 3, 2}}};
            for (auto& sp : splits)
                for (long A : {-2L, 1L, 3L})
                    for (long B : {-3L, 2L}) {
                        FamilySpec s;
                        s.family = Family::Pi;
                        s.n = n;
                        s.k = k;
                        s.A = A;
                        s.B = B;
                        s.a1 = sp[0];
                        s.b1 = sp[1];
                        s.a2 = sp[2];
                        s.b2 = sp[3];
                        check_member(c, s, count);
                    }
        }
    for (int n = 3; n <= 9; ++n)
        for (long p = 1; p <= n; ++p)
            for (long q = p; q <= n; ++q) {
                long r = n - p - q;
                if (r < q) continue;
                for (long A : {1L, -1L, 2L})
                    for (long B : {1L, 3L})
                        for (long C : {1L, -2L}) {
                            FamilySpec s;
                            s.family = Family::GaleRobinson;
                            s.n = n;
                            s.p = p;
                            s.q = q;
                            s.r = r;
                            s.A = A;
                            s.B = B;
                            s.C = C;
                            check_member(c, s, count);
                        }
            }
    std::cout << "  [criterion 3] " << count << " family members checked\n";
    c.expect(count > 15000, "grid should cover > 15000 members");
}

// ---- criterion 4: classification oracle equivalence -----------------------

void criterion4(Checker& c) {
    {
        long mismatches = 0, total = 0, period1 = 0;
        std::vector<long> coeff(7, -3);
        while (true) {
            std::vector<Term> ts;
            for (int i = 0; i <= 6; ++i)
                if (coeff[static_cast<std::size_t>(i)] != 0)
                    ts.push_back({Monomial::variable(1, i),
                                  Int(coeff[static_cast<std::size_t>(i)])});
            LaurentPoly P = LaurentPoly::from_terms(std::move(ts));
            ++total;
            bool classified = false;
            if (!P.is_zero() && !P.is_constant())
                classified = classify_n2(P) != N2Class::None;
            bool p1 = is_period1(P, 2).verdict == Verdict::Period1;
            if (p1) ++period1;
            if (classified != p1 && ++mismatches == 1) {
                std::ostringstream os;
                os << "n=2 mismatch at " << print_poly(P) << " classified="
                   << classified << " period1=" << p1;
                c.expect(false, os.str());
            }
            int pos = 0;
            while (pos < 7 && coeff[static_cast<std::size_t>(pos)] == 3)
                coeff[static_cast<std::size_t>(pos++)] = -3;
            if (pos == 7) break;
            ++coeff[static_cast<std::size_t>(pos)];
        }
        std::cout << "  [criterion 4] n=2 grid: " << total << " polynomials, "
                  << period1 << " period 1, " << mismatches << " mismatches\n";
        c.expect(mismatches == 0, "n=2 classification mismatches");
    }
    {
        long mismatches = 0, total = 0, period1 = 0, proviso_excluded = 0;
        const std::pair<int, int> monos[10] = {{0, 0}, {1, 0}, {0, 1}, {2, 0},
                                               {1, 1}, {0, 2}, {3, 0}, {2, 1},
                                               {1, 2}, {0, 3}};
        std::vector<long> coeff(10, -2);
        while (true) {
            std::vector<Term> ts;
            for (int i = 0; i < 10; ++i)
                if (coeff[static_cast<std::size_t>(i)] != 0)
                    ts.push_back(
                        {Monomial::from_entries(
                             {{1, monos[i].first}, {2, monos[i].second}}),
                         Int(coeff[static_cast<std::size_t>(i)])});
            LaurentPoly P = LaurentPoly::from_terms(std::move(ts));
            ++total;
            bool classified = classify_n3(P).class_id != 0;
            bool p1 = is_period1(P, 3).verdict == Verdict::Period1;
            if (p1) ++period1;
            if (classified != p1) {
                // the classification theorem carries an irreducibility
                // proviso; reducible polynomials sit outside its domain
                bool excluded = false;
                if (p1 && !classified && !P.is_constant() &&
                    is_irreducible_best_effort(P).verdict ==
                        Irreducibility::Reducible) {
                    excluded = true;
                    ++proviso_excluded;
                }
                if (!excluded && ++mismatches == 1) {
                    std::ostringstream os;
                    os << "n=3 mismatch at " << print_poly(P) << " classified="
                       << classified << " period1=" << p1;
                    c.expect(false, os.str());
                }
            }
            int pos = 0;
            while (pos < 10 && coeff[static_cast<std::size_t>(pos)] == 2)
                coeff[static_cast<std::size_t>(pos++)] = -2;
            if (pos == 10) break;
            ++coeff[static_cast<std::size_t>(pos)];
        }
        std::cout << "  [criterion 4] n=3 grid: " << total << " polynomials, "
                  << period1 << " period 1, " << mismatches << " mismatches, "
                  << proviso_excluded
                  << " reducible outside the theorem's proviso\n";
        c.expect(mismatches == 0, "n=3 classification mismatches");
        c.expect(proviso_excluded <= 2, "unexpectedly many reducible exclusions");
    }
}

// ---- criterion 5: double quiver suite -------------------------------------

void criterion5(Checker& c) {
    BMatrix fig1;
    fig1.n = 3;
    fig1.b = {{0, -1, 2}, {1, 0, -3}, {-1, 0, 0}};
    c.expect(is_mutable(fig1, 0) && is_mutable(fig1, 1) && !is_mutable(fig1, 2),
             "figure 1 mutability verdicts");
    BMatrix fig2;
    fig2.n = 3;
    fig2.b = {{0, 1, -2}, {-1, 0, -1}, {1, -1, 0}};
    c.expect(mutate_bmatrix(fig1, 0) == fig2, "figure 1 -> figure 2 mutation");

    std::mt19937_64 rng(20130731);
    int involutions = 0;
    while (involutions < 500) {
        int n = 3 + static_cast<int>(rng() % 4);
        BMatrix B = BMatrix::zero(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j) B.at(i, j) = static_cast<long>(rng() % 7) - 3;
        int k = static_cast<int>(rng() % static_cast<unsigned>(n));
        if (!is_mutable(B, k)) continue;
        BMatrix once = mutate_bmatrix(B, k);
        if (!is_mutable(once, k)) continue;
        if (!(mutate_bmatrix(once, k) == B)) {
            c.expect(false, "mutate-twice involution failed");
            return;
        }
        ++involutions;
    }

    int sinks = 0;
    while (sinks < 500) {
        int n = 3 + static_cast<int>(rng() % 5);
        BMatrix B = BMatrix::zero(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (i == j) continue;
                if (i == 0)
                    B.at(i, j) = -static_cast<long>(rng() % 4);
                else if (j == 0)
                    B.at(i, j) = static_cast<long>(rng() % 4);
                else
                    B.at(i, j) = static_cast<long>(rng() % 7) - 3;
            }
        if (!is_sink_type(B)) continue;
        ++sinks;
        if (check_sink_type_theorem(B) != is_period1_quiver(B)) {
            c.expect(false, "sink-type theorem disagrees with direct mutation");
            return;
        }
    }

    int mutuals = 0;
    long trials = 0;
    while (mutuals < 2000 && ++trials < 500000) {
        int n = 3 + static_cast<int>(rng() % 4);
        BMatrix B = BMatrix::zero(n);
        for (int i = 1; i < n; ++i)
            for (int j = 1; j < n; ++j)
                if (i != j) B.at(i, j) = static_cast<long>(rng() % 5) - 2;
        for (int i = 1; i < n; ++i) {
            long v = static_cast<long>(rng() % 5) - 2;
            B.at(0, i) = v;
            B.at(i, 0) =
                v == 0 ? 0 : (v > 0 ? -1 : 1) * (1 + static_cast<long>(rng() % 2));
        }
        if (!is_mutual_at_zero(B)) continue;
        ++mutuals;
        if (check_mutual_theorem(B) != is_period1_quiver(B)) {
            c.expect(false, "mutual theorem disagrees with direct mutation");
            return;
        }
    }
    c.expect(mutuals == 2000, "mutual grid size");

    long binomials = 0;
    for (int n = 3; n <= 6; ++n) {
        std::vector<long> a(static_cast<std::size_t>(n - 1), 0);
        std::vector<long> b(static_cast<std::size_t>(n - 1), 0);
        std::function<void(std::size_t)> rec = [&](std::size_t pos) {
            if (pos == a.size()) {
                bool nontrivial = false;
                for (std::size_t i = 0; i < a.size(); ++i)
                    if (a[i] || b[i]) nontrivial = true;
                if (!nontrivial) return;
                Monomial::Storage am, bm;
                for (std::size_t i = 0; i < a.size(); ++i) {
                    if (a[i])
                        am.emplace_back(static_cast<int>(i) + 1,
                                        static_cast<int>(a[i]));
                    if (b[i])
                        bm.emplace_back(static_cast<int>(i) + 1,
                                        static_cast<int>(b[i]));
                }
                LaurentPoly P =
                    LaurentPoly::term(Monomial::from_entries(std::move(am)),
                                      Int(1)) +
                    LaurentPoly::term(Monomial::from_entries(std::move(bm)),
                                      Int(1));
                bool member = theorem_binomial_membership(a, b, n);
                // the theorem classifies binomials whose period-1 seed is
                // witnessed by a period-1 double quiver
                PeriodReport rep = is_period1(P, n);
                bool quiver_witnessed = false;
                if (rep.verdict == Verdict::Period1 && rep.seed) {
                    bool all_binomial = true;
                    for (auto& row : rep.seed->polys) {
                        if (row.num_terms() != 2) all_binomial = false;
                        for (auto& t : row.terms())
                            if (!(t.coeff == 1)) all_binomial = false;
                    }
                    if (all_binomial) {
                        try {
                            BMatrix base =
                                canonical_quiver_from_binomial_seed(*rep.seed);
                            // a seed determines its quiver only up to
                            // reversing the half-edges attached at each
                            // vertex; any orientation may witness period 1
                            for (unsigned mask = 0;
                                 mask < (1u << n) && !quiver_witnessed; ++mask) {
                                BMatrix flipped = base;
                                for (int v = 0; v < n; ++v)
                                    if (mask & (1u << v))
                                        for (int j = 0; j < n; ++j)
                                            flipped.at(v, j) = -flipped.at(v, j);
                                if (is_period1_quiver(flipped))
                                    quiver_witnessed = true;
                            }
                        } catch (const std::invalid_argument&) {
                        }
                    }
                }
                if (member != quiver_witnessed) {
                    std::ostringstream os;
                    os << "binomial membership mismatch n=" << n
                       << " P=" << print_poly(P);
                    c.expect(false, os.str());
                }
                if (member)
                    c.expect(rep.verdict == Verdict::Period1,
                             "membership must imply period 1");
                ++binomials;
                return;
            }
            for (long va = 0; va <= 2; ++va)
                for (long vb = 0; vb <= 2; ++vb) {
                    if (va != 0 && vb != 0) continue;
                    a[pos] = va;
                    b[pos] = vb;
                    rec(pos + 1);
                }
            a[pos] = 0;
            b[pos] = 0;
        };
        rec(0);
    }
    std::cout << "  [criterion 5] " << binomials
              << " coprime-support binomials cross-checked\n";
}

// ---- criterion 6: Laurent phenomenon at desk scale -------------------------

void criterion6(Checker& c) {
    // The default symbolic horizon is T = 12 sequence terms; the quadratic
    // families grow doubly exponentially, so deeper windows are out of desk
    // scale by construction. The three named prototypes additionally run a
    // full 12 generated terms.
    std::vector<std::pair<std::string, std::pair<LaurentPoly, int>>> fixtures;
    auto addf = [&](const std::string& name, const LaurentPoly& P, int n) {
        fixtures.push_back({name, {P, n}});
    };
    addf("somos-4", parse_poly("x1*x3 + x2^2", 4), 4);
    addf("somos-5", parse_poly("x1*x4 + x2*x3", 5), 5);
    addf("gale-robinson n=6 p=1 q=2 r=3", parse_poly("x1*x5 + x2*x4 + x3^2", 6), 6);
    {
        FamilySpec s;
        s.family = Family::SymmetricSecondPowers;
        s.n = 9;
        s.elem = {2};
        s.B = 5;
        addf("symmetric-second-powers", build(s), 9);
    }
    {
        FamilySpec s;
        s.family = Family::SinkBinomial;
        s.n = 6;
        s.exps = {2, 0, 3, 0, 1};
        addf("sink-binomial", build(s), 6);
    }
    {
        FamilySpec s;
        s.family = Family::Extreme;
        s.n = 4;
        s.A = 3;
        s.B = 2;
        addf("extreme", build(s), 4);
    }
    {
        FamilySpec s;
        s.family = Family::Singleton;
        s.n = 4;
        s.A = 2;
        s.B = -7;
        addf("singleton", build(s), 4);
    }
    {
        FamilySpec s;
        s.family = Family::Chain;
        s.n = 7;
        s.A = 2;
        s.B = 3;
        addf("chain", build(s), 7);
    }
    {
        FamilySpec s;
        s.family = Family::MultilinearSymmetric;
        s.n = 7;
        s.A = -3;
        s.B = 1;
        addf("multilinear-symmetric", build(s), 7);
    }
    {
        FamilySpec s;
        s.family = Family::Jumping;
        s.n = 7;
        s.r = 3;
        s.A = 1;
        addf("jumping", build(s), 7);
    }
    {
        FamilySpec s;
        s.family = Family::Hopping;
        s.n = 7;
        s.r = 3;
        s.A = -2;
        s.B = 3;
        addf("hopping", build(s), 7);
    }
    {
        FamilySpec s;
        s.family = Family::FlipSymmetric;
        s.n = 8;
        s.exps = {3, -1, 0, -3, 0, -1, 2};
        addf("flip-symmetric", build(s), 8);
    }
    {
        FamilySpec s;
        s.family = Family::Balanced;
        s.n = 9;
        s.exps = {0, 1, -3, 0, 0, -1, 2, 0};
        s.m = 4;
        s.balanced_A = {2, 3};
        addf("balanced", build(s), 9);
    }
    {
        FamilySpec s;
        s.family = Family::VectorSum;
        s.n = 7;
        s.exps = {2, 2, 2, 2, 2, 2};
        s.terms = {{{1, 1, 1, 1, 1, 1}, 2}};
        addf("vector-sum", build(s), 7);
    }
    {
        FamilySpec s;
        s.family = Family::LittlePi;
        s.n = 7;
        s.k = 2;
        s.A = 2;
        addf("little-pi", build(s), 7);
    }
    {
        FamilySpec s;
        s.family = Family::Pi;
        s.n = 8;
        s.k = 2;
        s.A = -2;
        s.B = 3;
        s.a1 = 3;
        s.b1 = 2;
        s.a2 = 2;
        s.b2 = 3;
        addf("pi", build(s), 8);
    }
    for (auto& [name, fx] : fixtures) {
        try {
            auto terms = symbolic_terms(fx.first, fx.second, 12);
            c.expect(static_cast<int>(terms.size()) == 12, name + ": term count");
        } catch (const std::exception& e) {
            c.expect(false, name + ": " + e.what());
        }
    }
    // prototypes: a full 12 generated terms each
    const std::pair<const char*, std::pair<const char*, int>> deep[] = {
        {"somos-4 deep", {"x1*x3 + x2^2", 4}},
        {"somos-5 deep", {"x1*x4 + x2*x3", 5}},
        {"gale-robinson deep", {"x1*x5 + x2*x4 + x3^2", 6}},
    };
    for (auto& [name, fx] : deep) {
        try {
            auto terms = symbolic_terms(parse_poly(fx.first, fx.second), fx.second,
                                        fx.second + 12, 5000000);
            c.expect(static_cast<int>(terms.size()) == fx.second + 12,
                     std::string(name) + ": term count");
        } catch (const std::exception& e) {
            c.expect(false, std::string(name) + ": " + e.what());
        }
    }
    std::cout << "  [criterion 6] " << fixtures.size()
              << " fixtures at horizon 12, 3 prototypes at 12 generated terms\n";
}

// ---- criterion 7: integer sequences ----------------------------------------

void criterion7(Checker& c) {
    auto s4 = numeric_terms(parse_poly("x1*x3 + x2^2", 4), 4, ones(4), 12);
    const long want[] = {1, 1, 1, 1, 2, 3, 7, 23, 59, 314, 1529, 8209};
    for (int i = 0; i < 12; ++i)
        c.expect(s4[static_cast<std::size_t>(i)] == Rat(want[i]), "somos-4 prefix");
    auto s5 = numeric_terms(parse_poly("x1*x4 + x2*x3", 5), 5, ones(5), 20);
    for (auto& v : s5) {
        Rat q = v;
        q.canonicalize();
        c.expect(q.get_den() == 1, "somos-5 integrality");
    }
    std::vector<std::pair<LaurentPoly, int>> positive = {
        {parse_poly("x1*x2 + 1", 3), 3},
        {parse_poly("x1*x5 + x2*x4 + x3^2", 6), 6},
        {parse_poly("x1*x3 + 3*(x1 + x2 + x3) + 2", 4), 4},
        {parse_poly("x1^2*x3^3*x5 + 1", 6), 6},
    };
    for (auto& [P, n] : positive) {
        auto t = numeric_terms(P, n, ones(n), 20);
        for (auto& v : t) {
            Rat q = v;
            q.canonicalize();
            c.expect(q.get_den() == 1 && q > 0,
                     "positive fixture must stay positive integral");
        }
    }
}

// ---- criterion 8: conserved quantities and k-invariants --------------------

void criterion8(Checker& c) {
    auto run = [&](InvariantSpec s, const char* name) {
        auto inv = check_invariant(s, 10);
        auto lin = check_multilinearization(s, 10);
        c.expect(inv.ok, std::string(name) + ": invariant");
        c.expect(lin.ok, std::string(name) + ": linearized recurrence");
    };
    run({InvariantFamily::SymmetricSecondPowers, 3, 2, 5, 0, 0, 0}, "sympow A=2");
    run({InvariantFamily::SymmetricSecondPowers, 4, 0, 1, 0, 0, 0}, "sympow A=0");
    run({InvariantFamily::Jumping, 7, 0, 0, 3, 0, 0}, "jumping r=3");
    run({InvariantFamily::Jumping, 5, 2, 0, 2, 0, 0}, "jumping r=2");
    run({InvariantFamily::SinkBinomial, 5, 0, 0, 0, 2, 0}, "sink k=2");
    run({InvariantFamily::SinkBinomial, 7, 0, 0, 0, 3, 0}, "sink k=3");
    run({InvariantFamily::Extreme, 4, 3, 2, 0, 0, 0}, "extreme n=4");
    run({InvariantFamily::Extreme, 6, -1, 1, 0, 0, 0}, "extreme n=6");
    run({InvariantFamily::Chain, 5, 2, 3, 0, 0, 0}, "chain n=5");
    run({InvariantFamily::Chain, 7, 1, -2, 0, 0, 0}, "chain n=7");
    run({InvariantFamily::MultilinearSymmetric, 5, -3, 1, 0, 0, 0}, "multsym n=5");
    run({InvariantFamily::MultilinearSymmetric, 7, 2, 1, 0, 0, 0}, "multsym n=7");
    c.expect(!check_invariant(
                  {InvariantFamily::SymmetricSecondPowers, 3, 2, 5, 0, 0, 1}, 10)
                  .ok,
             "perturbed-A invariant must fail");
    c.expect(!check_multilinearization(
                  {InvariantFamily::SymmetricSecondPowers, 3, 2, 5, 0, 0, 1}, 10)
                  .ok,
             "perturbed-A linearization must fail");
    c.expect(!check_invariant({InvariantFamily::Extreme, 4, 3, 2, 0, 0, -1}, 10).ok,
             "perturbed extreme invariant must fail");
}

// ---- criterion 9: lemma suite ----------------------------------------------

void criterion9(Checker& c) {
    std::vector<std::pair<LaurentPoly, int>> fixtures;
    auto addfix = [&](const FamilySpec& s) { fixtures.emplace_back(build(s), s.n); };
    {
        FamilySpec s;
        s.family = Family::SymmetricSecondPowers;
        s.n = 3;
        s.elem = {2};
        s.B = 5;
        addfix(s);
    }
    {
        FamilySpec s;
        s.family = Family::SinkBinomial;
        s.n = 6;
        s.exps = {2, 0, 3, 0, 1};
        addfix(s);
    }
    {
        FamilySpec s;
        s.family = Family::Extreme;
        s.n = 4;
        s.A = 3;
        s.B = 2;
        addfix(s);
    }
    {
        FamilySpec s;
        s.family = Family::Singleton;
        s.n = 4;
        s.A = 2;
        s.B = -7;
        addfix(s);
    }
    {
        FamilySpec s;
        s.family = Family::Chain;
        s.n = 5;
        s.A = 2;
        s.B = 3;
        addfix(s);
    }
    {
        FamilySpec s;
        s.family = Family::MultilinearSymmetric;
        s.n = 5;
        s.A = -3;
        s.B = 1;
        addfix(s);
    }
    {
        FamilySpec s;
        s.family = Family::Jumping;
        s.n = 7;
        s.r = 3;
        addfix(s);
    }
    {
        FamilySpec s;
        s.family = Family::Hopping;
        s.n = 7;
        s.r = 3;
        s.A = -2;
        s.B = 3;
        addfix(s);
    }
    {
        FamilySpec s;
        s.family = Family::FlipSymmetric;
        s.n = 8;
        s.exps = {3, -1, 0, -3, 0, -1, 2};
        addfix(s);
    }
    {
        FamilySpec s;
        s.family = Family::Balanced;
        s.n = 4;
        s.exps = {1, -1, 1};
        s.m = 2;
        s.balanced_A = {2};
        addfix(s);
    }
    {
        FamilySpec s;
        s.family = Family::VectorSum;
        s.n = 5;
        s.exps = {3, 2, 4, 2};
        s.terms = {{{1, 1, 2, 1}, 2}};
        addfix(s);
    }
    {
        FamilySpec s;
        s.family = Family::LittlePi;
        s.n = 7;
        s.k = 2;
        s.A = 2;
        addfix(s);
    }
    {
        FamilySpec s;
        s.family = Family::Pi;
        s.n = 8;
        s.k = 2;
        s.A = -2;
        s.B = 3;
        s.a1 = 3;
        s.b1 = 2;
        s.a2 = 2;
        s.b2 = 3;
        addfix(s);
    }
    {
        FamilySpec s;
        s.family = Family::GaleRobinson;
        s.n = 6;
        s.p = 1;
        s.q = 2;
        s.r = 3;
        s.A = 1;
        s.B = 1;
        s.C = 1;
        addfix(s);
    }
    for (auto& [P, n] : fixtures) {
        c.expect(is_period1(reflect(P, n), n).verdict == Verdict::Period1,
                 "reflection must preserve period 1");
        for (int k = 2; k <= 3; ++k) {
            if (static_cast<long>(n) * k > 14) continue;
            c.expect(is_period1(expand(P, n, k), n * k).verdict == Verdict::Period1,
                     "expansion must preserve period 1");
        }
        GenerateResult gen = generate_seed(P, n);
        c.expect(gen.pseudoperiod_ok, "fixture must be pseudoperiodic");
        for (int i = 0; i + 1 < n; ++i) {
            const LaurentPoly& q = gen.seed.polys[static_cast<std::size_t>(i)];
            const LaurentPoly& up = gen.seed.polys[static_cast<std::size_t>(i + 1)];
            c.expect(equal_up_to_sign(tau(P, kappa(P, q, i, n), i + 1, n), q),
                     "tau(kappa(Q)) = Q");
            c.expect(equal_up_to_sign(kappa(P, tau(P, up, i + 1, n), i, n), up),
                     "kappa(tau(Q)) = Q");
        }
        for (int k = 0; k < n; ++k) {
            MutationResult once = mutate(gen.seed, k);
            MutationResult twice = mutate(once.seed, k);
            // seeds are compared up to unit multiples of the exchange
            // polynomials, the equivalence the displayed fixtures force
            c.expect(seeds_equal_up_to_sign(twice.seed, gen.seed),
                     "mutate-twice seed involution");
        }
    }
    std::cout << "  [criterion 9] " << fixtures.size() << " fixtures checked\n";
}

const char* kNames[] = {
    "",
    "golden seeds reproduced exactly",
    "negative control (x1+x2+1)",
    "family regression grid",
    "classification oracle equivalence",
    "double quiver suite",
    "Laurent phenomenon, 12 symbolic terms",
    "integer sequences",
    "conserved quantities and k-invariants",
    "expansion/reflection/involution lemmas",
};

}  // namespace

int main(int argc, char** argv) {
    std::vector<int> which;
    if (argc > 1)
        which.push_back(std::atoi(argv[1]));
    else
        for (int i = 1; i <= 9; ++i) which.push_back(i);
    bool all_ok = true;
    for (int i : which) {
        if (i < 1 || i > 9) {
            std::cerr << "criterion number must be 1..9\n";
            return 2;
        }
        Checker c;
        auto t0 = Clock::now();
        switch (i) {
            case 1: criterion1(c); break;
            case 2: criterion2(c); break;
            case 3: criterion3(c); break;
            case 4: criterion4(c); break;
            case 5: criterion5(c); break;
            case 6: criterion6(c); break;
            case 7: criterion7(c); break;
            case 8: criterion8(c); break;
            case 9: criterion9(c); break;
        }
        auto secs = std::chrono::duration_cast<std::chrono::milliseconds>(
                        Clock::now() - t0)
                        .count() /
                    1000.0;
        std::cout << "CRITERION " << i << " (" << kNames[i]
                  << "): " << (c.ok ? "PASS" : "FAIL") << " [" << secs << " s]";
        if (!c.ok) std::cout << "  -- " << c.first_failure;
        std::cout << "\n";
        if (!c.ok) all_ok = false;
    }
    return all_ok ? 0 : 1;
}
