#include "lp/lpseed.hpp"

#include <sstream>

namespace lp {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

/// Shared tail of tau/kappa: clear the fresh-variable denominator of
/// Q|_{x_sub <- D / x_fresh}, strip factors shared with D, normalize away
/// monomial content.
LaurentPoly substitute_and_reduce(const LaurentPoly& Q, int sub_var,
                                  const LaurentPoly& D, int fresh_var) {
    LaurentPoly g = substitute_ratio(Q, sub_var, D, fresh_var);
    LaurentPoly n = strip_units(g).core;
    LaurentPoly h = strip_common_factors(std::move(n), D);
    return strip_units(h).core;
}

void validate_generator(const LaurentPoly& P, int n) {
    require(n >= 2, "cluster size must be at least 2");
    require(!P.is_zero(), "P must be nonzero");
    require(!P.is_constant(), "P must be nonconstant");
    require(P.is_polynomial(), "P must be an ordinary polynomial");
    for (int v : P.variables()) {
        require(v >= 1 && v < n, "P must live in Z[x1..x(n-1)]");
        require(P.min_exponent_in(v) == 0,
                "P must not be divisible by any variable");
    }
}

LaurentPoly tau_impl(const LaurentPoly& P, const LaurentPoly& Q, int i, int n) {
    if (!Q.depends_on(0)) return shift(Q, -1);
    LaurentPoly D = substitute(P, i, LaurentPoly{});
    require(!D.is_zero(), "tau: P vanishes at x_i = 0");
    LaurentPoly core = substitute_and_reduce(Q, 0, D, n);
    return shift_unchecked(core, -1);
}

LaurentPoly kappa_impl(const LaurentPoly& P, const LaurentPoly& Q, int i, int n) {
    if (!Q.depends_on(n - 1)) return shift_unchecked(Q, 1);
    LaurentPoly Pdown = shift(P, -1);  // the copy living in P_{n-1}'s slot
    LaurentPoly D = substitute(Pdown, i, LaurentPoly{});
    require(!D.is_zero(), "kappa: P' vanishes at x_i = 0");
    LaurentPoly core = substitute_and_reduce(Q, n - 1, D, -1);
    return shift_unchecked(core, 1);
}

/// Sound rejection probe: a period-1 polynomial drives an all-ones integer
/// sequence, so any non-integer step certifies NotPeriod1. A zero term or a
/// size blowup is inconclusive.
bool ones_probe_rejects(const LaurentPoly& P, int n, int& failure_m) {
    std::vector<Int> window(static_cast<std::size_t>(n), Int(1));
    const int steps = n + 7;
    for (int m = 0; m < steps; ++m) {
        if (window[0] == 0) return false;
        Int value(0);
        for (auto& t : P.terms()) {
            Int prod = t.coeff;
            for (auto& [v, e] : t.mono.entries())
                for (int i = 0; i < e; ++i)
                    prod *= window[static_cast<std::size_t>(v)];
            value += prod;
        }
        Int q;
        if (!mpz_divisible_p(value.get_mpz_t(), window[0].get_mpz_t())) {
            failure_m = m;
            return true;
        }
        mpz_divexact(q.get_mpz_t(), value.get_mpz_t(), window[0].get_mpz_t());
        if (mpz_sizeinbase(q.get_mpz_t(), 2) > 4096) return false;
        window.erase(window.begin());
        window.push_back(std::move(q));
    }
    return false;
}

GenerateResult generate_impl(const LaurentPoly& P, int n, int pivot) {
    GenerateResult out;
    out.seed.n = n;
    out.seed.polys.assign(static_cast<std::size_t>(n), LaurentPoly{});
    out.seed.polys[0] = P;
    out.seed.polys[static_cast<std::size_t>(n - 1)] = shift(P, -1);
    auto degenerate = [&](int stage, const char* what) {
        out.pseudoperiod_ok = false;
        out.fail_stage = stage;
        out.detail = what;
        return out;
    };
    for (int i = n - 2; i >= pivot; --i) {
        LaurentPoly q =
            tau_impl(P, out.seed.polys[static_cast<std::size_t>(i + 1)], i + 1, n);
        if (q.is_constant())
            return degenerate(i, "intermediate degenerated to a constant");
        out.seed.polys[static_cast<std::size_t>(i)] = std::move(q);
    }
    for (int i = 1; i <= pivot - 1; ++i) {
        LaurentPoly q = kappa_impl(
            P, out.seed.polys[static_cast<std::size_t>(i - 1)], i - 1, n);
        if (q.is_constant())
            return degenerate(i, "intermediate degenerated to a constant");
        out.seed.polys[static_cast<std::size_t>(i)] = std::move(q);
    }
    LaurentPoly seam = kappa_impl(
        P, out.seed.polys[static_cast<std::size_t>(pivot - 1)], pivot - 1, n);
    if (!equal_up_to_sign(seam, out.seed.polys[static_cast<std::size_t>(pivot)]))
        return degenerate(pivot, "pseudoperiod seam mismatch");
    out.pseudoperiod_ok = true;
    return out;
}

}  // namespace

void validate_seed_hard(const Seed& s) {
    require(s.n >= 2, "seed size must be at least 2");
    require(static_cast<int>(s.polys.size()) == s.n,
            "seed must have exactly n exchange polynomials");
    for (int i = 0; i < s.n; ++i) {
        const LaurentPoly& p = s.polys[static_cast<std::size_t>(i)];
        std::ostringstream who;
        who << "P_" << i;
        require(!p.is_zero(), who.str() + " is zero");
        require(!p.is_constant(), who.str() + " is constant");
        require(p.is_polynomial(), who.str() + " is not an ordinary polynomial");
        for (int v : p.variables()) {
            require(v >= 0 && v < s.n,
                    who.str() + " uses a variable out of range");
            if (v == i) {
                std::ostringstream os;
                os << "P_" << i << " depends on x_" << i;
                throw std::invalid_argument(os.str());
            }
            if (p.min_exponent_in(v) > 0) {
                std::ostringstream os;
                os << "P_" << i << " is divisible by x_" << v;
                throw std::invalid_argument(os.str());
            }
        }
    }
}

std::vector<std::string> seed_irreducibility_warnings(const Seed& s) {
    std::vector<std::string> warnings;
    for (int i = 0; i < s.n; ++i) {
        auto rep = is_irreducible_best_effort(s.polys[static_cast<std::size_t>(i)]);
        if (rep.verdict == Irreducibility::Reducible) {
            std::ostringstream os;
            os << "P_" << i << " appears reducible";
            warnings.push_back(os.str());
        } else if (rep.verdict == Irreducibility::Unknown) {
            std::ostringstream os;
            os << "P_" << i << " irreducibility undetermined";
            warnings.push_back(os.str());
        }
    }
    return warnings;
}

std::vector<std::string> validate_seed(const Seed& s) {
    validate_seed_hard(s);
    return seed_irreducibility_warnings(s);
}

LaurentPoly tau(const LaurentPoly& P, const LaurentPoly& Q, int i, int n) {
    validate_generator(P, n);
    require(i >= 1 && i <= n - 1, "tau: index out of range");
    require(!Q.depends_on(i), "tau: Q must be independent of x_i");
    return tau_impl(P, Q, i, n);
}

LaurentPoly kappa(const LaurentPoly& P, const LaurentPoly& Q, int i, int n) {
    validate_generator(P, n);
    require(i >= 0 && i <= n - 2, "kappa: index out of range");
    require(!Q.depends_on(i), "kappa: Q must be independent of x_i");
    return kappa_impl(P, Q, i, n);
}

int default_pivot(int n) { return std::max(1, n / 2); }

GenerateResult generate_seed(const LaurentPoly& P, int n, int pivot) {
    validate_generator(P, n);
    if (pivot < 0) pivot = default_pivot(n);
    require(pivot >= 1 && pivot <= n - 1, "pivot must be in 1..n-1");
    return generate_impl(P, n, pivot);
}

ExchangeLaurent exchange_laurent(const Seed& s, int i) {
    require(i >= 0 && i < s.n, "exchange_laurent: index out of range");
    ExchangeLaurent out;
    out.base = i;
    out.exponents.assign(static_cast<std::size_t>(s.n), 0);
    const LaurentPoly& Pi = s.polys[static_cast<std::size_t>(i)];
    const int fresh = s.n;
    Monomial adj;
    for (int j = 0; j < s.n; ++j) {
        if (j == i || !Pi.depends_on(j)) continue;
        const LaurentPoly& Pj = s.polys[static_cast<std::size_t>(j)];
        LaurentPoly substituted = substitute_ratio(Pi, j, Pj, fresh);
        LaurentPoly numerator = strip_units(substituted).core;
        int m = multiplicity(numerator, strip_units(Pj).core);
        out.exponents[static_cast<std::size_t>(j)] = -m;
        if (m != 0) adj = adj * Monomial::variable(j, -m);
    }
    out.value = Pi * adj;
    return out;
}

MutationResult mutate(const Seed& s, int k) {
    validate_seed_hard(s);
    require(k >= 0 && k < s.n, "mutate: index out of range");
    MutationResult out;
    out.hat = exchange_laurent(s, k);
    {
        std::ostringstream os;
        os << "hat(P_" << k << ")/x_" << k;
        out.new_var_expr = os.str();
    }
    out.seed.n = s.n;
    out.seed.polys.assign(static_cast<std::size_t>(s.n), LaurentPoly{});
    out.seed.polys[static_cast<std::size_t>(k)] =
        s.polys[static_cast<std::size_t>(k)];
    for (int j = 0; j < s.n; ++j) {
        if (j == k) continue;
        const LaurentPoly& Pj = s.polys[static_cast<std::size_t>(j)];
        if (!Pj.depends_on(k)) {
            out.seed.polys[static_cast<std::size_t>(j)] = Pj;
            continue;
        }
        if (out.hat.exponents[static_cast<std::size_t>(j)] < 0)
            throw std::invalid_argument("mutate: Laurent pole at zero in hat(P_k)");
        LaurentPoly Sj = substitute(out.hat.value, j, LaurentPoly{});
        if (Sj.is_zero()) throw std::invalid_argument("mutate: degenerate mutation");
        LaurentPoly g = substitute_ratio(Pj, k, Sj, s.n);
        LaurentPoly numerator = strip_units(g).core;
        LaurentPoly h = strip_common_factors(std::move(numerator), Sj);
        LaurentPoly core = strip_units(h).core;
        // the temporary x_n is the fresh cluster variable; store it at k
        std::vector<Term> ts;
        ts.reserve(core.terms().size());
        for (auto& t : core.terms())
            ts.push_back(
                {t.mono.remapped([&](int v) { return v == s.n ? k : v; }),
                 t.coeff});
        out.seed.polys[static_cast<std::size_t>(j)] =
            LaurentPoly::from_terms(std::move(ts));
    }
    return out;
}

PeriodReport is_period1(const LaurentPoly& P, int n, int pivot) {
    PeriodReport rep;
    try {
        validate_generator(P, n);
        if (pivot < 0) pivot = default_pivot(n);
        require(pivot >= 1 && pivot <= n - 1, "pivot must be in 1..n-1");
    } catch (const std::invalid_argument& e) {
        rep.verdict = Verdict::NotPeriod1;
        rep.stage = -1;
        rep.detail = std::string("invalid generator: ") + e.what();
        return rep;
    }
    int probe_m = -1;
    if (ones_probe_rejects(P, n, probe_m)) {
        rep.verdict = Verdict::NotPeriod1;
        rep.stage = -1;
        std::ostringstream os;
        os << "all-ones sequence leaves the integers at m = " << probe_m;
        rep.detail = os.str();
        return rep;
    }
    GenerateResult gen = generate_impl(P, n, pivot);
    if (!gen.pseudoperiod_ok) {
        rep.verdict = Verdict::NotPeriod1;
        rep.stage = gen.fail_stage;
        rep.detail = gen.detail;
        return rep;
    }
    for (int i = 0; i < gen.seed.n; ++i) {
        if (gen.seed.polys[static_cast<std::size_t>(i)].depends_on(i)) {
            rep.verdict = Verdict::NotPeriod1;
            rep.stage = i;
            rep.detail = "LP2 violation in generated seed";
            return rep;
        }
    }
    rep.seed = std::move(gen.seed);
    const Seed& made = *rep.seed;
    bool dependency_ok = true;
    for (int j = 1; j < n; ++j)
        if (P.depends_on(j) &&
            !made.polys[static_cast<std::size_t>(j)].depends_on(0))
            dependency_ok = false;
    if (dependency_ok) {
        rep.hat_condition = HatCondition::ByDependency;
        rep.verdict = Verdict::Period1;
        return rep;
    }
    bool counts_ok = true;
    std::size_t d = made.polys[0].num_terms();
    for (auto& p : made.polys)
        if (p.num_terms() != d) counts_ok = false;
    if (counts_ok) {
        rep.hat_condition = HatCondition::ByTermCount;
        rep.verdict = Verdict::Period1;
        return rep;
    }
    ExchangeLaurent hat = exchange_laurent(made, 0);
    if (hat.is_trivial()) {
        rep.hat_condition = HatCondition::ByDirectComputation;
        rep.verdict = Verdict::Period1;
        return rep;
    }
    rep.hat_condition = HatCondition::Failed;
    rep.verdict = Verdict::Undetermined;
    rep.detail = "pseudoperiod holds but hat(P_0) != P_0";
    return rep;
}

bool verify_period1_by_mutation(const Seed& s) {
    MutationResult m = mutate(s, 0);
    // Sliding-window comparison: P_i is the downshift of P'_{i+1}, with the
    // fresh variable (stored at index 0) in the role of x_n.
    auto rotate_down = [&](const LaurentPoly& p) {
        std::vector<Term> ts;
        ts.reserve(p.terms().size());
        for (auto& t : p.terms())
            ts.push_back({t.mono.remapped(
                              [&](int v) { return v == 0 ? s.n - 1 : v - 1; }),
                          t.coeff});
        return LaurentPoly::from_terms(std::move(ts));
    };
    for (int i = 0; i < s.n; ++i) {
        const LaurentPoly& expected = s.polys[static_cast<std::size_t>(i)];
        const LaurentPoly& next =
            m.seed.polys[static_cast<std::size_t>((i + 1) % s.n)];
        if (!equal_up_to_sign(expected, rotate_down(next))) return false;
    }
    return true;
}

}  // namespace lp
