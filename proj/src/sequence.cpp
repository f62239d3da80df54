#include "lp/sequence.hpp"

#include <sstream>

namespace lp {

namespace {

void need(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

void validate_recurrence_poly(const LaurentPoly& P, int n) {
    need(n >= 2, "sequence: n >= 2 required");
    need(!P.is_zero(), "sequence: P must be nonzero");
    need(P.is_polynomial(), "sequence: P must be an ordinary polynomial");
    for (int v : P.variables())
        need(v >= 1 && v < n, "sequence: P must live in Z[x1..x(n-1)]");
}

/// P(w[1], .., w[n-1]) with exact Laurent-polynomial window entries.
LaurentPoly eval_window(const LaurentPoly& P, const std::vector<LaurentPoly>& w,
                        std::size_t budget) {
    std::vector<std::vector<LaurentPoly>> powers(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) powers[i].push_back(LaurentPoly(1L));
    LaurentPoly acc;
    for (auto& t : P.terms()) {
        LaurentPoly prod(t.coeff);
        for (auto& [v, e] : t.mono.entries()) {
            auto& pw = powers[static_cast<std::size_t>(v)];
            const std::size_t pair_cap = 300000000;
            while (static_cast<int>(pw.size()) <= e) {
                if (pw.back().num_terms() * w[static_cast<std::size_t>(v)].num_terms() >
                    pair_cap)
                    throw TermBudgetExceeded("term budget exceeded while powering");
                pw.push_back(pw.back() * w[static_cast<std::size_t>(v)]);
                if (pw.back().num_terms() > budget)
                    throw TermBudgetExceeded("term budget exceeded while powering");
            }
            if (prod.num_terms() * pw[static_cast<std::size_t>(e)].num_terms() >
                pair_cap)
                throw TermBudgetExceeded("term budget exceeded in evaluation");
            prod = prod * pw[static_cast<std::size_t>(e)];
            if (prod.num_terms() > budget)
                throw TermBudgetExceeded("term budget exceeded in evaluation");
        }
        acc += prod;
        if (acc.num_terms() > budget)
            throw TermBudgetExceeded("term budget exceeded in evaluation");
    }
    return acc;
}

}  // namespace

SymbolicState make_symbolic_state(const LaurentPoly& P, int n,
                                  std::size_t term_budget) {
    validate_recurrence_poly(P, n);
    SymbolicState st;
    st.P = P;
    st.n = n;
    st.term_budget = term_budget;
    for (int i = 0; i < n; ++i) st.window.push_back(LaurentPoly::variable(i));
    return st;
}

SymbolicStep step_symbolic(SymbolicState& state) {
    SymbolicStep out;
    LaurentPoly value = eval_window(state.P, state.window, state.term_budget);
    auto quotient = exact_div(value, state.window[0]);
    if (!quotient) {
        out.violation_at = state.m;
        out.numerator = std::move(value);
        return out;
    }
    if (quotient->num_terms() > state.term_budget)
        throw TermBudgetExceeded("term budget exceeded");
    state.window.erase(state.window.begin());
    state.window.push_back(*quotient);
    ++state.m;
    out.term = std::move(*quotient);
    return out;
}

std::vector<LaurentPoly> symbolic_terms(const LaurentPoly& P, int n, int count,
                                        std::size_t term_budget) {
    SymbolicState st = make_symbolic_state(P, n, term_budget);
    std::vector<LaurentPoly> terms;
    for (int i = 0; i < n && i < count; ++i)
        terms.push_back(LaurentPoly::variable(i));
    while (static_cast<int>(terms.size()) < count) {
        SymbolicStep step = step_symbolic(st);
        if (!step.term) {
            std::ostringstream os;
            os << "Laurent violation at m = " << step.violation_at;
            throw std::runtime_error(os.str());
        }
        terms.push_back(*step.term);
    }
    return terms;
}

NumericState make_numeric_state(const LaurentPoly& P, int n,
                                const std::vector<Rat>& initial) {
    validate_recurrence_poly(P, n);
    need(static_cast<int>(initial.size()) == n,
         "sequence: initial window must have n entries");
    NumericState st;
    st.P = P;
    st.n = n;
    st.window = initial;
    return st;
}

NumericStep step_numeric(NumericState& state) {
    NumericStep out;
    if (state.window[0] == 0) {
        out.singularity_at = state.m;
        return out;
    }
    Rat value(0);
    // evaluate P at window positions 1..n-1
    std::vector<Rat> at(static_cast<std::size_t>(state.n), Rat(0));
    for (int i = 1; i < state.n; ++i)
        at[static_cast<std::size_t>(i)] = state.window[static_cast<std::size_t>(i)];
    value = state.P.evaluate(at);
    value /= state.window[0];
    value.canonicalize();
    state.window.erase(state.window.begin());
    state.window.push_back(value);
    ++state.m;
    out.term = std::move(value);
    return out;
}

std::vector<Rat> numeric_terms(const LaurentPoly& P, int n,
                               const std::vector<Rat>& initial, int count) {
    NumericState st = make_numeric_state(P, n, initial);
    std::vector<Rat> terms;
    for (int i = 0; i < n && i < count; ++i)
        terms.push_back(initial[static_cast<std::size_t>(i)]);
    while (static_cast<int>(terms.size()) < count) {
        NumericStep step = step_numeric(st);
        if (!step.term) {
            std::ostringstream os;
            os << "singularity at m = " << step.singularity_at;
            throw std::runtime_error(os.str());
        }
        terms.push_back(*step.term);
    }
    return terms;
}

// ---- invariants ----------------------------------------------------------

namespace {

struct JPair {
    LaurentPoly num, den;
};

long k_period_of(const InvariantSpec& s) {
    switch (s.family) {
        case InvariantFamily::SymmetricSecondPowers:
        case InvariantFamily::Jumping:
            return 1;
        case InvariantFamily::SinkBinomial:
            return s.n - s.k;
        case InvariantFamily::Extreme:
            return s.n - 1;
        case InvariantFamily::Chain:
        case InvariantFamily::MultilinearSymmetric:
            return 2;
    }
    return 0;
}

void validate_spec(const InvariantSpec& s) {
    need(s.n >= 2, "invariant: n >= 2 required");
    switch (s.family) {
        case InvariantFamily::SymmetricSecondPowers:
            need(s.n >= 3, "invariant: n >= 3 required");
            break;
        case InvariantFamily::Jumping:
            need(s.r >= 1 && s.n >= 2 * s.r + 1 && (s.n - 1) % s.r == 0,
                 "invariant: jumping needs n >= 2r+1 and n = 1 (mod r)");
            break;
        case InvariantFamily::SinkBinomial:
            need(s.k >= 1 && s.k < s.n && 2 * s.k != s.n,
                 "invariant: sink binomial needs 0 < k < n, 2k != n");
            break;
        case InvariantFamily::Extreme:
            need(s.n >= 3, "invariant: n >= 3 required");
            break;
        case InvariantFamily::Chain:
        case InvariantFamily::MultilinearSymmetric:
            need(s.n > 2 && s.n % 2 == 1, "invariant: odd n > 2 required");
            break;
    }
}

/// How far past m the J and the linearized recurrence look.
long lookahead(const InvariantSpec& s) {
    switch (s.family) {
        case InvariantFamily::SymmetricSecondPowers: return s.n;
        case InvariantFamily::Jumping: return s.n + s.r;
        case InvariantFamily::SinkBinomial: return 2 * s.k;
        case InvariantFamily::Extreme: return 2;
        case InvariantFamily::Chain: return s.n - 1;
        case InvariantFamily::MultilinearSymmetric: return s.n - 1;
    }
    return s.n;
}

JPair J_at(const InvariantSpec& s, const std::vector<LaurentPoly>& t, long m) {
    auto idx = [&](long i) { return t[static_cast<std::size_t>(i)]; };
    LaurentPoly A(s.A + s.J_A_offset);
    JPair out;
    switch (s.family) {
        case InvariantFamily::SymmetricSecondPowers: {
            LaurentPoly num(s.B);
            LaurentPoly den(1L);
            for (long i = 0; i < s.n; ++i) {
                num += idx(m + i) * idx(m + i) + A * idx(m + i);
                den = den * idx(m + i);
            }
            out = {num, den};
            break;
        }
        case InvariantFamily::Jumping: {
            LaurentPoly num = idx(m + 1) + idx(m + s.n + s.r);
            LaurentPoly den(1L);
            for (long i = s.r + 1; i <= s.n; ++i) den = den * idx(m + i);
            out = {num, den};
            break;
        }
        case InvariantFamily::SinkBinomial:
            out = {idx(m) + idx(m + 2 * s.k), idx(m + s.k)};
            break;
        case InvariantFamily::Extreme:
            out = {idx(m + 2) + idx(m) + A, idx(m + 1)};
            break;
        case InvariantFamily::Chain: {
            LaurentPoly den(1L);
            for (long i = 0; i <= (s.n - 3) / 2; ++i) den = den * idx(m + 2 * i + 1);
            out = {idx(m + s.n - 1) + idx(m) + A, den};
            break;
        }
        case InvariantFamily::MultilinearSymmetric: {
            LaurentPoly num = A;
            LaurentPoly den(1L);
            for (long i = 0; i < s.n; ++i) num += idx(m + i);
            for (long i = 0; i <= (s.n - 3) / 2; ++i) den = den * idx(m + 2 * i + 1);
            out = {num, den};
            break;
        }
    }
    return out;
}


std::pair<Rat, Rat> rat_J(const InvariantSpec& s, const std::vector<Rat>& t, long m) {
    auto v = [&](long i) { return t[static_cast<std::size_t>(i)]; };
    Rat A(s.A + s.J_A_offset);
    switch (s.family) {
        case InvariantFamily::SymmetricSecondPowers: {
            Rat num(s.B);
            Rat den(1);
            for (long i = 0; i < s.n; ++i) {
                num += v(m + i) * v(m + i) + A * v(m + i);
                den *= v(m + i);
            }
            return {num, den};
        }
        case InvariantFamily::Jumping: {
            Rat num = v(m + 1) + v(m + s.n + s.r);
            Rat den(1);
            for (long i = s.r + 1; i <= s.n; ++i) den *= v(m + i);
            return {num, den};
        }
        case InvariantFamily::SinkBinomial:
            return {v(m) + v(m + 2 * s.k), v(m + s.k)};
        case InvariantFamily::Extreme:
            return {v(m + 2) + v(m) + A, v(m + 1)};
        case InvariantFamily::Chain: {
            Rat den(1);
            for (long i = 0; i <= (s.n - 3) / 2; ++i) den *= v(m + 2 * i + 1);
            return {v(m + s.n - 1) + v(m) + A, den};
        }
        case InvariantFamily::MultilinearSymmetric: {
            Rat num = A;
            Rat den(1);
            for (long i = 0; i < s.n; ++i) num += v(m + i);
            for (long i = 0; i <= (s.n - 3) / 2; ++i) den *= v(m + 2 * i + 1);
            return {num, den};
        }
    }
    return {Rat(0), Rat(1)};
}
}  // namespace

LaurentPoly invariant_polynomial(const InvariantSpec& s) {
    validate_spec(s);
    LaurentPoly P;
    auto var = [](long v) { return LaurentPoly::variable(static_cast<int>(v)); };
    switch (s.family) {
        case InvariantFamily::SymmetricSecondPowers: {
            P = LaurentPoly(s.B);
            for (long i = 1; i < s.n; ++i)
                P += var(i) * var(i) + var(i) * Int(s.A);
            break;
        }
        case InvariantFamily::Jumping: {
            P = LaurentPoly(s.A);
            for (long i = 0; i <= (s.n - 1) / s.r - 1; ++i)
                P += var(s.r * i + 1) * var(s.r * i + s.r);
            break;
        }
        case InvariantFamily::SinkBinomial:
            P = var(s.k) * var(s.n - s.k) + LaurentPoly(1L);
            break;
        case InvariantFamily::Extreme: {
            P = var(1) * var(s.n - 1) + LaurentPoly(s.B);
            for (long i = 1; i < s.n; ++i) P += var(i) * Int(s.A);
            break;
        }
        case InvariantFamily::Chain: {
            P = LaurentPoly(s.B);
            for (long i = 1; i <= s.n - 2; ++i) P += var(i) * var(i + 1);
            for (long i = 1; i < s.n; ++i) P += var(i) * Int(s.A);
            break;
        }
        case InvariantFamily::MultilinearSymmetric: {
            P = LaurentPoly(s.B);
            for (long i = 1; i < s.n; ++i)
                for (long j = i + 1; j < s.n; ++j) P += var(i) * var(j);
            for (long i = 1; i < s.n; ++i) P += var(i) * Int(s.A);
            break;
        }
    }
    return P;
}

InvariantReport check_invariant(const InvariantSpec& spec, int horizon) {
    validate_spec(spec);
    InvariantReport rep;
    rep.k_period = k_period_of(spec);
    LaurentPoly P = invariant_polynomial(spec);
    // Algebraic check on a formal window: the window terms of the sequence
    // are algebraically independent, so the cross-multiplied identity in
    // window variables is exactly the identity J_{m+k} = J_m for every m.
    int count = static_cast<int>(lookahead(spec) + rep.k_period) + 1;
    std::vector<LaurentPoly> t;
    {
        SymbolicState st = make_symbolic_state(P, spec.n);
        for (int i = 0; i < spec.n; ++i) t.push_back(LaurentPoly::variable(i));
        while (static_cast<int>(t.size()) < count) {
            SymbolicStep step = step_symbolic(st);
            if (!step.term) {
                rep.ok = false;
                rep.detail = "sequence is not Laurent";
                return rep;
            }
            t.push_back(*step.term);
        }
    }
    {
        JPair a = J_at(spec, t, 0);
        JPair b = J_at(spec, t, rep.k_period);
        if (!(a.num * b.den == b.num * a.den)) {
            rep.ok = false;
            rep.first_failure_m = 0;
            rep.detail = "J_{m+k} != J_m";
            return rep;
        }
    }
    // Exact rational verification across the horizon for every m <= T - k.
    std::vector<Rat> nt;
    {
        NumericState st = make_numeric_state(
            P, spec.n, std::vector<Rat>(static_cast<std::size_t>(spec.n), Rat(1)));
        for (int i = 0; i < spec.n; ++i) nt.emplace_back(1);
        int total = horizon + static_cast<int>(lookahead(spec) + rep.k_period) + 1;
        while (static_cast<int>(nt.size()) < total) {
            NumericStep step = step_numeric(st);
            if (!step.term) {
                rep.ok = false;
                rep.detail = "all-ones sequence hit a singularity";
                rep.first_failure_m = static_cast<int>(step.singularity_at);
                return rep;
            }
            nt.push_back(*step.term);
        }
    }
    for (long m = 0; m + rep.k_period <= horizon; ++m) {
        auto a = rat_J(spec, nt, m);
        auto b = rat_J(spec, nt, m + rep.k_period);
        if (a.first * b.second != b.first * a.second) {
            rep.ok = false;
            rep.first_failure_m = static_cast<int>(m);
            rep.detail = "J_{m+k} != J_m at the all-ones point";
            return rep;
        }
    }
    rep.ok = true;
    return rep;
}

InvariantReport check_multilinearization(const InvariantSpec& spec, int horizon) {
    validate_spec(spec);
    InvariantReport rep;
    rep.k_period = k_period_of(spec);
    LaurentPoly P = invariant_polynomial(spec);
    int count = static_cast<int>(lookahead(spec) + rep.k_period) + 1;
    std::vector<LaurentPoly> t;
    {
        SymbolicState st = make_symbolic_state(P, spec.n);
        for (int i = 0; i < spec.n; ++i) t.push_back(LaurentPoly::variable(i));
        while (static_cast<int>(t.size()) < count) {
            SymbolicStep step = step_symbolic(st);
            if (!step.term) {
                rep.ok = false;
                rep.detail = "sequence is not Laurent";
                return rep;
            }
            t.push_back(*step.term);
        }
    }
    auto idx = [&](long i) { return t[static_cast<std::size_t>(i)]; };
    LaurentPoly A(spec.A);
    // Algebraic check of the displayed identity at the window origin, with J
    // taken from the window itself.
    auto identity_holds = [&](const JPair& j, long m) {
        LaurentPoly lhs, rhs;
        switch (spec.family) {
            case InvariantFamily::SymmetricSecondPowers: {
                LaurentPoly prod(1L);
                for (long i = 1; i < spec.n; ++i) prod = prod * idx(m + i);
                lhs = j.den * idx(m + spec.n);
                rhs = j.num * prod - j.den * idx(m) - j.den * A;
                break;
            }
            case InvariantFamily::Jumping: {
                LaurentPoly prod(1L);
                for (long i = spec.r + 1; i <= spec.n; ++i) prod = prod * idx(m + i);
                lhs = j.den * idx(m + spec.n + spec.r);
                rhs = j.num * prod - j.den * idx(m + 1);
                break;
            }
            case InvariantFamily::SinkBinomial:
                lhs = j.den * idx(m + 2 * spec.k);
                rhs = j.num * idx(m + spec.k) - j.den * idx(m);
                break;
            case InvariantFamily::Extreme:
                lhs = j.den * idx(m + 2);
                rhs = j.num * idx(m + 1) - j.den * idx(m) - j.den * A;
                break;
            case InvariantFamily::Chain: {
                LaurentPoly prod(1L);
                for (long i = 0; i <= (spec.n - 3) / 2; ++i)
                    prod = prod * idx(m + 2 * i + 1);
                lhs = j.den * idx(m + spec.n - 1);
                rhs = j.num * prod - j.den * idx(m) - j.den * A;
                break;
            }
            case InvariantFamily::MultilinearSymmetric: {
                LaurentPoly prod(1L);
                LaurentPoly sum;
                for (long i = 0; i <= (spec.n - 3) / 2; ++i)
                    prod = prod * idx(m + 2 * i + 1);
                for (long i = 0; i <= spec.n - 2; ++i) sum += idx(m + i);
                lhs = j.den * idx(m + spec.n - 1);
                rhs = j.num * prod - j.den * sum - j.den * A;
                break;
            }
        }
        return lhs == rhs;
    };
    if (!identity_holds(J_at(spec, t, 0), 0)) {
        rep.ok = false;
        rep.first_failure_m = 0;
        rep.detail = "linearized recurrence identity failed";
        return rep;
    }
    // Exact rational verification for every m <= horizon, with J (or the
    // J_i) evaluated once at the initial all-ones window as displayed.
    std::vector<Rat> nt;
    {
        NumericState st = make_numeric_state(
            P, spec.n, std::vector<Rat>(static_cast<std::size_t>(spec.n), Rat(1)));
        for (int i = 0; i < spec.n; ++i) nt.emplace_back(1);
        int total = horizon + static_cast<int>(lookahead(spec) + rep.k_period) + 1;
        while (static_cast<int>(nt.size()) < total) {
            NumericStep step = step_numeric(st);
            if (!step.term) {
                rep.ok = false;
                rep.detail = "all-ones sequence hit a singularity";
                rep.first_failure_m = static_cast<int>(step.singularity_at);
                return rep;
            }
            nt.push_back(*step.term);
        }
    }
    std::vector<std::pair<Rat, Rat>> J0;
    for (long i = 0; i < rep.k_period; ++i) J0.push_back(rat_J(spec, nt, i));
    auto v = [&](long i) { return nt[static_cast<std::size_t>(i)]; };
    for (long m = 0; m <= horizon; ++m) {
        auto& j = J0[static_cast<std::size_t>(m % rep.k_period)];
        Rat lhs, rhs;
        Rat Ar(spec.A);
        switch (spec.family) {
            case InvariantFamily::SymmetricSecondPowers: {
                Rat prod(1);
                for (long i = 1; i < spec.n; ++i) prod *= v(m + i);
                lhs = j.second * v(m + spec.n);
                rhs = j.first * prod - j.second * v(m) - j.second * Ar;
                break;
            }
            case InvariantFamily::Jumping: {
                Rat prod(1);
                for (long i = spec.r + 1; i <= spec.n; ++i) prod *= v(m + i);
                lhs = j.second * v(m + spec.n + spec.r);
                rhs = j.first * prod - j.second * v(m + 1);
                break;
            }
            case InvariantFamily::SinkBinomial:
                lhs = j.second * v(m + 2 * spec.k);
                rhs = j.first * v(m + spec.k) - j.second * v(m);
                break;
            case InvariantFamily::Extreme:
                lhs = j.second * v(m + 2);
                rhs = j.first * v(m + 1) - j.second * v(m) - j.second * Ar;
                break;
            case InvariantFamily::Chain: {
                Rat prod(1);
                for (long i = 0; i <= (spec.n - 3) / 2; ++i) prod *= v(m + 2 * i + 1);
                lhs = j.second * v(m + spec.n - 1);
                rhs = j.first * prod - j.second * v(m) - j.second * Ar;
                break;
            }
            case InvariantFamily::MultilinearSymmetric: {
                Rat prod(1);
                Rat sum(0);
                for (long i = 0; i <= (spec.n - 3) / 2; ++i) prod *= v(m + 2 * i + 1);
                for (long i = 0; i <= spec.n - 2; ++i) sum += v(m + i);
                lhs = j.second * v(m + spec.n - 1);
                rhs = j.first * prod - j.second * sum - j.second * Ar;
                break;
            }
        }
        if (lhs != rhs) {
            rep.ok = false;
            rep.first_failure_m = static_cast<int>(m);
            rep.detail = "linearized recurrence identity failed";
            return rep;
        }
    }
    rep.ok = true;
    return rep;
}

}  // namespace lp
