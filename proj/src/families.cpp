#include "lp/families.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace lp {

namespace {

void need(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

LaurentPoly mono(std::initializer_list<std::pair<int, int>> ve, long c = 1) {
    Monomial::Storage st;
    for (auto& [v, e] : ve)
        if (e != 0) st.emplace_back(v, e);
    std::sort(st.begin(), st.end());
    // merge duplicates (x_a x_b with a == b)
    Monomial::Storage merged;
    for (auto& [v, e] : st) {
        if (!merged.empty() && merged.back().first == v)
            merged.back().second += e;
        else
            merged.emplace_back(v, e);
    }
    return LaurentPoly::term(Monomial::from_entries(std::move(merged)), Int(c));
}

LaurentPoly var(int v) { return LaurentPoly::variable(v); }

/// Elementary symmetric polynomial E_k over the given variables.
LaurentPoly elementary_symmetric(const std::vector<int>& vars, int k) {
    std::vector<LaurentPoly> e(static_cast<std::size_t>(k) + 1);
    e[0] = LaurentPoly(1L);
    for (int v : vars)
        for (int j = k; j >= 1; --j)
            e[static_cast<std::size_t>(j)] +=
                e[static_cast<std::size_t>(j - 1)] * var(v);
    return e[static_cast<std::size_t>(k)];
}

std::vector<int> window_vars(int n) {
    std::vector<int> vs;
    for (int i = 0; i < n; ++i) vs.push_back(i);
    return vs;
}

std::vector<int> tail_vars(int n) {
    std::vector<int> vs;
    for (int i = 1; i < n; ++i) vs.push_back(i);
    return vs;
}

void validate_built(const LaurentPoly& p, int n, const char* family) {
    std::ostringstream os;
    os << family << ": ";
    need(!p.is_zero(), os.str() + "polynomial is zero");
    need(!p.is_constant(), os.str() + "polynomial is constant");
    for (int v : p.variables()) {
        need(v >= 1 && v < n, os.str() + "variable outside x1..x(n-1)");
        need(p.min_exponent_in(v) == 0,
             os.str() + "polynomial divisible by a variable");
    }
}

void validate_flip_vector(const std::vector<long>& e, int n, const char* who) {
    std::ostringstream os;
    os << who << ": ";
    need(static_cast<int>(e.size()) == n - 1,
         os.str() + "exponent vector must have length n-1");
    bool any = false;
    for (int i = 1; i <= n - 1; ++i) {
        long ei = e[static_cast<std::size_t>(i - 1)];
        long er = e[static_cast<std::size_t>(n - i - 1)];
        if (ei != 0) any = true;
        need((ei == 0) == (er == 0),
             os.str() + "support must satisfy i in S iff n-i in S");
        if (ei != 0)
            need((ei > 0) == (er > 0),
                 os.str() + "i and n-i must lie on the same side");
    }
    need(any, os.str() + "exponent vector is zero");
}

LaurentPoly flip_binomial_from_vector(const std::vector<long>& row) {
    Monomial::Storage pos, neg;
    for (std::size_t j = 0; j < row.size(); ++j) {
        if (row[j] > 0) pos.emplace_back(static_cast<int>(j), static_cast<int>(row[j]));
        if (row[j] < 0) neg.emplace_back(static_cast<int>(j), static_cast<int>(-row[j]));
    }
    return LaurentPoly::term(Monomial::from_entries(std::move(pos)), Int(1)) +
           LaurentPoly::term(Monomial::from_entries(std::move(neg)), Int(1));
}

/// Row i of the period-1 B-matrix determined by row 0 (the mutual
/// recursion); rows may come out negated, which leaves the attached
/// binomial unchanged.
std::vector<std::vector<long>> flip_rows(const std::vector<long>& a, int n) {
    std::vector<std::vector<long>> rows(static_cast<std::size_t>(n),
                                        std::vector<long>(static_cast<std::size_t>(n), 0));
    rows[0] = a;
    for (int i = 1; i < n; ++i) {
        auto& row = rows[static_cast<std::size_t>(i)];
        auto& prev = rows[static_cast<std::size_t>(i - 1)];
        row[0] = -a[static_cast<std::size_t>(n - i)];
        for (int j = 1; j < n; ++j) {
            long corr = 0;
            if (a[static_cast<std::size_t>(i)] * a[static_cast<std::size_t>(j)] < 0)
                corr = a[static_cast<std::size_t>(n - i)] *
                       std::labs(a[static_cast<std::size_t>(j)]);
            row[static_cast<std::size_t>(j)] =
                prev[static_cast<std::size_t>(j - 1)] + corr;
        }
    }
    return rows;
}

LaurentPoly strip_poly(const LaurentPoly& p) {
    return p.is_zero() ? p : strip_units(p).core;
}

LaurentPoly reflect_window(const LaurentPoly& p, int n) {
    std::vector<Term> ts;
    ts.reserve(p.terms().size());
    for (auto& t : p.terms())
        ts.push_back({t.mono.remapped([&](int v) { return n - 1 - v; }), t.coeff});
    return LaurentPoly::from_terms(std::move(ts));
}

// ---- jumping / hopping shared machinery --------------------------------

struct HopParams {
    int n;
    long r;
    long cross;  // coefficient of the x_{ri+r} x_{ri+r+1} pairs (0 = jumping)
    long constant;
};

LaurentPoly hop_F(const HopParams& hp, long a) {
    LaurentPoly out(hp.constant);
    long count = (hp.n - a) / hp.r;  // floor
    for (long k = 0; k < count; ++k)
        out += mono({{static_cast<int>(a + hp.r * k), 1},
                     {static_cast<int>(a + hp.r * k + hp.r - 1), 1}});
    if (hp.cross != 0)
        for (long k = 0; a + hp.r * k + hp.r <= hp.n - 1; ++k)
            out += mono({{static_cast<int>(a + hp.r * k + hp.r - 1), 1},
                         {static_cast<int>(a + hp.r * k + hp.r), 1}},
                        hp.cross);
    return out;
}

LaurentPoly hop_row(const HopParams& hp, int j) {
    const long r = hp.r;
    const int n = hp.n;
    if (j >= r - 1 && j <= n - r) {
        LaurentPoly sum;
        for (long i = 1; i <= r; ++i) {
            LaurentPoly weight(1L);
            for (long k = 0; k <= r - 1 - i; ++k) weight = weight * var(static_cast<int>(k));
            for (long k = 0; k <= i - 2; ++k)
                weight = weight * var(static_cast<int>(n - k - 1));
            long f_index = (r - i + 1) % r;
            sum += weight * hop_F(hp, f_index);
            if (i == 1 && hp.cross != 0)
                // wrap-around cross pair of the full-window pattern
                sum += weight *
                       mono({{static_cast<int>(r - 1), 1}, {n - 1, 1}}, hp.cross);
        }
        return strip_poly(substitute(sum, j, LaurentPoly{}));
    }
    // 1 <= j <= r-2
    LaurentPoly sum;
    for (long i = 1; i <= j + 1; ++i) {
        LaurentPoly weight(1L);
        for (long k = 0; k <= j - i; ++k) weight = weight * var(static_cast<int>(k));
        for (long k = 0; k <= i - 2; ++k)
            weight = weight * var(static_cast<int>(n - r + j - k));
        sum += weight * hop_F(hp, j + 2 - i);
    }
    return strip_poly(substitute(sum, j, LaurentPoly{}));
}

Seed hop_expected(const HopParams& hp, const LaurentPoly& P) {
    Seed s;
    s.n = hp.n;
    s.polys.assign(static_cast<std::size_t>(hp.n), LaurentPoly{});
    s.polys[0] = P;
    s.polys[static_cast<std::size_t>(hp.n - 1)] = shift(P, -1);
    for (int j = static_cast<int>(hp.r) - 1; j <= hp.n - static_cast<int>(hp.r); ++j)
        if (j >= 1 && j <= hp.n - 2)
            s.polys[static_cast<std::size_t>(j)] = hop_row(hp, j);
    for (int j = 1; j <= static_cast<int>(hp.r) - 2; ++j) {
        LaurentPoly row = hop_row(hp, j);
        s.polys[static_cast<std::size_t>(j)] = row;
        s.polys[static_cast<std::size_t>(hp.n - 1 - j)] = reflect_window(row, hp.n);
    }
    return s;
}

// ---- little pi / pi ------------------------------------------------------

/// Fill the non-special rows by upshifting the closest special row below.
Seed fill_by_upshift(int n, const LaurentPoly& P0,
                     const std::vector<std::pair<int, LaurentPoly>>& special) {
    Seed s;
    s.n = n;
    s.polys.assign(static_cast<std::size_t>(n), LaurentPoly{});
    std::vector<std::pair<int, LaurentPoly>> anchors = special;
    anchors.emplace_back(0, P0);
    std::sort(anchors.begin(), anchors.end(),
              [](auto& a, auto& b) { return a.first < b.first; });
    for (int i = 0; i < n; ++i) {
        std::pair<int, LaurentPoly> const* best = nullptr;
        for (auto& a : anchors)
            if (a.first <= i) best = &a;
        LaurentPoly p = best->second;
        for (int step = 0; step < i - best->first; ++step) p = shift(p, 1);
        s.polys[static_cast<std::size_t>(i)] = strip_poly(p);
    }
    return s;
}

}  // namespace

const char* family_name(Family f) {
    switch (f) {
        case Family::SymmetricSecondPowers: return "symmetric-second-powers";
        case Family::SinkBinomial: return "sink-binomial";
        case Family::Extreme: return "extreme";
        case Family::Singleton: return "singleton";
        case Family::Chain: return "chain";
        case Family::MultilinearSymmetric: return "multilinear-symmetric";
        case Family::Jumping: return "jumping";
        case Family::Hopping: return "hopping";
        case Family::FlipSymmetric: return "flip-symmetric";
        case Family::Balanced: return "balanced";
        case Family::VectorSum: return "vector-sum";
        case Family::LittlePi: return "little-pi";
        case Family::Pi: return "pi";
        case Family::GaleRobinson: return "gale-robinson";
    }
    return "?";
}

std::optional<Family> family_from_name(const std::string& name) {
    static const std::pair<const char*, Family> table[] = {
        {"symmetric-second-powers", Family::SymmetricSecondPowers},
        {"sink-binomial", Family::SinkBinomial},
        {"extreme", Family::Extreme},
        {"singleton", Family::Singleton},
        {"chain", Family::Chain},
        {"multilinear-symmetric", Family::MultilinearSymmetric},
        {"jumping", Family::Jumping},
        {"hopping", Family::Hopping},
        {"flip-symmetric", Family::FlipSymmetric},
        {"balanced", Family::Balanced},
        {"vector-sum", Family::VectorSum},
        {"little-pi", Family::LittlePi},
        {"pi", Family::Pi},
        {"gale-robinson", Family::GaleRobinson},
    };
    for (auto& [k, v] : table)
        if (name == k) return v;
    return std::nullopt;
}

LaurentPoly build(const FamilySpec& spec) {
    const int n = spec.n;
    LaurentPoly P;
    switch (spec.family) {
        case Family::SymmetricSecondPowers: {
            need(n >= 2, "symmetric-second-powers: n >= 2 required");
            need(static_cast<int>(spec.elem.size()) <= n - 1,
                 "symmetric-second-powers: too many elementary coefficients");
            for (int i = 1; i < n; ++i) P += mono({{i, 2}});
            auto vars = tail_vars(n);
            for (std::size_t k = 0; k < spec.elem.size(); ++k)
                if (spec.elem[k] != 0)
                    P += elementary_symmetric(vars, static_cast<int>(k) + 1) *
                         Int(spec.elem[k]);
            P += LaurentPoly(spec.B);
            break;
        }
        case Family::SinkBinomial: {
            need(static_cast<int>(spec.exps.size()) == n - 1,
                 "sink-binomial: exponent vector must have length n-1");
            bool any = false;
            for (int i = 1; i <= n - 1; ++i) {
                long a = spec.exps[static_cast<std::size_t>(i - 1)];
                need(a >= 0, "sink-binomial: exponents must be nonnegative");
                need((a == 0) ==
                         (spec.exps[static_cast<std::size_t>(n - i - 1)] == 0),
                     "sink-binomial: a_i = 0 iff a_(n-i) = 0 violated");
                if (a > 0) any = true;
            }
            need(any, "sink-binomial: exponent vector is zero");
            Monomial::Storage st;
            for (int i = 1; i <= n - 1; ++i)
                if (spec.exps[static_cast<std::size_t>(i - 1)] > 0)
                    st.emplace_back(i, static_cast<int>(
                                           spec.exps[static_cast<std::size_t>(i - 1)]));
            P = LaurentPoly::term(Monomial::from_entries(std::move(st)), Int(1)) +
                LaurentPoly(1L);
            break;
        }
        case Family::Extreme: {
            need(n >= 2, "extreme: n >= 2 required");
            P = mono({{1, 1}, {n - 1, 1}});
            for (int i = 1; i < n; ++i) P += var(i) * Int(spec.A);
            P += LaurentPoly(spec.B);
            break;
        }
        case Family::Singleton: {
            need(n >= 2 && n % 2 == 0, "singleton: n must be even");
            std::vector<long> c = spec.coeffs;
            if (c.empty()) c = {spec.B, spec.A, 1};
            need(c.size() >= 2, "singleton: polynomial must be nonconstant");
            need(c.back() == 1, "singleton: polynomial must be monic");
            need(c.front() != 0, "singleton: constant term must be nonzero");
            LaurentPoly uni;
            for (std::size_t j = 0; j < c.size(); ++j)
                uni += LaurentPoly::term(
                    Monomial::variable(1, static_cast<int>(j)), Int(c[j]));
            need(classify_n2(uni) != N2Class::None,
                 "singleton: coefficients fail the n = 2 classification");
            for (std::size_t j = 0; j < c.size(); ++j)
                P += LaurentPoly::term(
                    Monomial::variable(n / 2, static_cast<int>(j)), Int(c[j]));
            break;
        }
        case Family::Chain: {
            need(n > 2 && n % 2 == 1, "chain: n must be odd and > 2");
            for (int i = 1; i <= n - 2; ++i) P += mono({{i, 1}, {i + 1, 1}});
            for (int i = 1; i < n; ++i) P += var(i) * Int(spec.A);
            P += LaurentPoly(spec.B);
            break;
        }
        case Family::MultilinearSymmetric: {
            need(n > 2 && n % 2 == 1,
                 "multilinear-symmetric: n must be odd and > 2");
            auto vars = tail_vars(n);
            P = elementary_symmetric(vars, 2) +
                elementary_symmetric(vars, 1) * Int(spec.A) + LaurentPoly(spec.B);
            break;
        }
        case Family::Jumping:
        case Family::Hopping: {
            long r = spec.r;
            need(r >= 1, "jumping/hopping: r >= 1 required");
            need(n >= 2 * r + 1, "jumping/hopping: n >= 2r+1 required");
            need((n - 1) % r == 0, "jumping/hopping: n = 1 (mod r) required");
            HopParams hp{n, r,
                         spec.family == Family::Hopping ? spec.A : 0,
                         spec.family == Family::Hopping ? spec.B : spec.A};
            P = hop_F(hp, 1);
            break;
        }
        case Family::FlipSymmetric: {
            validate_flip_vector(spec.exps, n, "flip-symmetric");
            std::vector<long> row(static_cast<std::size_t>(n), 0);
            for (int i = 1; i < n; ++i)
                row[static_cast<std::size_t>(i)] =
                    spec.exps[static_cast<std::size_t>(i - 1)];
            P = flip_binomial_from_vector(row);
            break;
        }
        case Family::Balanced: {
            validate_flip_vector(spec.exps, n, "balanced");
            need(spec.m >= 2, "balanced: m > 1 required");
            Monomial::Storage l, rr;
            for (int i = 1; i < n; ++i) {
                long e = spec.exps[static_cast<std::size_t>(i - 1)];
                if (e > 0) l.emplace_back(i, static_cast<int>(e));
                if (e < 0) rr.emplace_back(i, static_cast<int>(-e));
            }
            LaurentPoly M1 = LaurentPoly::term(Monomial::from_entries(std::move(l)), Int(1));
            LaurentPoly M2 = LaurentPoly::term(Monomial::from_entries(std::move(rr)), Int(1));
            P = M1.pow(static_cast<unsigned>(spec.m)) +
                M2.pow(static_cast<unsigned>(spec.m));
            for (long i = 1; i <= spec.m / 2; ++i) {
                long Ai = i <= static_cast<long>(spec.balanced_A.size())
                              ? spec.balanced_A[static_cast<std::size_t>(i - 1)]
                              : 0;
                if (Ai == 0) continue;
                LaurentPoly cross = M1.pow(static_cast<unsigned>(i)) *
                                    M2.pow(static_cast<unsigned>(spec.m - i));
                if (2 * i != spec.m)
                    cross += M1.pow(static_cast<unsigned>(spec.m - i)) *
                             M2.pow(static_cast<unsigned>(i));
                P += cross * Int(Ai);
            }
            break;
        }
        case Family::VectorSum: {
            need(static_cast<int>(spec.exps.size()) == n - 1,
                 "vector-sum: a must have length n-1");
            for (long a : spec.exps)
                need(a >= 1, "vector-sum: a_i >= 1 required");
            Monomial::Storage top;
            for (int i = 1; i < n; ++i)
                top.emplace_back(i, static_cast<int>(
                                        spec.exps[static_cast<std::size_t>(i - 1)]));
            P = LaurentPoly(1L) +
                LaurentPoly::term(Monomial::from_entries(std::move(top)), Int(1));
            for (auto& t : spec.terms) {
                need(static_cast<int>(t.b.size()) == n - 1,
                     "vector-sum: b must have length n-1");
                need(t.coeff >= 1, "vector-sum: coefficients must be positive");
                Monomial::Storage lo, hi;
                for (int i = 1; i < n; ++i) {
                    long b = t.b[static_cast<std::size_t>(i - 1)];
                    long a = spec.exps[static_cast<std::size_t>(i - 1)];
                    need(b > 0 && b < a, "vector-sum: 0 < b_i < a_i required");
                    lo.emplace_back(i, static_cast<int>(b));
                    hi.emplace_back(i, static_cast<int>(a - b));
                }
                P += (LaurentPoly::term(Monomial::from_entries(std::move(lo)), Int(1)) +
                      LaurentPoly::term(Monomial::from_entries(std::move(hi)), Int(1))) *
                     Int(t.coeff);
            }
            break;
        }
        case Family::LittlePi: {
            long k = spec.k;
            need(k >= 1, "little-pi: k >= 1 required");
            need(n > 2 * k, "little-pi: n > 2k required");
            need(n != 3 * k, "little-pi: n != 3k required");
            need(spec.A != 0, "little-pi: A must be nonzero");
            P = var(static_cast<int>(k)) * Int(spec.A) +
                var(static_cast<int>(n - k)) * Int(spec.A) +
                mono({{static_cast<int>(2 * k), 1}, {static_cast<int>(n - 2 * k), 1}});
            break;
        }
        case Family::Pi: {
            long k = spec.k;
            need(k >= 1, "pi: k >= 1 required");
            need(n > 2 * k, "pi: n > 2k required");
            need(n != 3 * k, "pi: n != 3k required");
            need(spec.a1 >= 0 && spec.b1 >= 0 && spec.a2 >= 0 && spec.b2 >= 0,
                 "pi: exponents must be nonnegative");
            need(spec.a1 + spec.b1 == spec.a2 + spec.b2,
                 "pi: a1+b1 = a2+b2 required");
            need(spec.a1 + spec.b1 >= 1, "pi: degenerate zero exponents");
            need(!(spec.a1 == spec.a2 && spec.b1 == spec.b2),
                 "pi: exponent pairs must differ");
            P = mono({{static_cast<int>(k), static_cast<int>(spec.a1)},
                      {static_cast<int>(n - k), static_cast<int>(spec.b1)}},
                     spec.A) +
                mono({{static_cast<int>(k), static_cast<int>(spec.a2)},
                      {static_cast<int>(n - k), static_cast<int>(spec.b2)}},
                     spec.B) +
                mono({{static_cast<int>(2 * k), 1},
                      {static_cast<int>(n - 2 * k), 1}});
            break;
        }
        case Family::GaleRobinson: {
            long p = spec.p, q = spec.q, r = spec.r;
            need(p >= 1 && q >= 1 && r >= 1, "gale-robinson: p,q,r >= 1");
            need(p <= q && q <= r, "gale-robinson: p <= q <= r required");
            need(p + q + r == n, "gale-robinson: p+q+r = n required");
            P = mono({{static_cast<int>(p), 1}, {static_cast<int>(n - p), 1}}, spec.A) +
                mono({{static_cast<int>(q), 1}, {static_cast<int>(n - q), 1}}, spec.B) +
                mono({{static_cast<int>(r), 1}, {static_cast<int>(n - r), 1}}, spec.C);
            break;
        }
    }
    validate_built(P, n, family_name(spec.family));
    return P;
}

ExpectedSeedResult expected_seed(const FamilySpec& spec) {
    const int n = spec.n;
    LaurentPoly P = build(spec);
    Seed s;
    s.n = n;
    s.polys.assign(static_cast<std::size_t>(n), LaurentPoly{});
    switch (spec.family) {
        case Family::SymmetricSecondPowers: {
            LaurentPoly pattern;
            for (int i = 0; i < n; ++i) pattern += mono({{i, 2}});
            auto vars = window_vars(n);
            for (std::size_t k = 0; k < spec.elem.size(); ++k)
                if (spec.elem[k] != 0)
                    pattern += elementary_symmetric(vars, static_cast<int>(k) + 1) *
                               Int(spec.elem[k]);
            pattern += LaurentPoly(spec.B);
            for (int i = 0; i < n; ++i)
                s.polys[static_cast<std::size_t>(i)] =
                    substitute(pattern, i, LaurentPoly{});
            break;
        }
        case Family::SinkBinomial: {
            auto a = [&](int i) {
                return static_cast<int>(spec.exps[static_cast<std::size_t>(i - 1)]);
            };
            for (int i = 0; i < n; ++i) {
                Monomial::Storage left, right;
                for (int j = 0; j <= i - 1; ++j)
                    if (a(n - i + j) != 0) left.emplace_back(j, a(n - i + j));
                for (int j = 1; j <= n - i - 1; ++j)
                    if (a(j) != 0) right.emplace_back(i + j, a(j));
                s.polys[static_cast<std::size_t>(i)] =
                    LaurentPoly::term(Monomial::from_entries(std::move(left)), Int(1)) +
                    LaurentPoly::term(Monomial::from_entries(std::move(right)), Int(1));
            }
            break;
        }
        case Family::Extreme: {
            s.polys[0] = P;
            s.polys[static_cast<std::size_t>(n - 1)] = shift(P, -1);
            for (int i = 1; i <= n - 2; ++i)
                s.polys[static_cast<std::size_t>(i)] =
                    var(i - 1) + var(i + 1) + LaurentPoly(spec.A);
            break;
        }
        case Family::Singleton: {
            std::vector<long> c = spec.coeffs;
            if (c.empty()) c = {spec.B, spec.A, 1};
            for (int i = 0; i < n; ++i) {
                int v = (i + n / 2) % n;
                LaurentPoly p;
                for (std::size_t j = 0; j < c.size(); ++j)
                    p += LaurentPoly::term(
                        Monomial::variable(v, static_cast<int>(j)), Int(c[j]));
                s.polys[static_cast<std::size_t>(i)] = p;
            }
            break;
        }
        case Family::Chain: {
            LaurentPoly pattern(spec.B);
            for (int l = 0; l <= n - 2; ++l) pattern += mono({{l, 1}, {l + 1, 1}});
            for (int l = 0; l < n; ++l) pattern += var(l) * Int(spec.A);
            for (int i = 0; i < n; ++i) {
                if (i % 2 == 0)
                    s.polys[static_cast<std::size_t>(i)] =
                        substitute(pattern, i, LaurentPoly{});
                else
                    s.polys[static_cast<std::size_t>(i)] =
                        var(0) + var(n - 1) + LaurentPoly(spec.A);
            }
            break;
        }
        case Family::MultilinearSymmetric: {
            auto vars = window_vars(n);
            LaurentPoly pattern = elementary_symmetric(vars, 2) +
                                  elementary_symmetric(vars, 1) * Int(spec.A) +
                                  LaurentPoly(spec.B);
            for (int i = 0; i < n; ++i) {
                if (i % 2 == 0) {
                    s.polys[static_cast<std::size_t>(i)] =
                        substitute(pattern, i, LaurentPoly{});
                } else {
                    LaurentPoly e1(spec.A);
                    for (int l = 0; l < n; ++l)
                        if (l != i) e1 += var(l);
                    s.polys[static_cast<std::size_t>(i)] = e1;
                }
            }
            break;
        }
        case Family::Jumping:
        case Family::Hopping: {
            HopParams hp{n, spec.r,
                         spec.family == Family::Hopping ? spec.A : 0,
                         spec.family == Family::Hopping ? spec.B : spec.A};
            if (spec.family == Family::Hopping && spec.r == 2 &&
                (spec.A == 1 || (spec.A == -1 && spec.B == 0)))
                return {std::nullopt,
                        "hopping: r = 2 with these coefficients degenerates "
                        "(the chain pattern takes over)"};
            s = hop_expected(hp, P);
            break;
        }
        case Family::FlipSymmetric: {
            std::vector<long> a(static_cast<std::size_t>(n), 0);
            for (int i = 1; i < n; ++i)
                a[static_cast<std::size_t>(i)] =
                    spec.exps[static_cast<std::size_t>(i - 1)];
            auto rows = flip_rows(a, n);
            for (int i = 0; i < n; ++i)
                s.polys[static_cast<std::size_t>(i)] =
                    flip_binomial_from_vector(rows[static_cast<std::size_t>(i)]);
            break;
        }
        case Family::Balanced: {
            std::vector<long> a(static_cast<std::size_t>(n), 0);
            for (int i = 1; i < n; ++i)
                a[static_cast<std::size_t>(i)] =
                    spec.m * spec.exps[static_cast<std::size_t>(i - 1)];
            auto rows = flip_rows(a, n);
            for (int i = 0; i < n; ++i) {
                Monomial::Storage pos, neg;
                for (int j = 0; j < n; ++j) {
                    long e = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                    if (e % spec.m != 0)
                        return {std::nullopt,
                                "balanced: intermediate row is not an m-th power"};
                    if (e > 0) pos.emplace_back(j, static_cast<int>(e / spec.m));
                    if (e < 0) neg.emplace_back(j, static_cast<int>(-e / spec.m));
                }
                LaurentPoly N1 =
                    LaurentPoly::term(Monomial::from_entries(std::move(pos)), Int(1));
                LaurentPoly N2 =
                    LaurentPoly::term(Monomial::from_entries(std::move(neg)), Int(1));
                LaurentPoly p = N1.pow(static_cast<unsigned>(spec.m)) +
                                N2.pow(static_cast<unsigned>(spec.m));
                for (long i2 = 1; i2 <= spec.m / 2; ++i2) {
                    long Ai = i2 <= static_cast<long>(spec.balanced_A.size())
                                  ? spec.balanced_A[static_cast<std::size_t>(i2 - 1)]
                                  : 0;
                    if (Ai == 0) continue;
                    LaurentPoly cross = N1.pow(static_cast<unsigned>(i2)) *
                                        N2.pow(static_cast<unsigned>(spec.m - i2));
                    if (2 * i2 != spec.m)
                        cross += N1.pow(static_cast<unsigned>(spec.m - i2)) *
                                 N2.pow(static_cast<unsigned>(i2));
                    p += cross * Int(Ai);
                }
                s.polys[static_cast<std::size_t>(i)] = p;
            }
            break;
        }
        case Family::VectorSum: {
            auto a = [&](int i) {
                return spec.exps[static_cast<std::size_t>(i - 1)];
            };
            std::vector<VectorSumTerm> all = spec.terms;
            {
                VectorSumTerm zero;
                zero.b.assign(static_cast<std::size_t>(n - 1), 0);
                zero.coeff = 1;
                all.push_back(zero);
            }
            for (int i = 0; i < n; ++i) {
                LaurentPoly p;
                for (auto& t : all) {
                    auto b = [&](int idx) {
                        return t.b[static_cast<std::size_t>(idx - 1)];
                    };
                    Monomial::Storage first, second;
                    for (int j = 0; j <= i - 1; ++j) {
                        long e = b(n - i + j);
                        long e2 = a(n - i + j) - e;
                        if (e != 0) first.emplace_back(j, static_cast<int>(e));
                        if (e2 != 0) second.emplace_back(j, static_cast<int>(e2));
                    }
                    for (int j = 1; j <= n - 1 - i; ++j) {
                        long e = a(j) - b(j);
                        long e2 = b(j);
                        if (e != 0) first.emplace_back(i + j, static_cast<int>(e));
                        if (e2 != 0) second.emplace_back(i + j, static_cast<int>(e2));
                    }
                    p += LaurentPoly::term(Monomial::from_entries(std::move(first)),
                                           Int(t.coeff)) +
                         LaurentPoly::term(Monomial::from_entries(std::move(second)),
                                           Int(t.coeff));
                }
                s.polys[static_cast<std::size_t>(i)] = p;
            }
            break;
        }
        case Family::LittlePi: {
            const long k = spec.k;
            const long A = spec.A;
            auto V = [&](long i, long e = 1) {
                return mono({{static_cast<int>(i), static_cast<int>(e)}});
            };
            std::vector<std::pair<int, LaurentPoly>> rows;
            if (n > 4 * k) {
                rows.emplace_back(static_cast<int>(k),
                                  V(0) * V(2 * k) * Int(A) +
                                      V(2 * k) * V(n - 2 * k) * Int(A) +
                                      V(0) * V(3 * k) * V(n - k) +
                                      V(n - k) * Int(A * A));
                rows.emplace_back(static_cast<int>(2 * k),
                                  V(0) * V(3 * k) + V(k) * V(4 * k) +
                                      LaurentPoly(A * A));
                rows.emplace_back(static_cast<int>(n - 2 * k),
                                  V(k) * V(n - 3 * k) * Int(A) +
                                      V(n - 3 * k) * V(n - k) * Int(A) +
                                      V(0) * V(n - 4 * k) * V(n - k) +
                                      V(0) * Int(A * A));
                rows.emplace_back(static_cast<int>(n - k),
                                  V(0) * Int(A) + V(n - 2 * k) * Int(A) +
                                      V(k) * V(n - 3 * k));
            } else if (n == 4 * k) {
                rows.emplace_back(static_cast<int>(k),
                                  V(0) * V(2 * k) * Int(A) + V(2 * k, 2) * Int(A) +
                                      V(0) * V(3 * k, 2) + V(3 * k) * Int(A * A));
                rows.emplace_back(static_cast<int>(2 * k),
                                  V(k, 2) * Int(A) + V(k) * V(3 * k) * Int(A) +
                                      V(0, 2) * V(3 * k) + V(0) * Int(A * A));
                rows.emplace_back(static_cast<int>(3 * k),
                                  V(0) * Int(A) + V(2 * k) * Int(A) + V(k, 2));
            } else if (4 * k > n && n > 3 * k) {
                rows.emplace_back(static_cast<int>(k),
                                  V(0) * V(2 * k) * Int(A) +
                                      V(2 * k) * V(n - 2 * k) * Int(A) +
                                      V(0) * V(3 * k) * V(n - k) +
                                      V(n - k) * Int(A * A));
                rows.emplace_back(static_cast<int>(n - 2 * k),
                                  V(0) * V(n - 3 * k) * V(n - k) +
                                      V(0) * V(2 * n - 5 * k) * V(n - k) +
                                      V(n - 3 * k) * V(k) * V(2 * n - 4 * k) +
                                      V(n - 3 * k) * V(n - k) * V(2 * n - 4 * k) +
                                      V(0) * V(2 * n - 4 * k) * Int(A));
                rows.emplace_back(static_cast<int>(2 * k),
                                  V(k) * V(5 * k - n) * Int(A) +
                                      V(k) * V(3 * k) * Int(A) +
                                      V(0) * V(4 * k - n) * V(3 * k) +
                                      V(4 * k - n) * Int(A * A));
                rows.emplace_back(static_cast<int>(n - k),
                                  V(0) * Int(A) + V(n - 2 * k) * Int(A) +
                                      V(k) * V(n - 3 * k));
            } else {  // 3k > n > 2k
                rows.emplace_back(static_cast<int>(n - 2 * k),
                                  V(2 * n - 4 * k) * V(k) +
                                      V(2 * n - 4 * k) * V(n - k) +
                                      V(0) * V(n - k) + V(0) * V(2 * n - 3 * k));
                rows.emplace_back(static_cast<int>(k),
                                  V(0) * V(n - k) * V(4 * k - n) +
                                      V(0) * V(n - k) * V(2 * k) +
                                      V(0) * V(3 * k - n) * V(2 * k) +
                                      V(n - 2 * k) * V(3 * k - n) * V(2 * k) +
                                      V(3 * k - n) * V(n - k) * Int(A));
                rows.emplace_back(static_cast<int>(n - k),
                                  V(n - 2 * k) * V(k) +
                                      V(2 * n - 3 * k) * V(n - 2 * k) +
                                      V(0) * V(2 * n - 3 * k) +
                                      V(k) * V(2 * n - 4 * k));
                rows.emplace_back(static_cast<int>(2 * k),
                                  V(3 * k - n) * Int(A) + V(k) * Int(A) +
                                      V(0) * V(4 * k - n));
            }
            s = fill_by_upshift(n, P, rows);
            break;
        }
        case Family::Pi: {
            const long k = spec.k;
            if (spec.a1 == 0 || spec.b1 == 0 || spec.a2 == 0 || spec.b2 == 0)
                return {std::nullopt,
                        "pi: closed form needs positive exponents"};
            if (4 * k > n && n > 3 * k)
                return {std::nullopt,
                        "pi: the printed case 4k > n > 3k formulas do not "
                        "reproduce the generated seed"};
            if (3 * k > n && std::gcd(spec.A, spec.B) != 1)
                return {std::nullopt,
                        "pi: case 3k > n > 2k needs coprime coefficients"};
            // relabel so that a2 >= a1 (equivalently b1 >= b2)
            long A = spec.A, B = spec.B, A1 = spec.a1, B1 = spec.b1,
                 A2 = spec.a2, B2 = spec.b2;
            if (A1 > A2) {
                std::swap(A, B);
                std::swap(A1, A2);
                std::swap(B1, B2);
            }
            auto Ve = [&](long i, long e) {
                return mono({{static_cast<int>(i), static_cast<int>(e)}});
            };
            std::vector<std::pair<int, LaurentPoly>> rows;
            if (n > 4 * k) {
                rows.emplace_back(
                    static_cast<int>(k),
                    Ve(2 * k, A2 + B2) * Ve(n - 2 * k, B1) * Int(A) +
                        Ve(2 * k, A2 + B2) * Ve(n - 2 * k, B2) * Ve(0, B1 - B2) * Int(B) +
                        Ve(0, B1) * Ve(3 * k, 1) * Ve(n - k, 1));
                rows.emplace_back(static_cast<int>(2 * k),
                                  Ve(0, 1) * Ve(3 * k, A2 + B2) +
                                      Ve(k, A1 + B1) * Ve(4 * k, 1));
                rows.emplace_back(
                    static_cast<int>(n - 2 * k),
                    Ve(k, A1) * Ve(n - 3 * k, A1 + B1) * Ve(n - k, A2 - A1) * Int(A) +
                        Ve(k, A2) * Ve(n - 3 * k, A2 + B2) * Int(B) +
                        Ve(0, 1) * Ve(n - 4 * k, 1) * Ve(n - k, A2));
                rows.emplace_back(static_cast<int>(n - k),
                                  Ve(0, A1) * Ve(n - 2 * k, B1) * Int(A) +
                                      Ve(0, A2) * Ve(n - 2 * k, B2) * Int(B) +
                                      Ve(k, 1) * Ve(n - 3 * k, 1));
            } else if (n == 4 * k) {
                rows.emplace_back(static_cast<int>(k),
                                  Ve(2 * k, A2 + B1 + B2) * Int(A) +
                                      Ve(2 * k, A2 + 2 * B2) * Ve(0, A2 - A1) * Int(B) +
                                      Ve(0, B1) * Ve(3 * k, 2));
                rows.emplace_back(static_cast<int>(2 * k),
                                  Ve(k, 2 * A1 + B1) * Ve(3 * k, A2 - A1) * Int(A) +
                                      Ve(k, 2 * A2 + B2) * Int(B) +
                                      Ve(0, 2) * Ve(3 * k, A2));
                rows.emplace_back(static_cast<int>(3 * k),
                                  Ve(0, A1) * Ve(2 * k, B1) * Int(A) +
                                      Ve(0, A2) * Ve(2 * k, B2) * Int(B) + Ve(k, 2));
            } else {  // 3k > n > 2k
                if (A1 > B2)
                    return {std::nullopt,
                            "pi: case 3k > n > 2k with a1 > b2 has no closed form"};
                rows.emplace_back(
                    static_cast<int>(n - 2 * k),
                    Ve(2 * n - 4 * k, 1) * Ve(k, A1) * Ve(n - k, B1 - A1) * Int(A) +
                        Ve(2 * n - 4 * k, 1) * Ve(k, A2) * Ve(n - k, B1 - A2) * Int(B) +
                        Ve(0, 1) * Ve(2 * n - 3 * k, B1) * Int(A) +
                        Ve(0, 1) * Ve(n - k, A2 - A1) * Ve(2 * n - 3 * k, B2) * Int(B));
                rows.emplace_back(
                    static_cast<int>(k),
                    Ve(0, B1) * Ve(2 * k, A2 - A1) * Ve(4 * k - n, A1) * Ve(n - k, 1) * Int(A) +
                        Ve(0, B1) * Ve(n - k, 1) * Ve(4 * k - n, A2) * Int(B) +
                        Ve(3 * k - n, 1) * Ve(n - 2 * k, B1) * Ve(2 * k, A2) * Int(A) +
                        Ve(0, A2 - A1) * Ve(n - 2 * k, B2) * Ve(2 * k, A2) * Ve(3 * k - n, 1) * Int(B));
                rows.emplace_back(
                    static_cast<int>(n - k),
                    Ve(0, A1) * Ve(n - 2 * k, B1 - A1) * Ve(2 * n - 3 * k, 1) * Int(A) +
                        Ve(0, A2) * Ve(2 * n - 3 * k, 1) * Ve(n - 2 * k, B2 - A1) * Int(B) +
                        Ve(k, 1) * Ve(2 * n - 4 * k, B1) * Int(A) +
                        Ve(n - 2 * k, A2 - A1) * Ve(2 * n - 4 * k, B2) * Ve(k, 1) * Int(B));
                rows.emplace_back(static_cast<int>(2 * k),
                                  Ve(3 * k - n, A1) * Ve(k, B1) * Int(A) +
                                      Ve(3 * k - n, A2) * Ve(k, B2) * Int(B) +
                                      Ve(0, 1) * Ve(4 * k - n, 1));
            }
            s = fill_by_upshift(n, P, rows);
            break;
        }
        case Family::GaleRobinson: {
            const long p = spec.p, q = spec.q, r = spec.r;
            if (!(p < q && q < r))
                return {std::nullopt, "gale-robinson: closed form needs p < q < r"};
            if (!(2 * r < n))
                return {std::nullopt, "gale-robinson: closed form needs r < n/2"};
            if (std::gcd(spec.A, spec.B) != 1 || std::gcd(spec.A, spec.C) != 1 ||
                std::gcd(spec.B, spec.C) != 1)
                return {std::nullopt,
                        "gale-robinson: closed form needs pairwise coprime "
                        "coefficients (content is normalized away otherwise)"};
            const long A = spec.A, B = spec.B, C = spec.C;
            auto X = [&](long i) { return mono({{static_cast<int>(i), 1}}); };
            std::vector<std::pair<int, LaurentPoly>> rows;
            rows.emplace_back(
                static_cast<int>(p),
                X(q) * X(2 * p) * X(p + r) * Int(A * B) +
                    X(r) * X(2 * p) * X(p + q) * Int(A * C) +
                    X(0) * X(p + r) * X(n + p - r) * Int(C) +
                    X(0) * X(p + q) * X(n + p - q) * Int(B));
            rows.emplace_back(
                static_cast<int>(q),
                X(q - p) * X(p) * X(2 * q) * X(q + r) * Int(A * B) +
                    X(0) * X(2 * q - p) * X(p + q) * X(q + r) * Int(A * B) +
                    X(0) * X(r + q - p) * X(p + q) * X(2 * q) * Int(A * C) +
                    X(q - p) * X(r) * X(p + q) * X(2 * q) * Int(B * C) +
                    X(0) * X(q - p) * X(q + r) * X(n + q - r) * Int(C));
            rows.emplace_back(
                static_cast<int>(r),
                X(0) * X(r - p) * X(p + r - q) * X(q + r) * X(2 * r) * Int(A * B) +
                    X(r - p) * X(p) * X(r - q) * X(q + r) * X(2 * r) * Int(A * C) +
                    X(0) * X(q + r - p) * X(r - q) * X(p + r) * X(2 * r) * Int(A * B) +
                    X(r - p) * X(q) * X(r - q) * X(p + r) * X(2 * r) * Int(B * C) +
                    X(0) * X(r - q) * X(2 * r - p) * X(p + r) * X(q + r) * Int(A * C) +
                    X(0) * X(r - p) * X(2 * r - q) * X(p + r) * X(q + r) * Int(B * C));
            rows.emplace_back(
                static_cast<int>(n - r),
                X(q) * X(p + q - r) * X(2 * p) * X(n + q - r) * Int(A * B) +
                    X(q) * X(2 * p + q - r) * X(p) * X(n + q - r) * Int(A * C) +
                    X(0) * X(p + q - r) * X(n + p - r) * X(n + q - r) * Int(C) +
                    X(p + q - r) * X(2 * q) * X(p) * X(n + p - r) * Int(A * B) +
                    X(q) * X(n + q - 2 * r) * X(p) * X(n + p - r) * Int(B * C));
            rows.emplace_back(static_cast<int>(n - q),
                              X(r) * X(p) * X(n + p - 2 * q) * Int(A * B) +
                                  X(r) * X(2 * p) * X(p + r - q) * Int(A * C) +
                                  X(0) * X(p + r - q) * X(n + p - q) * Int(B) +
                                  X(p) * X(r - q) * X(n + p - q) * Int(C));
            rows.emplace_back(static_cast<int>(n - p),
                              X(0) * X(n - 2 * p) * Int(A) +
                                  X(q - p) * X(r) * Int(B) +
                                  X(r - p) * X(q) * Int(C));
            s = fill_by_upshift(n, P, rows);
            break;
        }
    }
    // The weighted-sum rows can carry a spurious full copy of the generator
    // (seen in the jumping family); a valid seed has no such divisibility.
    for (std::size_t i = 1; i < s.polys.size(); ++i) {
        auto q = exact_div(s.polys[i], P);
        while (q && !strip_units(*q).core.is_constant()) {
            s.polys[i] = std::move(*q);
            q = exact_div(s.polys[i], P);
        }
        s.polys[i] = strip_poly(s.polys[i]);
    }
    // If a row still divides another row the closed form has collapsed into
    // products that cannot be resolved locally.
    for (std::size_t i = 0; i < s.polys.size(); ++i)
        for (std::size_t j = 0; j < s.polys.size(); ++j) {
            if (i == j) continue;
            auto q = exact_div(s.polys[i], s.polys[j]);
            if (q && !strip_units(*q).core.is_constant())
                return {std::nullopt,
                        "closed-form rows collapse into products for these "
                        "parameters"};
        }
    return {s, {}};
}

LaurentPoly expand(const LaurentPoly& F, int n, int k) {
    need(k >= 1, "expand: k >= 1 required");
    for (int v : F.variables())
        need(v >= 1 && v < n, "expand: F must live in Z[x1..x(n-1)]");
    std::vector<Term> ts;
    ts.reserve(F.terms().size());
    for (auto& t : F.terms())
        ts.push_back({t.mono.remapped([&](int v) { return v * k; }), t.coeff});
    return LaurentPoly::from_terms(std::move(ts));
}

LaurentPoly reflect(const LaurentPoly& F, int n) {
    for (int v : F.variables())
        need(v >= 1 && v < n, "reflect: F must live in Z[x1..x(n-1)]");
    std::vector<Term> ts;
    ts.reserve(F.terms().size());
    for (auto& t : F.terms())
        ts.push_back({t.mono.remapped([&](int v) { return n - v; }), t.coeff});
    return LaurentPoly::from_terms(std::move(ts));
}

N2Class classify_n2(const LaurentPoly& P) {
    need(!P.is_zero() && !P.is_constant(), "classify_n2: P must be nonconstant");
    auto vars = P.variables();
    need(vars.size() == 1 && vars[0] == 1, "classify_n2: P must be univariate in x1");
    need(P.is_polynomial(), "classify_n2: P must be an ordinary polynomial");
    const int d = P.degree_in(1);
    std::vector<Int> a(static_cast<std::size_t>(d) + 1, Int(0));
    for (auto& [e, c] : P.as_univariate_in(1))
        a[static_cast<std::size_t>(e)] = c.leading().coeff;
    if (a[0] == 0) return N2Class::None;
    const Int& lead = a[static_cast<std::size_t>(d)];
    // the coefficient relations a_i = s * a_{d-i} * a_0^{d-i-1} with the
    // unit s = a_d; seeds are compared up to unit multiples, which admits
    // the mirrored (a_d = -1) members alongside the monic ones
    if (lead != 1 && lead != -1) return N2Class::None;
    for (int i = 0; i < d; ++i) {
        Int pw(1);
        mpz_pow_ui(pw.get_mpz_t(), a[0].get_mpz_t(),
                   static_cast<unsigned long>(d - i - 1));
        if (a[static_cast<std::size_t>(i)] !=
            lead * a[static_cast<std::size_t>(d - i)] * pw)
            return N2Class::None;
    }
    if (d == 2) return N2Class::MonicDeg2;
    if (a[0] == lead) return N2Class::Palindromic;
    if (a[0] == -lead && d % 2 == 0) return N2Class::AntipalindromicEven;
    return N2Class::Palindromic;
}

namespace {

struct CoeffGrid {
    std::map<std::pair<int, int>, Int> c;
    int dx = 0, dy = 0;

    Int at(int i, int j) const {
        auto it = c.find({i, j});
        return it == c.end() ? Int(0) : it->second;
    }
    /// True when the support is contained in the given positions.
    bool only(std::initializer_list<std::pair<int, int>> allowed) const {
        for (auto& [pos, v] : c) {
            bool ok = false;
            for (auto& p : allowed)
                if (p == pos) ok = true;
            if (!ok) return false;
        }
        return true;
    }
};

CoeffGrid grid_of(const LaurentPoly& P) {
    CoeffGrid g;
    for (auto& t : P.terms()) {
        int i = t.mono.exponent(1), j = t.mono.exponent(2);
        g.c[{i, j}] = t.coeff;
        g.dx = std::max(g.dx, i);
        g.dy = std::max(g.dy, j);
    }
    return g;
}

}  // namespace

N3Class classify_n3(const LaurentPoly& P) {
    N3Class none;
    if (P.is_zero() || P.is_constant()) return none;
    if (!P.is_polynomial()) return none;
    for (int v : P.variables()) {
        if (v < 1 || v > 2) return none;
        if (P.min_exponent_in(v) > 0) return none;  // divisible by a variable
    }
    CoeffGrid g = grid_of(P);
    auto L = [](long v) { return Int(v); };
    // (1) x1x2 + a x1 + a x2, a != 0
    if (g.only({{1, 1}, {1, 0}, {0, 1}}) && g.at(1, 1) == 1 &&
        g.at(1, 0) == g.at(0, 1) && g.at(1, 0) != 0)
        return {1, {{"a", static_cast<long>(g.at(1, 0).get_si())}}};
    // (2) x1x2 + a x1 - a x2, a != 0
    if (g.only({{1, 1}, {1, 0}, {0, 1}}) && g.at(1, 1) == 1 &&
        g.at(1, 0) == -g.at(0, 1) && g.at(1, 0) != 0)
        return {2, {{"a", static_cast<long>(g.at(1, 0).get_si())}}};
    // (3) x1 - x2 - 1
    if (g.only({{1, 0}, {0, 1}, {0, 0}}) && g.at(1, 0) == 1 &&
        g.at(0, 1) == -1 && g.at(0, 0) == -1)
        return {3, {}};
    // (4) -x1 + x2 - 1
    if (g.only({{1, 0}, {0, 1}, {0, 0}}) && g.at(1, 0) == -1 &&
        g.at(0, 1) == 1 && g.at(0, 0) == -1)
        return {4, {}};
    // (5) x1x2 + a(x1+x2) + b, (a, b) != (0, 0)
    if (g.only({{1, 1}, {1, 0}, {0, 1}, {0, 0}}) && g.at(1, 1) == 1 &&
        g.at(1, 0) == g.at(0, 1) && !(g.at(1, 0) == 0 && g.at(0, 0) == 0))
        return {5,
                {{"a", static_cast<long>(g.at(1, 0).get_si())},
                 {"b", static_cast<long>(g.at(0, 0).get_si())}}};
    // (6) x1^2 + x2^2 + a x1x2 + b(x1+x2) + c
    if (g.only({{2, 0}, {0, 2}, {1, 1}, {1, 0}, {0, 1}, {0, 0}}) &&
        g.at(2, 0) == 1 && g.at(0, 2) == 1 && g.at(1, 0) == g.at(0, 1))
        return {6,
                {{"a", static_cast<long>(g.at(1, 1).get_si())},
                 {"b", static_cast<long>(g.at(1, 0).get_si())},
                 {"c", static_cast<long>(g.at(0, 0).get_si())}}};
    // (7) -x1^2 - x2^2 + a x1x2 + b
    if (g.only({{2, 0}, {0, 2}, {1, 1}, {0, 0}}) && g.at(2, 0) == -1 &&
        g.at(0, 2) == -1)
        return {7,
                {{"a", static_cast<long>(g.at(1, 1).get_si())},
                 {"b", static_cast<long>(g.at(0, 0).get_si())}}};
    // (8) +-x1x2 + a, a != 0
    if (g.only({{1, 1}, {0, 0}}) &&
        (g.at(1, 1) == 1 || g.at(1, 1) == -1) && g.at(0, 0) != 0)
        return {8,
                {{"sign", static_cast<long>(g.at(1, 1).get_si())},
                 {"a", static_cast<long>(g.at(0, 0).get_si())}}};
    // (9) 1 + x1^m x2^n + interior symmetric pairs
    {
        int m = g.dx, nn = g.dy;
        if (m >= 1 && nn >= 1 && g.at(0, 0) == 1 && g.at(m, nn) == 1) {
            bool ok = true;
            for (auto& [pos, v] : g.c) {
                auto [i, j] = pos;
                if ((i == 0 && j == 0) || (i == m && j == nn)) continue;
                if (!(i > 0 && i < m && j > 0 && j < nn)) ok = false;
                if (v != g.at(m - i, nn - j)) ok = false;
            }
            if (ok) return {9, {{"m", m}, {"n", nn}}};
        }
    }
    // (10) -1 + (-1)^{m+1} x1^m x2^n + signed interior pairs, m = n (mod 2)
    {
        int m = g.dx, nn = g.dy;
        if (m >= 1 && nn >= 1 && (m - nn) % 2 == 0 && g.at(0, 0) == -1) {
            bool ok = true;
            for (auto& [pos, v] : g.c) {
                auto [i, j] = pos;
                bool corner = (i == 0 && j == 0) || (i == m && j == nn);
                if (!corner && !(i > 0 && i < m && j > 0 && j < nn)) ok = false;
                int sign = (nn - i - j) % 2 == 0 ? 1 : -1;
                if (g.at(m - i, nn - j) != v * L(sign)) ok = false;
            }
            if (ok) return {10, {{"m", m}, {"n", nn}}};
        }
    }
    // unit-equivalence completion of the binomial families: 1 - x1^m x2^n
    // with m + n odd generates a seed that reproduces itself up to unit
    // multiples (the convention the fixture seeds force elsewhere)
    {
        int m = g.dx, nn = g.dy;
        if (m >= 1 && nn >= 1 && (m + nn) % 2 == 1 && g.c.size() == 2 &&
            g.at(0, 0) == 1 && g.at(m, nn) == -1)
            return {9, {{"m", m}, {"n", nn}, {"twisted", 1}}};
    }
    return none;
}

}  // namespace lp
