#include "lp/polycore.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace lp {

// ---- Monomial --------------------------------------------------------

Monomial Monomial::variable(int v, int exp) {
    Monomial m;
    if (exp != 0) m.ve_.emplace_back(v, exp);
    return m;
}

Monomial Monomial::from_entries(Storage entries) {
    Monomial m;
    for (auto& [v, e] : entries)
        if (e != 0) m.ve_.emplace_back(v, e);
    return m;
}

int Monomial::exponent(int v) const {
    for (auto& [var, e] : ve_)
        if (var == v) return e;
    return 0;
}

int Monomial::total_degree() const {
    int d = 0;
    for (auto& [v, e] : ve_) d += e;
    return d;
}

bool Monomial::is_laurent() const {
    for (auto& [v, e] : ve_)
        if (e < 0) return true;
    return false;
}

int Monomial::min_exponent() const {
    int m = 0;
    for (auto& [v, e] : ve_) m = std::min(m, e);
    return m;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial out;
    out.ve_.reserve(ve_.size() + o.ve_.size());
    auto a = ve_.begin(), ae = ve_.end();
    auto b = o.ve_.begin(), be = o.ve_.end();
    while (a != ae && b != be) {
        if (a->first < b->first)
            out.ve_.push_back(*a++);
        else if (b->first < a->first)
            out.ve_.push_back(*b++);
        else {
            int e = a->second + b->second;
            if (e != 0) out.ve_.emplace_back(a->first, e);
            ++a;
            ++b;
        }
    }
    out.ve_.insert(out.ve_.end(), a, ae);
    out.ve_.insert(out.ve_.end(), b, be);
    return out;
}

Monomial Monomial::divide(const Monomial& o) const { return *this * o.inverse(); }

Monomial Monomial::inverse() const {
    Monomial out;
    out.ve_.reserve(ve_.size());
    for (auto& [v, e] : ve_) out.ve_.emplace_back(v, -e);
    return out;
}

Monomial Monomial::pow(int e) const {
    Monomial out;
    if (e == 0) return out;
    out.ve_.reserve(ve_.size());
    for (auto& [v, x] : ve_) out.ve_.emplace_back(v, x * e);
    return out;
}

bool Monomial::divides_into(const Monomial& big) const {
    for (auto& [v, e] : ve_)
        if (e > big.exponent(v)) return false;
    return true;
}

Monomial Monomial::shifted(int delta) const {
    Monomial out;
    out.ve_.reserve(ve_.size());
    for (auto& [v, e] : ve_) out.ve_.emplace_back(v + delta, e);
    return out;
}

int Monomial::compare(const Monomial& a, const Monomial& b) {
    int da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db ? -1 : 1;
    auto ia = a.ve_.begin(), ae = a.ve_.end();
    auto ib = b.ve_.begin(), be = b.ve_.end();
    while (ia != ae || ib != be) {
        int va = ia != ae ? ia->first : INT32_MAX;
        int vb = ib != be ? ib->first : INT32_MAX;
        int v = std::min(va, vb);
        int ea = (va == v) ? ia->second : 0;
        int eb = (vb == v) ? ib->second : 0;
        if (ea != eb) return ea < eb ? -1 : 1;
        if (va == v) ++ia;
        if (vb == v) ++ib;
    }
    return 0;
}

// ---- LaurentPoly construction and normalization -----------------------

LaurentPoly normalized(std::vector<Term>&& terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) {
        return Monomial::compare(x.mono, y.mono) > 0;
    });
    LaurentPoly p;
    p.terms_.reserve(terms.size());
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono)
            p.terms_.back().coeff += t.coeff;
        else
            p.terms_.push_back(std::move(t));
        if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
    }
    return p;
}

LaurentPoly::LaurentPoly(long c) {
    if (c != 0) terms_.push_back({Monomial{}, Int(c)});
}

LaurentPoly::LaurentPoly(Int c) {
    if (c != 0) terms_.push_back({Monomial{}, std::move(c)});
}

LaurentPoly LaurentPoly::variable(int v, int exp) {
    LaurentPoly p;
    p.terms_.push_back({Monomial::variable(v, exp), Int(1)});
    return p;
}

LaurentPoly LaurentPoly::term(Monomial m, Int c) {
    LaurentPoly p;
    if (c != 0) p.terms_.push_back({std::move(m), std::move(c)});
    return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
    return normalized(std::move(terms));
}

bool LaurentPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_unit());
}

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && terms_[0].mono.is_unit() && terms_[0].coeff == 1;
}

bool LaurentPoly::is_polynomial() const {
    for (auto& t : terms_)
        if (t.mono.min_exponent() < 0) return false;
    return true;
}

bool LaurentPoly::is_unit_monomial() const {
    return terms_.size() == 1 &&
           (terms_[0].coeff == 1 || terms_[0].coeff == -1);
}

const Term& LaurentPoly::leading() const {
    if (terms_.empty()) throw std::invalid_argument("leading term of zero");
    return terms_.front();
}

bool LaurentPoly::depends_on(int v) const {
    for (auto& t : terms_)
        if (t.mono.exponent(v) != 0) return true;
    return false;
}

int LaurentPoly::degree_in(int v) const {
    int d = 0;
    bool seen = false;
    for (auto& t : terms_) {
        int e = t.mono.exponent(v);
        if (!seen || e > d) d = e, seen = true;
    }
    return seen ? d : 0;
}

int LaurentPoly::min_exponent_in(int v) const {
    int d = 0;
    bool seen = false;
    for (auto& t : terms_) {
        int e = t.mono.exponent(v);
        if (!seen || e < d) d = e, seen = true;
    }
    return seen ? d : 0;
}

int LaurentPoly::total_degree() const {
    int d = 0;
    for (auto& t : terms_) d = std::max(d, t.mono.total_degree());
    return d;
}

std::vector<int> LaurentPoly::variables() const {
    std::vector<int> vs;
    for (auto& t : terms_)
        for (auto& [v, e] : t.mono.entries()) vs.push_back(v);
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out = *this;
    for (auto& t : out.terms_) t.coeff = -t.coeff;
    return out;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly out;
    out.terms_.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin(), ae = terms_.end();
    auto b = o.terms_.begin(), be = o.terms_.end();
    while (a != ae && b != be) {
        int c = Monomial::compare(a->mono, b->mono);
        if (c > 0)
            out.terms_.push_back(*a++);
        else if (c < 0)
            out.terms_.push_back(*b++);
        else {
            Int s = a->coeff + b->coeff;
            if (s != 0) out.terms_.push_back({a->mono, std::move(s)});
            ++a;
            ++b;
        }
    }
    out.terms_.insert(out.terms_.end(), a, ae);
    out.terms_.insert(out.terms_.end(), b, be);
    return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    return *this + (-o);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    *this = *this + o;
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    *this = *this - o;
    return *this;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    if (o.terms_.size() == 1) {
        LaurentPoly out;
        out.terms_.reserve(terms_.size());
        for (auto& t : terms_)
            out.terms_.push_back({t.mono * o.terms_[0].mono, t.coeff * o.terms_[0].coeff});
        if (!o.terms_[0].mono.is_unit())
            std::sort(out.terms_.begin(), out.terms_.end(),
                      [](const Term& x, const Term& y) {
                          return Monomial::compare(x.mono, y.mono) > 0;
                      });
        return out;
    }
    const std::size_t pairs = terms_.size() * o.terms_.size();
    if (pairs <= (std::size_t{1} << 22)) {
        std::vector<Term> acc;
        acc.reserve(pairs);
        for (auto& a : terms_)
            for (auto& b : o.terms_)
                acc.push_back({a.mono * b.mono, a.coeff * b.coeff});
        return normalized(std::move(acc));
    }
    // large product: accumulate in chunks so memory stays near the result size
    const LaurentPoly& big = terms_.size() >= o.terms_.size() ? *this : o;
    const LaurentPoly& small = terms_.size() >= o.terms_.size() ? o : *this;
    std::size_t chunk = std::max<std::size_t>(1, (1u << 22) / big.terms_.size());
    LaurentPoly result;
    for (std::size_t lo = 0; lo < small.terms_.size(); lo += chunk) {
        std::size_t hi = std::min(small.terms_.size(), lo + chunk);
        std::vector<Term> acc;
        acc.reserve((hi - lo) * big.terms_.size());
        for (std::size_t i = lo; i < hi; ++i)
            for (auto& b : big.terms_)
                acc.push_back({small.terms_[i].mono * b.mono,
                               small.terms_[i].coeff * b.coeff});
        result += normalized(std::move(acc));
    }
    return result;
}

LaurentPoly LaurentPoly::operator*(const Int& c) const {
    if (c == 0) return {};
    LaurentPoly out = *this;
    for (auto& t : out.terms_) t.coeff *= c;
    return out;
}

LaurentPoly LaurentPoly::operator*(const Monomial& m) const {
    LaurentPoly out = *this;
    for (auto& t : out.terms_) t.mono = t.mono * m;
    return out;
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
    LaurentPoly result(1L);
    LaurentPoly base = *this;
    while (e) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (!(terms_[i].mono == o.terms_[i].mono) ||
            terms_[i].coeff != o.terms_[i].coeff)
            return false;
    return true;
}

int LaurentPoly::compare(const LaurentPoly& a, const LaurentPoly& b) {
    std::size_t n = std::min(a.terms_.size(), b.terms_.size());
    for (std::size_t i = 0; i < n; ++i) {
        int c = Monomial::compare(a.terms_[i].mono, b.terms_[i].mono);
        if (c != 0) return c;
        int s = cmp(a.terms_[i].coeff, b.terms_[i].coeff);
        if (s != 0) return s;
    }
    if (a.terms_.size() != b.terms_.size())
        return a.terms_.size() < b.terms_.size() ? -1 : 1;
    return 0;
}

std::vector<std::pair<int, LaurentPoly>> LaurentPoly::as_univariate_in(int v) const {
    std::map<int, std::vector<Term>> buckets;
    for (auto& t : terms_) {
        int e = t.mono.exponent(v);
        buckets[e].push_back({t.mono * Monomial::variable(v, -e), t.coeff});
    }
    std::vector<std::pair<int, LaurentPoly>> out;
    out.reserve(buckets.size());
    for (auto& [e, ts] : buckets)
        out.emplace_back(e, normalized(std::move(ts)));
    return out;
}

LaurentPoly LaurentPoly::drop_variable(int v) const {
    std::vector<Term> keep;
    for (auto& t : terms_) {
        int e = t.mono.exponent(v);
        if (e < 0) throw std::invalid_argument("Laurent pole at zero");
        if (e == 0) keep.push_back(t);
    }
    return normalized(std::move(keep));
}

Rat LaurentPoly::evaluate(const std::vector<Rat>& values) const {
    Rat acc(0);
    for (auto& t : terms_) {
        Rat prod(t.coeff);
        for (auto& [v, e] : t.mono.entries()) {
            if (v < 0 || static_cast<std::size_t>(v) >= values.size())
                throw std::invalid_argument("evaluate: variable out of range");
            if (e < 0) throw std::invalid_argument("evaluate: negative exponent");
            Rat p = values[static_cast<std::size_t>(v)];
            for (int i = 0; i < e; ++i) prod *= p;
        }
        acc += prod;
    }
    return acc;
}

// ---- substitution and shifts ------------------------------------------

LaurentPoly substitute(const LaurentPoly& p, int v, const LaurentPoly& value) {
    if (!p.depends_on(v)) return p;
    if (value.is_zero()) {
        if (p.min_exponent_in(v) < 0)
            throw std::invalid_argument("Laurent pole at zero");
        return p.drop_variable(v);
    }
    auto layers = p.as_univariate_in(v);
    bool unit_mono = value.is_unit_monomial();
    LaurentPoly out;
    std::vector<LaurentPoly> powers;  // powers[k] = value^k
    powers.push_back(LaurentPoly(1L));
    for (auto& [e, coeff] : layers) {
        LaurentPoly pw;
        if (e >= 0) {
            while (static_cast<int>(powers.size()) <= e)
                powers.push_back(powers.back() * value);
            pw = powers[static_cast<std::size_t>(e)];
        } else {
            if (!unit_mono)
                throw std::invalid_argument(
                    "substitute: negative exponent needs a unit monomial value");
            const Term& t = value.terms()[0];
            pw = LaurentPoly::term(t.mono.pow(e), t.coeff == 1 ? Int(1)
                                                               : Int((-e) % 2 ? -1 : 1));
        }
        out += coeff * pw;
    }
    return out;
}

LaurentPoly substitute_ratio(const LaurentPoly& p, int v,
                             const LaurentPoly& num, int denom_var) {
    if (!p.depends_on(v)) return p;
    if (p.min_exponent_in(v) < 0)
        throw std::invalid_argument("substitute_ratio: p must be ordinary in v");
    int maxe = p.degree_in(v);
    std::vector<LaurentPoly> powers;
    powers.reserve(static_cast<std::size_t>(maxe) + 1);
    powers.push_back(LaurentPoly(1L));
    while (static_cast<int>(powers.size()) <= maxe)
        powers.push_back(powers.back() * num);
    std::size_t total = 0;
    for (auto& t : p.terms())
        total += powers[static_cast<std::size_t>(t.mono.exponent(v))].num_terms();
    std::vector<Term> acc;
    acc.reserve(total);
    for (auto& t : p.terms()) {
        int e = t.mono.exponent(v);
        Monomial base = t.mono * Monomial::variable(v, -e) *
                        Monomial::variable(denom_var, -e);
        for (auto& u : powers[static_cast<std::size_t>(e)].terms())
            acc.push_back({base * u.mono, t.coeff * u.coeff});
    }
    return normalized(std::move(acc));
}

LaurentPoly shift(const LaurentPoly& p, int delta) {
    if (delta < 0 && p.depends_on(0))
        throw std::invalid_argument("downshift of a polynomial depending on x0");
    return shift_unchecked(p, delta);
}

LaurentPoly shift_unchecked(const LaurentPoly& p, int delta) {
    std::vector<Term> ts;
    ts.reserve(p.terms().size());
    for (auto& t : p.terms()) ts.push_back({t.mono.shifted(delta), t.coeff});
    // reindexing preserves the canonical order
    LaurentPoly out = LaurentPoly::from_terms(std::move(ts));
    return out;
}

// ---- exact division ----------------------------------------------------

namespace {

/// Ordinary-ring exact division, absent when not exact.
std::optional<LaurentPoly> poly_divide(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero()) return LaurentPoly{};
    if (b.is_monomial()) {
        const Term& d = b.terms()[0];
        std::vector<Term> out;
        out.reserve(a.terms().size());
        for (auto& t : a.terms()) {
            if (!d.mono.divides_into(t.mono)) return std::nullopt;
            Int q, r;
            mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), t.coeff.get_mpz_t(),
                        d.coeff.get_mpz_t());
            if (r != 0) return std::nullopt;
            out.push_back({t.mono.divide(d.mono), std::move(q)});
        }
        return LaurentPoly::from_terms(std::move(out));
    }
    LaurentPoly rem = a;
    std::vector<Term> qt;
    const Term& lead = b.leading();
    while (!rem.is_zero()) {
        const Term& lt = rem.leading();
        if (!lead.mono.divides_into(lt.mono)) return std::nullopt;
        Int q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), lt.coeff.get_mpz_t(),
                    lead.coeff.get_mpz_t());
        if (r != 0) return std::nullopt;
        Monomial m = lt.mono.divide(lead.mono);
        LaurentPoly piece = LaurentPoly::term(m, q);
        rem -= piece * b;
        qt.push_back({std::move(m), std::move(q)});
    }
    return LaurentPoly::from_terms(std::move(qt));
}

}  // namespace

std::optional<LaurentPoly> exact_div(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw std::invalid_argument("division by zero polynomial");
    if (a.is_zero()) return LaurentPoly{};
    UnitSplit ua = strip_units(a), ub = strip_units(b);
    auto q = poly_divide(ua.core, ub.core);
    if (!q) return std::nullopt;
    return *q * ua.monomial_part.divide(ub.monomial_part);
}

// ---- content / units ---------------------------------------------------

ContentSplit content_split(const LaurentPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("content of zero");
    Int c(0);
    for (auto& t : p.terms()) {
        mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), t.coeff.get_mpz_t());
        if (c == 1) break;
    }
    int sign = sgn(p.leading().coeff);
    Int divisor = sign < 0 ? Int(-c) : c;
    std::vector<Term> ts;
    ts.reserve(p.num_terms());
    for (auto& t : p.terms()) ts.push_back({t.mono, t.coeff / divisor});
    return {c, sign, LaurentPoly::from_terms(std::move(ts))};
}

UnitSplit strip_units(const LaurentPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("strip_units of zero");
    // per-variable minimum exponent
    std::map<int, int> mins;
    bool first = true;
    for (auto& t : p.terms()) {
        if (first) {
            for (auto& [v, e] : t.mono.entries()) mins[v] = e;
            first = false;
            continue;
        }
        for (auto& [v, m] : mins) m = std::min(m, t.mono.exponent(v));
        for (auto& [v, e] : t.mono.entries())
            if (!mins.count(v)) mins[v] = std::min(e, 0);
    }
    Monomial::Storage entries;
    for (auto& [v, m] : mins)
        if (m != 0) entries.emplace_back(v, m);
    Monomial part = Monomial::from_entries(std::move(entries));
    return {part, p * part.inverse()};
}

// ---- gcd ---------------------------------------------------------------

namespace {

Int int_content(const LaurentPoly& p) {
    Int c(0);
    for (auto& t : p.terms()) {
        mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), t.coeff.get_mpz_t());
        if (c == 1) break;
    }
    return c;
}

/// Sign-normalize: positive leading coefficient in canonical order.
LaurentPoly sign_normalize(LaurentPoly p) {
    if (!p.is_zero() && sgn(p.leading().coeff) < 0) return -p;
    return p;
}

using UniView = std::vector<std::pair<int, LaurentPoly>>;  // ascending exps

int view_degree(const UniView& f) { return f.empty() ? -1 : f.back().first; }

const LaurentPoly& view_lead(const UniView& f) { return f.back().second; }

LaurentPoly view_to_poly(const UniView& f, int v) {
    LaurentPoly out;
    for (auto& [e, c] : f) out += c * Monomial::variable(v, e);
    return out;
}

LaurentPoly gcd_core(const LaurentPoly& A, const LaurentPoly& B);

// ---- dense univariate fast path ----------------------------------------

using Dense = std::vector<Int>;  // coefficients by ascending exponent

Dense dense_of(const LaurentPoly& p, int v) {
    Dense out(static_cast<std::size_t>(p.degree_in(v)) + 1, Int(0));
    for (auto& t : p.terms())
        out[static_cast<std::size_t>(t.mono.exponent(v))] = t.coeff;
    return out;
}

void dense_trim(Dense& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Int dense_content(const Dense& a) {
    Int c(0);
    for (auto& x : a) {
        mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), x.get_mpz_t());
        if (c == 1) break;
    }
    return c;
}

/// Full univariate gcd over Z (content included, positive leading
/// coefficient) by a primitive pseudo-remainder sequence.
Dense dense_gcd(Dense a, Dense b) {
    dense_trim(a);
    dense_trim(b);
    if (a.empty()) return b;
    if (b.empty()) return a;
    Int ca = dense_content(a), cb = dense_content(b);
    Int c;
    mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), ca.get_mpz_t());
    mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), cb.get_mpz_t());
    for (auto& x : a) x /= ca;
    for (auto& x : b) x /= cb;
    if (a.size() < b.size()) std::swap(a, b);
    while (b.size() > 1) {
        // primitive pseudo-remainder a <- prem(a, b)
        while (a.size() >= b.size()) {
            std::size_t shiftn = a.size() - b.size();
            Int lead = a.back();
            const Int& lb = b.back();
            for (std::size_t i = 0; i + 1 < a.size(); ++i) {
                a[i] *= lb;
                if (i >= shiftn) a[i] -= lead * b[i - shiftn];
            }
            a.pop_back();
            dense_trim(a);
            if (a.empty()) break;
        }
        if (a.empty()) {
            // b divides a
            Int cp = dense_content(b);
            for (auto& x : b) x = x / cp * c;
            if (b.back() < 0)
                for (auto& x : b) x = -x;
            return b;
        }
        Int cp = dense_content(a);
        if (cp > 1)
            for (auto& x : a) x /= cp;
        std::swap(a, b);
    }
    // degree-0 remainder: gcd is the shared integer content only
    return {c};
}

LaurentPoly dense_to_poly(const Dense& a, int v) {
    std::vector<Term> ts;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0) ts.push_back({Monomial::variable(v, static_cast<int>(i)), a[i]});
    return LaurentPoly::from_terms(std::move(ts));
}

/// gcd(A, B) where B involves only the variable v: every common divisor lies
/// in Z[v] and divides each Z[v]-coefficient of A.
LaurentPoly gcd_with_univariate(const LaurentPoly& A, const LaurentPoly& B, int v) {
    std::map<Monomial, Dense, bool (*)(const Monomial&, const Monomial&)> groups(
        +[](const Monomial& x, const Monomial& y) {
            return Monomial::compare(x, y) < 0;
        });
    for (auto& t : A.terms()) {
        int e = t.mono.exponent(v);
        Monomial key = t.mono * Monomial::variable(v, -e);
        auto& dense = groups[key];
        if (static_cast<int>(dense.size()) <= e)
            dense.resize(static_cast<std::size_t>(e) + 1, Int(0));
        dense[static_cast<std::size_t>(e)] = t.coeff;
    }
    Dense acc;
    for (auto& [key, dense] : groups) {
        acc = dense_gcd(std::move(acc), Dense(dense));
        if (acc.size() == 1 && (acc[0] == 1 || acc[0] == -1)) return LaurentPoly(1L);
    }
    Dense g = dense_gcd(std::move(acc), dense_of(B, v));
    if (g.back() < 0)
        for (auto& x : g) x = -x;
    return dense_to_poly(g, v);
}

/// gcd of the coefficients of a univariate view (recursive multivariate gcd).
LaurentPoly view_content(const UniView& f) {
    LaurentPoly c;
    for (auto& [e, coeff] : f) {
        c = c.is_zero() ? sign_normalize(coeff) : gcd_core(c, coeff);
        if (c.is_one()) break;
    }
    return c;
}

UniView view_divide_exact(const UniView& f, const LaurentPoly& d) {
    UniView out;
    out.reserve(f.size());
    for (auto& [e, c] : f) {
        auto q = exact_div(c, d);
        if (!q) throw std::logic_error("view_divide_exact: inexact");
        out.emplace_back(e, std::move(*q));
    }
    return out;
}

/// Pseudo-remainder lc(g)^{delta+1} * f mod g in the main variable (both
/// views nonzero, deg f >= deg g).
UniView view_prem(UniView f, const UniView& g) {
    const int dg = view_degree(g);
    const LaurentPoly& lg = view_lead(g);
    const int delta = view_degree(f) - dg;
    for (int step = 0; step <= delta; ++step) {
        if (view_degree(f) < dg) {
            // scale the remainder so the total factor stays lc(g)^{delta+1}
            for (auto& [e, c] : f) c = c * lg;
            continue;
        }
        int df = view_degree(f);
        LaurentPoly lf = view_lead(f);
        std::map<int, LaurentPoly> acc;
        for (auto& [e, c] : f)
            if (e != df) acc.emplace(e, c * lg);
        for (auto& [e, c] : g)
            if (e != dg) {
                LaurentPoly sub = c * lf;
                auto it = acc.find(e + df - dg);
                if (it == acc.end())
                    acc.emplace(e + df - dg, -sub);
                else {
                    it->second -= sub;
                    if (it->second.is_zero()) acc.erase(it);
                }
            }
        f.clear();
        for (auto& [e, c] : acc)
            if (!c.is_zero()) f.emplace_back(e, std::move(c));
    }
    return f;
}

/// Subresultant PRS gcd of two primitive (w.r.t. the main variable) views.
LaurentPoly view_gcd_primitive(UniView A, UniView B, int v) {
    if (view_degree(A) < view_degree(B)) std::swap(A, B);
    if (view_degree(B) == 0) return LaurentPoly(1L);
    LaurentPoly g(1L), h(1L);
    while (true) {
        int delta = view_degree(A) - view_degree(B);
        UniView R = view_prem(A, B);
        if (R.empty()) break;
        if (view_degree(R) == 0) return LaurentPoly(1L);
        A = std::move(B);
        // divide R by g*h^delta
        LaurentPoly divisor = g;
        for (int i = 0; i < delta; ++i) divisor = divisor * h;
        B = view_divide_exact(R, divisor);
        g = view_lead(A);
        if (delta >= 1) {
            // h = g^delta / h^{delta-1}
            LaurentPoly num = g.pow(static_cast<unsigned>(delta));
            LaurentPoly den = h.pow(static_cast<unsigned>(delta - 1));
            auto q = exact_div(num, den);
            if (!q) throw std::logic_error("subresultant h update inexact");
            h = std::move(*q);
        }
    }
    // primitive part of the last nonzero remainder w.r.t. v
    LaurentPoly cont = view_content(B);
    UniView P = view_divide_exact(B, cont);
    return sign_normalize(view_to_poly(P, v));
}

/// Full gcd (content included) of two ordinary, nonzero polynomials.
LaurentPoly gcd_core(const LaurentPoly& A, const LaurentPoly& B) {
    if (A.is_zero()) return sign_normalize(B);
    if (B.is_zero()) return sign_normalize(A);
    Int ca = int_content(A), cb = int_content(B);
    Int c;
    mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), ca.get_mpz_t());
    mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), cb.get_mpz_t());
    if (A.is_constant() || B.is_constant()) return LaurentPoly(c);
    // common variables only; a variable missing from one side ends up in the
    // content of the other
    auto va = A.variables();
    auto vb = B.variables();
    std::vector<int> common;
    std::set_intersection(va.begin(), va.end(), vb.begin(), vb.end(),
                          std::back_inserter(common));
    if (common.empty()) return LaurentPoly(c);
    // monomial fast path
    if (A.is_monomial() || B.is_monomial()) {
        const LaurentPoly& mono = A.is_monomial() ? A : B;
        const LaurentPoly& other = A.is_monomial() ? B : A;
        Monomial::Storage entries;
        for (auto& [v, e] : mono.terms()[0].mono.entries()) {
            int m = std::min(e, other.min_exponent_in(v));
            if (m > 0) entries.emplace_back(v, m);
        }
        return LaurentPoly::term(Monomial::from_entries(std::move(entries)), c);
    }
    // one side univariate: collapse the other side's Z[v]-coefficients
    if (vb.size() == 1) return gcd_with_univariate(A, B, vb[0]);
    if (va.size() == 1) return gcd_with_univariate(B, A, va[0]);
    // pick the common variable minimizing the larger degree
    int best = common[0];
    long best_score = LONG_MAX;
    for (int v : common) {
        long score = static_cast<long>(std::max(A.degree_in(v), B.degree_in(v)));
        if (score < best_score) best_score = score, best = v;
    }
    UniView fa = A.as_univariate_in(best);
    UniView fb = B.as_univariate_in(best);
    LaurentPoly conta = view_content(fa);
    LaurentPoly contb = view_content(fb);
    LaurentPoly cont_gcd = gcd_core(conta, contb);
    LaurentPoly pp = view_gcd_primitive(view_divide_exact(fa, conta),
                                        view_divide_exact(fb, contb), best);
    // gcd_core(conta, contb) already carries the integer content of both sides
    return sign_normalize(cont_gcd * pp);
}

}  // namespace

LaurentPoly gcd_with_content(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() && b.is_zero()) throw std::invalid_argument("gcd(0,0)");
    if (a.is_zero()) return sign_normalize(strip_units(b).core);
    if (b.is_zero()) return sign_normalize(strip_units(a).core);
    return gcd_core(strip_units(a).core, strip_units(b).core);
}

LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly g = gcd_with_content(a, b);
    if (g.is_zero()) return g;
    return content_split(g).primitive_part;
}

int multiplicity(const LaurentPoly& a, const LaurentPoly& d) {
    if (a.is_zero()) throw std::invalid_argument("multiplicity of zero");
    if (d.is_zero() || d.is_monomial())
        throw std::invalid_argument("multiplicity divisor must not be a unit");
    int m = 0;
    LaurentPoly cur = a;
    while (true) {
        auto q = exact_div(cur, d);
        if (!q) return m;
        cur = std::move(*q);
        ++m;
    }
}

LaurentPoly strip_common_factors(LaurentPoly g, const LaurentPoly& d) {
    if (d.is_zero()) throw std::invalid_argument("strip_common_factors: d = 0");
    if (g.is_zero()) return g;
    LaurentPoly dn = strip_units(d).core;
    if (dn.is_constant() &&
        (dn.leading().coeff == 1 || dn.leading().coeff == -1))
        return g;
    while (true) {
        LaurentPoly f = gcd_with_content(g, dn);
        if (f.is_one()) return g;
        auto q = exact_div(g, f);
        if (!q) throw std::logic_error("strip_common_factors: gcd does not divide");
        g = std::move(*q);
    }
}

// ---- irreducibility (best effort) --------------------------------------

namespace {

struct UniFactorResult {
    std::optional<LaurentPoly> factor;
    bool complete = true;  // false: search aborted, verdict must be Unknown
};

std::optional<std::vector<Int>> bounded_divisors(Int n) {
    if (n < 0) n = -n;
    if (n == 0 || n > 4000000000000L) return std::nullopt;
    std::vector<Int> out;
    for (Int i(1); i * i <= n; ++i) {
        if (n % i == 0) {
            out.push_back(i);
            if (i * i != n) out.push_back(n / i);
        }
        if (out.size() > 300) return std::nullopt;
    }
    return out;
}

/// Complete factor search for a univariate polynomial of modest degree:
/// rational-root scan for linear factors, then Kronecker interpolation for
/// factor degrees up to deg/2.
UniFactorResult univariate_factor(const LaurentPoly& p, int v) {
    const int d = p.degree_in(v);
    std::vector<Int> a(static_cast<std::size_t>(d) + 1, Int(0));
    for (auto& [e, c] : p.as_univariate_in(v))
        a[static_cast<std::size_t>(e)] = c.leading().coeff;
    auto value_at = [&](const Int& x) {
        Int acc(0);
        for (std::size_t i = a.size(); i-- > 0;) acc = acc * x + a[i];
        return acc;
    };
    // linear factors q*x - r with r | a0, q | lead
    auto rdivs = bounded_divisors(a[0]);
    auto qdivs = bounded_divisors(a.back());
    if (!rdivs || !qdivs) return {std::nullopt, false};
    for (auto& r : *rdivs)
        for (auto& q : *qdivs)
            for (int s : {1, -1}) {
                LaurentPoly cand =
                    LaurentPoly::variable(v) * q - LaurentPoly(Int(s * r));
                if (exact_div(p, cand)) return {cand, true};
            }
    if (d <= 3) return {std::nullopt, true};
    if (d > 8) return {std::nullopt, false};
    // Kronecker: a degree-fd factor is determined by its values at fd+1
    // points, and those values divide the values of p there
    for (int fd = 2; fd <= d / 2; ++fd) {
        std::vector<Int> xs, ys;
        for (int i = 0; static_cast<int>(xs.size()) < fd + 1; ++i) {
            Int x = (i == 0) ? Int(0) : (i % 2 ? Int((i + 1) / 2) : Int(-(i / 2)));
            Int y = value_at(x);
            if (y == 0) return {std::nullopt, false};  // should have been caught
            xs.push_back(x);
            ys.push_back(y);
        }
        std::vector<std::vector<Int>> divs;
        double total = 1;
        for (auto& y : ys) {
            auto dv = bounded_divisors(y);
            if (!dv) return {std::nullopt, false};
            total *= 2.0 * static_cast<double>(dv->size());
            divs.push_back(std::move(*dv));
        }
        if (total > 300000) return {std::nullopt, false};
        std::vector<std::size_t> idx(divs.size(), 0);
        std::vector<int> sign(divs.size(), 1);
        auto advance = [&]() {
            for (std::size_t i = 0; i < idx.size(); ++i) {
                if (sign[i] == 1) {
                    sign[i] = -1;
                    return true;
                }
                sign[i] = 1;
                if (++idx[i] < divs[i].size()) return true;
                idx[i] = 0;
            }
            return false;
        };
        do {
            // Lagrange interpolation through (xs[i], sign[i]*divs[i][idx[i]])
            std::vector<Rat> coeff(static_cast<std::size_t>(fd) + 1, Rat(0));
            for (std::size_t i = 0; i < xs.size(); ++i) {
                // basis polynomial for node i, scaled by the value
                std::vector<Rat> basis{Rat(1)};
                Rat denom(1);
                for (std::size_t j = 0; j < xs.size(); ++j) {
                    if (j == i) continue;
                    std::vector<Rat> nxt(basis.size() + 1, Rat(0));
                    for (std::size_t k = 0; k < basis.size(); ++k) {
                        nxt[k + 1] += basis[k];
                        nxt[k] -= basis[k] * Rat(xs[j]);
                    }
                    basis = std::move(nxt);
                    denom *= Rat(xs[i] - xs[j]);
                }
                Rat scale = Rat(Int(sign[i] * divs[i][idx[i]])) / denom;
                for (std::size_t k = 0; k < basis.size() && k < coeff.size(); ++k)
                    coeff[k] += basis[k] * scale;
            }
            LaurentPoly cand;
            bool integral = true;
            for (std::size_t k = 0; k < coeff.size(); ++k) {
                coeff[k].canonicalize();
                if (coeff[k].get_den() != 1) {
                    integral = false;
                    break;
                }
                if (coeff[k] != 0)
                    cand += LaurentPoly::term(
                        Monomial::variable(v, static_cast<int>(k)),
                        coeff[k].get_num());
            }
            if (!integral || cand.degree_in(v) < 1) continue;
            auto quot = exact_div(p, cand);
            if (quot && !quot->is_constant()) return {cand, true};
        } while (advance());
    }
    return {std::nullopt, true};
}

}  // namespace

IrreducibilityReport is_irreducible_best_effort(const LaurentPoly& p) {
    if (p.is_constant())
        throw std::invalid_argument("irreducibility of a constant");
    if (!p.is_polynomial())
        throw std::invalid_argument("irreducibility needs an ordinary polynomial");
    // content
    ContentSplit cs = content_split(p);
    if (cs.content > 1)
        return {Irreducibility::Reducible, LaurentPoly(cs.content)};
    // a variable divides
    for (int v : p.variables())
        if (p.min_exponent_in(v) > 0)
            return {Irreducibility::Reducible, LaurentPoly::variable(v)};
    auto vars = p.variables();
    if (vars.size() == 1) {
        int v = vars[0];
        auto res = univariate_factor(p, v);
        if (res.factor) return {Irreducibility::Reducible, *res.factor};
        if (res.complete) return {Irreducibility::Irreducible, {}};
        // squarefree probe can still witness reducibility
        LaurentPoly dp;
        for (auto& [e, c] : p.as_univariate_in(v))
            if (e > 0) dp += c * Int(e) * Monomial::variable(v, e - 1);
        LaurentPoly g = gcd(p, dp);
        if (!g.is_constant()) return {Irreducibility::Reducible, g};
        return {Irreducibility::Unknown, {}};
    }
    // total degree 1, content 1: irreducible
    if (p.total_degree() == 1) return {Irreducibility::Irreducible, {}};
    // multilinear in exactly two variables: a*xy + b*x + c*y + d factors over Q
    // iff a*d == b*c (a != 0), or degenerates when a == 0
    if (vars.size() == 2) {
        int x = vars[0], y = vars[1];
        if (p.degree_in(x) == 1 && p.degree_in(y) == 1) {
            Int a(0), b(0), c(0), d(0);
            for (auto& t : p.terms()) {
                int ex = t.mono.exponent(x), ey = t.mono.exponent(y);
                if (ex == 1 && ey == 1)
                    a = t.coeff;
                else if (ex == 1)
                    b = t.coeff;
                else if (ey == 1)
                    c = t.coeff;
                else
                    d = t.coeff;
            }
            if (a != 0) {
                if (a * d == b * c) {
                    // (a x + c)(a y + b) = a*(a xy + b x + c y + bc/a)
                    LaurentPoly f = LaurentPoly::variable(x) * a + LaurentPoly(c);
                    auto q = exact_div(p, content_split(f).primitive_part);
                    if (q) return {Irreducibility::Reducible,
                                   content_split(f).primitive_part};
                    LaurentPoly g = LaurentPoly::variable(y) * a + LaurentPoly(b);
                    auto q2 = exact_div(p, content_split(g).primitive_part);
                    if (q2) return {Irreducibility::Reducible,
                                    content_split(g).primitive_part};
                    return {Irreducibility::Unknown, {}};
                }
                return {Irreducibility::Irreducible, {}};
            }
        }
    }
    // proper power / squarefree probe via derivative gcd
    for (int v : vars) {
        LaurentPoly dp;
        for (auto& [e, c] : p.as_univariate_in(v))
            if (e > 0) dp += c * Int(e) * Monomial::variable(v, e - 1);
        if (dp.is_zero()) continue;
        LaurentPoly g = gcd(p, dp);
        if (!g.is_constant()) return {Irreducibility::Reducible, g};
    }
    // homogeneous bivariate: dehomogenize, factor the univariate image, lift
    if (vars.size() == 2) {
        int x = vars[0], y = vars[1];
        int d = p.total_degree();
        bool homogeneous = true;
        for (auto& t : p.terms())
            if (t.mono.total_degree() != d) homogeneous = false;
        if (homogeneous) {
            LaurentPoly u = substitute(p, y, LaurentPoly(1L));
            if (u.degree_in(x) >= 1 && u.degree_in(x) <= 8 &&
                p.min_exponent_in(x) == 0) {
                auto res = univariate_factor(u, x);
                if (res.factor) {
                    // rehomogenize the factor with y
                    int fd = res.factor->degree_in(x);
                    std::vector<Term> ts;
                    for (auto& t : res.factor->terms()) {
                        int e = t.mono.exponent(x);
                        ts.push_back({Monomial::variable(x, e) *
                                          Monomial::variable(y, fd - e),
                                      t.coeff});
                    }
                    LaurentPoly lifted = LaurentPoly::from_terms(std::move(ts));
                    if (exact_div(p, lifted))
                        return {Irreducibility::Reducible, lifted};
                }
                if (res.complete && u.degree_in(x) == d)
                    return {Irreducibility::Irreducible, {}};
            }
        }
    }
    // trial division by small linear forms over the occurring variables
    if (vars.size() <= 3 && p.num_terms() <= 40) {
        long bound = 2;
        std::vector<long> cs(vars.size() + 1, -bound);
        auto advance = [&]() {
            for (auto& c : cs) {
                if (c < bound) {
                    ++c;
                    return true;
                }
                c = -bound;
            }
            return false;
        };
        do {
            LaurentPoly cand(cs.back());
            for (std::size_t i = 0; i < vars.size(); ++i)
                cand += LaurentPoly::variable(vars[i]) * Int(cs[i]);
            if (cand.is_constant() || cand.total_degree() < 1) continue;
            if (cand.num_terms() == 1) continue;
            if (exact_div(p, cand))
                return {Irreducibility::Reducible,
                        content_split(cand).primitive_part};
        } while (advance());
    }
    return {Irreducibility::Unknown, {}};
}

}  // namespace lp
