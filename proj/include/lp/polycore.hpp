#pragma once

#include <gmpxx.h>

#include <boost/container/small_vector.hpp>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lp {

/// Arbitrary-precision integer coefficient type. All arithmetic in the
/// library is exact; no floating point anywhere.
using Int = mpz_class;
using Rat = mpq_class;

/// A power product of variables x_v with integer exponents. Variable indices
/// are small integers; index -1 and index n appear only as internal
/// temporaries of the kappa/tau maps. Exponents may be negative (Laurent
/// monomials). Entries are sorted by variable index and never zero.
class Monomial {
public:
    using Entry = std::pair<int, int>;  // (variable index, exponent)
    using Storage = boost::container::small_vector<Entry, 4>;

    Monomial() = default;
    static Monomial variable(int v, int exp = 1);
    static Monomial from_entries(Storage entries);  // must be sorted, nonzero

    const Storage& entries() const { return ve_; }
    bool is_unit() const { return ve_.empty(); }
    int exponent(int v) const;
    int total_degree() const;
    bool is_laurent() const;  // any negative exponent
    int min_exponent() const; // smallest exponent present (0 if unit)

    Monomial operator*(const Monomial& o) const;
    /// Exponent-wise subtraction; result may carry negative exponents.
    Monomial divide(const Monomial& o) const;
    Monomial inverse() const;
    Monomial pow(int e) const;
    /// Ordinary divisibility: every exponent of o is <= ours.
    bool divides_into(const Monomial& big) const;
    /// Reindex every variable by delta.
    Monomial shifted(int delta) const;
    /// Apply an arbitrary variable remapping.
    template <typename F>
    Monomial remapped(F f) const {
        Storage out;
        out.reserve(ve_.size());
        for (auto [v, e] : ve_) out.emplace_back(f(v), e);
        std::sort(out.begin(), out.end());
        return from_entries(std::move(out));
    }

    /// Canonical order: graded, then lexicographic with the lower variable
    /// index more significant and the larger exponent first. Returns
    /// negative/zero/positive like strcmp.
    static int compare(const Monomial& a, const Monomial& b);

    bool operator==(const Monomial& o) const { return ve_ == o.ve_; }

private:
    Storage ve_;
};

struct Term {
    Monomial mono;
    Int coeff;
};

/// Sparse multivariate Laurent polynomial over Z. Terms are kept in
/// descending canonical monomial order with nonzero coefficients; equality
/// is exact structural equality.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(long c);
    LaurentPoly(Int c);
    static LaurentPoly variable(int v, int exp = 1);
    static LaurentPoly term(Monomial m, Int c);
    /// Takes unordered terms, normalizes (sorts, merges, drops zeros).
    static LaurentPoly from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_one() const;
    /// True when every exponent is >= 0 (ordinary polynomial). Exact.
    bool is_polynomial() const;
    bool is_monomial() const { return terms_.size() == 1; }
    bool is_unit_monomial() const;  // single term, coefficient +-1
    std::size_t num_terms() const { return terms_.size(); }

    const Term& leading() const;
    bool depends_on(int v) const;
    int degree_in(int v) const;      // max exponent of v (0 if absent)
    int min_exponent_in(int v) const;
    int total_degree() const;
    std::vector<int> variables() const;  // sorted, distinct

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator*(const Int& c) const;
    LaurentPoly operator*(const Monomial& m) const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly pow(unsigned e) const;
    bool operator==(const LaurentPoly& o) const;

    /// Coefficient of x_v^k viewed as a univariate polynomial in x_v.
    std::vector<std::pair<int, LaurentPoly>> as_univariate_in(int v) const;
    /// The terms whose exponent of x_v is zero (i.e. p with x_v set to 0;
    /// requires min exponent of v to be >= 0).
    LaurentPoly drop_variable(int v) const;

    /// Exact rational evaluation; values[i] substitutes x_i. Requires an
    /// ordinary polynomial and indices within range.
    Rat evaluate(const std::vector<Rat>& values) const;

    static int compare(const LaurentPoly& a, const LaurentPoly& b);

private:
    std::vector<Term> terms_;
    friend LaurentPoly normalized(std::vector<Term>&& terms);
};

inline bool equal_up_to_sign(const LaurentPoly& a, const LaurentPoly& b) {
    return a == b || a == -b;
}

/// poly = sign * content * primitive_part, content > 0, primitive part has
/// coefficient gcd 1 and positive leading coefficient.
struct ContentSplit {
    Int content;
    int sign;
    LaurentPoly primitive_part;
};

/// p = monomial_part * core where every variable occurring in core has
/// minimum exponent exactly 0.
struct UnitSplit {
    Monomial monomial_part;
    LaurentPoly core;
};

enum class Irreducibility { Irreducible, Reducible, Unknown };

struct IrreducibilityReport {
    Irreducibility verdict = Irreducibility::Unknown;
    LaurentPoly witness;  // a nontrivial factor when Reducible
};

// ---- operations ------------------------------------------------------

/// Substitute x_v <- value (an ordinary or Laurent polynomial). If value is
/// not a unit monomial, p must have nonnegative exponents in x_v; value = 0
/// against a negative exponent raises "Laurent pole at zero".
LaurentPoly substitute(const LaurentPoly& p, int v, const LaurentPoly& value);

/// Substitute x_v <- num / x_denom_var. p must be ordinary in x_v.
LaurentPoly substitute_ratio(const LaurentPoly& p, int v,
                             const LaurentPoly& num, int denom_var);

/// Reindex all variables by delta (+1 upshift, -1 downshift). Downshift
/// requires independence of x_0.
LaurentPoly shift(const LaurentPoly& p, int delta);
/// Internal shift without the x_0 guard (used by kappa, where x_{-1} is a
/// legitimate temporary).
LaurentPoly shift_unchecked(const LaurentPoly& p, int delta);

/// Exact division in the Laurent ring; absent when not exact. b must be
/// nonzero.
std::optional<LaurentPoly> exact_div(const LaurentPoly& a,
                                     const LaurentPoly& b);

/// Primitive, sign-normalized gcd in the ordinary ring after monomial
/// normalization. gcd(a, 0) = normalized a; gcd(0, 0) throws.
LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

/// Full gcd including integer content (positive leading sign). Same
/// monomial-normalization convention as gcd().
LaurentPoly gcd_with_content(const LaurentPoly& a, const LaurentPoly& b);

ContentSplit content_split(const LaurentPoly& p);  // p != 0
UnitSplit strip_units(const LaurentPoly& p);       // p != 0

/// Largest m such that d^m divides a exactly (Laurent-ring divisibility).
/// a != 0; d must be neither zero nor a unit/monomial.
int multiplicity(const LaurentPoly& a, const LaurentPoly& d);

/// Divide out of g every factor it shares with d, iterating full gcd
/// extraction until the gcd is a unit. Signs of the quotient follow g;
/// divisors are positive-normalized. Realizes gcd(g, d^k) removal for
/// sufficiently large k.
LaurentPoly strip_common_factors(LaurentPoly g, const LaurentPoly& d);

/// Best-effort irreducibility over Z for ordinary nonconstant polynomials.
IrreducibilityReport is_irreducible_best_effort(const LaurentPoly& p);

}  // namespace lp
