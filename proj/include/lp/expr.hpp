#pragma once

#include <string>
#include <vector>

#include "lp/lpseed.hpp"
#include "lp/polycore.hpp"

namespace lp {

/// Parse failure with 1-based column information and a caret-pointed
/// rendering of the offending input.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, int column, const std::string& input);
    int column() const { return column_; }

private:
    int column_;
};

/// Parse the polynomial grammar
///   expr   := term (('+'|'-') term)*
///   term   := ['-'] factor ('*' factor)*
///   factor := atom ['^' uint]
///   atom   := uint | var | '(' expr ')'
///   var    := 'x' uint
/// Variable indices must be < arity; exponents are nonnegative. Implicit
/// multiplication is rejected.
LaurentPoly parse_poly(const std::string& text, int arity);

/// Deterministic canonical rendering: terms in descending canonical order,
/// '*' between factors, '^' for exponents >= 2. Laurent input (negative
/// exponents) is emitted with a "laurent:" prefix.
std::string print_poly(const LaurentPoly& p);

/// Rendering for symbolic sequence terms: "(numerator)/(monomial)" when the
/// Laurent denominator is nontrivial.
std::string print_laurent_fraction(const LaurentPoly& p);

/// Seed file format: {"n": uint, "polys": ["...", ...]} with polys[i] = P_i.
/// Loading validates the seed hard (LP2, no variable divides) and collects
/// best-effort irreducibility warnings.
struct LoadedSeed {
    Seed seed;
    std::vector<std::string> warnings;
};
LoadedSeed load_seed(const std::string& path);
LoadedSeed seed_from_json_text(const std::string& text);
void save_seed(const Seed& s, const std::string& path);
std::string seed_to_json_text(const Seed& s);

}  // namespace lp
