#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lp/polycore.hpp"

namespace lp {

/// Raised when a symbolic term exceeds the configured monomial budget.
class TermBudgetExceeded : public std::runtime_error {
public:
    explicit TermBudgetExceeded(const std::string& what)
        : std::runtime_error(what) {}
};

/// Rolling state of the recurrence x_{m+n} = P(x_{m+1},..,x_{m+n-1}) / x_m
/// over exact Laurent polynomials in the initial cluster x_0..x_{n-1}.
struct SymbolicState {
    LaurentPoly P;
    int n = 0;
    std::vector<LaurentPoly> window;  // terms m..m+n-1
    long m = 0;                       // index of the oldest window entry
    std::size_t term_budget = 200000;
};

SymbolicState make_symbolic_state(const LaurentPoly& P, int n,
                                  std::size_t term_budget = 200000);

/// One step of the recurrence. Exact division by the oldest term must
/// succeed; a failure is reported as a finding, not thrown.
struct SymbolicStep {
    std::optional<LaurentPoly> term;
    long violation_at = -1;       // m for which division failed
    LaurentPoly numerator;        // the offending P(window) value
};

SymbolicStep step_symbolic(SymbolicState& state);

/// Terms x_0 .. x_{count-1} (initial variables first). Throws
/// std::runtime_error on a Laurent violation, TermBudgetExceeded on blowup.
std::vector<LaurentPoly> symbolic_terms(const LaurentPoly& P, int n, int count,
                                        std::size_t term_budget = 200000);

struct NumericState {
    LaurentPoly P;
    int n = 0;
    std::vector<Rat> window;
    long m = 0;
};

NumericState make_numeric_state(const LaurentPoly& P, int n,
                                const std::vector<Rat>& initial);

struct NumericStep {
    std::optional<Rat> term;
    long singularity_at = -1;  // m whose term is zero
};

NumericStep step_numeric(NumericState& state);

std::vector<Rat> numeric_terms(const LaurentPoly& P, int n,
                               const std::vector<Rat>& initial, int count);

// ---- conserved quantities and k-invariants ------------------------------

enum class InvariantFamily {
    SymmetricSecondPowers,  // J conserved (k = 1)
    Jumping,                // J conserved (k = 1)
    SinkBinomial,           // (n-k)-invariant for P = x_k x_{n-k} + 1
    Extreme,                // (n-1)-invariant
    Chain,                  // 2-invariant (odd n)
    MultilinearSymmetric,   // 2-invariant (odd n)
};

/// Family, cluster size and coefficients pin both the recurrence polynomial
/// and the window-indexed J. J_A_offset perturbs only the A used inside J
/// (for non-vacuity tests).
struct InvariantSpec {
    InvariantFamily family;
    int n = 0;
    long A = 0, B = 0;
    long r = 0;  // jumping
    long k = 0;  // sink binomial
    long J_A_offset = 0;
};

struct InvariantReport {
    bool ok = false;
    long k_period = 0;
    int first_failure_m = -1;
    std::string detail;
};

/// The recurrence polynomial of this invariant family.
LaurentPoly invariant_polynomial(const InvariantSpec& spec);

/// Verify J_{m+k} = J_m over symbolic terms for all m <= horizon, by exact
/// cross-multiplied equality.
InvariantReport check_invariant(const InvariantSpec& spec, int horizon);

/// Verify the displayed (multi)linearized recurrence exactly on symbolic
/// terms for all m <= horizon, with J (or the J_i) taken from the initial
/// window positions.
InvariantReport check_multilinearization(const InvariantSpec& spec, int horizon);

}  // namespace lp
