#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lp/polycore.hpp"

namespace lp {

/// An LP-algebra seed: cluster size n together with exchange polynomials
/// P_0..P_{n-1}, each an ordinary polynomial in x_0..x_{n-1} independent of
/// its own variable (LP2). LP1 (no variable divides; irreducible) is
/// enforced hard for the variable part and best-effort for irreducibility.
struct Seed {
    int n = 0;
    std::vector<LaurentPoly> polys;

    bool operator==(const Seed& o) const = default;
};

inline bool seeds_equal_up_to_sign(const Seed& a, const Seed& b) {
    if (a.n != b.n || a.polys.size() != b.polys.size()) return false;
    for (std::size_t i = 0; i < a.polys.size(); ++i)
        if (!equal_up_to_sign(a.polys[i], b.polys[i])) return false;
    return true;
}

/// Hard validation: size, LP2, no variable divides, nonconstant entries.
/// Throws std::invalid_argument naming the failing index.
void validate_seed_hard(const Seed& s);

/// Best-effort irreducibility warnings, one message per undecided or
/// reducible P_i. Separate from the hard checks because it can be costly.
std::vector<std::string> seed_irreducibility_warnings(const Seed& s);

/// Hard validation plus warnings.
std::vector<std::string> validate_seed(const Seed& s);

/// The exchange Laurent polynomial of P_base: value = prod x_j^{exponents[j]}
/// * P_base with exponents[j] = -multiplicity(P_base|_{x_j <- P_j/x}, P_j).
struct ExchangeLaurent {
    int base = 0;
    std::vector<int> exponents;  // size n, all <= 0, exponents[base] = 0
    LaurentPoly value;

    bool is_trivial() const {
        for (int e : exponents)
            if (e != 0) return false;
        return true;
    }
};

enum class HatCondition { ByDependency, ByTermCount, ByDirectComputation, Failed };

enum class Verdict { Period1, NotPeriod1, Undetermined };

struct PeriodReport {
    Verdict verdict = Verdict::Undetermined;
    std::optional<Seed> seed;
    HatCondition hat_condition = HatCondition::Failed;
    int stage = -1;        // index at which generation/seam failed, if any
    std::string detail;
};

struct GenerateResult {
    Seed seed;
    bool pseudoperiod_ok = false;
    int fail_stage = -1;
    std::string detail;
};

struct MutationResult {
    Seed seed;                  // x'_k stored at index k
    std::string new_var_expr;   // symbolic marker for x'_k
    ExchangeLaurent hat;        // the exchange Laurent polynomial used
};

/// The map tau_P: P_i -> P_{i-1} of the seed-generation algorithm.
/// P generates the seed (P in Z[x_1..x_{n-1}], no variable divides it);
/// Q is independent of x_i, i >= 1.
LaurentPoly tau(const LaurentPoly& P, const LaurentPoly& Q, int i, int n);

/// The inverse map kappa_P: P_i -> P_{i+1}.
LaurentPoly kappa(const LaurentPoly& P, const LaurentPoly& Q, int i, int n);

int default_pivot(int n);

/// Build the candidate period-1 seed for P: P_0 = P, P_{n-1} the downshift
/// of P, tau fills indices n-2..pivot, kappa fills 1..pivot-1, and the seam
/// P_pivot = kappa(P_{pivot-1}) decides pseudoperiodicity (compared up to a
/// unit). pivot = 1 is the pure-tau construction, pivot = n-1 pure-kappa.
GenerateResult generate_seed(const LaurentPoly& P, int n, int pivot = -1);

ExchangeLaurent exchange_laurent(const Seed& s, int i);

/// Seed mutation at k. The new seed is window-relabeled: the fresh cluster
/// variable x'_k occupies index k of the result.
MutationResult mutate(const Seed& s, int k);

/// Decision procedure for "P generates a period 1 seed" (pseudoperiod via
/// generate_seed, then hat P_0 = P_0 via the dependency or term-count
/// shortcut, else direct computation).
PeriodReport is_period1(const LaurentPoly& P, int n, int pivot = -1);

/// Independent oracle: mutate at 0 and compare each P_i against the
/// rotation of P'_{i+1} per the period-1 seed definition.
bool verify_period1_by_mutation(const Seed& s);

}  // namespace lp
