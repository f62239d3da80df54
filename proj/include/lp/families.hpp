#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lp/lpseed.hpp"
#include "lp/polycore.hpp"

namespace lp {

enum class Family {
    SymmetricSecondPowers,
    SinkBinomial,
    Extreme,
    Singleton,
    Chain,
    MultilinearSymmetric,
    Jumping,
    Hopping,
    FlipSymmetric,
    Balanced,
    VectorSum,
    LittlePi,
    Pi,
    GaleRobinson,
};

const char* family_name(Family f);
std::optional<Family> family_from_name(const std::string& name);

struct VectorSumTerm {
    std::vector<long> b;  // length n-1, 0 < b_i < a_i
    long coeff = 1;
};

/// Parameters for one member of a named family. Fields are used per family:
///  - SymmetricSecondPowers: elem = coefficients of E_1,E_2,... (tail zeros
///    implied), B = constant term.
///  - SinkBinomial: exps = a_1..a_{n-1} >= 0 with a_i = 0 iff a_{n-i} = 0.
///  - Extreme: A, B.
///  - Singleton: n even; coeffs = a_0..a_d of the univariate polynomial in
///    x_{n/2} (or A, B for x^2 + A x + B when coeffs is empty).
///  - Chain / MultilinearSymmetric: n odd, A, B.
///  - Jumping: r, A.      Hopping: r, A, B.
///  - FlipSymmetric: exps = signed exponent vector e_1..e_{n-1} (e_i > 0 on
///    the left monomial, e_i < 0 on the right one).
///  - Balanced: exps as FlipSymmetric, m >= 2, balanced_A = A_1..A_{m/2}.
///  - VectorSum: exps = a_1..a_{n-1} >= 1, terms = the b-vectors with
///    coefficients.
///  - LittlePi: k, A.     Pi: k, A, B, a1, b1, a2, b2.
///  - GaleRobinson: p, q, r with p+q+r = n, coefficients A, B, C.
struct FamilySpec {
    Family family = Family::Extreme;
    int n = 0;
    long A = 0, B = 0, C = 0;
    long r = 0, k = 0, m = 0, p = 0, q = 0;
    long a1 = 0, b1 = 0, a2 = 0, b2 = 0;
    std::vector<long> exps;
    std::vector<long> coeffs;
    std::vector<long> elem;
    std::vector<long> balanced_A;
    std::vector<VectorSumTerm> terms;
};

/// The polynomial displayed for this family member. Throws
/// std::invalid_argument naming the violated constraint.
LaurentPoly build(const FamilySpec& spec);

/// The full seed from the closed-form intermediate polynomials, normalized
/// per LP1 (each entry stripped of monomial factors). Absent (with reason)
/// for parameter regimes without closed-form intermediates.
struct ExpectedSeedResult {
    std::optional<Seed> seed;
    std::string reason;  // set when absent
};
ExpectedSeedResult expected_seed(const FamilySpec& spec);

/// k-expansion: G(x_1..x_{nk-1}) = F(x_k, x_{2k}, ..., x_{(n-1)k}).
LaurentPoly expand(const LaurentPoly& F, int n, int k);

/// Variable reversal x_i <-> x_{n-i}.
LaurentPoly reflect(const LaurentPoly& F, int n);

enum class N2Class { Palindromic, AntipalindromicEven, MonicDeg2, None };

/// Coefficient test of the n = 2 classification: a_i = a_{d-i} a_0^{d-i-1}
/// for all i. Irreducibility side conditions are not enforced here.
N2Class classify_n2(const LaurentPoly& P);

struct N3Class {
    int class_id = 0;  // 1..10, or 0 for none
    std::map<std::string, long> params;
};

/// Pattern-match the ten n = 3 families by exact coefficient extraction;
/// returns the first match.
N3Class classify_n3(const LaurentPoly& P);

}  // namespace lp
