#pragma once

#include <string>
#include <vector>

#include "lp/lpseed.hpp"
#include "lp/polycore.hpp"

namespace lp {

/// B-matrix of a double quiver: n x n integers with zero diagonal. Entry
/// b[i][j] counts half-edges between i and j attached at i, signed positive
/// when they point away from i.
struct BMatrix {
    int n = 0;
    std::vector<std::vector<long>> b;

    static BMatrix zero(int n);
    long at(int i, int j) const { return b[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
    long& at(int i, int j) { return b[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
    bool operator==(const BMatrix& o) const = default;
};

/// Throws unless square with zero diagonal.
void validate_bmatrix(const BMatrix& B);

/// Vertex i is mutable when b[j][i] != 0 implies b[i][j] != 0 for all j.
bool is_mutable(const BMatrix& B, int i);

/// B-matrix mutation at a mutable vertex k.
BMatrix mutate_bmatrix(const BMatrix& B, int k);

/// The binomial seed attached to a B-matrix: P_i = prod_{b_ij>0} x_j^{b_ij}
/// + prod_{b_ij<0} x_j^{-b_ij}.
Seed seed_from_quiver(const BMatrix& B);

/// Inverse of the above for seeds whose P_i are coprime-support binomials
/// with unit coefficients. Rows are oriented canonically: b[0][*] takes the
/// canonically larger monomial positive; rows i >= 1 are flipped so that
/// b[i][0] and b[0][i] have opposite signs (mutual at 0) when both nonzero.
BMatrix canonical_quiver_from_binomial_seed(const Seed& s);

/// Mutate at 0, relabel (0,1,...,n-1) -> (n-1,0,...,n-2), compare.
bool is_period1_quiver(const BMatrix& B);

/// Vertex 0 is a sink: every half-edge incident to 0 points into 0.
bool is_sink_type(const BMatrix& B);

/// Conditions (1)-(3) of the sink-type period-1 classification. B must be
/// sink-type at vertex 0.
bool check_sink_type_theorem(const BMatrix& B);

/// b[0][i] and b[i][0] opposite in sign or both zero, for all i.
bool is_mutual_at_zero(const BMatrix& B);

/// Conditions (1)-(4) of the mutual period-1 classification. B must be
/// mutual at vertex 0.
bool check_mutual_theorem(const BMatrix& B);

/// Zero-pattern test of the binomial classification: a_i = 0 iff a_{n-i} = 0
/// and b_j = 0 iff b_{n-j} = 0. Vectors are indexed 1..n-1 and must have
/// disjoint supports.
bool theorem_binomial_membership(const std::vector<long>& a,
                                 const std::vector<long>& b, int n);

/// DOT rendering of the half-edge graph (deterministic).
std::string to_dot(const BMatrix& B);

}  // namespace lp
