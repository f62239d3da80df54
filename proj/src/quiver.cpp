#include "lp/quiver.hpp"

#include <sstream>

namespace lp {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

long epsilon(const BMatrix& B, int i, int j) {
    if (B.at(0, i) * B.at(0, j) >= 0) return 0;
    return B.at(i, 0) * std::abs(B.at(0, j));
}

}  // namespace

BMatrix BMatrix::zero(int n) {
    BMatrix m;
    m.n = n;
    m.b.assign(static_cast<std::size_t>(n),
               std::vector<long>(static_cast<std::size_t>(n), 0));
    return m;
}

void validate_bmatrix(const BMatrix& B) {
    require(B.n >= 1, "B-matrix must be nonempty");
    require(static_cast<int>(B.b.size()) == B.n, "B-matrix row count mismatch");
    for (int i = 0; i < B.n; ++i) {
        require(static_cast<int>(B.b[static_cast<std::size_t>(i)].size()) == B.n,
                "B-matrix column count mismatch");
        require(B.at(i, i) == 0, "B-matrix must have zero diagonal");
    }
}

bool is_mutable(const BMatrix& B, int i) {
    for (int j = 0; j < B.n; ++j)
        if (j != i && B.at(j, i) != 0 && B.at(i, j) == 0) return false;
    return true;
}

BMatrix mutate_bmatrix(const BMatrix& B, int k) {
    validate_bmatrix(B);
    require(k >= 0 && k < B.n, "mutate_bmatrix: vertex out of range");
    require(is_mutable(B, k), "mutate_bmatrix: vertex is not mutable");
    BMatrix out = BMatrix::zero(B.n);
    for (int i = 0; i < B.n; ++i)
        for (int j = 0; j < B.n; ++j) {
            if (i == j) continue;
            if (i == k || j == k) {
                out.at(i, j) = -B.at(i, j);
            } else {
                long corr = 0;
                if (B.at(k, i) * B.at(k, j) < 0)
                    corr = B.at(i, k) * std::labs(B.at(k, j));
                out.at(i, j) = B.at(i, j) + corr;
            }
        }
    return out;
}

Seed seed_from_quiver(const BMatrix& B) {
    validate_bmatrix(B);
    Seed s;
    s.n = B.n;
    s.polys.reserve(static_cast<std::size_t>(B.n));
    for (int i = 0; i < B.n; ++i) {
        Monomial::Storage pos, neg;
        for (int j = 0; j < B.n; ++j) {
            long e = B.at(i, j);
            if (e > 0) pos.emplace_back(j, static_cast<int>(e));
            if (e < 0) neg.emplace_back(j, static_cast<int>(-e));
        }
        LaurentPoly p =
            LaurentPoly::term(Monomial::from_entries(std::move(pos)), Int(1)) +
            LaurentPoly::term(Monomial::from_entries(std::move(neg)), Int(1));
        s.polys.push_back(std::move(p));
    }
    return s;
}

BMatrix canonical_quiver_from_binomial_seed(const Seed& s) {
    validate_seed_hard(s);
    BMatrix B = BMatrix::zero(s.n);
    for (int i = 0; i < s.n; ++i) {
        const LaurentPoly& p = s.polys[static_cast<std::size_t>(i)];
        require(p.num_terms() == 2, "seed polynomial is not a binomial");
        const Term& t0 = p.terms()[0];
        const Term& t1 = p.terms()[1];
        require(t0.coeff == 1 && t1.coeff == 1,
                "binomial seed must have unit coefficients");
        for (auto& [v, e] : t0.mono.entries())
            require(t1.mono.exponent(v) == 0,
                    "binomial monomials must have disjoint supports");
        // first (canonically larger) monomial positive, second negative
        for (auto& [v, e] : t0.mono.entries()) B.at(i, v) = e;
        for (auto& [v, e] : t1.mono.entries()) B.at(i, v) = -e;
        require(B.at(i, i) == 0, "binomial seed row touches its own vertex");
    }
    // canonical orientation: rows with b[i][0] sharing the sign of b[0][i]
    // are reversed (half-edges attached at i flipped)
    for (int i = 1; i < s.n; ++i) {
        if (B.at(i, 0) != 0 && B.at(0, i) != 0 &&
            (B.at(i, 0) > 0) == (B.at(0, i) > 0))
            for (int j = 0; j < s.n; ++j) B.at(i, j) = -B.at(i, j);
    }
    return B;
}

bool is_period1_quiver(const BMatrix& B) {
    validate_bmatrix(B);
    if (!is_mutable(B, 0)) return false;
    BMatrix t = mutate_bmatrix(B, 0);
    // relabeled entry (i, j) of B is b[(i-1) mod n][(j-1) mod n]
    for (int i = 0; i < B.n; ++i)
        for (int j = 0; j < B.n; ++j) {
            int pi = (i - 1 + B.n) % B.n;
            int pj = (j - 1 + B.n) % B.n;
            if (t.at(i, j) != B.at(pi, pj)) return false;
        }
    return true;
}

bool is_sink_type(const BMatrix& B) {
    for (int i = 1; i < B.n; ++i)
        if (B.at(0, i) > 0 || B.at(i, 0) < 0) return false;
    return true;
}

bool check_sink_type_theorem(const BMatrix& B) {
    validate_bmatrix(B);
    require(is_sink_type(B), "vertex 0 is not a sink");
    for (int i = 1; i < B.n; ++i) {
        // (1) b[0][i], b[0][n-i] both negative or both zero
        if ((B.at(0, i) == 0) != (B.at(0, B.n - i) == 0)) return false;
        // (2) b[i][0] = -b[0][n-i]
        if (B.at(i, 0) != -B.at(0, B.n - i)) return false;
    }
    // (3) Toeplitz structure from row 0
    for (int i = 1; i < B.n; ++i)
        for (int j = 1; j < B.n; ++j) {
            if (i == j) continue;
            long expect = i < j ? B.at(0, j - i) : -B.at(0, B.n - i + j);
            if (B.at(i, j) != expect) return false;
        }
    return true;
}

bool is_mutual_at_zero(const BMatrix& B) {
    for (int i = 1; i < B.n; ++i) {
        long a = B.at(0, i), c = B.at(i, 0);
        if ((a == 0) != (c == 0)) return false;
        if (a != 0 && (a > 0) == (c > 0)) return false;
    }
    return true;
}

bool check_mutual_theorem(const BMatrix& B) {
    validate_bmatrix(B);
    require(is_mutual_at_zero(B), "quiver is not mutual at vertex 0");
    // (1) is the mutuality assumption itself; (2):
    for (int i = 1; i < B.n; ++i)
        if (B.at(i, 0) != -B.at(0, B.n - i)) return false;
    // (3) and (4) with eps depending only on row/column 0
    for (int i = 1; i < B.n; ++i)
        for (int j = 1; j < B.n; ++j) {
            if (i == j) continue;
            long acc = 0;
            if (i < j) {
                for (int k = 0; k <= i; ++k) acc += epsilon(B, i - k, j - k);
                if (B.at(i, j) != -acc + B.at(0, j - i)) return false;
            } else {
                for (int k = 0; k <= j; ++k) acc += epsilon(B, i - k, j - k);
                if (B.at(i, j) != -acc - B.at(0, B.n - i + j)) return false;
            }
        }
    return true;
}

bool theorem_binomial_membership(const std::vector<long>& a,
                                 const std::vector<long>& b, int n) {
    require(static_cast<int>(a.size()) == n - 1 &&
                static_cast<int>(b.size()) == n - 1,
            "exponent vectors must have length n-1");
    for (int i = 1; i <= n - 1; ++i) {
        long ai = a[static_cast<std::size_t>(i - 1)];
        long bi = b[static_cast<std::size_t>(i - 1)];
        require(ai >= 0 && bi >= 0, "exponents must be nonnegative");
        require(!(ai != 0 && bi != 0), "monomial supports must be disjoint");
    }
    for (int i = 1; i <= n - 1; ++i) {
        if ((a[static_cast<std::size_t>(i - 1)] == 0) !=
            (a[static_cast<std::size_t>(n - i - 1)] == 0))
            return false;
        if ((b[static_cast<std::size_t>(i - 1)] == 0) !=
            (b[static_cast<std::size_t>(n - i - 1)] == 0))
            return false;
    }
    return true;
}

std::string to_dot(const BMatrix& B) {
    std::ostringstream os;
    os << "digraph double_quiver {\n";
    for (int i = 0; i < B.n; ++i) os << "  x" << i << ";\n";
    for (int i = 0; i < B.n; ++i)
        for (int j = 0; j < B.n; ++j) {
            long e = B.at(i, j);
            if (e == 0) continue;
            // half-edges attached at i, drawn from i's side
            if (e > 0)
                os << "  x" << i << " -> x" << j << " [label=\"" << e
                   << "@x" << i << "\"];\n";
            else
                os << "  x" << j << " -> x" << i << " [label=\"" << -e
                   << "@x" << i << "\", style=dashed];\n";
        }
    os << "}\n";
    return os.str();
}

}  // namespace lp
