#include "subzeta/oracle.hpp"

#include <algorithm>

namespace subzeta {

namespace {

// Determinant by cofactor expansion; fine at oracle dimensions.
BigInt det_dense(const std::vector<std::vector<BigInt>>& m) {
    const size_t n = m.size();
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    BigInt det = 0;
    std::vector<std::vector<BigInt>> minor(n - 1, std::vector<BigInt>(n - 1));
    for (size_t c = 0; c < n; ++c) {
        if (m[0][c] == 0) continue;
        for (size_t i = 1; i < n; ++i) {
            size_t mc = 0;
            for (size_t j = 0; j < n; ++j) {
                if (j == c) continue;
                minor[i - 1][mc++] = m[i][j];
            }
        }
        BigInt term = m[0][c] * det_dense(minor);
        if (c % 2 == 0)
            det += term;
        else
            det -= term;
    }
    return det;
}

// adj(M) with M * adj = det * I; adj[i][j] = (-1)^(i+j) det(minor_ji).
std::vector<std::vector<BigInt>> adjugate(const std::vector<std::vector<BigInt>>& m) {
    const size_t n = m.size();
    std::vector<std::vector<BigInt>> adj(n, std::vector<BigInt>(n));
    if (n == 1) {
        adj[0][0] = 1;
        return adj;
    }
    std::vector<std::vector<BigInt>> minor(n - 1, std::vector<BigInt>(n - 1));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            size_t mr = 0;
            for (size_t r = 0; r < n; ++r) {
                if (r == j) continue;
                size_t mc = 0;
                for (size_t c = 0; c < n; ++c) {
                    if (c == i) continue;
                    minor[mr][mc++] = m[r][c];
                }
                ++mr;
            }
            BigInt cof = det_dense(minor);
            if ((i + j) % 2 == 1) cof = -cof;
            adj[i][j] = cof;
        }
    return adj;
}

bool solves_integrally(const std::vector<std::vector<BigInt>>& adj, const BigInt& det,
                       const std::vector<BigInt>& v) {
    const size_t n = adj.size();
    for (size_t j = 0; j < n; ++j) {
        BigInt num = 0;
        for (size_t i = 0; i < n; ++i) num += v[i] * adj[i][j];
        if (num % det != 0) return false;
    }
    return true;
}

std::vector<std::vector<BigInt>> dense_rows(const GlobalHnf& rep) {
    const size_t n = static_cast<size_t>(rep.dim());
    std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n, 0));
    for (size_t i = 0; i < n; ++i) {
        m[i][i] = rep.diag[i];
        for (size_t j = 0; j < i; ++j) m[i][j] = rep.below[i][j];
    }
    return m;
}

}  // namespace

BigInt GlobalHnf::determinant() const {
    BigInt d = 1;
    for (const auto& v : diag) d *= v;
    return d;
}

bool lattice_contains(const GlobalHnf& rep, const std::vector<BigInt>& v) {
    if (v.size() != static_cast<size_t>(rep.dim()))
        throw InputError("vector length does not match lattice dimension");
    auto m = dense_rows(rep);
    return solves_integrally(adjugate(m), det_dense(m), v);
}

bool lattice_contains(const HnfRep& rep, const std::vector<BigInt>& v) {
    const size_t n = rep.diag.size();
    if (v.size() != n) throw InputError("vector length does not match lattice dimension");
    std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n, 0));
    int total = 0;
    for (size_t i = 0; i < n; ++i) {
        m[i][i] = rep.diag_value(static_cast<int>(i));
        total += rep.diag[i];
        for (size_t j = 0; j < i; ++j) m[i][j] = rep.below[i][j];
    }
    // p-integrality: p^total must divide every Cramer numerator.
    const BigInt det = big_pow(rep.p, static_cast<unsigned>(total));
    auto adj = adjugate(m);
    // det_dense(m) = +p^total for a lower-triangular positive diagonal.
    return solves_integrally(adj, det, v);
}

namespace {

void divisor_tuples(const BigInt& k, int parts, std::vector<BigInt>& cur,
                    std::vector<std::vector<BigInt>>& out) {
    if (parts == 1) {
        cur.push_back(k);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (BigInt d = 1; d <= k; ++d) {
        if (k % d != 0) continue;
        cur.push_back(d);
        divisor_tuples(k / d, parts - 1, cur, out);
        cur.pop_back();
    }
}

std::vector<BigInt> ring_product(const StructureRing& ring, const std::vector<BigInt>& a,
                                 const std::vector<BigInt>& b) {
    const int d = ring.rank();
    std::vector<BigInt> t(static_cast<size_t>(d), 0);
    for (int i = 0; i < d; ++i) {
        if (a[static_cast<size_t>(i)] == 0) continue;
        for (int j = 0; j < d; ++j) {
            if (b[static_cast<size_t>(j)] == 0) continue;
            for (const auto& [m, coef] : ring.product_support(i, j))
                t[static_cast<size_t>(m)] += a[static_cast<size_t>(i)] * b[static_cast<size_t>(j)] * coef;
        }
    }
    return t;
}

}  // namespace

BigInt count_global(const StructureRing& ring, const BigInt& k, bool unital,
                    unsigned long long budget) {
    if (k < 1) throw InputError("index must be >= 1");
    const int d = ring.rank();

    std::vector<std::vector<BigInt>> tuples;
    std::vector<BigInt> cur;
    divisor_tuples(k, d, cur, tuples);

    // candidate assignments across all diagonals; the oracle refuses rather
    // than grind past its desk-scale budget
    BigInt work = 0;
    for (const auto& t : tuples) {
        BigInt w = 1;
        for (int j = 0; j < d; ++j)
            for (int below = 0; below < d - 1 - j; ++below) w *= t[static_cast<size_t>(j)];
        work += w;
    }
    if (work > budget)
        throw BudgetExceeded("oracle workload " + work.str() + " exceeds budget " +
                             std::to_string(budget));

    BigInt total = 0;
    for (const auto& diag : tuples) {
        GlobalHnf rep;
        rep.diag = diag;
        rep.below.resize(static_cast<size_t>(d));
        for (int i = 0; i < d; ++i) rep.below[static_cast<size_t>(i)].assign(static_cast<size_t>(i), 0);

        // odometer over all below-diagonal residues
        while (true) {
            auto m = dense_rows(rep);
            auto adj = adjugate(m);
            BigInt det = rep.determinant();
            bool ok = true;
            for (int i = 0; i < d && ok; ++i)
                for (int j = i; j < d && ok; ++j) {
                    auto prod = ring_product(ring, m[static_cast<size_t>(i)], m[static_cast<size_t>(j)]);
                    if (!solves_integrally(adj, det, prod)) ok = false;
                }
            if (ok && unital && !solves_integrally(adj, det, ring.identity())) ok = false;
            if (ok) total += 1;

            // advance
            int i = 1, j = 0;
            bool carried = true;
            for (i = 1; i < d && carried; ++i) {
                for (j = 0; j < i && carried; ++j) {
                    auto& e = rep.below[static_cast<size_t>(i)][static_cast<size_t>(j)];
                    e += 1;
                    if (e < rep.diag[static_cast<size_t>(j)])
                        carried = false;
                    else
                        e = 0;
                }
            }
            if (carried) break;
        }
    }
    return total;
}

}  // namespace subzeta
