#pragma once

#include "subzeta/enumerate.hpp"
#include "subzeta/numeric.hpp"
#include "subzeta/ring.hpp"

#include <vector>

namespace subzeta {

/// Integer Hermite form over Z: positive diagonal, below[i][j] in
/// [0, diag[j]).  Deliberately naive desk-scale oracle counterpart of
/// HnfRep; determinant = index of the spanned sublattice.
struct GlobalHnf {
    std::vector<BigInt> diag;
    std::vector<std::vector<BigInt>> below;  // below[i] has i entries

    int dim() const { return static_cast<int>(diag.size()); }
    BigInt determinant() const;
};

/// Membership by Cramer solve: v is in the row span with integer
/// coefficients iff det divides every coordinate of v * adj(M).  This is a
/// different decision procedure from the engine's back-substitution.
bool lattice_contains(const GlobalHnf& rep, const std::vector<BigInt>& v);

/// p-adic variant: coefficients must be p-integral, i.e. p^(sum k_i)
/// divides every coordinate of v * adj(M).
bool lattice_contains(const HnfRep& rep, const std::vector<BigInt>& v);

inline constexpr unsigned long long kOracleBudget = 100'000'000ull;

/// Exact number of index-k subrings (orders when unital) of `ring`, by full
/// enumeration of integer Hermite forms of determinant k with closure decided
/// through lattice_contains on all pairwise basis-row products.
BigInt count_global(const StructureRing& ring, const BigInt& k, bool unital,
                    unsigned long long budget = kOracleBudget);

}  // namespace subzeta
