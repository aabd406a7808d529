#pragma once

#include "subzeta/numeric.hpp"

#include <optional>
#include <string>
#include <vector>

namespace subzeta {

/// A commutative ring with identity of finite rank over the integers,
/// presented by a structure-constant tensor: basis products satisfy
/// e_i * e_j = sum_k constant(i,j,k) e_k  (indices 0-based internally,
/// 1-based in the JSON interchange format).
class StructureRing {
public:
    StructureRing(int rank, std::vector<BigInt> constants, std::vector<BigInt> identity,
                  std::string label);

    int rank() const { return rank_; }
    const std::string& label() const { return label_; }
    const std::vector<BigInt>& identity() const { return identity_; }

    const BigInt& constant(int i, int j, int k) const {
        return constants_[(static_cast<size_t>(i) * rank_ + j) * rank_ + k];
    }

    // Nonzero entries of the product e_i * e_j, as (coordinate, coefficient).
    const std::vector<std::pair<int, BigInt>>& product_support(int i, int j) const {
        return support_[static_cast<size_t>(i) * rank_ + j];
    }

    /// Largest coordinate that can appear in a product v * w of vectors
    /// supported on coordinates <= i and <= j respectively; -1 if all such
    /// products vanish.  Drives incremental constraint checking during
    /// Hermite-form enumeration.
    int max_product_coord(int i, int j) const {
        return max_coord_[static_cast<size_t>(i) * rank_ + j];
    }

    /// Content hash of the canonical serialization; keys the count cache.
    std::uint64_t hash() const { return hash_; }

    std::string canonical_text() const;

    struct Violation {
        std::string kind;  // "commutativity" | "associativity" | "identity"
        int i, j, k;
        std::string detail;
    };

    /// Checks commutativity, associativity and the identity law; returns the
    /// first violated triple, or nullopt when the tensor is a valid
    /// presentation.  Never throws on bad tensors.
    std::optional<Violation> validate() const;

private:
    int rank_;
    std::vector<BigInt> constants_;  // dense d*d*d tensor
    std::vector<BigInt> identity_;
    std::string label_;
    std::vector<std::vector<std::pair<int, BigInt>>> support_;
    std::vector<int> max_coord_;
    std::uint64_t hash_ = 0;
};

/// Multiset of residue degrees (a partition of the rank).
struct SplittingType {
    std::vector<int> degrees;  // as given; sum = n

    int n() const;
    int count_of(int degree) const;  // multiplicity of a part
    int v() const { return count_of(1); }
    int w() const { return count_of(2); }
    std::string str() const;  // e.g. "1^2 2^1 3^1"
};

/// All partitions of n, each sorted descending; deterministic order.
std::vector<SplittingType> partitions_of(int n);

StructureRing make_split_ring(int rank);

/// Z[x]/(poly) with basis 1, x, ..., x^{deg-1}.  `poly` holds coefficients
/// with constant term first and must be monic.
StructureRing make_monogenic_ring(const std::vector<BigInt>& poly);

StructureRing product_ring(const StructureRing& a, const StructureRing& b);

/// Product of monogenic models, one factor per part of `type`, each defined
/// by a monic polynomial irreducible mod p.  Basis blocks are ordered:
/// parts >= 3 by decreasing degree, then the degree-1 parts, then the
/// degree-2 pairs.
StructureRing make_unramified_product(long long p, const SplittingType& type);

// JSON interchange (ring-spec files; sparse 1-based [i,j,k,c] triples).
StructureRing ring_from_json_text(const std::string& text);
std::string ring_to_json_text(const StructureRing& ring);

}  // namespace subzeta
