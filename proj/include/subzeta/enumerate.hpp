#pragma once

#include "subzeta/numeric.hpp"
#include "subzeta/ring.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <tuple>
#include <vector>

namespace subzeta {

/// One finite-index sublattice of Z^d in column-reduced Hermite form:
/// lower triangular, diagonal entries p^diag[i], and below[i][j] in
/// [0, p^diag[j]) for j < i.  Rows generate the lattice.
struct HnfRep {
    long long p = 0;
    std::vector<int> diag;                   // exponents k_i
    std::vector<std::vector<BigInt>> below;  // below[i] has i entries

    BigInt diag_value(int i) const { return big_pow(p, static_cast<unsigned>(diag[static_cast<size_t>(i)])); }
};

/// True iff the rows of `rep` span a multiplicatively closed sublattice of
/// `ring` over the p-adic integers: every pairwise row product solves back
/// through the triangle with each residual divisible by the column's
/// diagonal.
bool closure_check(const StructureRing& ring, const HnfRep& rep);

/// True iff the ring identity lies in the row span with p-integral
/// coefficients.
bool unital_check(const StructureRing& ring, const HnfRep& rep);

inline constexpr unsigned long long kDefaultNodeBudget = 4'000'000'000ull;

struct EnumOptions {
    bool unital = false;
    // Incremental constraint checking keyed on product support; turning it
    // off forces the assign-everything-then-check reference path.
    bool pruned = true;
    unsigned long long node_budget = kDefaultNodeBudget;
    std::function<void(const HnfRep&)> collector;  // optional representative sink
};

/// Number of Hermite representatives with the given diagonal exponents that
/// pass closure (and the identity test when opts.unital).
BigInt count_for_diagonal(const StructureRing& ring, long long p, const std::vector<int>& diag,
                          const EnumOptions& opts = {});

/// Exact normalized p-adic volume of the closed matrices with these diagonal
/// exponents: value = count * p^(-exponent).
struct MuVolume {
    BigInt count;
    long long exponent;  // sum over columns j of (d-1-j) * k_j, 0-based

    double approx(long long p) const;
};

MuVolume mu_volume(const StructureRing& ring, long long p, const std::vector<int>& diag,
                   const EnumOptions& opts = {});

/// Memo table for subring counts keyed by (ring hash, p, m, unital), with an
/// optional JSON-lines backing file (append-only) and a recompute-and-compare
/// audit mode.
class CountTable {
public:
    CountTable() = default;
    explicit CountTable(std::string path);

    using Key = std::tuple<std::uint64_t, long long, int, bool>;

    std::optional<BigInt> lookup(const Key& key) const;
    void store(const Key& key, const BigInt& value);

    void set_audit(bool on) { audit_ = on; }
    bool audit() const { return audit_; }
    size_t size() const;
    size_t hits() const { return hits_; }

private:
    void append_record(const Key& key, const BigInt& value);

    mutable std::mutex mu_;
    std::map<Key, BigInt> entries_;
    std::string path_;
    bool audit_ = false;
    mutable size_t hits_ = 0;
};

struct CountConfig {
    bool unital = false;
    int workers = 1;
    unsigned long long node_budget = kDefaultNodeBudget;
    CountTable* table = nullptr;
};

/// a(p^m): subrings (orders when unital) of index p^m, summed over all
/// diagonal exponent vectors of total m in colexicographic order.
BigInt count_index(const StructureRing& ring, long long p, int m, const CountConfig& cfg = {});

/// Coefficients a(p^0), ..., a(p^m_max) of the local Dirichlet factor.
std::vector<BigInt> local_factor_coeffs(const StructureRing& ring, long long p, int m_max,
                                        const CountConfig& cfg = {});

/// Compositions of m into d non-negative parts, colexicographic order.
std::vector<std::vector<int>> compositions_colex(int m, int d);

}  // namespace subzeta
