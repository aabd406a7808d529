#include "subzeta/enumerate.hpp"

#include <json.hpp>

#include <atomic>
#include <cmath>
#include <fstream>
#include <thread>

namespace subzeta {

namespace {

// Back-substitution of `target` through the rows of a lower-triangular
// matrix with diagonal p^k[j]: succeeds iff each residual coordinate is
// divisible by its column's diagonal.  Shared by the closure and identity
// tests; `rows(i, j)` must return entry (i, j) for j < i.
template <typename Int, typename RowFn>
bool back_substitute(std::vector<Int>& target, int top, const std::vector<Int>& diag_pow,
                     const RowFn& rows) {
    for (int k = top; k >= 0; --k) {
        Int& t = target[static_cast<size_t>(k)];
        if (t == 0) continue;
        if (t % diag_pow[static_cast<size_t>(k)] != 0) return false;
        Int q = t / diag_pow[static_cast<size_t>(k)];
        t = 0;
        for (int l = 0; l < k; ++l) target[static_cast<size_t>(l)] -= q * rows(k, l);
    }
    return true;
}

template <typename Int>
class DiagonalEnumerator {
public:
    DiagonalEnumerator(const StructureRing& ring, long long p, const std::vector<int>& diag,
                       const EnumOptions& opts)
        : ring_(ring), p_(p), k_(diag), opts_(opts), d_(ring.rank()) {
        const size_t d = static_cast<size_t>(d_);
        pk_.resize(d);
        for (size_t j = 0; j < d; ++j) pk_[j] = int_pow(static_cast<unsigned>(k_[j]));
        ident_.resize(d);
        for (size_t j = 0; j < d; ++j) ident_[j] = convert(ring.identity()[j]);
        cc_.resize(d * d);
        for (int a = 0; a < d_; ++a)
            for (int b = 0; b < d_; ++b) {
                auto& dst = cc_[static_cast<size_t>(a) * d + static_cast<size_t>(b)];
                for (const auto& [m, coef] : ring.product_support(a, b)) dst.emplace_back(m, convert(coef));
            }

        rows_.assign(d, std::vector<Int>(d, Int(0)));
        for (int i = 0; i < d_; ++i) rows_[static_cast<size_t>(i)][static_cast<size_t>(i)] = pk_[static_cast<size_t>(i)];

        // Pair (i, j), i <= j, becomes checkable once every row its product
        // can touch is assigned.
        pairs_at_row_.assign(d, {});
        for (int i = 0; i < d_; ++i)
            for (int j = i; j < d_; ++j) {
                int ready = opts_.pruned ? std::max(j, ring.max_product_coord(i, j)) : d_ - 1;
                pairs_at_row_[static_cast<size_t>(ready)].emplace_back(i, j);
            }
        scratch_.resize(d);

        // Odometer widths per row; anything past 2^62 residues would dwarf
        // every budget.
        ranges_.resize(d);
        counters_.resize(d);
        for (int r = 0; r < d_; ++r) {
            ranges_[static_cast<size_t>(r)].resize(static_cast<size_t>(r));
            counters_[static_cast<size_t>(r)].assign(static_cast<size_t>(r), 0);
            for (int j = 0; j < r; ++j) {
                if (k_[static_cast<size_t>(j)] > 0 &&
                    std::log2(static_cast<double>(p_)) * k_[static_cast<size_t>(j)] > 62.0)
                    throw BudgetExceeded("column range p^k exceeds enumerable width");
                unsigned long long w = 1;
                for (int e = 0; e < k_[static_cast<size_t>(j)]; ++e) w *= static_cast<unsigned long long>(p_);
                ranges_[static_cast<size_t>(r)][static_cast<size_t>(j)] = w;
            }
        }
    }

    unsigned long long run() {
        nodes_ = 0;
        if (!pairs_ok(0)) return 0;
        return descend(1);
    }

    unsigned long long nodes() const { return nodes_; }

private:
    Int convert(const BigInt& v) const {
        if constexpr (std::is_same_v<Int, BigInt>)
            return v;
        else {
            // callers guarantee the selected integer type is wide enough
            Int r = 0;
            bool neg = v < 0;
            BigInt a = neg ? BigInt(-v) : v;
            std::string s = a.str();
            for (char c : s) r = r * 10 + (c - '0');
            return neg ? -r : r;
        }
    }

    Int int_pow(unsigned e) const {
        Int r = 1;
        for (unsigned i = 0; i < e; ++i) r *= p_;
        return r;
    }

    bool pairs_ok(int row) {
        for (auto [i, j] : pairs_at_row_[static_cast<size_t>(row)])
            if (!pair_ok(i, j)) return false;
        return true;
    }

    bool pair_ok(int i, int j) {
        const int top = std::max(j, ring_.max_product_coord(i, j));
        auto& t = scratch_;
        for (int m = 0; m <= top; ++m) t[static_cast<size_t>(m)] = 0;
        const auto& vi = rows_[static_cast<size_t>(i)];
        const auto& vj = rows_[static_cast<size_t>(j)];
        for (int a = 0; a <= i; ++a) {
            const Int& va = vi[static_cast<size_t>(a)];
            if (va == 0) continue;
            const auto* cc_row = &cc_[static_cast<size_t>(a) * d_];
            for (int b = 0; b <= j; ++b) {
                const Int& vb = vj[static_cast<size_t>(b)];
                if (vb == 0) continue;
                for (const auto& [m, coef] : cc_row[b]) t[static_cast<size_t>(m)] += va * vb * coef;
            }
        }
        return back_substitute(t, top, pk_, [this](int r, int l) -> const Int& {
            return rows_[static_cast<size_t>(r)][static_cast<size_t>(l)];
        });
    }

    bool identity_ok() {
        auto t = ident_;
        return back_substitute(t, d_ - 1, pk_, [this](int r, int l) -> const Int& {
            return rows_[static_cast<size_t>(r)][static_cast<size_t>(l)];
        });
    }

    void charge_node() {
        if (++nodes_ > opts_.node_budget)
            throw BudgetExceeded("enumeration exceeded node budget of " +
                                 std::to_string(opts_.node_budget));
    }

    void emit() const {
        HnfRep rep;
        rep.p = p_;
        rep.diag = k_;
        rep.below.resize(static_cast<size_t>(d_));
        for (int i = 0; i < d_; ++i) {
            rep.below[static_cast<size_t>(i)].resize(static_cast<size_t>(i));
            for (int j = 0; j < i; ++j) {
                if constexpr (std::is_same_v<Int, BigInt>)
                    rep.below[static_cast<size_t>(i)][static_cast<size_t>(j)] = rows_[static_cast<size_t>(i)][static_cast<size_t>(j)];
                else
                    rep.below[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                        BigInt(to_string(static_cast<Int128>(rows_[static_cast<size_t>(i)][static_cast<size_t>(j)])));
            }
        }
        opts_.collector(rep);
    }

    unsigned long long descend(int r) {
        if (r == d_) {
            if (opts_.unital && !identity_ok()) return 0;
            if (opts_.collector) emit();
            return 1;
        }
        const auto& range = ranges_[static_cast<size_t>(r)];
        auto& ctr = counters_[static_cast<size_t>(r)];
        auto& row = rows_[static_cast<size_t>(r)];
        for (int j = 0; j < r; ++j) {
            ctr[static_cast<size_t>(j)] = 0;
            row[static_cast<size_t>(j)] = 0;
        }

        unsigned long long total = 0;
        while (true) {
            charge_node();
            if (pairs_ok(r)) total += descend(r + 1);
            int j = 0;
            while (j < r) {
                if (++ctr[static_cast<size_t>(j)] < range[static_cast<size_t>(j)]) {
                    row[static_cast<size_t>(j)] += 1;
                    break;
                }
                ctr[static_cast<size_t>(j)] = 0;
                row[static_cast<size_t>(j)] = 0;
                ++j;
            }
            if (j == r) break;
        }
        for (int j = 0; j < r; ++j) row[static_cast<size_t>(j)] = 0;
        return total;
    }

    const StructureRing& ring_;
    const long long p_;
    const std::vector<int> k_;
    const EnumOptions& opts_;
    const int d_;
    std::vector<Int> pk_;
    std::vector<Int> ident_;
    std::vector<std::vector<std::pair<int, Int>>> cc_;
    std::vector<std::vector<Int>> rows_;
    std::vector<std::vector<std::pair<int, int>>> pairs_at_row_;
    std::vector<Int> scratch_;
    std::vector<std::vector<unsigned long long>> ranges_;
    std::vector<std::vector<unsigned long long>> counters_;
    unsigned long long nodes_ = 0;
};

// Worst-case magnitude reachable during enumeration; decides whether the
// 128-bit fast path is safe.
bool fits_int128(const StructureRing& ring, long long p, const std::vector<int>& diag) {
    int kmax = 0;
    for (int k : diag) kmax = std::max(kmax, k);
    BigInt X = big_pow(p, static_cast<unsigned>(kmax));
    BigInt C = 1, E = 1;
    const int d = ring.rank();
    for (int i = 0; i < d; ++i) {
        BigInt e = ring.identity()[static_cast<size_t>(i)];
        if (e < 0) e = -e;
        E = std::max(E, e);
        for (int j = 0; j < d; ++j)
            for (const auto& [m, coef] : ring.product_support(i, j)) {
                BigInt a = coef < 0 ? BigInt(-coef) : coef;
                C = std::max(C, a);
            }
    }
    BigInt bound = C * d * d * X * X;
    bound = std::max(bound, E);
    BigInt growth = X + 1;
    for (int i = 0; i < d; ++i) bound *= growth;
    return bound < (BigInt(1) << 126);
}

}  // namespace

bool closure_check(const StructureRing& ring, const HnfRep& rep) {
    const int d = ring.rank();
    if (static_cast<int>(rep.diag.size()) != d || static_cast<int>(rep.below.size()) != d)
        throw InputError("representative dimensions do not match ring rank");
    std::vector<BigInt> pk(static_cast<size_t>(d));
    for (int j = 0; j < d; ++j) pk[static_cast<size_t>(j)] = rep.diag_value(j);
    auto row_entry = [&](int i, int j) -> BigInt {
        if (i == j) return pk[static_cast<size_t>(i)];
        if (j > i) return 0;
        return rep.below[static_cast<size_t>(i)][static_cast<size_t>(j)];
    };
    for (int i = 0; i < d; ++i)
        for (int j = i; j < d; ++j) {
            std::vector<BigInt> t(static_cast<size_t>(d), 0);
            for (int a = 0; a <= i; ++a) {
                BigInt va = row_entry(i, a);
                if (va == 0) continue;
                for (int b = 0; b <= j; ++b) {
                    BigInt vb = row_entry(j, b);
                    if (vb == 0) continue;
                    for (const auto& [m, coef] : ring.product_support(a, b))
                        t[static_cast<size_t>(m)] += va * vb * coef;
                }
            }
            if (!back_substitute(t, d - 1, pk, [&](int r, int l) { return row_entry(r, l); }))
                return false;
        }
    return true;
}

bool unital_check(const StructureRing& ring, const HnfRep& rep) {
    const int d = ring.rank();
    if (static_cast<int>(rep.diag.size()) != d || static_cast<int>(rep.below.size()) != d)
        throw InputError("representative dimensions do not match ring rank");
    std::vector<BigInt> pk(static_cast<size_t>(d));
    for (int j = 0; j < d; ++j) pk[static_cast<size_t>(j)] = rep.diag_value(j);
    std::vector<BigInt> t = ring.identity();
    return back_substitute(t, d - 1, pk, [&](int i, int j) -> const BigInt& {
        return rep.below[static_cast<size_t>(i)][static_cast<size_t>(j)];
    });
}

BigInt count_for_diagonal(const StructureRing& ring, long long p, const std::vector<int>& diag,
                          const EnumOptions& opts) {
    if (static_cast<int>(diag.size()) != ring.rank())
        throw InputError("diagonal length does not match ring rank");
    for (int k : diag)
        if (k < 0) throw InputError("diagonal exponents must be non-negative");
    if (p < 2) throw InputError("p must be a prime >= 2");
    if (!opts.collector && fits_int128(ring, p, diag)) {
        DiagonalEnumerator<Int128> en(ring, p, diag, opts);
        return BigInt(en.run());
    }
    DiagonalEnumerator<BigInt> en(ring, p, diag, opts);
    return BigInt(en.run());
}

double MuVolume::approx(long long p) const {
    return count.convert_to<double>() * std::pow(static_cast<double>(p), -static_cast<double>(exponent));
}

MuVolume mu_volume(const StructureRing& ring, long long p, const std::vector<int>& diag,
                   const EnumOptions& opts) {
    MuVolume mv;
    mv.count = count_for_diagonal(ring, p, diag, opts);
    mv.exponent = 0;
    const int d = ring.rank();
    for (int j = 0; j < d; ++j) mv.exponent += static_cast<long long>(d - 1 - j) * diag[static_cast<size_t>(j)];
    return mv;
}

CountTable::CountTable(std::string path) : path_(std::move(path)) {
    if (path_.empty()) return;
    std::ifstream in(path_);
    if (!in) return;  // absent file: fresh cache
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
        if (j.is_discarded()) throw InputError("corrupt cache line: " + line);
        std::uint64_t h = std::stoull(j.at("ring").get<std::string>(), nullptr, 16);
        Key key{h, j.at("p").get<long long>(), j.at("m").get<int>(), j.at("unital").get<bool>()};
        entries_[key] = BigInt(j.at("count").get<std::string>());
    }
}

std::optional<BigInt> CountTable::lookup(const Key& key) const {
    std::lock_guard lock(mu_);
    auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    ++hits_;
    return it->second;
}

void CountTable::store(const Key& key, const BigInt& value) {
    std::lock_guard lock(mu_);
    auto [it, inserted] = entries_.emplace(key, value);
    if (!inserted) {
        if (it->second != value)
            throw std::logic_error("count table entry changed between computations");
        return;
    }
    if (!path_.empty()) append_record(key, value);
}

void CountTable::append_record(const Key& key, const BigInt& value) {
    nlohmann::json j;
    j["ring"] = hex64(std::get<0>(key));
    j["p"] = std::get<1>(key);
    j["m"] = std::get<2>(key);
    j["unital"] = std::get<3>(key);
    j["count"] = value.str();
    std::ofstream out(path_, std::ios::app);
    out << j.dump() << "\n";
}

size_t CountTable::size() const {
    std::lock_guard lock(mu_);
    return entries_.size();
}

std::vector<std::vector<int>> compositions_colex(int m, int d) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<size_t>(d), 0);
    // colexicographic: later coordinates vary in the outer loops
    std::function<void(int, int)> rec = [&](int pos, int remaining) {
        if (pos == 0) {
            cur[0] = remaining;
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            cur[static_cast<size_t>(pos)] = v;
            rec(pos - 1, remaining - v);
        }
    };
    rec(d - 1, m);
    return out;
}

namespace {
BigInt count_index_uncached(const StructureRing& ring, long long p, int m, const CountConfig& cfg) {
    auto diags = compositions_colex(m, ring.rank());
    std::vector<BigInt> partial(diags.size());
    EnumOptions opts;
    opts.unital = cfg.unital;
    opts.node_budget = cfg.node_budget;

    const int workers = std::max(1, cfg.workers);
    if (workers == 1 || diags.size() <= 1) {
        for (size_t i = 0; i < diags.size(); ++i) partial[i] = count_for_diagonal(ring, p, diags[i], opts);
    } else {
        std::atomic<size_t> next{0};
        std::exception_ptr err;
        std::mutex err_mu;
        auto work = [&]() {
            try {
                while (true) {
                    size_t i = next.fetch_add(1);
                    if (i >= diags.size()) break;
                    partial[i] = count_for_diagonal(ring, p, diags[i], opts);
                }
            } catch (...) {
                std::lock_guard lock(err_mu);
                if (!err) err = std::current_exception();
            }
        };
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& t : pool) t.join();
        if (err) std::rethrow_exception(err);
    }

    BigInt total = 0;
    for (const auto& v : partial) total += v;
    return total;
}
}  // namespace

BigInt count_index(const StructureRing& ring, long long p, int m, const CountConfig& cfg) {
    if (m < 0) throw InputError("index exponent m must be >= 0");
    CountTable::Key key{ring.hash(), p, m, cfg.unital};
    if (cfg.table) {
        if (auto hit = cfg.table->lookup(key)) {
            if (cfg.table->audit()) {
                BigInt fresh = count_index_uncached(ring, p, m, cfg);
                if (fresh != *hit)
                    throw std::runtime_error("cache audit mismatch for (p=" + std::to_string(p) +
                                             ", m=" + std::to_string(m) + "): cached " + hit->str() +
                                             " vs recomputed " + fresh.str());
            }
            return *hit;
        }
    }
    BigInt value = count_index_uncached(ring, p, m, cfg);
    if (cfg.table) cfg.table->store(key, value);
    return value;
}

std::vector<BigInt> local_factor_coeffs(const StructureRing& ring, long long p, int m_max,
                                        const CountConfig& cfg) {
    if (m_max < 0) throw InputError("m_max must be >= 0");
    std::vector<BigInt> out;
    out.reserve(static_cast<size_t>(m_max) + 1);
    for (int m = 0; m <= m_max; ++m) out.push_back(count_index(ring, p, m, cfg));
    return out;
}

}  // namespace subzeta
