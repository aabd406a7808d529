#include "subzeta/ring.hpp"

#include "subzeta/polymod.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <sstream>

namespace subzeta {

StructureRing::StructureRing(int rank, std::vector<BigInt> constants, std::vector<BigInt> identity,
                             std::string label)
    : rank_(rank),
      constants_(std::move(constants)),
      identity_(std::move(identity)),
      label_(std::move(label)) {
    if (rank_ < 1) throw InputError("ring rank must be positive");
    const size_t d = static_cast<size_t>(rank_);
    if (constants_.size() != d * d * d) throw InputError("structure tensor has wrong size");
    if (identity_.size() != d) throw InputError("identity vector has wrong length");

    support_.resize(d * d);
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j) {
            auto& entries = support_[static_cast<size_t>(i) * rank_ + j];
            for (int k = 0; k < rank_; ++k)
                if (constant(i, j, k) != 0) entries.emplace_back(k, constant(i, j, k));
        }

    // max_coord_(i,j) = top coordinate reachable by products of vectors
    // supported on prefixes [0..i] x [0..j]; monotone in both arguments.
    max_coord_.assign(d * d, -1);
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j) {
            int m = -1;
            if (i > 0) m = std::max(m, max_coord_[static_cast<size_t>(i - 1) * rank_ + j]);
            if (j > 0) m = std::max(m, max_coord_[static_cast<size_t>(i) * rank_ + j - 1]);
            const auto& entries = support_[static_cast<size_t>(i) * rank_ + j];
            if (!entries.empty()) m = std::max(m, entries.back().first);
            max_coord_[static_cast<size_t>(i) * rank_ + j] = m;
        }

    hash_ = fnv1a(canonical_text());
}

std::string StructureRing::canonical_text() const {
    std::ostringstream os;
    os << "rank=" << rank_ << ";e=";
    for (const auto& v : identity_) os << v << ",";
    os << ";c=";
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j)
            for (int k = 0; k < rank_; ++k)
                if (constant(i, j, k) != 0)
                    os << i << "." << j << "." << k << ":" << constant(i, j, k) << ";";
    return os.str();
}

std::optional<StructureRing::Violation> StructureRing::validate() const {
    const int d = rank_;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k)
                if (constant(i, j, k) != constant(j, i, k))
                    return Violation{"commutativity", i, j, k,
                                     "c(i,j,k) != c(j,i,k) at 1-based (" + std::to_string(i + 1) +
                                         "," + std::to_string(j + 1) + "," + std::to_string(k + 1) +
                                         ")"};

    for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k) {
            BigInt s = 0;
            for (int a = 0; a < d; ++a) s += identity_[static_cast<size_t>(a)] * constant(a, j, k);
            if (s != ((j == k) ? 1 : 0))
                return Violation{"identity", j, k, 0,
                                 "e * e_j differs from e_j at 1-based (" + std::to_string(j + 1) +
                                     "," + std::to_string(k + 1) + ")"};
        }

    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int l = 0; l < d; ++l)
                for (int k = 0; k < d; ++k) {
                    BigInt lhs = 0, rhs = 0;
                    for (int m = 0; m < d; ++m) {
                        lhs += constant(i, j, m) * constant(m, l, k);
                        rhs += constant(j, l, m) * constant(i, m, k);
                    }
                    if (lhs != rhs)
                        return Violation{"associativity", i, j, l,
                                         "(e_i e_j) e_l != e_i (e_j e_l) at 1-based (" +
                                             std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                             "," + std::to_string(l + 1) + ")"};
                }
    return std::nullopt;
}

int SplittingType::n() const {
    int s = 0;
    for (int d : degrees) s += d;
    return s;
}

int SplittingType::count_of(int degree) const {
    int c = 0;
    for (int d : degrees) c += (d == degree) ? 1 : 0;
    return c;
}

std::string SplittingType::str() const {
    std::map<int, int> mult;
    for (int d : degrees) mult[d]++;
    std::string s;
    for (auto [deg, e] : mult) {
        if (!s.empty()) s += " ";
        s += std::to_string(deg) + "^" + std::to_string(e);
    }
    return s.empty() ? "(empty)" : s;
}

namespace {
void partitions_rec(int n, int max_part, std::vector<int>& cur, std::vector<SplittingType>& out) {
    if (n == 0) {
        out.push_back(SplittingType{cur});
        return;
    }
    for (int part = std::min(n, max_part); part >= 1; --part) {
        cur.push_back(part);
        partitions_rec(n - part, part, cur, out);
        cur.pop_back();
    }
}
}  // namespace

std::vector<SplittingType> partitions_of(int n) {
    std::vector<SplittingType> out;
    std::vector<int> cur;
    partitions_rec(n, n, cur, out);
    return out;
}

StructureRing make_split_ring(int rank) {
    if (rank < 1) throw InputError("split ring rank must be >= 1");
    const size_t d = static_cast<size_t>(rank);
    std::vector<BigInt> c(d * d * d, 0);
    for (size_t i = 0; i < d; ++i) c[(i * d + i) * d + i] = 1;
    std::vector<BigInt> e(d, 1);
    return StructureRing(rank, std::move(c), std::move(e), "split:" + std::to_string(rank));
}

StructureRing make_monogenic_ring(const std::vector<BigInt>& poly) {
    if (poly.size() < 2) throw InputError("polynomial must have degree >= 1");
    const int deg = static_cast<int>(poly.size()) - 1;
    if (poly.back() != 1) throw InputError("polynomial must be monic");

    // Powers x^0 .. x^{2 deg - 2} reduced mod poly.
    std::vector<std::vector<BigInt>> pow(static_cast<size_t>(2 * deg - 1),
                                         std::vector<BigInt>(static_cast<size_t>(deg), 0));
    pow[0][0] = 1;
    for (int e = 1; e <= 2 * deg - 2; ++e) {
        auto& prev = pow[static_cast<size_t>(e - 1)];
        auto& cur = pow[static_cast<size_t>(e)];
        // multiply by x, then fold the overflow coefficient via
        // x^deg = -(poly[0] + ... + poly[deg-1] x^{deg-1}).
        BigInt carry = prev[static_cast<size_t>(deg - 1)];
        for (int k = deg - 1; k >= 1; --k) cur[static_cast<size_t>(k)] = prev[static_cast<size_t>(k - 1)];
        cur[0] = 0;
        if (carry != 0)
            for (int k = 0; k < deg; ++k) cur[static_cast<size_t>(k)] -= carry * poly[static_cast<size_t>(k)];
    }

    const size_t d = static_cast<size_t>(deg);
    std::vector<BigInt> c(d * d * d, 0);
    for (int i = 0; i < deg; ++i)
        for (int j = 0; j < deg; ++j)
            for (int k = 0; k < deg; ++k)
                c[(static_cast<size_t>(i) * d + j) * d + k] = pow[static_cast<size_t>(i + j)][static_cast<size_t>(k)];
    std::vector<BigInt> e(d, 0);
    e[0] = 1;
    return StructureRing(deg, std::move(c), std::move(e), "Z[x]/(" + polynomial_to_string(poly) + ")");
}

StructureRing product_ring(const StructureRing& a, const StructureRing& b) {
    if (a.validate() || b.validate()) throw InputError("product_ring: factor fails validation");
    const int da = a.rank(), db = b.rank(), d = da + db;
    const size_t sd = static_cast<size_t>(d);
    std::vector<BigInt> c(sd * sd * sd, 0);
    for (int i = 0; i < da; ++i)
        for (int j = 0; j < da; ++j)
            for (int k = 0; k < da; ++k)
                c[(static_cast<size_t>(i) * sd + j) * sd + k] = a.constant(i, j, k);
    for (int i = 0; i < db; ++i)
        for (int j = 0; j < db; ++j)
            for (int k = 0; k < db; ++k)
                c[(static_cast<size_t>(da + i) * sd + (da + j)) * sd + (da + k)] = b.constant(i, j, k);
    std::vector<BigInt> e;
    e.reserve(sd);
    for (const auto& v : a.identity()) e.push_back(v);
    for (const auto& v : b.identity()) e.push_back(v);
    return StructureRing(d, std::move(c), std::move(e), a.label() + " x " + b.label());
}

StructureRing make_unramified_product(long long p, const SplittingType& type) {
    if (type.degrees.empty()) throw InputError("splitting type must be nonempty");
    // Column convention: parts of degree >= 3 by decreasing degree, then the
    // degree-1 block, then the degree-2 pairs.
    std::vector<int> order;
    std::vector<int> sorted = type.degrees;
    std::sort(sorted.begin(), sorted.end(), std::greater<int>());
    for (int f : sorted)
        if (f >= 3) order.push_back(f);
    for (int f : sorted)
        if (f == 1) order.push_back(f);
    for (int f : sorted)
        if (f == 2) order.push_back(f);

    std::optional<StructureRing> acc;
    for (int f : order) {
        StructureRing factor = make_monogenic_ring(find_irreducible(p, f));
        acc = acc ? product_ring(*acc, factor) : std::move(factor);
    }
    const size_t dd = static_cast<size_t>(acc->rank());
    std::vector<BigInt> c(dd * dd * dd);
    for (int i = 0; i < acc->rank(); ++i)
        for (int j = 0; j < acc->rank(); ++j)
            for (int k = 0; k < acc->rank(); ++k)
                c[(static_cast<size_t>(i) * dd + j) * dd + k] = acc->constant(i, j, k);
    return StructureRing(acc->rank(), std::move(c), acc->identity(),
                         "unram(p=" + std::to_string(p) + ", " + type.str() + ")");
}

StructureRing ring_from_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        throw InputError(std::string("bad ring-spec JSON: ") + e.what());
    }
    if (!j.contains("rank")) throw InputError("ring spec missing \"rank\"");
    const int d = j.at("rank").get<int>();
    if (d < 1) throw InputError("ring rank must be positive");
    const size_t sd = static_cast<size_t>(d);

    auto to_big = [](const nlohmann::json& v) -> BigInt {
        if (v.is_string()) return BigInt(v.get<std::string>());
        return BigInt(v.get<long long>());
    };

    std::vector<BigInt> e(sd, 0);
    if (j.contains("identity")) {
        const auto& je = j.at("identity");
        if (je.size() != sd) throw InputError("identity vector has wrong length");
        for (size_t i = 0; i < sd; ++i) e[i] = to_big(je[i]);
    } else {
        throw InputError("ring spec missing \"identity\"");
    }

    std::vector<BigInt> c(sd * sd * sd, 0);
    for (const auto& t : j.value("constants", nlohmann::json::array())) {
        if (!t.is_array() || t.size() != 4) throw InputError("constants entries must be [i,j,k,c]");
        int i = t[0].get<int>(), jj = t[1].get<int>(), k = t[2].get<int>();
        if (i < 1 || i > d || jj < 1 || jj > d || k < 1 || k > d)
            throw InputError("constants index out of range (indices are 1-based)");
        c[(static_cast<size_t>(i - 1) * sd + (jj - 1)) * sd + (k - 1)] = to_big(t[3]);
    }
    return StructureRing(d, std::move(c), std::move(e), j.value("label", std::string("ring")));
}

std::string ring_to_json_text(const StructureRing& ring) {
    nlohmann::json j;
    j["rank"] = ring.rank();
    j["label"] = ring.label();
    auto ident = nlohmann::json::array();
    for (const auto& v : ring.identity()) ident.push_back(v.str());
    j["identity"] = ident;
    auto cons = nlohmann::json::array();
    for (int i = 0; i < ring.rank(); ++i)
        for (int jj = 0; jj < ring.rank(); ++jj)
            for (int k = 0; k < ring.rank(); ++k)
                if (ring.constant(i, jj, k) != 0)
                    cons.push_back({i + 1, jj + 1, k + 1, ring.constant(i, jj, k).str()});
    j["constants"] = cons;
    return j.dump();
}

}  // namespace subzeta
