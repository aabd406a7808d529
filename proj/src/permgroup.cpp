#include "subzeta/permgroup.hpp"

#include <json.hpp>

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace subzeta {

namespace {
struct PermHash {
    size_t operator()(const Perm& p) const {
        size_t h = 1469598103934665603ull;
        for (int v : p) {
            h ^= static_cast<size_t>(v) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

Perm compose(const Perm& a, const Perm& b) {  // apply b, then a
    Perm r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[static_cast<size_t>(b[i])];
    return r;
}
}  // namespace

Perm perm_from_cycles(int degree, const std::vector<std::vector<int>>& cycles_1based) {
    Perm p(static_cast<size_t>(degree));
    std::iota(p.begin(), p.end(), 0);
    for (const auto& cyc : cycles_1based) {
        if (cyc.empty()) continue;
        std::vector<bool> seen(static_cast<size_t>(degree), false);
        for (size_t i = 0; i < cyc.size(); ++i) {
            int from = cyc[i] - 1;
            int to = cyc[(i + 1) % cyc.size()] - 1;
            if (from < 0 || from >= degree || to < 0 || to >= degree)
                throw InputError("cycle entry out of range for degree " + std::to_string(degree));
            if (seen[static_cast<size_t>(from)]) throw InputError("repeated point in cycle");
            seen[static_cast<size_t>(from)] = true;
            p[static_cast<size_t>(from)] = to;
        }
    }
    // composed cycles must still be a bijection
    std::vector<bool> hit(static_cast<size_t>(degree), false);
    for (int v : p) {
        if (hit[static_cast<size_t>(v)]) throw InputError("cycles overlap: not a permutation");
        hit[static_cast<size_t>(v)] = true;
    }
    return p;
}

PermGroup::PermGroup(int degree, std::vector<Perm> generators)
    : degree_(degree), generators_(std::move(generators)) {
    if (degree_ < 1) throw InputError("degree must be >= 1");
    for (const auto& g : generators_)
        if (static_cast<int>(g.size()) != degree_) throw InputError("generator degree mismatch");

    Perm id(static_cast<size_t>(degree_));
    std::iota(id.begin(), id.end(), 0);
    std::unordered_set<Perm, PermHash> seen;
    seen.insert(id);
    std::deque<Perm> queue{id};
    while (!queue.empty()) {
        Perm cur = std::move(queue.front());
        queue.pop_front();
        for (const auto& g : generators_) {
            Perm nxt = compose(g, cur);
            if (seen.insert(nxt).second) queue.push_back(nxt);
        }
    }
    elements_.assign(seen.begin(), seen.end());
    std::sort(elements_.begin(), elements_.end());

    std::vector<bool> orbit(static_cast<size_t>(degree_), false);
    orbit[0] = true;
    std::deque<int> pts{0};
    while (!pts.empty()) {
        int x = pts.front();
        pts.pop_front();
        for (const auto& g : generators_) {
            int y = g[static_cast<size_t>(x)];
            if (!orbit[static_cast<size_t>(y)]) {
                orbit[static_cast<size_t>(y)] = true;
                pts.push_back(y);
            }
        }
    }
    transitive_ = std::all_of(orbit.begin(), orbit.end(), [](bool b) { return b; });
}

int r2_orbits(const PermGroup& g) {
    const int n = g.degree();
    if (n < 2) return 0;
    std::vector<std::pair<int, int>> pairs;
    std::vector<std::vector<int>> index(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), -1));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            index[static_cast<size_t>(i)][static_cast<size_t>(j)] = static_cast<int>(pairs.size());
            pairs.emplace_back(i, j);
        }
    std::vector<int> parent(pairs.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    };
    for (const auto& e : g.elements())
        for (size_t pi = 0; pi < pairs.size(); ++pi) {
            int a = e[static_cast<size_t>(pairs[pi].first)], b = e[static_cast<size_t>(pairs[pi].second)];
            if (a > b) std::swap(a, b);
            int qi = index[static_cast<size_t>(a)][static_cast<size_t>(b)];
            int ra = find(static_cast<int>(pi)), rb = find(qi);
            if (ra != rb) parent[static_cast<size_t>(ra)] = rb;
        }
    int orbits = 0;
    for (size_t i = 0; i < pairs.size(); ++i)
        if (find(static_cast<int>(i)) == static_cast<int>(i)) ++orbits;
    return orbits;
}

long long fixed_pair_count(const std::vector<int>& cycle_type) {
    long long v = 0, w = 0;
    for (int part : cycle_type) {
        if (part == 1) ++v;
        if (part == 2) ++w;
    }
    return w + v * (v - 1) / 2;
}

CycleTypeStats cycle_stats(const PermGroup& g) {
    CycleTypeStats stats;
    const int n = g.degree();
    for (const auto& e : g.elements()) {
        std::vector<int> type;
        std::vector<bool> seen(static_cast<size_t>(n), false);
        for (int i = 0; i < n; ++i) {
            if (seen[static_cast<size_t>(i)]) continue;
            int len = 0, x = i;
            while (!seen[static_cast<size_t>(x)]) {
                seen[static_cast<size_t>(x)] = true;
                x = e[static_cast<size_t>(x)];
                ++len;
            }
            type.push_back(len);
        }
        std::sort(type.begin(), type.end(), std::greater<int>());
        auto& slot = stats.by_type[type];
        slot.first += 1;
        slot.second = fixed_pair_count(type);
        stats.total += 1;
    }
    return stats;
}

std::string Rational::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

Rational burnside_r(const PermGroup& g) {
    CycleTypeStats stats = cycle_stats(g);
    long long sum = 0;
    for (const auto& [type, ba] : stats.by_type) sum += ba.first * ba.second;
    long long den = stats.total;
    long long gg = std::gcd(sum, den);
    return Rational{sum / gg, den / gg};
}

long long r2_closed_form(const std::string& kind, int n, long long order) {
    if (kind == "S" || kind == "A") {
        if (n < 3) throw InputError("symmetric/alternating closed form needs n >= 3");
        return 1;
    }
    if (kind == "C" || kind == "D") {
        if (n < 2) throw InputError("cyclic/dihedral closed form needs n >= 2");
        return n / 2;
    }
    if (kind == "prime-solvable") {
        // Transitive solvable subgroup of S_p is C_p extended by a cyclic
        // group of index j in Z/(p-1); the orbit count on pairs is
        // gcd(j, (p-1)/2).  (The index form keeps the value consistent with
        // the Burnside average on C_p, D_p and the full affine group.)
        bool prime = n >= 2;
        for (int q = 2; q * q <= n; ++q)
            if (n % q == 0) prime = false;
        if (!prime) throw InputError("prime-solvable closed form needs prime degree");
        if (order <= 0 || order % n != 0 ||
            (static_cast<long long>(n) * (n - 1)) % order != 0)
            throw InputError("order must divide p(p-1) and be a multiple of p");
        long long j = static_cast<long long>(n) * (n - 1) / order;
        return std::gcd(j, static_cast<long long>((n - 1) / 2));
    }
    throw InputError("unsupported group kind: " + kind);
}

std::vector<NamedGroup> groups_from_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        throw InputError(std::string("bad group JSON: ") + e.what());
    }
    if (j.is_object()) j = nlohmann::json::array({j});
    std::vector<NamedGroup> out;
    for (const auto& item : j) {
        NamedGroup g;
        g.name = item.value("name", std::string("group"));
        g.degree = item.at("degree").get<int>();
        for (const auto& gen : item.at("generators")) {
            std::vector<std::vector<int>> cycles;
            for (const auto& cyc : gen) cycles.push_back(cyc.get<std::vector<int>>());
            g.generator_cycles.push_back(std::move(cycles));
        }
        out.push_back(std::move(g));
    }
    return out;
}

const std::vector<NamedGroup>& builtin_transitive_groups() {
    static const std::vector<NamedGroup> groups = {
        {"Z/3Z", 3, {{{1, 2, 3}}}},
        {"S3", 3, {{{1, 2}}, {{1, 3}}}},
        {"Z/4Z", 4, {{{1, 2, 3, 4}}}},
        {"Z/2xZ/2", 4, {{{1, 2}, {3, 4}}, {{1, 4}, {2, 3}}}},
        {"D4", 4, {{{1, 2, 3, 4}}, {{1, 3}}}},
        {"A4", 4, {{{1, 2, 4}}, {{2, 3, 4}}}},
        {"S4", 4, {{{1, 2}}, {{1, 3}}, {{1, 4}}}},
        {"Z/5Z", 5, {{{1, 2, 3, 4, 5}}}},
        {"D5", 5, {{{1, 2, 3, 4, 5}}, {{1, 4}, {2, 3}}}},
        {"AGL(1,5)", 5, {{{1, 2, 3, 4, 5}}, {{2, 3, 5, 4}}}},
        {"A5", 5, {{{1, 2, 4}}, {{3, 4, 5}}, {{2, 3, 5}}}},
        {"S5", 5, {{{1, 2}}, {{1, 3}}, {{1, 4}}, {{1, 5}}}},
    };
    return groups;
}

R2Row r2_report_row(const NamedGroup& g) {
    std::vector<Perm> gens;
    for (const auto& cycles : g.generator_cycles) gens.push_back(perm_from_cycles(g.degree, cycles));
    PermGroup group(g.degree, std::move(gens));
    R2Row row;
    row.name = g.name;
    row.degree = g.degree;
    row.order = group.order();
    row.r2 = r2_orbits(group);
    row.burnside = burnside_r(group);
    row.match = (row.burnside == Rational{row.r2, 1});
    row.transitive = group.transitive();
    return row;
}

std::string r2_report_csv(const std::vector<R2Row>& rows) {
    std::ostringstream os;
    os << "name,degree,order,r2,burnside_r,match\n";
    for (const auto& r : rows)
        os << r.name << "," << r.degree << "," << r.order << "," << r.r2 << "," << r.burnside.str()
           << "," << (r.match ? "yes" : "no") << "\n";
    return os.str();
}

}  // namespace subzeta
