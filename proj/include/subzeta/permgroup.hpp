#pragma once

#include "subzeta/numeric.hpp"

#include <map>
#include <string>
#include <vector>

namespace subzeta {

using Perm = std::vector<int>;  // one-line notation, 0-based images

Perm perm_from_cycles(int degree, const std::vector<std::vector<int>>& cycles_1based);

/// Finite permutation group materialized by breadth-first closure of its
/// generators.  Scales to the few-thousand-element groups this project
/// cares about; no stabilizer chains.
class PermGroup {
public:
    PermGroup(int degree, std::vector<Perm> generators);

    int degree() const { return degree_; }
    const std::vector<Perm>& elements() const { return elements_; }
    long long order() const { return static_cast<long long>(elements_.size()); }
    bool transitive() const { return transitive_; }

private:
    int degree_;
    std::vector<Perm> generators_;
    std::vector<Perm> elements_;
    bool transitive_;
};

/// Number of orbits on 2-element subsets of the domain.
int r2_orbits(const PermGroup& g);

struct CycleTypeStats {
    // cycle type (partition, descending) -> (b = element count, a = fixed 2-subsets)
    std::map<std::vector<int>, std::pair<long long, long long>> by_type;
    long long total = 0;  // = |G|
};

CycleTypeStats cycle_stats(const PermGroup& g);

/// a(f) = w + C(v,2) for a cycle type with v fixed points and w 2-cycles.
long long fixed_pair_count(const std::vector<int>& cycle_type);

struct Rational {
    long long num = 0, den = 1;
    bool operator==(const Rational&) const = default;
    std::string str() const;
};

/// Average of fixed 2-subset counts over the group; equals r2_orbits for
/// transitive groups (and in general the orbit count on pairs).
Rational burnside_r(const PermGroup& g);

/// Closed-form r2 for standard families: kind in {"S","A","C","D",
/// "prime-solvable"}; the last needs the group order and prime degree n.
long long r2_closed_form(const std::string& kind, int n, long long order = 0);

struct NamedGroup {
    std::string name;
    int degree;
    std::vector<std::vector<std::vector<int>>> generator_cycles;  // 1-based
};

std::vector<NamedGroup> groups_from_json_text(const std::string& text);
const std::vector<NamedGroup>& builtin_transitive_groups();  // the 12 benchmark rows

struct R2Row {
    std::string name;
    int degree;
    long long order;
    int r2;
    Rational burnside;
    bool match;
    bool transitive;
};

R2Row r2_report_row(const NamedGroup& g);
std::string r2_report_csv(const std::vector<R2Row>& rows);

}  // namespace subzeta
