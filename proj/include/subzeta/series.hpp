#pragma once

#include "subzeta/enumerate.hpp"
#include "subzeta/numeric.hpp"
#include "subzeta/ring.hpp"

#include <map>
#include <string>
#include <vector>

namespace subzeta {

/// A counting family: orders of the split ring Z^d, or orders of the
/// monogenic ring Z[x]/(poly) through its unramified completions.
struct Family {
    enum class Kind { Split, Monogenic } kind;
    int split_rank = 0;           // Kind::Split
    std::vector<BigInt> poly;     // Kind::Monogenic, constant term first

    std::string str() const;
};

Family parse_family(const std::string& text);  // "split:3" | "monogenic:x^2+1"

struct SeriesProfile {
    Family family;
    long long B = 0;
    std::vector<BigInt> f;  // f[k] for k = 0..B, f[0] unused, f[1] = 1
    std::vector<BigInt> N;  // partial sums, N[k] = sum_{j<=k} f[j]
    std::vector<long long> excluded_primes;  // ramified, no user-supplied factor
    // (p, m) keys an excluded local factor would have contributed below B
    std::vector<std::pair<long long, int>> gap_keys;
};

/// Per-prime local coefficient vectors supplied by the user for primes the
/// monogenic path cannot handle (ramified); index m holds a(p^m), a(p^0)=1.
using LocalOverrides = std::map<long long, std::vector<BigInt>>;

/// Builds f(k) for k <= B by multiplicative assembly from exact local
/// tables; local keys are counted on demand.
SeriesProfile assemble_counts(const Family& family, long long B, const CountConfig& cfg = {},
                              const LocalOverrides& overrides = {});

struct AsymptoticFit {
    double alpha = 0;
    int beta = 1;
    double C = 0;
    double residual = 0;  // max relative deviation over the fit window
    long long B_lo = 0, B_hi = 0;
    int samples = 0;
};

/// Least-squares estimate of C in N(B) ~ C B^alpha (log B)^(beta-1) over the
/// top decade of the profile.  Diagnostic only: convergence of the log-power
/// law is far too slow for desk-scale B to pin C down.
AsymptoticFit fit_log_power(const SeriesProfile& profile, double alpha, int beta);

std::string series_csv(const SeriesProfile& profile);
std::string fit_json(const AsymptoticFit& fit);

}  // namespace subzeta
