#pragma once

#include "subzeta/enumerate.hpp"
#include "subzeta/numeric.hpp"
#include "subzeta/ring.hpp"

#include <string>
#include <vector>

namespace subzeta {

struct BoundViolation {
    std::string params;   // sorted parameter key, e.g. "p=3 k=2 l=1"
    std::string observed;
    std::string bound;
    std::vector<HnfRep> witnesses;  // populated where a matrix dump is meaningful
};

struct BoundCheckReport {
    std::string prop;
    std::string grid;
    double worst_ratio = 0;  // max observed/bound; <= 1 iff no violations
    std::vector<BoundViolation> violations;
    long long runtime_ms = 0;
    std::vector<std::pair<std::string, double>> detail;  // diagnostic ratio rows
    std::vector<std::string> notes;

    bool ok() const { return violations.empty(); }
};

std::string report_json(const BoundCheckReport& report);
std::string reports_json(const std::vector<BoundCheckReport>& reports);

/// Exhaustive residue-grid checks of the scalar congruence-count bounds
/// (products, quadratics, and the shifted-quadratic bound with its p=2
/// exceptional cases).  The shifted-quadratic constant is checked as stated;
/// at odd p it fails on the critical locus v_p(4z + p^(2l)) > 2l, and the
/// report classifies every violation onto that locus (an off-locus violation
/// would mean a counting bug).
std::vector<BoundCheckReport> check_congruence_props(long long p, int k_max, int l_max,
                                                     unsigned long long budget = 1'000'000'000ull);

/// Volume bounds for the Hermite-form domains of matrix rank d_order-1,
/// checked against exact enumerated volumes.  Bounds with explicit constants
/// are compared exactly; bounds stated only up to a polynomial factor are
/// checked at exponent level: the implied constant mu * p^exponent must not
/// grow past its value at the smallest odd tested prime (larger odd primes
/// only; p=2 rows are reported, and only p=2-valid bounds see them).
std::vector<BoundCheckReport> check_mu_bounds(int d_order, const std::vector<long long>& p_set,
                                              int sum_max, const CountConfig& cfg = {});

struct A1Result {
    SplittingType type;
    long long p;
    BigInt formula;  // w + C(v,2)
    BigInt brute;
    bool match;
};

A1Result verify_a1(long long p, const SplittingType& type, const CountConfig& cfg = {});

/// All partitions of n at each prime in p_set.
BoundCheckReport verify_a1_suite(int n, const std::vector<long long>& p_set,
                                 const CountConfig& cfg = {});

/// Ratios a(p^m) * p^(1 - 19m/20) for subrings of Z^4, reported per m with a
/// boundedness flag calibrated at the smallest tested odd prime.  Empirical
/// diagnostic: the polynomial factor in the proved bound is unspecified, so
/// flag failures are findings, not violations.
BoundCheckReport check_quintic_exponent(const std::vector<long long>& p_set,
                                        const std::vector<int>& m_set, double slack = 1.0,
                                        const CountConfig& cfg = {});

/// Conjecture probe: order counts of the unramified model of `type` against
/// order counts of the split ring of the same rank, for indices p^i, i <=
/// m_max.  Violations carry full witness matrices.
BoundCheckReport check_wishful(long long p, int m_max, const SplittingType& type,
                               const CountConfig& cfg = {});

}  // namespace subzeta
