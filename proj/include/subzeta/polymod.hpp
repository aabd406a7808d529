#pragma once

#include "subzeta/numeric.hpp"
#include "subzeta/ring.hpp"

#include <vector>

namespace subzeta {

// Polynomials over F_p, coefficients in [0,p), constant term first,
// trailing zeros trimmed.  Small degrees only; nothing here is meant to
// scale past the handful of coefficients the ring constructions need.
namespace polymod {

using Poly = std::vector<long long>;

Poly trim(Poly a);
Poly reduce_mod_p(const std::vector<BigInt>& coeffs, long long p);
Poly mul(const Poly& a, const Poly& b, long long p);
Poly rem(Poly a, const Poly& m, long long p);
Poly gcd(Poly a, Poly b, long long p);
// x^(p^e) mod m, by repeated Frobenius power.
Poly frobenius_power(const Poly& m, long long p, int e);
bool is_irreducible(const Poly& f, long long p);
bool is_squarefree(const Poly& f, long long p);

}  // namespace polymod

/// Lexicographically least monic polynomial of the given degree that is
/// irreducible mod p; coefficient tuples ordered leading-to-constant.
/// Returned with integer coefficients in [0, p), constant term first.
std::vector<BigInt> find_irreducible(long long p, int degree);

/// Residue degrees of the distinct-degree splitting of `poly` mod p.
/// Requires poly monic and squarefree mod p; throws InputError for
/// ramified p (poly not squarefree mod p).
SplittingType splitting_type_of(const std::vector<BigInt>& poly, long long p);

/// Parses "x^5 - 2*x + 1" style monic integer polynomials (also accepts a
/// bare coefficient list "1,0,-2,0,0,1" with constant term first).
std::vector<BigInt> parse_polynomial(const std::string& text);
std::string polynomial_to_string(const std::vector<BigInt>& poly);

}  // namespace subzeta
