#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace subzeta {

using BigInt = boost::multiprecision::cpp_int;
using Int128 = __int128;

// Thrown when an enumeration would exceed its configured work budget.
struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Thrown for malformed user input (ring specs, polynomials, group files, ...).
struct InputError : std::runtime_error {
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

inline std::string to_string(Int128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    std::string s;
    while (u > 0) {
        s.push_back(char('0' + int(u % 10)));
        u /= 10;
    }
    if (neg) s.push_back('-');
    return std::string(s.rbegin(), s.rend());
}

inline std::string to_string(const BigInt& v) { return v.str(); }

inline BigInt big_pow(BigInt base, unsigned exp) {
    BigInt r = 1;
    while (exp > 0) {
        if (exp & 1u) r *= base;
        base *= base;
        exp >>= 1u;
    }
    return r;
}

inline long long ll_pow(long long base, unsigned exp) {
    long long r = 1;
    for (unsigned i = 0; i < exp; ++i) r *= base;
    return r;
}

// p-adic valuation of a nonzero integer; `cap` is returned for v == 0
// (treat as "at least cap", which is all callers ever compare against).
inline int valuation_capped(BigInt v, long long p, int cap) {
    if (v == 0) return cap;
    int r = 0;
    while (r < cap && v % p == 0) {
        v /= p;
        ++r;
    }
    return r;
}

// FNV-1a, used for stable content hashes in the on-disk count cache.
inline std::uint64_t fnv1a(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::string hex64(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[static_cast<size_t>(i)] = digits[v & 0xfull];
        v >>= 4;
    }
    return s;
}

}  // namespace subzeta
