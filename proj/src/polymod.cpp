#include "subzeta/polymod.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace subzeta {
namespace polymod {

namespace {
long long mod_pos(long long v, long long p) {
    v %= p;
    return v < 0 ? v + p : v;
}

long long inv_mod(long long a, long long p) {
    // p prime, a != 0 mod p
    long long r = 1, b = a % p, e = p - 2;
    while (e > 0) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}
}  // namespace

Poly trim(Poly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

Poly reduce_mod_p(const std::vector<BigInt>& coeffs, long long p) {
    Poly r(coeffs.size());
    for (size_t i = 0; i < coeffs.size(); ++i) {
        BigInt m = coeffs[i] % p;
        if (m < 0) m += p;
        r[i] = m.convert_to<long long>();
    }
    return trim(std::move(r));
}

Poly mul(const Poly& a, const Poly& b, long long p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    return trim(std::move(r));
}

Poly rem(Poly a, const Poly& m, long long p) {
    if (m.empty()) throw InputError("polynomial division by zero");
    const long long lead_inv = inv_mod(m.back(), p);
    while (a.size() >= m.size()) {
        long long q = a.back() * lead_inv % p;
        if (q != 0) {
            size_t off = a.size() - m.size();
            for (size_t i = 0; i < m.size(); ++i) a[off + i] = mod_pos(a[off + i] - q * m[i] % p, p);
        }
        a.pop_back();
        a = trim(std::move(a));
        if (a.size() < m.size()) break;
    }
    return trim(std::move(a));
}

Poly gcd(Poly a, Poly b, long long p) {
    a = trim(std::move(a));
    b = trim(std::move(b));
    while (!b.empty()) {
        Poly r = rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && a.back() != 1) {
        long long inv = inv_mod(a.back(), p);
        for (auto& c : a) c = c * inv % p;
    }
    return a;
}

namespace {
Poly powmod(Poly base, unsigned long long e, const Poly& m, long long p) {
    Poly r{1};
    base = rem(std::move(base), m, p);
    while (e > 0) {
        if (e & 1ull) r = rem(mul(r, base, p), m, p);
        base = rem(mul(base, base, p), m, p);
        e >>= 1ull;
    }
    return r;
}
}  // namespace

Poly frobenius_power(const Poly& m, long long p, int e) {
    Poly t{0, 1};  // x
    for (int i = 0; i < e; ++i) t = powmod(std::move(t), static_cast<unsigned long long>(p), m, p);
    return t;
}

bool is_squarefree(const Poly& f, long long p) {
    Poly df;
    for (size_t i = 1; i < f.size(); ++i) df.push_back(static_cast<long long>(i % p) * f[i] % p);
    df = trim(std::move(df));
    if (df.empty()) return false;
    return gcd(f, df, p).size() == 1;
}

bool is_irreducible(const Poly& f, long long p) {
    const int n = static_cast<int>(f.size()) - 1;
    if (n < 1) return false;
    if (n == 1) return true;
    // x^(p^n) == x mod f, and gcd(x^(p^(n/q)) - x, f) trivial for prime q | n.
    Poly xn = frobenius_power(f, p, n);
    Poly x{0, 1};
    Poly diff = xn;
    diff.resize(std::max(diff.size(), x.size()), 0);
    diff[1] = mod_pos(diff[1] - 1, p);
    if (!trim(diff).empty()) return false;
    int m = n;
    for (int q = 2; q * q <= n; ++q) {
        if (m % q != 0) continue;
        while (m % q == 0) m /= q;
        Poly t = frobenius_power(f, p, n / q);
        t.resize(std::max<size_t>(t.size(), 2), 0);
        t[1] = mod_pos(t[1] - 1, p);
        if (gcd(trim(t), f, p).size() != 1) return false;
    }
    if (m > 1) {
        Poly t = frobenius_power(f, p, n / m);
        t.resize(std::max<size_t>(t.size(), 2), 0);
        t[1] = mod_pos(t[1] - 1, p);
        if (gcd(trim(t), f, p).size() != 1) return false;
    }
    return true;
}

}  // namespace polymod

std::vector<BigInt> find_irreducible(long long p, int degree) {
    if (degree < 1) throw InputError("degree must be >= 1");
    // Tuples (a_{deg-1}, ..., a_0) in lexicographic order, constant term last.
    std::vector<long long> a(static_cast<size_t>(degree), 0);
    while (true) {
        polymod::Poly f(static_cast<size_t>(degree) + 1);
        f[static_cast<size_t>(degree)] = 1;
        for (int i = 0; i < degree; ++i) f[static_cast<size_t>(degree - 1 - i)] = a[static_cast<size_t>(i)];
        if (polymod::is_irreducible(f, p)) {
            std::vector<BigInt> out(static_cast<size_t>(degree) + 1);
            for (size_t i = 0; i < f.size(); ++i) out[i] = f[i];
            return out;
        }
        int pos = degree - 1;
        while (pos >= 0) {
            if (++a[static_cast<size_t>(pos)] < p) break;
            a[static_cast<size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) throw std::logic_error("no irreducible polynomial found");
    }
}

SplittingType splitting_type_of(const std::vector<BigInt>& poly, long long p) {
    if (poly.size() < 2 || poly.back() != 1) throw InputError("polynomial must be monic of degree >= 1");
    polymod::Poly f = polymod::reduce_mod_p(poly, p);
    if (f.size() != poly.size()) throw std::logic_error("monic reduction lost degree");
    if (!polymod::is_squarefree(f, p))
        throw InputError("ramified prime " + std::to_string(p) + ": polynomial not squarefree mod p");

    // Distinct-degree splitting: only degree multiplicities are needed.
    std::vector<int> degs;
    polymod::Poly g = f;
    polymod::Poly frob{0, 1};  // x^(p^i) mod f, advanced once per i
    int i = 0;
    while (static_cast<int>(g.size()) - 1 > 0) {
        ++i;
        frob = polymod::frobenius_power(f, p, i);
        if (2 * i > static_cast<int>(g.size()) - 1) {
            // remaining cofactor is a single irreducible factor
            degs.push_back(static_cast<int>(g.size()) - 1);
            break;
        }
        polymod::Poly t = frob;
        t.resize(std::max<size_t>(t.size(), 2), 0);
        t[1] = ((t[1] - 1) % p + p) % p;
        t = polymod::trim(std::move(t));
        polymod::Poly gi = polymod::gcd(polymod::rem(t, g, p), g, p);
        const int deg_gi = gi.empty() ? 0 : static_cast<int>(gi.size()) - 1;
        if (deg_gi > 0) {
            for (int rep = 0; rep < deg_gi / i; ++rep) degs.push_back(i);
            // divide g by gi
            polymod::Poly q;
            {
                polymod::Poly num = g;
                q.assign(num.size() - gi.size() + 1, 0);
                while (num.size() >= gi.size() && !num.empty()) {
                    long long lead = num.back();
                    size_t off = num.size() - gi.size();
                    q[off] = lead;
                    for (size_t s = 0; s < gi.size(); ++s)
                        num[off + s] = ((num[off + s] - lead * gi[s]) % p + p) % p;
                    num = polymod::trim(std::move(num));
                    if (num.empty()) break;
                }
            }
            g = polymod::trim(std::move(q));
            if (g.empty()) g = {1};
        }
    }
    std::sort(degs.begin(), degs.end(), std::greater<int>());
    SplittingType type{degs};
    if (type.n() != static_cast<int>(poly.size()) - 1)
        throw std::logic_error("splitting degrees do not sum to the polynomial degree");
    return type;
}

std::vector<BigInt> parse_polynomial(const std::string& text) {
    // Either a comma-separated coefficient list (constant first) or a
    // symbolic form like "x^5 - 2*x + 1".
    if (text.find(',') != std::string::npos) {
        std::vector<BigInt> out;
        std::stringstream ss(text);
        std::string tok;
        while (std::getline(ss, tok, ',')) out.emplace_back(tok);
        while (!out.empty() && out.back() == 0) out.pop_back();
        if (out.size() < 2) throw InputError("polynomial must have degree >= 1");
        return out;
    }

    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw InputError("empty polynomial");

    std::vector<std::pair<BigInt, int>> terms;  // (coefficient, exponent)
    size_t i = 0;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = (s[i] == '-') ? -1 : 1;
            ++i;
        }
        std::string digits;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) digits.push_back(s[i++]);
        BigInt coef = digits.empty() ? BigInt(1) : BigInt(digits);
        coef *= sign;
        int exp = 0;
        if (i < s.size() && s[i] == '*') ++i;
        if (i < s.size() && (s[i] == 'x' || s[i] == 'X')) {
            ++i;
            exp = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                std::string e;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) e.push_back(s[i++]);
                if (e.empty()) throw InputError("malformed exponent in polynomial");
                exp = std::stoi(e);
            }
        } else if (digits.empty()) {
            throw InputError("malformed polynomial near position " + std::to_string(i));
        }
        terms.emplace_back(coef, exp);
    }
    int deg = 0;
    for (auto& [c, e] : terms) deg = std::max(deg, e);
    if (deg < 1) throw InputError("polynomial must have degree >= 1");
    std::vector<BigInt> out(static_cast<size_t>(deg) + 1, 0);
    for (auto& [c, e] : terms) out[static_cast<size_t>(e)] += c;
    return out;
}

std::string polynomial_to_string(const std::vector<BigInt>& poly) {
    std::string s;
    for (int e = static_cast<int>(poly.size()) - 1; e >= 0; --e) {
        const BigInt& c = poly[static_cast<size_t>(e)];
        if (c == 0) continue;
        BigInt a = c < 0 ? BigInt(-c) : c;
        if (s.empty())
            s += (c < 0 ? "-" : "");
        else
            s += (c < 0 ? "-" : "+");
        if (e == 0 || a != 1) s += a.str();
        if (e >= 1) {
            s += "x";
            if (e >= 2) s += "^" + std::to_string(e);
        }
    }
    return s.empty() ? "0" : s;
}

}  // namespace subzeta
