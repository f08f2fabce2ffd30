#pragma once

// Exact integer/rational scalars plus the small number-theoretic helpers
// (factorization, totient, Moebius, divisors) used throughout the library.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace trigforms {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline Int ipow(Int base, unsigned long e) {
    Int r = 1;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

// Floor of the k-th root of a >= 0.
inline Int iroot_floor(const Int& a, unsigned k) {
    if (a < 0) throw std::domain_error("iroot_floor: negative radicand");
    if (k == 0) throw std::domain_error("iroot_floor: zeroth root");
    if (a == 0 || a == 1 || k == 1) return a;
    using boost::multiprecision::msb;
    Int hi = Int(1) << (msb(a) / k + 1);
    Int lo = 0;
    while (lo < hi - 1) {
        Int mid = (lo + hi) / 2;
        if (ipow(mid, k) <= a)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

// Exact k-th root, if a is a perfect k-th power. Negative a allowed for odd k.
inline std::optional<Int> iroot_exact(const Int& a, unsigned k) {
    if (a < 0) {
        if (k % 2 == 0) return std::nullopt;
        auto r = iroot_exact(-a, k);
        if (!r) return std::nullopt;
        return -*r;
    }
    Int r = iroot_floor(a, k);
    if (ipow(r, k) == a) return r;
    return std::nullopt;
}

inline std::optional<Int> sqrt_exact(const Int& a) { return iroot_exact(a, 2); }

// Exact rational k-th root of c, if one exists. For even k only c >= 0 can work.
inline std::optional<Rat> rational_root_exact(const Rat& c, unsigned k) {
    auto p = iroot_exact(num(c), k);
    if (!p) return std::nullopt;
    auto q = iroot_exact(den(c), k);
    if (!q) return std::nullopt;
    return Rat(*p, *q);
}

inline std::optional<Rat> sqrt_exact(const Rat& a) { return rational_root_exact(a, 2); }

inline std::string rat_to_string(const Rat& r) {
    if (den(r) == 1) return num(r).str();
    return num(r).str() + "/" + den(r).str();
}

// Parses "p", "-p" or "p/q".
inline Rat rat_from_string(std::string_view s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string_view::npos) return Rat(Int(std::string(s)));
        Int p{std::string(s.substr(0, slash))};
        Int q{std::string(s.substr(slash + 1))};
        if (q == 0) throw std::invalid_argument("zero denominator");
        return Rat(p, q);
    } catch (const std::exception&) {
        throw std::invalid_argument("rat_from_string: cannot parse '" + std::string(s) + "'");
    }
}

// ---- small (machine-word) number theory ----

inline std::vector<std::pair<long, int>> factorize(long n) {
    if (n < 1) throw std::domain_error("factorize: n must be positive");
    std::vector<std::pair<long, int>> f;
    for (long p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) n /= p, ++e;
        f.emplace_back(p, e);
    }
    if (n > 1) f.emplace_back(n, 1);
    return f;
}

inline long euler_phi(long n) {
    long r = n;
    for (auto [p, e] : factorize(n)) r -= r / p;
    return r;
}

inline int mobius(long n) {
    int m = 1;
    for (auto [p, e] : factorize(n)) {
        if (e > 1) return 0;
        m = -m;
    }
    return m;
}

inline std::vector<long> divisors(long n) {
    std::vector<long> ds{1};
    for (auto [p, e] : factorize(n)) {
        size_t sz = ds.size();
        long pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (size_t i = 0; i < sz; ++i) ds.push_back(ds[i] * pk);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

inline long radical(long n) {
    long r = 1;
    for (auto [p, e] : factorize(n)) r *= p;
    return r;
}

inline bool is_prime(long n) {
    if (n < 2) return false;
    auto f = factorize(n);
    return f.size() == 1 && f[0].second == 1;
}

}  // namespace trigforms
