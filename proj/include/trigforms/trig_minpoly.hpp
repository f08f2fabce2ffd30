#pragma once

// Cyclotomic polynomials, the minimal polynomials Psi_n of 2cos(2pi/n) and
// Pi_n of 2sin(2pi/n), and the exact arithmetic behind the long sweeps
// (reciprocity, constant coefficients, the |Psi_n(1)| < 2^d bound).

#include <cstdint>
#include <cstdlib>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "trigforms/binary_form.hpp"
#include "trigforms/poly.hpp"

namespace trigforms {

namespace detail {

// Coefficients of Phi_n as machine words. Phi_n = Phi_rad(n)(x^(n/rad(n)));
// the radical part is a product/quotient of binomials x^k - 1 over the
// squarefree divisors, multiplications first so every division stays exact.
inline std::vector<std::int64_t> cyclotomic_coeffs_i64(long n) {
    if (n < 1) throw std::domain_error("cyclotomic: n must be positive");
    if (n == 1) return {-1, 1};
    long r = radical(n);
    long q = n / r;

    std::vector<long> mul, div;
    for (long d : divisors(r)) {
        int mu = mobius(r / d);
        if (mu == 1) mul.push_back(d);
        else if (mu == -1) div.push_back(d);
    }

    constexpr std::int64_t kGuard = std::int64_t(1) << 60;
    std::vector<std::int64_t> p{1};
    for (long k : mul) {
        std::vector<std::int64_t> np(p.size() + k, 0);
        for (size_t i = 0; i < p.size(); ++i) {
            if (std::abs(p[i]) > kGuard) throw std::overflow_error("cyclotomic_coeffs_i64");
            np[i + k] += p[i];
            np[i] -= p[i];
        }
        p = std::move(np);
    }
    for (long k : div) {
        // p = q * (x^k - 1): q[i] = q[i-k] - p[i]
        std::vector<std::int64_t> np(p.size() - k, 0);
        for (size_t i = 0; i < np.size(); ++i) {
            std::int64_t prev = (i >= static_cast<size_t>(k)) ? np[i - k] : 0;
            np[i] = prev - p[i];
            if (std::abs(np[i]) > kGuard) throw std::overflow_error("cyclotomic_coeffs_i64");
        }
        p = std::move(np);
    }

    if (q > 1) {
        std::vector<std::int64_t> np((p.size() - 1) * q + 1, 0);
        for (size_t i = 0; i < p.size(); ++i) np[i * q] = p[i];
        p = std::move(np);
    }
    if (static_cast<long>(p.size()) - 1 != euler_phi(n))
        throw std::logic_error("cyclotomic: degree mismatch");
    return p;
}

}  // namespace detail

// n-th cyclotomic polynomial (monic, degree phi(n)); results are cached.
inline IntPoly cyclotomic(long n) {
    static std::map<long, IntPoly> cache;
    static std::mutex mu;
    {
        std::scoped_lock lock(mu);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    auto c64 = detail::cyclotomic_coeffs_i64(n);
    std::vector<Int> c(c64.begin(), c64.end());
    IntPoly p{std::move(c)};
    std::scoped_lock lock(mu);
    return cache.emplace(n, std::move(p)).first->second;
}

// Minimal polynomial of 2cos(2pi/n): degree 1 for n in {1,2}, else phi(n)/2.
// For n >= 3 it is recovered from Phi_n by the palindromic decompression
// Psi_n(z + 1/z) = z^(-d) Phi_n(z), expanding in the basis V_k(w) = z^k + z^-k
// with V_0 = 2, V_1 = w, V_{k+1} = w V_k - V_{k-1}.
inline IntPoly psi(long n) {
    if (n < 1) throw std::domain_error("psi: n must be positive");
    if (n == 1) return IntPoly{Int(-2), Int(1)};
    if (n == 2) return IntPoly{Int(2), Int(1)};

    static std::map<long, IntPoly> cache;
    static std::mutex mu;
    {
        std::scoped_lock lock(mu);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }

    IntPoly phi_n = cyclotomic(n);
    long d = euler_phi(n) / 2;
    const auto& f = phi_n.coeffs();
    for (long k = 0; k <= d; ++k)
        if (f[d + k] != f[d - k]) throw std::logic_error("psi: Phi_n not palindromic");

    std::vector<Int> res(d + 1, Int(0));
    res[0] = f[d];
    std::vector<Int> vprev{Int(2)};          // V_0
    std::vector<Int> vcur{Int(0), Int(1)};   // V_1
    for (long k = 1; k <= d; ++k) {
        const Int& fk = f[d + k];
        if (fk != 0)
            for (size_t i = 0; i < vcur.size(); ++i) res[i] += fk * vcur[i];
        if (k < d) {
            // V_{k+1} = x*V_k - V_{k-1}
            std::vector<Int> vnext(vcur.size() + 1, Int(0));
            for (size_t i = 0; i < vcur.size(); ++i) vnext[i + 1] = vcur[i];
            for (size_t i = 0; i < vprev.size(); ++i) vnext[i] -= vprev[i];
            vprev = std::move(vcur);
            vcur = std::move(vnext);
        }
    }
    IntPoly p{std::move(res)};
    if (!p.is_monic() || p.degree() != d) throw std::logic_error("psi: decompression failed");
    std::scoped_lock lock(mu);
    return cache.emplace(n, std::move(p)).first->second;
}

inline BinaryForm psi_form(long n) {
    IntPoly p = psi(n);
    return homogenize(p, p.degree());
}

// c(n): the denominator of (n-4)/(4n) in lowest terms, i.e. 4n/gcd(|n-4|,4n).
inline long c_of_n(long n) {
    if (n < 1) throw std::domain_error("c_of_n: n must be positive");
    if (n == 4) throw std::domain_error("c_of_n: undefined for n = 4");
    long a = std::abs(n - 4), b = 4 * n;
    return b / std::gcd(a, b);
}

// deg Pi_n by the gcd(n,8) trichotomy; checked against deg Psi_{c(n)}.
inline long pi_degree(long n) {
    if (n < 3 || n == 4) throw std::domain_error("pi_degree: n out of range");
    long g = std::gcd(n, 8L);
    long d;
    if (g < 4)
        d = euler_phi(n);
    else if (g == 4)
        d = euler_phi(n) / 4;
    else
        d = euler_phi(n) / 2;
    long c = c_of_n(n);
    long dc = (c <= 2) ? 1 : euler_phi(c) / 2;
    if (d != dc) throw std::logic_error("pi_degree: mismatch with deg Psi_c(n)");
    return d;
}

// Pi_n = Psi_{c(n)}; n = 4 is rejected (2sin(2pi/4) = ... the form degenerates).
inline BinaryForm pi_form(long n) {
    if (n == 4) throw std::domain_error("pi_form: undefined for n = 4");
    return psi_form(c_of_n(n));
}

// |Psi_m(0)| by the four-case closed form.
inline Int constant_coeff_formula(long m) {
    if (m < 1) throw std::domain_error("constant_coeff_formula: m must be positive");
    if (m == 4) return 0;
    auto f = factorize(m);
    if (f.size() == 1 && f[0].first == 2 && f[0].second >= 3) return 2;
    if (f.size() == 2 && f[0].first == 2 && f[0].second == 2) return f[1].first;
    return 1;
}

// Discriminant of the field Q(2cos(2pi/k)) (Lehmer's three-case formula).
inline Int field_discriminant(long k) {
    if (k < 3 || k == 4) throw std::domain_error("field_discriminant: k out of range");
    auto f = factorize(k);
    if (f.size() == 1 && f[0].first == 2) {
        long j = f[0].second;  // k = 2^j, j >= 3 here
        return ipow(Int(2), (j - 1) * (1L << (j - 2)) - 1);
    }
    bool odd_pp = (f.size() == 1 && f[0].first > 2);
    bool two_odd_pp = (f.size() == 2 && f[0].first == 2 && f[0].second == 1);
    if (odd_pp || two_odd_pp) {
        long p = odd_pp ? f[0].first : f[1].first;
        long j = odd_pp ? f[0].second : f[1].second;
        long pj = 1;
        for (long i = 0; i < j - 1; ++i) pj *= p;  // p^(j-1)
        long e = (j * pj * p - (j + 1) * pj - 1) / 2;
        return ipow(Int(p), e);
    }
    // omega(k) > 1 and k != 2p^j: D = prod p_i^(e_i*phi/2 - phi/(2(p_i-1)))
    long phi2 = euler_phi(k) / 2;
    Int d = 1;
    for (auto [p, e] : f) {
        if (phi2 % (p - 1) != 0) throw std::logic_error("field_discriminant: non-integer exponent");
        d *= ipow(Int(p), e * phi2 - phi2 / (p - 1));
    }
    return d;
}

// p is reciprocal when p(x) = +- x^deg(p) p(1/x); requires p(0) != 0.
inline bool is_reciprocal(const IntPoly& p) {
    if (p.is_zero() || p.coeff(0) == 0) throw std::domain_error("is_reciprocal: p(0) = 0");
    int d = p.degree();
    bool plus = true, minus = true;
    for (int i = 0; i <= d; ++i) {
        if (p.coeff(i) != p.coeff(d - i)) plus = false;
        if (p.coeff(i) != -p.coeff(d - i)) minus = false;
    }
    return plus || minus;
}

struct TraceStats {
    Int tr, norm, rtr;
};

// Elementary symmetric reads from psi(n) = x^d + c_{d-1}x^{d-1} + ... + c_0:
// tr = -c_{d-1}, norm = (-1)^d c_0, rtr = norm * sum(1/root) = (-1)^(d-1) c_1.
inline TraceStats trace_stats(long n) {
    if (n < 3) throw std::domain_error("trace_stats: n must be >= 3");
    IntPoly p = psi(n);
    int d = p.degree();
    TraceStats s;
    s.tr = -p.coeff(d - 1);
    s.norm = (d % 2 == 0) ? p.coeff(0) : -p.coeff(0);
    s.rtr = (d % 2 == 1) ? p.coeff(1) : -p.coeff(1);
    return s;
}

// Same statistics for g where Psi_n(x) = g(x^2) (only for 4 | n).
inline TraceStats trace_stats_even_part(long n) {
    if (n < 8 || n % 4 != 0) throw std::domain_error("trace_stats_even_part: need 4 | n, n >= 8");
    IntPoly p = psi(n);
    std::vector<Int> g;
    for (int i = 0; i <= p.degree(); i += 2) g.push_back(p.coeff(i));
    IntPoly gp{std::move(g)};
    int e = gp.degree();
    TraceStats s;
    s.tr = -gp.coeff(e - 1);
    s.norm = (e % 2 == 0) ? gp.coeff(0) : -gp.coeff(0);
    s.rtr = (e % 2 == 1) ? gp.coeff(1) : -gp.coeff(1);
    return s;
}

// Phi_n(zeta_6) as a + b*zeta_6 (reduction modulo zeta_6^2 - zeta_6 + 1).
struct EisensteinValue {
    Int a, b;
    Int norm() const { return a * a + a * b + b * b; }
};

inline EisensteinValue eval_cyclotomic_at_zeta6(long n) {
    auto c = detail::cyclotomic_coeffs_i64(n);
    // Horner: v <- v*zeta + c_k, where (a + b z) z = -b + (a+b) z.
    Int a = 0, b = 0;
    for (size_t k = c.size(); k-- > 0;) {
        Int na = -b + c[k];
        Int nb = a + b;
        a = std::move(na);
        b = std::move(nb);
    }
    return {std::move(a), std::move(b)};
}

// Exact form of the |Psi_n(1)| < 2^d test: norm(Phi_n(zeta_6)) < 4^(phi(n)/2).
inline bool psi_one_bound_holds(long n) {
    if (n < 3) throw std::domain_error("psi_one_bound_holds: n must be >= 3");
    EisensteinValue v = eval_cyclotomic_at_zeta6(n);
    return v.norm() < ipow(Int(4), euler_phi(n) / 2);
}

}  // namespace trigforms
