#pragma once

// Chebyshev polynomials of both kinds, their homogenizations, the monic
// integer rescalings U~_n = U_{n-1}(x/2, y), V~_n = 2T_n(x/2, y), and the
// exact factorizations of the rescaled forms into Psi factors.

#include <stdexcept>
#include <vector>

#include "trigforms/trig_minpoly.hpp"

namespace trigforms {

inline IntPoly chebyshev_T(long n) {
    if (n < 0) throw std::domain_error("chebyshev_T: n must be >= 0");
    IntPoly prev{Int(1)};           // T_0
    if (n == 0) return prev;
    IntPoly cur{Int(0), Int(1)};    // T_1
    IntPoly two_x{Int(0), Int(2)};
    for (long k = 1; k < n; ++k) {
        IntPoly next = two_x * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

inline IntPoly chebyshev_U(long n) {
    if (n < 0) throw std::domain_error("chebyshev_U: n must be >= 0");
    IntPoly prev{Int(1)};           // U_0
    if (n == 0) return prev;
    IntPoly cur{Int(0), Int(2)};    // U_1
    IntPoly two_x{Int(0), Int(2)};
    for (long k = 1; k < n; ++k) {
        IntPoly next = two_x * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

inline BinaryForm t_form(long n) {
    if (n < 1) throw std::domain_error("t_form: n must be >= 1");
    return homogenize(chebyshev_T(n), n);
}

inline BinaryForm u_form(long n) {
    if (n < 1) throw std::domain_error("u_form: n must be >= 1");
    return homogenize(chebyshev_U(n), n);
}

namespace detail {

// W_k = U_k(x/2, y) satisfies W_{k+1} = x W_k - y^2 W_{k-1}; both tilde
// families are integer and monic in x, so the recurrence stays in Z.
inline BinaryForm tilde_recurrence(long steps, BinaryForm prev, BinaryForm cur) {
    for (long k = 0; k < steps; ++k) {
        int d = cur.degree() + 1;
        std::vector<Rat> next(d + 1, Rat(0));
        for (int i = 0; i <= cur.degree(); ++i) next[i] += cur.coeff(i);          // x * cur
        for (int i = 0; i <= prev.degree(); ++i) next[i + 2] -= prev.coeff(i);    // y^2 * prev
        prev = std::move(cur);
        cur = BinaryForm(d, std::move(next));
    }
    return cur;
}

}  // namespace detail

// U~_n(x, y) = U_{n-1}(x/2, y): monic integer form of degree n-1.
inline BinaryForm u_tilde(long n) {
    if (n < 1) throw std::domain_error("u_tilde: n must be >= 1");
    BinaryForm w0(0, {Rat(1)});
    if (n == 1) return w0;
    BinaryForm w1(1, {Rat(1), Rat(0)});
    return detail::tilde_recurrence(n - 2, std::move(w0), std::move(w1));
}

// V~_n(x, y) = 2T_n(x/2, y): monic integer form of degree n.
inline BinaryForm v_tilde(long n) {
    if (n < 1) throw std::domain_error("v_tilde: n must be >= 1");
    BinaryForm v0(0, {Rat(2)});
    BinaryForm v1(1, {Rat(1), Rat(0)});
    if (n == 1) return v1;
    return detail::tilde_recurrence(n - 1, std::move(v0), std::move(v1));
}

struct TildeFactorization {
    int x_power = 0;
    std::vector<std::pair<long, BinaryForm>> factors;  // (index d, Psi_d form)
};

namespace detail {

inline BinaryForm factor_product(const TildeFactorization& f, int total_degree) {
    std::vector<Rat> c(f.x_power + 1, Rat(0));
    c[0] = 1;
    BinaryForm acc(f.x_power, std::move(c));  // x^k
    for (const auto& [d, form] : f.factors) acc = acc * form;
    if (acc.degree() != total_degree)
        throw std::logic_error("tilde factorization: degree mismatch");
    return acc;
}

}  // namespace detail

// U~_n = x^((1-(-1)^(n-1))/2) * prod_{d | 2n, d not in {1,2,4}} Psi_d.
// The product is verified exactly before returning.
inline TildeFactorization factor_u_tilde(long n) {
    if (n < 1) throw std::domain_error("factor_u_tilde: n must be >= 1");
    TildeFactorization f;
    f.x_power = (n % 2 == 0) ? 1 : 0;
    for (long d : divisors(2 * n)) {
        if (d == 1 || d == 2 || d == 4) continue;
        f.factors.emplace_back(d, psi_form(d));
    }
    BinaryForm expect = u_tilde(n);
    if (detail::factor_product(f, expect.degree()) != expect)
        throw std::logic_error("factor_u_tilde: product check failed");
    return f;
}

// V~_n = x^((1-(-1)^n)/2) * prod over odd proper divisors d of n of Psi_{4n/d}.
inline TildeFactorization factor_v_tilde(long n) {
    if (n < 1) throw std::domain_error("factor_v_tilde: n must be >= 1");
    TildeFactorization f;
    f.x_power = (n % 2 == 1) ? 1 : 0;
    for (long d : divisors(n)) {
        if (d == n || d % 2 == 0) continue;
        f.factors.emplace_back(4 * n / d, psi_form(4 * n / d));
    }
    BinaryForm expect = v_tilde(n);
    if (detail::factor_product(f, expect.degree()) != expect)
        throw std::logic_error("factor_v_tilde: product check failed");
    return f;
}

}  // namespace trigforms
