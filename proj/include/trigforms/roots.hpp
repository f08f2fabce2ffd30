#pragma once

// Projective roots of binary forms via Aberth-Ehrlich simultaneous iteration
// at a configurable working precision (192/384/768 bits).

#include <complex>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/complex_adaptor.hpp>

#include "trigforms/binary_form.hpp"

namespace trigforms {

template <unsigned Bits>
using BigFloat =
    boost::multiprecision::number<boost::multiprecision::cpp_bin_float<Bits, boost::multiprecision::digit_base_2>>;
template <unsigned Bits>
using BigComplex = boost::multiprecision::number<
    boost::multiprecision::complex_adaptor<boost::multiprecision::cpp_bin_float<Bits, boost::multiprecision::digit_base_2>>>;

constexpr unsigned kRootMaxBits = 768;

struct RootPrecisionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A point [a : b] of the complex projective line, normalized so the
// larger-magnitude coordinate is 1. Coordinates are stored at the widest
// supported tier; `precision_bits` records the precision they were computed at.
struct ProjRoot {
    BigFloat<kRootMaxBits> ar{0}, ai{0}, br{0}, bi{0};
    int precision_bits = 0;
    // set for roots known in closed form as 2*cos(2*pi*k/n)
    bool exact_trig = false;
    long trig_k = 0, trig_n = 0;

    bool at_infinity() const { return br == 0 && bi == 0; }

    std::complex<double> a_d() const {
        return {static_cast<double>(ar), static_cast<double>(ai)};
    }
    std::complex<double> b_d() const {
        return {static_cast<double>(br), static_cast<double>(bi)};
    }

    // true when the projective point is real (both coordinates real up to tol)
    bool is_real(double tol = 1e-24) const {
        using std::abs;
        return static_cast<double>(abs(ai)) <= tol && static_cast<double>(abs(bi)) <= tol;
    }

    template <unsigned Bits>
    void get(BigComplex<Bits>& a, BigComplex<Bits>& b) const {
        a = BigComplex<Bits>(BigFloat<Bits>(ar), BigFloat<Bits>(ai));
        b = BigComplex<Bits>(BigFloat<Bits>(br), BigFloat<Bits>(bi));
    }
};

namespace detail {

template <unsigned Bits>
bool aberth(const std::vector<BigFloat<Bits>>& coeffs, std::vector<BigComplex<Bits>>& roots) {
    using R = BigFloat<Bits>;
    using C = BigComplex<Bits>;
    const int m = static_cast<int>(coeffs.size()) - 1;
    roots.clear();
    if (m <= 0) return true;

    std::vector<C> c(coeffs.size());
    for (size_t i = 0; i < coeffs.size(); ++i) c[i] = coeffs[i];

    R lead = abs(coeffs[m]);
    R radius = 0;
    for (int i = 0; i < m; ++i) radius = (std::max)(radius, R(abs(coeffs[i]) / lead));
    radius = 1 + radius;  // Cauchy bound: all roots inside |z| <= radius

    std::vector<C> z(m);
    const double two_pi = 6.283185307179586476925286766559;
    for (int i = 0; i < m; ++i) {
        double ang = two_pi * (i + 0.35) / m + 0.6;
        R r = radius * R(0.5 + 0.35 * (i % 7) / 7.0);
        z[i] = C(r * R(std::cos(ang)), r * R(std::sin(ang)));
    }

    const R eps = boost::multiprecision::ldexp(R(1), -static_cast<int>(Bits) + 8);
    std::vector<bool> done(m, false);

    auto eval = [&](const C& x, C& p, C& dp) {
        p = c[m];
        dp = 0;
        for (int k = m - 1; k >= 0; --k) {
            dp = dp * x + p;
            p = p * x + c[k];
        }
    };

    const int max_iter = 120 + 12 * m;
    for (int it = 0; it < max_iter; ++it) {
        bool all_done = true;
        for (int i = 0; i < m; ++i) {
            if (done[i]) continue;
            C p, dp;
            eval(z[i], p, dp);
            if (abs(p) == 0) {
                done[i] = true;
                continue;
            }
            C newton;
            if (abs(dp) == 0) {
                z[i] += C(R(0.001) * radius, R(0.0007) * radius);
                all_done = false;
                continue;
            }
            newton = p / dp;
            C s = 0;
            bool collision = false;
            for (int j = 0; j < m; ++j) {
                if (j == i) continue;
                C diff = z[i] - z[j];
                if (abs(diff) == 0) {
                    collision = true;
                    break;
                }
                s += C(1) / diff;
            }
            if (collision) {
                z[i] += C(R(0.001) * radius, R(0.0013) * radius);
                all_done = false;
                continue;
            }
            C denom = C(1) - newton * s;
            C w = (abs(denom) == 0) ? newton : newton / denom;
            z[i] -= w;
            if (abs(w) <= eps * (1 + abs(z[i])))
                done[i] = true;
            else
                all_done = false;
        }
        if (all_done) {
            roots = std::move(z);
            return true;
        }
    }
    // Accept whatever converged if every residual is already tiny; otherwise fail.
    R bound = 0;
    for (const auto& ci : coeffs) bound += abs(ci);
    for (int i = 0; i < m; ++i) {
        C p, dp;
        eval(z[i], p, dp);
        R scale = bound * pow(R(1) + abs(z[i]), static_cast<unsigned>(m));
        if (abs(p) > scale * boost::multiprecision::ldexp(R(1), -static_cast<int>(Bits) / 2))
            return false;
    }
    roots = std::move(z);
    return true;
}

template <unsigned Bits>
bool roots_at_precision(const IntPoly& p, std::vector<ProjRoot>& out) {
    using R = BigFloat<Bits>;
    using C = BigComplex<Bits>;
    std::vector<R> c;
    c.reserve(p.coeffs().size());
    for (const auto& v : p.coeffs()) c.push_back(R(v));

    std::vector<C> z;
    if (!aberth<Bits>(c, z)) return false;

    // residual certification: |p(z)| must be tiny relative to sum|c_k||z|^k
    R csum = 0;
    for (const auto& v : c) csum += abs(v);
    const R tol = boost::multiprecision::ldexp(R(1), -static_cast<int>(Bits) / 2);
    for (const auto& zi : z) {
        C val = c.back();
        for (int k = static_cast<int>(c.size()) - 2; k >= 0; --k) val = val * zi + c[k];
        R scale = csum * pow((std::max)(R(1), R(abs(zi))), p.degree());
        if (abs(val) > scale * tol) return false;
    }

    for (const auto& zi : z) {
        ProjRoot r;
        r.precision_bits = static_cast<int>(Bits);
        if (abs(zi) <= 1) {
            r.ar = BigFloat<kRootMaxBits>(zi.real());
            r.ai = BigFloat<kRootMaxBits>(zi.imag());
            r.br = 1;
            r.bi = 0;
        } else {
            C w = C(1) / zi;
            r.ar = 1;
            r.ai = 0;
            r.br = BigFloat<kRootMaxBits>(w.real());
            r.bi = BigFloat<kRootMaxBits>(w.imag());
        }
        out.push_back(std::move(r));
    }
    return true;
}

}  // namespace detail

// The d projective roots of F (with multiplicity), including [1:0] when y | F.
// Tries the requested precision first and doubles it on convergence failure.
inline std::vector<ProjRoot> projective_roots(const BinaryForm& f, unsigned bits = 192) {
    if (f.is_zero()) throw std::invalid_argument("projective_roots: zero form");
    if (f.degree() < 1) throw std::invalid_argument("projective_roots: degree must be >= 1");

    int inf_mult = 0;
    while (f.coeff(inf_mult) == 0) ++inf_mult;

    RatPoly p = dehomogenize(f);
    IntPoly ip = p.is_zero() ? IntPoly() : to_int_poly(p);

    std::vector<ProjRoot> out;
    for (int i = 0; i < inf_mult; ++i) {
        ProjRoot r;
        r.ar = 1;
        r.br = 0;
        r.precision_bits = static_cast<int>(bits);
        out.push_back(std::move(r));
    }
    if (ip.degree() < 1) return out;

    for (unsigned b = (std::max)(bits, 64u); b <= kRootMaxBits; b *= 2) {
        bool ok = false;
        if (b <= 192)
            ok = detail::roots_at_precision<192>(ip, out);
        else if (b <= 384)
            ok = detail::roots_at_precision<384>(ip, out);
        else
            ok = detail::roots_at_precision<768>(ip, out);
        if (ok) return out;
    }
    throw RootPrecisionError("projective_roots: iteration failed to converge at max precision");
}

}  // namespace trigforms
