#pragma once

// 2x2 matrices with exact rational entries, row-major (s u; t v).

#include <array>
#include <optional>
#include <stdexcept>
#include <string>

#include "trigforms/numeric.hpp"

namespace trigforms {

struct Mat2Q {
    Rat s{0}, u{0}, t{0}, v{0};

    Mat2Q() = default;
    Mat2Q(Rat s_, Rat u_, Rat t_, Rat v_)
        : s(std::move(s_)), u(std::move(u_)), t(std::move(t_)), v(std::move(v_)) {}
    Mat2Q(long s_, long u_, long t_, long v_) : s(s_), u(u_), t(t_), v(v_) {}

    static Mat2Q identity() { return {1, 0, 0, 1}; }

    Rat det() const { return s * v - u * t; }
    Rat trace() const { return s + v; }

    Mat2Q inverse() const {
        Rat d = det();
        if (d == 0) throw std::domain_error("Mat2Q::inverse: singular matrix");
        return {v / d, -u / d, -t / d, s / d};
    }

    bool is_identity() const { return s == 1 && u == 0 && t == 0 && v == 1; }
    bool is_integral() const {
        return den(s) == 1 && den(u) == 1 && den(t) == 1 && den(v) == 1;
    }

    friend Mat2Q operator*(const Mat2Q& a, const Mat2Q& b) {
        return {a.s * b.s + a.u * b.t, a.s * b.u + a.u * b.v,
                a.t * b.s + a.v * b.t, a.t * b.u + a.v * b.v};
    }
    friend Mat2Q operator*(const Rat& c, const Mat2Q& a) {
        return {c * a.s, c * a.u, c * a.t, c * a.v};
    }
    Mat2Q operator-() const { return {-s, -u, -t, -v}; }

    friend bool operator==(const Mat2Q& a, const Mat2Q& b) {
        return a.s == b.s && a.u == b.u && a.t == b.t && a.v == b.v;
    }
    friend bool operator!=(const Mat2Q& a, const Mat2Q& b) { return !(a == b); }
    friend bool operator<(const Mat2Q& a, const Mat2Q& b) {
        if (a.s != b.s) return a.s < b.s;
        if (a.u != b.u) return a.u < b.u;
        if (a.t != b.t) return a.t < b.t;
        return a.v < b.v;
    }

    // Multiplicative order, or nullopt if no power up to `cap` hits I.
    std::optional<int> order(int cap = 12) const {
        Mat2Q p = *this;
        for (int k = 1; k <= cap; ++k) {
            if (p.is_identity()) return k;
            p = p * (*this);
        }
        return std::nullopt;
    }

    std::array<Rat, 4> entries() const { return {s, u, t, v}; }

    std::string str() const {
        return "(" + rat_to_string(s) + " " + rat_to_string(u) + "; " + rat_to_string(t) +
               " " + rat_to_string(v) + ")";
    }
};

// Writes M = lambda * N with N a primitive integer matrix and lambda > 0.
inline std::pair<Mat2Q, Rat> primitive_scale(const Mat2Q& m) {
    Int l = 1;
    for (const Rat& e : m.entries()) l = boost::multiprecision::lcm(l, den(e));
    Int g = 0;
    for (const Rat& e : m.entries()) g = boost::multiprecision::gcd(g, num(e) * (l / den(e)));
    if (g == 0) throw std::domain_error("primitive_scale: zero matrix");
    Rat f(l, g);
    return {Mat2Q(m.s * f, m.u * f, m.t * f, m.v * f), Rat(g, l)};
}

inline Mat2Q conjugate(const Mat2Q& g, const Mat2Q& s) { return s.inverse() * g * s; }

}  // namespace trigforms
