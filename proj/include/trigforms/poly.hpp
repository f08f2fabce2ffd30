#pragma once

// Dense univariate polynomials with exact coefficients, plus resultants and
// discriminants via the subresultant PRS.

#include <algorithm>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "trigforms/numeric.hpp"

namespace trigforms {

// Coefficients ascending by exponent; invariant: highest stored coefficient is
// nonzero (the zero polynomial stores nothing and reports degree -1).
template <class T>
class Poly {
public:
    Poly() = default;
    Poly(std::initializer_list<T> ascending) : c_(ascending) { normalize(); }
    explicit Poly(std::vector<T> ascending) : c_(std::move(ascending)) { normalize(); }

    static Poly constant(T v) { return Poly(std::vector<T>{std::move(v)}); }
    static Poly x() { return Poly({T(0), T(1)}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    T coeff(size_t i) const { return i < c_.size() ? c_[i] : T(0); }
    const std::vector<T>& coeffs() const { return c_; }

    T leading() const {
        if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
        return c_.back();
    }
    bool is_monic() const { return !is_zero() && c_.back() == T(1); }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly operator-() const {
        std::vector<T> r(c_);
        for (auto& v : r) v = -v;
        return Poly(std::move(r));
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<T> r(std::max(a.c_.size(), b.c_.size()), T(0));
        for (size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return Poly(std::move(r));
    }

    friend Poly operator*(const T& s, const Poly& a) {
        std::vector<T> r(a.c_);
        for (auto& v : r) v *= s;
        return Poly(std::move(r));
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<T> r(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * T(static_cast<long>(i));
        return Poly(std::move(r));
    }

    // Substitute x -> x^k.
    Poly inflate(size_t k) const {
        if (is_zero() || k == 1) return *this;
        std::vector<T> r(k * (c_.size() - 1) + 1, T(0));
        for (size_t i = 0; i < c_.size(); ++i) r[i * k] = c_[i];
        return Poly(std::move(r));
    }

    // Substitute x -> -x.
    Poly reflect() const {
        std::vector<T> r(c_);
        for (size_t i = 1; i < r.size(); i += 2) r[i] = -r[i];
        return Poly(std::move(r));
    }

    template <class V>
    V eval(const V& x) const {
        V acc(0);
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + V(c_[i]);
        return acc;
    }

    std::string str(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (size_t i = c_.size(); i-- > 0;) {
            if (c_[i] == T(0)) continue;
            T a = c_[i];
            if (first) {
                if (a < T(0)) os << "-", a = -a;
            } else {
                os << (a < T(0) ? " - " : " + ");
                if (a < T(0)) a = -a;
            }
            first = false;
            bool unit = (a == T(1)) && i > 0;
            if (!unit) os << a;
            if (i > 0) {
                if (!unit) os << "*";
                os << var;
                if (i > 1) os << "^" << i;
            }
        }
        return os.str();
    }

private:
    void normalize() {
        while (!c_.empty() && c_.back() == T(0)) c_.pop_back();
    }

    std::vector<T> c_;
};

using IntPoly = Poly<Int>;
using RatPoly = Poly<Rat>;

inline Int poly_content(const IntPoly& p) {
    Int g = 0;
    for (const auto& c : p.coeffs()) g = boost::multiprecision::gcd(g, c);
    return g;
}

inline IntPoly primitive_part(const IntPoly& p) {
    Int g = poly_content(p);
    if (g == 0) return p;
    if (p.leading() < 0) g = -g;
    std::vector<Int> r(p.coeffs());
    for (auto& c : r) c /= g;
    return IntPoly(std::move(r));
}

// Exact quotient a / b; throws if the division leaves a remainder or a
// non-integer intermediate coefficient.
inline IntPoly exact_divide(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw std::domain_error("exact_divide: division by zero polynomial");
    if (a.is_zero()) return IntPoly();
    if (a.degree() < b.degree()) throw std::domain_error("exact_divide: remainder is nonzero");
    std::vector<Int> rem(a.coeffs());
    std::vector<Int> q(a.degree() - b.degree() + 1, Int(0));
    const Int& lb = b.leading();
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
        Int& top = rem[k + b.degree()];
        if (top % lb != 0) throw std::domain_error("exact_divide: remainder is nonzero");
        Int qk = top / lb;
        q[k] = qk;
        for (int i = 0; i <= b.degree(); ++i) rem[k + i] -= qk * b.coeff(i);
    }
    for (const auto& r : rem)
        if (r != 0) throw std::domain_error("exact_divide: remainder is nonzero");
    return IntPoly(std::move(q));
}

inline RatPoly divmod(const RatPoly& a, const RatPoly& b, RatPoly* rem_out = nullptr) {
    if (b.is_zero()) throw std::domain_error("divmod: division by zero polynomial");
    std::vector<Rat> rem(a.coeffs());
    std::vector<Rat> q(std::max(0, a.degree() - b.degree() + 1), Rat(0));
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
        Rat qk = rem[k + b.degree()] / b.leading();
        q[k] = qk;
        for (int i = 0; i <= b.degree(); ++i) rem[k + i] -= qk * b.coeff(i);
    }
    if (rem_out) *rem_out = RatPoly(std::move(rem));
    return RatPoly(std::move(q));
}

inline IntPoly to_int_poly(const RatPoly& p, Rat* scale = nullptr) {
    Int l = 1;
    for (const auto& c : p.coeffs()) l = boost::multiprecision::lcm(l, den(c));
    std::vector<Int> r;
    r.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) r.push_back(num(c) * (l / den(c)));
    IntPoly ip(std::move(r));
    Int g = poly_content(ip);
    if (g == 0) {
        if (scale) *scale = Rat(1);
        return ip;
    }
    std::vector<Int> s(ip.coeffs());
    for (auto& c : s) c /= g;
    if (scale) *scale = Rat(g, l);
    return IntPoly(std::move(s));
}

inline RatPoly to_rat_poly(const IntPoly& p) {
    std::vector<Rat> r;
    r.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) r.emplace_back(c);
    return RatPoly(std::move(r));
}

// Pseudo-remainder rem(lc(b)^(deg a - deg b + 1) * a, b), built stepwise so
// every intermediate coefficient stays integral.
inline IntPoly pseudo_rem(const IntPoly& a, const IntPoly& b) {
    int da = a.degree(), db = b.degree();
    const Int& lb = b.leading();
    std::vector<Int> rem(a.coeffs());
    for (int k = da - db; k >= 0; --k) {
        Int top = rem[k + db];
        for (auto& c : rem) c *= lb;
        for (int i = 0; i <= db; ++i) rem[k + i] -= top * b.coeff(i);
    }
    rem.resize(db > 0 ? db : 0);
    return IntPoly(std::move(rem));
}

// Resultant of two integer polynomials by the subresultant PRS
// (Cohen, "A Course in Computational Algebraic Number Theory", alg. 3.3.7).
inline Int resultant(IntPoly a, IntPoly b) {
    if (a.is_zero() || b.is_zero()) return 0;
    if (a.degree() == 0) return ipow(a.leading(), b.degree());
    if (b.degree() == 0) return ipow(b.leading(), a.degree());

    int sign = 1;
    if (a.degree() < b.degree()) {
        std::swap(a, b);
        if ((a.degree() & 1) && (b.degree() & 1)) sign = -sign;
    }
    Int ca = poly_content(a), cb = poly_content(b);
    Int acc = ipow(ca, b.degree()) * ipow(cb, a.degree());
    a = primitive_part(a);
    b = primitive_part(b);

    Int g = 1, h = 1;
    while (true) {
        int delta = a.degree() - b.degree();
        if ((a.degree() & 1) && (b.degree() & 1)) sign = -sign;

        IntPoly r = pseudo_rem(a, b);
        a = std::move(b);
        Int divisor = g * ipow(h, delta);
        {
            std::vector<Int> rc(r.coeffs());
            for (auto& c : rc) c /= divisor;
            b = IntPoly(std::move(rc));
        }
        g = a.leading();
        if (delta >= 1)
            h = ipow(g, delta) / ipow(h, delta - 1);
        // delta == 0 leaves h unchanged

        if (b.is_zero()) return 0;
        if (b.degree() == 0) {
            Int hh = (a.degree() >= 1) ? ipow(b.leading(), a.degree()) / ipow(h, a.degree() - 1) : h;
            return sign * acc * hh;
        }
    }
}

inline Rat ipow_rat(Rat base, unsigned long e) {
    Rat r = 1;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

inline Rat resultant(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) return Rat(0);
    Rat sa, sb;
    IntPoly ia = to_int_poly(a, &sa), ib = to_int_poly(b, &sb);
    Rat scale = ipow_rat(sa, b.degree()) * ipow_rat(sb, a.degree());
    return scale * Rat(resultant(ia, ib));
}

// disc(p) = (-1)^(d(d-1)/2) Res(p, p') / lc(p); for monic p this is the usual
// polynomial discriminant.
inline Rat poly_discriminant(const RatPoly& p) {
    int d = p.degree();
    if (d < 1) throw std::domain_error("poly_discriminant: degree must be >= 1");
    if (d == 1) return Rat(1);
    Rat r = resultant(p, p.derivative());
    Rat disc = r / p.leading();
    if (((long(d) * (d - 1)) / 2) % 2) disc = -disc;
    return disc;
}

// Primitive-PRS gcd of integer polynomials (monic-normalized primitive output).
inline IntPoly poly_gcd(IntPoly a, IntPoly b) {
    if (a.is_zero()) return primitive_part(b);
    if (b.is_zero()) return primitive_part(a);
    Int cg = boost::multiprecision::gcd(poly_content(a), poly_content(b));
    a = primitive_part(a);
    b = primitive_part(b);
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        IntPoly r = pseudo_rem(a, b);
        a = std::move(b);
        b = primitive_part(r);
    }
    return cg * a;
}

}  // namespace trigforms
