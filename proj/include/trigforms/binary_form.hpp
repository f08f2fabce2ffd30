#pragma once

// Homogeneous bivariate forms F(x,y) = sum c_i x^(d-i) y^i with exact rational
// coefficients, linear substitutions and the form discriminant.

#include <optional>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "trigforms/mat2q.hpp"
#include "trigforms/poly.hpp"

namespace trigforms {

class BinaryForm {
public:
    // Coefficients ordered c_0..c_d with F = sum c_i x^(d-i) y^i.
    BinaryForm(int degree, std::vector<Rat> coeffs) : d_(degree), c_(std::move(coeffs)) {
        if (d_ < 0) throw std::invalid_argument("BinaryForm: negative degree");
        if (c_.size() != static_cast<size_t>(d_) + 1)
            throw std::invalid_argument("BinaryForm: need exactly degree+1 coefficients");
    }

    int degree() const { return d_; }
    const Rat& coeff(int i) const { return c_.at(i); }
    const std::vector<Rat>& coeffs() const { return c_; }

    bool is_zero() const {
        for (const auto& c : c_)
            if (c != 0) return false;
        return true;
    }

    bool is_integral() const {
        for (const auto& c : c_)
            if (den(c) != 1) return false;
        return true;
    }

    // Gauss content: the positive rational g with F = g * (primitive integer form).
    Rat content() const {
        if (is_zero()) return Rat(0);
        Int l = 1;
        for (const auto& c : c_) l = boost::multiprecision::lcm(l, den(c));
        Int g = 0;
        for (const auto& c : c_) g = boost::multiprecision::gcd(g, num(c) * (l / den(c)));
        return Rat(g, l);
    }

    BinaryForm primitive_part() const {
        Rat g = content();
        if (g == 0) return *this;
        if (!c_.empty()) {
            // keep the sign of the first nonzero coefficient
            for (const auto& c : c_) {
                if (c != 0) {
                    if (c < 0) g = -g;
                    break;
                }
            }
        }
        std::vector<Rat> r(c_);
        for (auto& c : r) c /= g;
        return BinaryForm(d_, std::move(r));
    }

    // Horner in x with an accumulated power of y: after step i the value is
    // sum_{j<=i} c_j x^(i-j) y^j.
    Rat evaluate_exact(const Rat& x, const Rat& y) const {
        Rat acc(0), yp(1);
        for (int i = 0; i <= d_; ++i) {
            acc = acc * x + c_[i] * yp;
            yp *= y;
        }
        return acc;
    }

    // Same scheme over any ring; `conv` maps a Rat coefficient into V.
    template <class V, class Conv>
    V evaluate_as(const V& x, const V& y, Conv conv) const {
        V acc(0), yp(1);
        for (int i = 0; i <= d_; ++i) {
            acc = acc * x + conv(c_[i]) * yp;
            yp = yp * y;
        }
        return acc;
    }

    friend bool operator==(const BinaryForm& a, const BinaryForm& b) {
        return a.d_ == b.d_ && a.c_ == b.c_;
    }
    friend bool operator!=(const BinaryForm& a, const BinaryForm& b) { return !(a == b); }

    BinaryForm operator-() const {
        std::vector<Rat> r(c_);
        for (auto& c : r) c = -c;
        return BinaryForm(d_, std::move(r));
    }

    friend BinaryForm operator*(const Rat& k, const BinaryForm& f) {
        std::vector<Rat> r(f.c_);
        for (auto& c : r) c *= k;
        return BinaryForm(f.d_, std::move(r));
    }

    friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
        std::vector<Rat> r(a.d_ + b.d_ + 1, Rat(0));
        for (int i = 0; i <= a.d_; ++i)
            for (int j = 0; j <= b.d_; ++j) r[i + j] += a.c_[i] * b.c_[j];
        return BinaryForm(a.d_ + b.d_, std::move(r));
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (int i = 0; i <= d_; ++i) {
            if (c_[i] == 0) continue;
            Rat a = c_[i];
            if (first) {
                if (a < 0) os << "-", a = -a;
            } else {
                os << (a < 0 ? " - " : " + ");
                if (a < 0) a = -a;
            }
            first = false;
            int px = d_ - i, py = i;
            bool unit = (a == 1) && (px + py > 0);
            if (!unit) os << rat_to_string(a);
            bool need_star = !unit;
            auto var = [&](const char* name, int p) {
                if (p == 0) return;
                if (need_star) os << "*";
                need_star = true;
                os << name;
                if (p > 1) os << "^" << p;
            };
            var("x", px);
            var("y", py);
        }
        return os.str();
    }

private:
    int d_;
    std::vector<Rat> c_;
};

// F(x,y) = y^d p(x/y); requires d >= deg p.
inline BinaryForm homogenize(const RatPoly& p, int d) {
    if (d < p.degree()) throw std::invalid_argument("homogenize: d < deg p");
    std::vector<Rat> c(static_cast<size_t>(d) + 1, Rat(0));
    for (int i = 0; i <= p.degree(); ++i) c[d - i] = p.coeff(i);
    return BinaryForm(d, std::move(c));
}

inline BinaryForm homogenize(const IntPoly& p, int d) { return homogenize(to_rat_poly(p), d); }
inline BinaryForm homogenize(const IntPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("homogenize: zero polynomial needs explicit degree");
    return homogenize(p, p.degree());
}

// p(x) = F(x, 1).
inline RatPoly dehomogenize(const BinaryForm& f) {
    std::vector<Rat> c(static_cast<size_t>(f.degree()) + 1, Rat(0));
    for (int i = 0; i <= f.degree(); ++i) c[f.degree() - i] = f.coeff(i);
    return RatPoly(std::move(c));
}

// F_M(x,y) = F(sx+uy, tx+vy). Singular M is allowed; the result is degenerate.
inline BinaryForm substitute(const BinaryForm& f, const Mat2Q& m) {
    const int d = f.degree();
    // X = s x + u y, Y = t x + v y as coefficient pairs; build
    // R_i = R_{i-1} * X + c_i * Y^i, so R_d = F(X, Y). O(d^2) products.
    std::vector<Rat> acc{f.coeff(0)};          // homogeneous of degree i in (x,y)
    std::vector<Rat> ypow{Rat(1)};             // Y^i
    for (int i = 1; i <= d; ++i) {
        std::vector<Rat> next(i + 1, Rat(0));
        for (int j = 0; j < i; ++j) {
            next[j] += acc[j] * m.s;
            next[j + 1] += acc[j] * m.u;
        }
        std::vector<Rat> yn(i + 1, Rat(0));
        for (int j = 0; j < i; ++j) {
            yn[j] += ypow[j] * m.t;
            yn[j + 1] += ypow[j] * m.v;
        }
        ypow = std::move(yn);
        for (int j = 0; j <= i; ++j) next[j] += f.coeff(i) * ypow[j];
        acc = std::move(next);
    }
    return BinaryForm(d, std::move(acc));
}

// The constant c with G = c*F, if the forms are proportional.
inline std::optional<Rat> proportionality(const BinaryForm& f, const BinaryForm& g) {
    if (f.degree() != g.degree()) return std::nullopt;
    std::optional<Rat> c;
    for (int i = 0; i <= f.degree(); ++i) {
        const Rat &a = f.coeff(i), &b = g.coeff(i);
        if (a == 0) {
            if (b != 0) return std::nullopt;
            continue;
        }
        Rat q = b / a;
        if (!c)
            c = q;
        else if (*c != q)
            return std::nullopt;
    }
    if (!c) return std::nullopt;  // both forms zero: no well-defined constant
    if (*c == 0) return std::nullopt;
    return c;
}

// Exact quotient a / b of forms; throws if b does not divide a.
inline BinaryForm form_exact_divide(const BinaryForm& a, const BinaryForm& b) {
    if (b.is_zero()) throw std::domain_error("form_exact_divide: zero divisor");
    if (a.degree() < b.degree()) throw std::domain_error("form_exact_divide: not divisible");
    int dq = a.degree() - b.degree();
    // Treat coefficient vectors as univariate polynomials (grading fixes y powers).
    int lead = 0;
    while (b.coeff(lead) == 0) {
        if (a.coeff(lead) != 0) throw std::domain_error("form_exact_divide: not divisible");
        ++lead;
        if (lead > b.degree()) throw std::domain_error("form_exact_divide: zero divisor");
    }
    std::vector<Rat> rem(a.coeffs());
    std::vector<Rat> q(dq + 1, Rat(0));
    for (int k = 0; k <= dq; ++k) {
        Rat qk = rem[k + lead] / b.coeff(lead);
        q[k] = qk;
        for (int i = lead; i <= b.degree(); ++i) rem[k + i] -= qk * b.coeff(i);
    }
    for (const auto& r : rem)
        if (r != 0) throw std::domain_error("form_exact_divide: not divisible");
    return BinaryForm(dq, std::move(q));
}

// Discriminant of the form, normalized so that for monic-in-x forms it equals
// the discriminant of F(x, 1) as a degree-d polynomial. When the x-leading
// coefficient vanishes the form is sheared by x -> x, y -> kx + y (det 1),
// which leaves the discriminant unchanged.
inline Rat discriminant(const BinaryForm& f) {
    int d = f.degree();
    if (d < 2) throw std::invalid_argument("discriminant: degree must be >= 2");
    BinaryForm g = f;
    for (long k = 1; g.coeff(0) == 0; ++k) {
        if (k > d + 1) throw std::logic_error("discriminant: could not move roots off infinity");
        g = substitute(f, Mat2Q(Rat(1), Rat(0), Rat(k), Rat(1)));
    }
    RatPoly p = dehomogenize(g);
    // deg p == d here since the x^d coefficient is nonzero
    return poly_discriminant(p);
}

}  // namespace trigforms
