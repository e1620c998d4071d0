// Univariate rational functions K(t) over an exact coefficient field K.
//
// Canonical form: numerator and denominator are coprime dense polynomials in
// t and the denominator is monic.  Zero is 0/1.  The class exposes the t-adic
// valuation and evaluation at points of K, which the degeneration code uses
// to take limits at t = 0.
#ifndef LEXPOINT_RATIONAL_FUNCTION_HPP
#define LEXPOINT_RATIONAL_FUNCTION_HPP

#include <ostream>
#include <string>
#include <vector>

#include "lexpoint/errors.hpp"

namespace lexpoint {

namespace detail {

// Dense polynomial in t: coeffs[k] multiplies t^k, no trailing zeros.
template <typename K>
using Poly = std::vector<K>;

template <typename K>
void poly_trim(Poly<K>& p) {
    while (!p.empty() && p.back() == K(0))
        p.pop_back();
}

template <typename K>
bool poly_is_zero(const Poly<K>& p) {
    return p.empty();
}

template <typename K>
Poly<K> poly_const(const K& c) {
    if (c == K(0))
        return {};
    return {c};
}

template <typename K>
Poly<K> poly_add(const Poly<K>& a, const Poly<K>& b) {
    Poly<K> r(std::max(a.size(), b.size()), K(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = r[i] + a[i];
    for (std::size_t i = 0; i < b.size(); ++i)
        r[i] = r[i] + b[i];
    poly_trim(r);
    return r;
}

template <typename K>
Poly<K> poly_neg(Poly<K> a) {
    for (K& c : a)
        c = -c;
    return a;
}

template <typename K>
Poly<K> poly_mul(const Poly<K>& a, const Poly<K>& b) {
    if (a.empty() || b.empty())
        return {};
    Poly<K> r(a.size() + b.size() - 1, K(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = r[i + j] + a[i] * b[j];
    poly_trim(r);
    return r;
}

// Remainder of a by b; b nonzero.
template <typename K>
Poly<K> poly_rem(Poly<K> a, const Poly<K>& b) {
    const K lead = b.back();
    while (a.size() >= b.size()) {
        K q = a.back() / lead;
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i)
            a[shift + i] = a[shift + i] - q * b[i];
        poly_trim(a);
        if (a.empty())
            break;
    }
    return a;
}

template <typename K>
Poly<K> poly_monic(Poly<K> a) {
    if (a.empty())
        return a;
    const K lead = a.back();
    for (K& c : a)
        c = c / lead;
    return a;
}

template <typename K>
Poly<K> poly_gcd(Poly<K> a, Poly<K> b) {
    while (!b.empty()) {
        Poly<K> r = poly_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(a);
}

// Exact quotient a / b when b divides a.
template <typename K>
Poly<K> poly_quot_exact(Poly<K> a, const Poly<K>& b) {
    Poly<K> q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, K(0));
    const K lead = b.back();
    while (a.size() >= b.size()) {
        K c = a.back() / lead;
        std::size_t shift = a.size() - b.size();
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i)
            a[shift + i] = a[shift + i] - c * b[i];
        poly_trim(a);
        if (a.empty())
            break;
    }
    return q;
}

template <typename K>
int poly_order(const Poly<K>& p) {
    for (std::size_t i = 0; i < p.size(); ++i)
        if (!(p[i] == K(0)))
            return static_cast<int>(i);
    throw ComputeError("t-adic order of the zero polynomial");
}

template <typename K>
K poly_eval(const Poly<K>& p, const K& c) {
    K acc(0);
    for (std::size_t i = p.size(); i-- > 0;)
        acc = acc * c + p[i];
    return acc;
}

template <typename K>
std::string poly_to_string(const Poly<K>& p) {
    if (p.empty())
        return "0";
    std::string out;
    for (std::size_t i = p.size(); i-- > 0;) {
        if (p[i] == K(0))
            continue;
        K c = p[i];
        std::string term;
        if (i == 0) {
            term = c.to_string();
        } else {
            std::string base = (i == 1) ? "t" : "t^" + std::to_string(i);
            if (c == K(1))
                term = base;
            else if (c == -K(1))
                term = "-" + base;
            else
                term = c.to_string() + "*" + base;
        }
        if (out.empty())
            out = term;
        else if (!term.empty() && term[0] == '-')
            out += " - " + term.substr(1);
        else
            out += " + " + term;
    }
    return out;
}

} // namespace detail

template <typename K>
class RationalFunction {
public:
    RationalFunction() : num_(), den_{K(1)} {}
    RationalFunction(std::int64_t n) : num_(detail::poly_const(K(n))), den_{K(1)} {}
    RationalFunction(const K& c) : num_(detail::poly_const(c)), den_{K(1)} {}
    RationalFunction(detail::Poly<K> num, detail::Poly<K> den) {
        assign(std::move(num), std::move(den));
    }

    // The independent variable t.
    static RationalFunction t() { return RationalFunction(detail::Poly<K>{K(0), K(1)}, {K(1)}); }

    const detail::Poly<K>& num() const { return num_; }
    const detail::Poly<K>& den() const { return den_; }
    bool is_zero() const { return num_.empty(); }
    bool is_constant() const { return num_.size() <= 1 && den_.size() == 1; }

    RationalFunction operator-() const {
        RationalFunction r(*this);
        r.num_ = detail::poly_neg(std::move(r.num_));
        return r;
    }

    RationalFunction& operator+=(const RationalFunction& o) {
        detail::Poly<K> n = detail::poly_add(detail::poly_mul(num_, o.den_),
                                             detail::poly_mul(o.num_, den_));
        detail::Poly<K> d = detail::poly_mul(den_, o.den_);
        assign(std::move(n), std::move(d));
        return *this;
    }
    RationalFunction& operator-=(const RationalFunction& o) { return *this += (-o); }
    RationalFunction& operator*=(const RationalFunction& o) {
        detail::Poly<K> n = detail::poly_mul(num_, o.num_);
        detail::Poly<K> d = detail::poly_mul(den_, o.den_);
        assign(std::move(n), std::move(d));
        return *this;
    }
    RationalFunction& operator/=(const RationalFunction& o) {
        if (o.is_zero())
            throw ComputeError("division by zero rational function");
        detail::Poly<K> n = detail::poly_mul(num_, o.den_);
        detail::Poly<K> d = detail::poly_mul(den_, o.num_);
        assign(std::move(n), std::move(d));
        return *this;
    }

    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

    // Order of vanishing at t = 0; negative at a pole.  Undefined for zero.
    int t_valuation() const {
        if (is_zero())
            throw ComputeError("t-adic valuation of zero");
        int vd = detail::poly_order(den_);
        return detail::poly_order(num_) - vd;
    }

    // Substitute t = c; throws ComputeError at a pole.
    K evaluate_at(const K& c) const {
        K d = detail::poly_eval(den_, c);
        if (d == K(0))
            throw ComputeError("rational function has a pole at the evaluation point");
        return detail::poly_eval(num_, c) / d;
    }

    // Multiply by t^k (k may be negative).
    RationalFunction times_t_power(int k) const {
        RationalFunction tk = t();
        RationalFunction r(*this);
        for (int i = 0; i < (k >= 0 ? k : -k); ++i) {
            if (k >= 0)
                r *= tk;
            else
                r /= tk;
        }
        return r;
    }

    std::string to_string() const {
        std::string n = detail::poly_to_string(num_);
        if (den_.size() == 1)
            return n;
        return "(" + n + ")/(" + detail::poly_to_string(den_) + ")";
    }

    friend std::ostream& operator<<(std::ostream& os, const RationalFunction& f) {
        return os << f.to_string();
    }

private:
    void assign(detail::Poly<K> n, detail::Poly<K> d) {
        detail::poly_trim(n);
        detail::poly_trim(d);
        if (d.empty())
            throw ComputeError("rational function with zero denominator");
        if (n.empty()) {
            num_.clear();
            den_ = {K(1)};
            return;
        }
        detail::Poly<K> g = detail::poly_gcd(n, d);
        if (g.size() > 1) {
            n = detail::poly_quot_exact(std::move(n), g);
            d = detail::poly_quot_exact(std::move(d), g);
        }
        const K lead = d.back();
        if (!(lead == K(1))) {
            for (K& c : n)
                c = c / lead;
            for (K& c : d)
                c = c / lead;
        }
        num_ = std::move(n);
        den_ = std::move(d);
    }

    detail::Poly<K> num_;
    detail::Poly<K> den_;
};

template <typename K>
RationalFunction<K> abs(const RationalFunction<K>& f) {
    return f;
}

} // namespace lexpoint

#endif
