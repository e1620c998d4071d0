// Exact rational numbers over 64-bit integers.
//
// Invariants: denominator > 0 and gcd(num, den) = 1 at all times.  Arithmetic
// runs through 128-bit intermediates and throws ComputeError if a reduced
// result falls outside the 64-bit range, so results are exact or absent.
#ifndef LEXPOINT_RATIONAL_HPP
#define LEXPOINT_RATIONAL_HPP

#include <cstdint>
#include <ostream>
#include <string>

#include "lexpoint/errors.hpp"

namespace lexpoint {

namespace detail {

using int128 = __int128;

inline int128 abs128(int128 a) { return a < 0 ? -a : a; }

inline int128 gcd128(int128 a, int128 b) {
    a = abs128(a);
    b = abs128(b);
    while (b != 0) {
        int128 r = a % b;
        a = b;
        b = r;
    }
    return a;
}

inline std::int64_t narrow128(int128 v) {
    if (v > int128(INT64_MAX) || v < int128(INT64_MIN))
        throw OverflowError("rational arithmetic overflowed 64-bit storage");
    return static_cast<std::int64_t>(v);
}

} // namespace detail

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t n) : num_(n), den_(1) {}
    Rational(std::int64_t n, std::int64_t d) { assign(n, d); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    Rational& operator+=(const Rational& o) {
        detail::int128 n = detail::int128(num_) * o.den_ + detail::int128(o.num_) * den_;
        detail::int128 d = detail::int128(den_) * o.den_;
        assign128(n, d);
        return *this;
    }
    Rational& operator-=(const Rational& o) { return *this += (-o); }
    Rational& operator*=(const Rational& o) {
        detail::int128 n = detail::int128(num_) * o.num_;
        detail::int128 d = detail::int128(den_) * o.den_;
        assign128(n, d);
        return *this;
    }
    Rational& operator/=(const Rational& o) {
        if (o.num_ == 0)
            throw ComputeError("division by zero rational");
        detail::int128 n = detail::int128(num_) * o.den_;
        detail::int128 d = detail::int128(den_) * o.num_;
        assign128(n, d);
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return detail::int128(a.num_) * b.den_ < detail::int128(b.num_) * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    std::string to_string() const {
        if (den_ == 1)
            return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.to_string();
    }

private:
    void assign(std::int64_t n, std::int64_t d) { assign128(n, d); }

    void assign128(detail::int128 n, detail::int128 d) {
        if (d == 0)
            throw ComputeError("rational with zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        if (n == 0) {
            num_ = 0;
            den_ = 1;
            return;
        }
        detail::int128 g = detail::gcd128(n, d);
        num_ = detail::narrow128(n / g);
        den_ = detail::narrow128(d / g);
    }

    std::int64_t num_;
    std::int64_t den_;
};

inline Rational abs(const Rational& r) { return r.num() < 0 ? -r : r; }

} // namespace lexpoint

#endif
