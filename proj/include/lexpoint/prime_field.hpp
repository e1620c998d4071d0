// Prime field elements with a runtime modulus.
//
// An element stores (value, p).  p == 0 marks an unbound integer literal: it
// behaves as an exact integer until combined with a bound element, at which
// point it adopts that element's modulus.  This lets generic code construct
// Scalar(0) and Scalar(1) without access to a field context, which Eigen and
// the expression templates require.  Mixing two distinct moduli is an error.
#ifndef LEXPOINT_PRIME_FIELD_HPP
#define LEXPOINT_PRIME_FIELD_HPP

#include <cstdint>
#include <ostream>
#include <string>

#include "lexpoint/errors.hpp"

namespace lexpoint {

class GFp {
public:
    GFp() : v_(0), p_(0) {}
    GFp(std::int64_t n) : v_(n), p_(0) {}
    GFp(std::int64_t n, std::int64_t p) {
        if (p < 2)
            throw ComputeError("prime field modulus must be at least 2");
        p_ = p;
        v_ = n % p;
        if (v_ < 0)
            v_ += p;
    }

    std::int64_t value() const { return v_; }
    std::int64_t modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }

    GFp operator-() const {
        GFp r(*this);
        if (r.p_ == 0)
            r.v_ = -r.v_;
        else if (r.v_ != 0)
            r.v_ = r.p_ - r.v_;
        return r;
    }

    GFp& operator+=(const GFp& o) {
        auto [a, b, p] = aligned(*this, o);
        if (p == 0)
            return *this = GFp(a + b);
        return *this = GFp((a + b) % p, p);
    }
    GFp& operator-=(const GFp& o) { return *this += (-o); }
    GFp& operator*=(const GFp& o) {
        auto [a, b, p] = aligned(*this, o);
        if (p == 0)
            return *this = GFp(a * b);
        return *this = GFp((a * b) % p, p);
    }
    GFp& operator/=(const GFp& o) { return *this *= o.inverse(); }

    GFp inverse() const {
        if (p_ == 0) {
            if (v_ == 1 || v_ == -1)
                return *this;
            throw ComputeError("cannot invert unbound prime field literal " + std::to_string(v_));
        }
        if (v_ == 0)
            throw ComputeError("division by zero in GF(" + std::to_string(p_) + ")");
        // Extended Euclid on (v, p); v is invertible because p is prime.
        std::int64_t t = 0, new_t = 1, r = p_, new_r = v_;
        while (new_r != 0) {
            std::int64_t q = r / new_r;
            std::int64_t tmp = t - q * new_t;
            t = new_t;
            new_t = tmp;
            tmp = r - q * new_r;
            r = new_r;
            new_r = tmp;
        }
        if (t < 0)
            t += p_;
        return GFp(t, p_);
    }

    friend GFp operator+(GFp a, const GFp& b) { return a += b; }
    friend GFp operator-(GFp a, const GFp& b) { return a -= b; }
    friend GFp operator*(GFp a, const GFp& b) { return a *= b; }
    friend GFp operator/(GFp a, const GFp& b) { return a /= b; }

    friend bool operator==(const GFp& a, const GFp& b) {
        auto [x, y, p] = aligned(a, b);
        (void)p;
        return x == y;
    }
    friend bool operator!=(const GFp& a, const GFp& b) { return !(a == b); }
    friend bool operator<(const GFp& a, const GFp& b) {
        auto [x, y, p] = aligned(a, b);
        (void)p;
        return x < y;
    }
    friend bool operator>(const GFp& a, const GFp& b) { return b < a; }
    friend bool operator<=(const GFp& a, const GFp& b) { return !(b < a); }
    friend bool operator>=(const GFp& a, const GFp& b) { return !(a < b); }

    std::string to_string() const { return std::to_string(v_); }

    friend std::ostream& operator<<(std::ostream& os, const GFp& x) {
        return os << x.to_string();
    }

private:
    struct Aligned {
        std::int64_t a;
        std::int64_t b;
        std::int64_t p;
    };

    static Aligned aligned(const GFp& x, const GFp& y) {
        if (x.p_ == y.p_)
            return {x.v_, y.v_, x.p_};
        if (x.p_ == 0)
            return {GFp(x.v_, y.p_).v_, y.v_, y.p_};
        if (y.p_ == 0)
            return {x.v_, GFp(y.v_, x.p_).v_, x.p_};
        throw ComputeError("mixed prime field moduli " + std::to_string(x.p_) + " and " +
                           std::to_string(y.p_));
    }

    std::int64_t v_;
    std::int64_t p_;
};

inline GFp abs(const GFp& x) { return x; }

} // namespace lexpoint

#endif
