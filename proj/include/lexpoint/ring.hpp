// Graded rings and monomials.
//
// Two ring kinds share one interface: polynomial rings k[x_1..x_n] and
// exterior algebras over an n-dimensional vector space, both standard graded
// with n <= 8.  Monomials are dense exponent vectors; for exterior rings all
// exponents are 0 or 1.  The monomial order is lexicographic with earlier
// variables larger (x > y > z > w, e1 > e2 > ...), which for equal-degree
// exterior monomials matches comparison by smallest moved index.
#ifndef LEXPOINT_RING_HPP
#define LEXPOINT_RING_HPP

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "lexpoint/errors.hpp"
#include "lexpoint/scalar.hpp"

namespace lexpoint {

inline constexpr int kMaxVars = 8;

enum class RingKind { Polynomial, Exterior };

class Monomial {
public:
    Monomial() : e_{} {}

    static Monomial unit() { return Monomial(); }

    static Monomial variable(int i) {
        Monomial m;
        m.e_[i] = 1;
        return m;
    }

    int exp(int i) const { return e_[i]; }
    void set_exp(int i, int v) { e_[i] = static_cast<std::uint8_t>(v); }

    int degree() const {
        int d = 0;
        for (int v : e_)
            d += v;
        return d;
    }

    bool is_unit() const { return degree() == 0; }

    // Packed big-endian key: numeric order equals the lex monomial order.
    std::uint64_t pack() const {
        std::uint64_t k = 0;
        for (int i = 0; i < kMaxVars; ++i)
            k = (k << 8) | e_[i];
        return k;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
    // Lex order: the monomial with the larger exponent on the earliest
    // differing variable is greater.
    friend bool operator<(const Monomial& a, const Monomial& b) { return a.pack() < b.pack(); }
    friend bool operator>(const Monomial& a, const Monomial& b) { return b < a; }

    // a divides b (meaningful for polynomial rings; for exterior rings this
    // is subset containment).
    static bool divides(const Monomial& a, const Monomial& b) {
        for (int i = 0; i < kMaxVars; ++i)
            if (a.e_[i] > b.e_[i])
                return false;
        return true;
    }

    static Monomial quotient(const Monomial& b, const Monomial& a) {
        Monomial q;
        for (int i = 0; i < kMaxVars; ++i)
            q.e_[i] = static_cast<std::uint8_t>(b.e_[i] - a.e_[i]);
        return q;
    }

private:
    std::array<std::uint8_t, kMaxVars> e_;
};

template <typename S>
struct Ring {
    using Scalar = S;
    using Field = FieldOfT<S>;

    RingKind kind;
    int n;
    Field field;
    std::vector<std::string> vars;

    bool operator==(const Ring& o) const {
        return kind == o.kind && n == o.n && field == o.field;
    }
    bool operator!=(const Ring& o) const { return !(*this == o); }

    std::string spec_string() const {
        return std::string(kind == RingKind::Polynomial ? "S" : "E") + ":" + std::to_string(n) +
               "@" + field.name();
    }

    // Top nonzero degree: unbounded for polynomial rings, n for exterior.
    int top_degree() const { return kind == RingKind::Exterior ? n : INT32_MAX; }
};

template <typename S>
using RingPtr = std::shared_ptr<const Ring<S>>;

template <typename S>
RingPtr<S> make_ring(RingKind kind, int n, FieldOfT<S> field) {
    if (n < 1 || n > kMaxVars)
        throw UsageError("number of variables must be between 1 and " + std::to_string(kMaxVars));
    std::vector<std::string> vars;
    if (kind == RingKind::Exterior) {
        for (int i = 1; i <= n; ++i)
            vars.push_back("e" + std::to_string(i));
    } else if (n <= 4) {
        static const char* named[] = {"x", "y", "z", "w"};
        for (int i = 0; i < n; ++i)
            vars.push_back(named[i]);
    } else {
        for (int i = 1; i <= n; ++i)
            vars.push_back("x" + std::to_string(i));
    }
    return std::make_shared<Ring<S>>(Ring<S>{kind, n, std::move(field), std::move(vars)});
}

inline long long binomial(long long n, long long k) {
    if (k < 0 || k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    long long r = 1;
    for (long long i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

// Dimension of the degree-d graded piece.
template <typename S>
long long graded_dimension(const Ring<S>& ring, int d) {
    if (d < 0)
        return 0;
    if (ring.kind == RingKind::Polynomial)
        return binomial(ring.n - 1 + d, d);
    return binomial(ring.n, d);
}

namespace detail {

inline void enumerate_monomials(int n, int cap, int var, int remaining, Monomial& cur,
                                std::vector<Monomial>& out) {
    if (var == n) {
        if (remaining == 0)
            out.push_back(cur);
        return;
    }
    int hi = std::min(remaining, cap);
    for (int e = hi; e >= 0; --e) {
        cur.set_exp(var, e);
        enumerate_monomials(n, cap, var + 1, remaining - e, cur, out);
    }
    cur.set_exp(var, 0);
}

} // namespace detail

// All degree-d monomials in lex-descending order.
template <typename S>
std::vector<Monomial> monomial_basis(const Ring<S>& ring, int d) {
    std::vector<Monomial> out;
    if (d < 0)
        return out;
    int cap = ring.kind == RingKind::Exterior ? 1 : d;
    Monomial cur;
    detail::enumerate_monomials(ring.n, cap, 0, d, cur, out);
    return out;
}

// Index of m in monomial_basis(ring, degree(m)); the basis is lex-descending.
inline int basis_index(const std::vector<Monomial>& basis, const Monomial& m) {
    auto it = std::lower_bound(basis.begin(), basis.end(), m,
                               [](const Monomial& a, const Monomial& b) { return a > b; });
    if (it == basis.end() || !(*it == m))
        throw ComputeError("monomial is not in the expected graded basis");
    return static_cast<int>(it - basis.begin());
}

// Sign of the wedge a ^ b for disjoint exterior monomials: parity of the
// number of pairs (i in a, j in b) with i > j.
inline int wedge_sign(const Monomial& a, const Monomial& b) {
    int inversions = 0;
    for (int i = 0; i < kMaxVars; ++i) {
        if (!a.exp(i))
            continue;
        for (int j = 0; j < i; ++j)
            if (b.exp(j))
                ++inversions;
    }
    return inversions % 2 == 0 ? 1 : -1;
}

template <typename S>
std::string monomial_to_string(const Ring<S>& ring, const Monomial& m) {
    if (m.is_unit())
        return "1";
    std::string out;
    const char* sep = ring.kind == RingKind::Exterior ? "^" : "*";
    for (int i = 0; i < ring.n; ++i) {
        for (int rep = 0; rep < (ring.kind == RingKind::Exterior ? m.exp(i) : 0); ++rep) {
            if (!out.empty())
                out += sep;
            out += ring.vars[i];
        }
        if (ring.kind == RingKind::Polynomial && m.exp(i) > 0) {
            if (!out.empty())
                out += sep;
            out += ring.vars[i];
            if (m.exp(i) > 1)
                out += "^" + std::to_string(m.exp(i));
        }
    }
    return out;
}

} // namespace lexpoint

#endif
