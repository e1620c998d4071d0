// Geometry of degree-2 elements in exterior algebras: wedge-power ranks,
// support kernels, pencils of rank-2 quadrics, contraction with dual vectors,
// and detection of envelopes U subset of Wedge^2 V.
//
// Rank conventions: a nonzero quadric q has rank 2k where k is maximal with
// q^k != 0.  Wedge-power detection requires k! invertible, so positive
// characteristic p supports at most 2(p-1)... precisely p > floor(n/2); the
// entry points enforce this.
#ifndef LEXPOINT_EXTERIOR_HPP
#define LEXPOINT_EXTERIOR_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lexpoint/element.hpp"
#include "lexpoint/errors.hpp"
#include "lexpoint/linalg.hpp"
#include "lexpoint/ring.hpp"
#include "lexpoint/scalar.hpp"
#include "lexpoint/subspace.hpp"

namespace lexpoint {

namespace detail {

template <typename S>
void require_exterior(const RingPtr<S>& ring) {
    if (!ring || ring->kind != RingKind::Exterior)
        throw UsageError("operation requires an exterior ring");
}

template <typename S>
void require_quadric(const Element<S>& q) {
    require_exterior(q.ring());
    if (!q.is_zero() && (!q.is_homogeneous() || q.degree() != 2))
        throw UsageError("expected a homogeneous element of degree 2");
}

template <typename S>
void require_rank_char(const Ring<S>& ring) {
    std::int64_t p = characteristic(ring.field);
    if (p > 0 && p <= ring.n / 2)
        throw UsageError("wedge-power ranks need characteristic 0 or p > n/2");
}

// Coordinate matrix whose column i holds e_i ^ x in the degree-(deg x + 1)
// monomial basis.  Rows may be zero-height when the target degree is empty.
template <typename S>
Mat<S> wedge_by_variables(const Element<S>& x) {
    const RingPtr<S>& ring = x.ring();
    int d = x.degree() + 1;
    std::vector<Monomial> basis = monomial_basis(*ring, d);
    Mat<S> a(static_cast<int>(basis.size()), ring->n);
    a.setZero();
    for (int i = 0; i < ring->n; ++i) {
        RowVec<S> col = element_to_row(basis, Element<S>::variable(ring, i) * x);
        a.col(i) = col.transpose();
    }
    return a;
}

template <typename S>
Element<S> linear_form(const RingPtr<S>& ring, const RowVec<S>& coeffs) {
    std::vector<typename Element<S>::Term> terms;
    for (int i = 0; i < ring->n; ++i)
        if (!(coeffs(i) == S(0)))
            terms.push_back({Monomial::variable(i), coeffs(i)});
    return Element<S>(ring, std::move(terms));
}

} // namespace detail

// 2k for the maximal k with q^k != 0; zero quadrics have rank 0.
template <typename S>
int quadric_rank(const Element<S>& q) {
    detail::require_quadric(q);
    if (q.is_zero())
        return 0;
    detail::require_rank_char(*q.ring());
    int k = 1;
    Element<S> power = q;
    for (;;) {
        Element<S> next = power * q;
        if (next.is_zero())
            break;
        power = next;
        ++k;
    }
    return 2 * k;
}

// Basis of the linear forms l with l ^ q^(rank/2) = 0.  This is the support
// of q: the smallest subspace W of the degree-1 piece with q in Wedge^2 W,
// so its dimension equals the rank.
template <typename S>
std::vector<Element<S>> quadric_kernel(const Element<S>& q) {
    detail::require_quadric(q);
    if (q.is_zero())
        throw UsageError("quadric kernel of the zero quadric is undefined");
    const RingPtr<S>& ring = q.ring();
    int k = quadric_rank(q) / 2;
    Element<S> power = q;
    for (int i = 1; i < k; ++i)
        power = power * q;
    Mat<S> ker = kernel_basis(detail::wedge_by_variables(power));
    std::vector<Element<S>> out;
    for (int r = 0; r < ker.rows(); ++r)
        out.push_back(detail::linear_form(ring, RowVec<S>(ker.row(r))));
    return out;
}

// Intersection of two spans of degree-1 forms, as a canonical echelon basis.
template <typename S>
std::vector<Element<S>> intersect_linear_spans(const std::vector<Element<S>>& a,
                                               const std::vector<Element<S>>& b) {
    if (a.empty() || b.empty())
        return {};
    const RingPtr<S>& ring = a.front().ring();
    std::vector<Monomial> basis = monomial_basis(*ring, 1);
    // Columns are (alpha, beta) with sum alpha_i a_i - sum beta_j b_j = 0.
    int na = static_cast<int>(a.size()), nb = static_cast<int>(b.size());
    Mat<S> sys(ring->n, na + nb);
    sys.setZero();
    for (int i = 0; i < na; ++i)
        sys.col(i) = element_to_row(basis, a[i]).transpose();
    for (int j = 0; j < nb; ++j)
        sys.col(na + j) = -element_to_row(basis, b[j]).transpose();
    Mat<S> ker = kernel_basis(sys);
    Rref<S> span(ring->n);
    for (int r = 0; r < ker.rows(); ++r) {
        RowVec<S> v(ring->n);
        v.setZero();
        for (int i = 0; i < na; ++i)
            v += ker(r, i) * element_to_row(basis, a[i]);
        span.insert(v);
    }
    std::vector<Element<S>> out;
    for (int r = 0; r < span.rank(); ++r)
        out.push_back(detail::linear_form(ring, span.row(r)));
    return out;
}

template <typename S>
struct PencilCheck {
    bool is_rank2 = false;
    // A common linear factor of every member when is_rank2 holds.
    Element<S> witness;
};

// Every member of the pencil spanned by q1, q2 has rank <= 2 exactly when
// q1^2, q2^2 and q1 ^ q2 all vanish: (a q1 + b q2)^2 expands to those three
// terms and char != 2 keeps the cross term visible.
template <typename S>
PencilCheck<S> is_rank2_pencil(const Element<S>& q1, const Element<S>& q2) {
    detail::require_quadric(q1);
    detail::require_quadric(q2);
    const RingPtr<S>& ring = q1.ring();
    std::vector<Monomial> basis = monomial_basis(*ring, 2);
    Rref<S> span(static_cast<int>(basis.size()));
    span.insert(element_to_row(basis, q1));
    if (!span.insert(element_to_row(basis, q2)))
        throw UsageError("pencil requires linearly independent quadrics");
    PencilCheck<S> out;
    if (!(q1 * q1).is_zero() || !(q2 * q2).is_zero() || !(q1 * q2).is_zero())
        return out;
    out.is_rank2 = true;
    std::vector<Element<S>> common =
        intersect_linear_spans(quadric_kernel(q1), quadric_kernel(q2));
    if (common.empty())
        throw ComputeError("rank-2 pencil without a common factor");
    out.witness = common.front();
    return out;
}

template <typename S>
struct QuadricSpace {
    RingPtr<S> ring;
    std::vector<Element<S>> basis;

    static QuadricSpace from_elements(RingPtr<S> ring, std::vector<Element<S>> quadrics) {
        detail::require_exterior(ring);
        std::vector<Monomial> mons = monomial_basis(*ring, 2);
        Rref<S> span(static_cast<int>(mons.size()));
        for (const auto& q : quadrics) {
            detail::require_quadric(q);
            if (q.is_zero() || !span.insert(element_to_row(mons, q)))
                throw UsageError("quadric space basis must be linearly independent");
        }
        return QuadricSpace{std::move(ring), std::move(quadrics)};
    }

    int dim() const { return static_cast<int>(basis.size()); }
};

template <typename S>
struct Pencil {
    Element<S> a, b;
    Element<S> witness;
};

// All 2-dimensional subspaces of u that consist of rank <= 2 quadrics,
// enumerated over a finite coefficient field via reduced echelon bases.
template <typename S>
std::vector<Pencil<S>> find_rank2_pencils(const QuadricSpace<S>& u) {
    if constexpr (!std::is_same_v<S, GFp>) {
        throw UsageError("pencil enumeration needs a finite field");
    } else {
        std::int64_t p = characteristic(u.ring->field);
        int m = u.dim();
        if (m < 2)
            return {};
        auto member = [&](const std::vector<std::int64_t>& c) {
            Element<S> q(u.ring);
            for (int i = 0; i < m; ++i)
                q = q + GFp(c[static_cast<std::size_t>(i)], p) * u.basis[static_cast<std::size_t>(i)];
            return q;
        };
        std::vector<Pencil<S>> out;
        // Echelon bases: pivots i < j, row one free in (i, m) \ {j}, row two
        // free in (j, m); each subspace appears exactly once.
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j) {
                std::vector<int> free1, free2;
                for (int k = i + 1; k < m; ++k)
                    if (k != j)
                        free1.push_back(k);
                for (int k = j + 1; k < m; ++k)
                    free2.push_back(k);
                std::size_t total1 = 1, total2 = 1;
                for (std::size_t t = 0; t < free1.size(); ++t)
                    total1 *= static_cast<std::size_t>(p);
                for (std::size_t t = 0; t < free2.size(); ++t)
                    total2 *= static_cast<std::size_t>(p);
                for (std::size_t c1 = 0; c1 < total1; ++c1)
                    for (std::size_t c2 = 0; c2 < total2; ++c2) {
                        std::vector<std::int64_t> v1(static_cast<std::size_t>(m), 0);
                        std::vector<std::int64_t> v2(static_cast<std::size_t>(m), 0);
                        v1[static_cast<std::size_t>(i)] = 1;
                        v2[static_cast<std::size_t>(j)] = 1;
                        std::size_t rem = c1;
                        for (int k : free1) {
                            v1[static_cast<std::size_t>(k)] = static_cast<std::int64_t>(rem % static_cast<std::size_t>(p));
                            rem /= static_cast<std::size_t>(p);
                        }
                        rem = c2;
                        for (int k : free2) {
                            v2[static_cast<std::size_t>(k)] = static_cast<std::int64_t>(rem % static_cast<std::size_t>(p));
                            rem /= static_cast<std::size_t>(p);
                        }
                        Element<S> q1 = member(v1), q2 = member(v2);
                        PencilCheck<S> check = is_rank2_pencil(q1, q2);
                        if (check.is_rank2)
                            out.push_back({q1, q2, check.witness});
                    }
            }
        return out;
    }
}

// A dual vector phi acts on the degree-1 piece by its coefficient vector;
// contraction extends it to the whole algebra as a degree -1 derivation.
template <typename S>
struct DualVector {
    RingPtr<S> ring;
    RowVec<S> coords;
};

template <typename S>
Element<S> contract(const DualVector<S>& phi, const Element<S>& x) {
    detail::require_exterior(x.ring());
    std::vector<typename Element<S>::Term> terms;
    for (const auto& t : x.terms()) {
        int sign = 1;
        for (int i = 0; i < x.ring()->n; ++i) {
            if (t.m.exp(i)) {
                if (!(phi.coords(i) == S(0))) {
                    S c = t.c * phi.coords(i);
                    if (sign < 0)
                        c = -c;
                    terms.push_back({Monomial::quotient(t.m, Monomial::variable(i)), c});
                }
                sign = -sign;
            }
        }
    }
    return Element<S>(x.ring(), std::move(terms));
}

// Basis of {phi : contract(phi, q) = 0 for all q in u}.  An envelope
// V of dimension k with u inside Wedge^2 V exists exactly when this space
// has dimension at least n - k.
template <typename S>
std::vector<DualVector<S>> annihilator_space(const QuadricSpace<S>& u) {
    const RingPtr<S>& ring = u.ring;
    std::vector<Monomial> lin = monomial_basis(*ring, 1);
    int rows_per = ring->n;
    Mat<S> sys(static_cast<int>(u.basis.size()) * rows_per, ring->n);
    sys.setZero();
    for (std::size_t qi = 0; qi < u.basis.size(); ++qi)
        for (int v = 0; v < ring->n; ++v) {
            DualVector<S> delta{ring, RowVec<S>::Zero(ring->n)};
            delta.coords(v) = S(1);
            RowVec<S> col = element_to_row(lin, contract(delta, u.basis[qi]));
            for (int r = 0; r < ring->n; ++r)
                sys(static_cast<int>(qi) * rows_per + r, v) = col(r);
        }
    Mat<S> ker = kernel_basis(sys);
    std::vector<DualVector<S>> out;
    for (int r = 0; r < ker.rows(); ++r)
        out.push_back(DualVector<S>{ring, RowVec<S>(ker.row(r))});
    return out;
}

// All pairwise wedge products of members vanish; by bilinearity checking the
// basis pairs (including squares) suffices.
template <typename S>
bool u_squared_zero(const QuadricSpace<S>& u) {
    for (std::size_t i = 0; i < u.basis.size(); ++i)
        for (std::size_t j = i; j < u.basis.size(); ++j)
            if (!(u.basis[i] * u.basis[j]).is_zero())
                return false;
    return true;
}

// A basis of some k-dimensional space V of linear forms with u contained in
// Wedge^2 V, or nullopt when none exists.  V is recovered as the common
// kernel of n - k independent annihilating dual vectors.
template <typename S>
std::optional<std::vector<Element<S>>> envelope_space(const QuadricSpace<S>& u, int k) {
    const RingPtr<S>& ring = u.ring;
    if (k < 0 || k > ring->n)
        throw UsageError("envelope dimension out of range");
    std::vector<DualVector<S>> ann = annihilator_space(u);
    int need = ring->n - k;
    if (static_cast<int>(ann.size()) < need)
        return std::nullopt;
    Mat<S> sys(need, ring->n);
    for (int r = 0; r < need; ++r)
        sys.row(r) = ann[static_cast<std::size_t>(r)].coords;
    Mat<S> ker = kernel_basis(sys);
    std::vector<Element<S>> out;
    for (int r = 0; r < ker.rows(); ++r)
        out.push_back(detail::linear_form(ring, RowVec<S>(ker.row(r))));
    return out;
}

} // namespace lexpoint

#endif
