// Homogeneous ideals as graded components computed degree by degree.
//
// A handle is either generated (components follow from the recurrence
// I_d = R_1 * I_{d-1} + <generators of degree d>, computed lazily to any
// degree) or tabulated (components stored up to a bound, as produced by
// kernel computations such as colon ideals; asking beyond the bound is an
// error rather than a silent wrong answer).  All component matrices are
// RREFs over the lex-descending monomial basis, so pivot monomials are
// initial monomials.
#ifndef LEXPOINT_IDEAL_HPP
#define LEXPOINT_IDEAL_HPP

#include <map>
#include <vector>

#include "lexpoint/element.hpp"
#include "lexpoint/linalg.hpp"
#include "lexpoint/parse.hpp"
#include "lexpoint/subspace.hpp"

namespace lexpoint {

template <typename S>
class Ideal {
public:
    static Ideal from_generators(RingPtr<S> ring, std::vector<Element<S>> gens) {
        Ideal ideal;
        ideal.ring_ = std::move(ring);
        for (const Element<S>& g : gens) {
            if (g.is_zero())
                continue;
            if (g.ring() && *g.ring() != *ideal.ring_)
                throw UsageError("generator belongs to a different ring");
            if (!g.is_homogeneous())
                throw UsageError("ideal generators must be homogeneous, got " + g.to_string());
            ideal.gens_.push_back(g);
        }
        std::stable_sort(ideal.gens_.begin(), ideal.gens_.end(),
                         [](const Element<S>& a, const Element<S>& b) {
                             return a.degree() < b.degree();
                         });
        return ideal;
    }

    static Ideal from_components(RingPtr<S> ring, std::map<int, Rref<S>> comps, int bound) {
        Ideal ideal;
        ideal.ring_ = std::move(ring);
        ideal.comps_ = std::move(comps);
        ideal.tabulated_ = true;
        ideal.bound_ = bound;
        return ideal;
    }

    const RingPtr<S>& ring() const { return ring_; }
    bool is_tabulated() const { return tabulated_; }
    int tabulated_bound() const { return bound_; }
    const std::vector<Element<S>>& generators() const { return gens_; }

    const Rref<S>& component(int d) const {
        if (d < 0)
            throw UsageError("negative degree");
        if (tabulated_) {
            if (d > bound_)
                throw ComputeError("ideal components are only known up to degree " +
                                   std::to_string(bound_));
            auto it = comps_.find(d);
            if (it == comps_.end())
                throw ComputeError("missing tabulated component in degree " + std::to_string(d));
            return it->second;
        }
        ensure_components(d);
        return comps_.at(d);
    }

    long long dim(int d) const { return component(d).rank(); }
    long long quotient_dim(int d) const { return graded_dimension(*ring_, d) - dim(d); }

    bool contains(const Element<S>& e) const {
        if (e.is_zero())
            return true;
        int d = e.degree();
        auto basis = monomial_basis(*ring_, d);
        return component(d).contains(element_to_row(basis, e));
    }

    bool equals_up_to(const Ideal& other, int max_d) const {
        for (int d = 0; d <= max_d; ++d)
            if (component(d) != other.component(d))
                return false;
        return true;
    }

    // True when every computed component is spanned by monomials.
    bool is_monomial_up_to(int max_d) const {
        for (int d = 0; d <= max_d; ++d) {
            const Rref<S>& p = component(d);
            for (int r = 0; r < p.rank(); ++r)
                for (int c = 0; c < p.cols(); ++c)
                    if (!(p.row(r)(c) == S(0)) && c != p.pivots()[r])
                        return false;
        }
        return true;
    }

private:
    void ensure_components(int d) const {
        int start = 0;
        if (!comps_.empty())
            start = comps_.rbegin()->first + 1;
        for (int cur = start; cur <= d; ++cur) {
            Rref<S> piece(static_cast<int>(graded_dimension(*ring_, cur)));
            auto basis = monomial_basis(*ring_, cur);
            if (cur > 0 && graded_dimension(*ring_, cur) > 0) {
                const Rref<S>& prev = comps_.at(cur - 1);
                auto prev_basis = monomial_basis(*ring_, cur - 1);
                for (int r = 0; r < prev.rank(); ++r) {
                    Element<S> b = row_to_element(ring_, prev_basis, prev.row(r));
                    for (int v = 0; v < ring_->n; ++v) {
                        Element<S> prod = Element<S>::variable(ring_, v) * b;
                        if (!prod.is_zero())
                            piece.insert(element_to_row(basis, prod));
                    }
                }
            }
            for (const Element<S>& g : gens_)
                if (g.degree() == cur)
                    piece.insert(element_to_row(basis, g));
            comps_.emplace(cur, std::move(piece));
        }
    }

    RingPtr<S> ring_;
    std::vector<Element<S>> gens_;
    mutable std::map<int, Rref<S>> comps_;
    bool tabulated_ = false;
    int bound_ = -1;
};

template <typename S>
Ideal<S> ideal_from_strings(const RingPtr<S>& ring, const std::vector<std::string>& texts) {
    return Ideal<S>::from_generators(ring, parse_elements(ring, texts));
}

// Minimal generators in degrees <= max_d: a basis of I_d modulo R_1 * I_{d-1}
// for each d, returned in degree order then lex-descending.
template <typename S>
std::vector<Element<S>> minimal_generators(const Ideal<S>& ideal, int max_d) {
    const RingPtr<S>& ring = ideal.ring();
    std::vector<Element<S>> gens;
    for (int d = 0; d <= max_d; ++d) {
        if (graded_dimension(*ring, d) == 0)
            break;
        Rref<S> grown(static_cast<int>(graded_dimension(*ring, d)));
        if (d > 0) {
            auto prev_basis = monomial_basis(*ring, d - 1);
            auto basis = monomial_basis(*ring, d);
            const Rref<S>& prev = ideal.component(d - 1);
            for (int r = 0; r < prev.rank(); ++r) {
                Element<S> b = row_to_element(ring, prev_basis, prev.row(r));
                for (int v = 0; v < ring->n; ++v) {
                    Element<S> prod = Element<S>::variable(ring, v) * b;
                    if (!prod.is_zero())
                        grown.insert(element_to_row(basis, prod));
                }
            }
        }
        const Rref<S>& comp = ideal.component(d);
        auto basis = monomial_basis(*ring, d);
        for (int r = 0; r < comp.rank(); ++r) {
            if (grown.insert(comp.row(r)))
                gens.push_back(row_to_element(ring, basis, comp.row(r)));
        }
    }
    return gens;
}

// Initial ideal with respect to the lex order, read off the pivot monomials
// of each component up to max_d; returned as a generated monomial ideal.
template <typename S>
Ideal<S> initial_ideal(const Ideal<S>& ideal, int max_d) {
    const RingPtr<S>& ring = ideal.ring();
    std::vector<Element<S>> gens;
    std::vector<std::vector<Monomial>> pivot_monomials(max_d + 1);
    for (int d = 0; d <= max_d; ++d) {
        if (graded_dimension(*ring, d) == 0)
            break;
        auto basis = monomial_basis(*ring, d);
        for (int p : ideal.component(d).pivots())
            pivot_monomials[d].push_back(basis[static_cast<std::size_t>(p)]);
        for (const Monomial& m : pivot_monomials[d]) {
            bool divisible = false;
            if (d > 0)
                for (const Monomial& prev : pivot_monomials[d - 1])
                    if (Monomial::divides(prev, m)) {
                        divisible = true;
                        break;
                    }
            if (!divisible)
                gens.push_back(Element<S>::monomial(ring, m));
        }
    }
    return Ideal<S>::from_generators(ring, std::move(gens));
}

namespace detail {

inline std::vector<std::vector<int>> k_subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int from) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int i = from; i < n; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

// Kernel of simultaneous conditions mult_i(f) in target_i, where each
// mult_i maps degree d to degree d_i.  Rows of the constraint matrix are the
// free (non-pivot) coordinates of the reduced products.
template <typename S>
Rref<S> conditional_kernel(const RingPtr<S>& ring, int d,
                           const std::vector<Element<S>>& multipliers,
                           const std::vector<const Rref<S>*>& targets) {
    auto basis = monomial_basis(*ring, d);
    int cols = static_cast<int>(basis.size());
    std::vector<RowVec<S>> constraint_rows;
    for (std::size_t i = 0; i < multipliers.size(); ++i) {
        int e = d + multipliers[i].degree();
        auto target_basis = monomial_basis(*ring, e);
        const Rref<S>& target = *targets[i];
        std::vector<int> free = target.free_columns();
        if (free.empty())
            continue;
        Mat<S> block(static_cast<int>(free.size()), cols);
        block.setZero();
        for (int j = 0; j < cols; ++j) {
            Element<S> prod = multipliers[i] * Element<S>::monomial(ring, basis[j]);
            if (prod.is_zero())
                continue;
            RowVec<S> rem = target.reduce(element_to_row(target_basis, prod));
            for (std::size_t k = 0; k < free.size(); ++k)
                block(static_cast<int>(k), j) = rem(free[k]);
        }
        for (int r = 0; r < block.rows(); ++r)
            constraint_rows.push_back(block.row(r));
    }
    Mat<S> constraints(static_cast<int>(constraint_rows.size()), cols);
    for (std::size_t r = 0; r < constraint_rows.size(); ++r)
        constraints.row(static_cast<int>(r)) = constraint_rows[r];
    Mat<S> kernel = kernel_basis(constraints);
    Rref<S> out(cols);
    for (int r = 0; r < kernel.rows(); ++r)
        out.insert(kernel.row(r));
    return out;
}

} // namespace detail

// Colon by the irrelevant maximal ideal: degree-d piece of (I : m) where m
// is generated by all variables.  Needs I up to max_d + 1.
template <typename S>
Ideal<S> colon_by_irrelevant(const Ideal<S>& ideal, int max_d) {
    const RingPtr<S>& ring = ideal.ring();
    std::vector<Element<S>> vars = ring_variables(ring);
    std::map<int, Rref<S>> comps;
    for (int d = 0; d <= max_d; ++d) {
        if (graded_dimension(*ring, d) == 0) {
            comps.emplace(d, Rref<S>(0));
            continue;
        }
        std::vector<const Rref<S>*> targets;
        std::vector<Element<S>> mult;
        for (int v = 0; v < ring->n; ++v) {
            if (graded_dimension(*ring, d + 1) == 0)
                continue;
            mult.push_back(vars[v]);
            targets.push_back(&ideal.component(d + 1));
        }
        if (mult.empty()) {
            // Top exterior degree: every element is annihilated by all
            // variables, so the colon is everything.
            Rref<S> full(static_cast<int>(graded_dimension(*ring, d)));
            auto basis = monomial_basis(*ring, d);
            for (std::size_t j = 0; j < basis.size(); ++j) {
                RowVec<S> unit(static_cast<int>(basis.size()));
                unit.setZero();
                unit(static_cast<int>(j)) = S(1);
                full.insert(std::move(unit));
            }
            comps.emplace(d, std::move(full));
            continue;
        }
        comps.emplace(d, detail::conditional_kernel(ring, d, mult, targets));
    }
    return Ideal<S>::from_components(ring, std::move(comps), max_d);
}

// Degree-d pieces of (I : g) for a homogeneous g; needs I up to
// max_d + deg g.
template <typename S>
Ideal<S> colon_by_element(const Ideal<S>& ideal, const Element<S>& g, int max_d) {
    if (g.is_zero())
        throw UsageError("colon by the zero element");
    const RingPtr<S>& ring = ideal.ring();
    std::map<int, Rref<S>> comps;
    for (int d = 0; d <= max_d; ++d) {
        if (graded_dimension(*ring, d) == 0) {
            comps.emplace(d, Rref<S>(0));
            continue;
        }
        int e = d + g.degree();
        if (graded_dimension(*ring, e) == 0) {
            Rref<S> full(static_cast<int>(graded_dimension(*ring, d)));
            auto basis = monomial_basis(*ring, d);
            for (std::size_t j = 0; j < basis.size(); ++j) {
                RowVec<S> unit(static_cast<int>(basis.size()));
                unit.setZero();
                unit(static_cast<int>(j)) = S(1);
                full.insert(std::move(unit));
            }
            comps.emplace(d, std::move(full));
            continue;
        }
        comps.emplace(d, detail::conditional_kernel(ring, d, {g}, {&ideal.component(e)}));
    }
    return Ideal<S>::from_components(ring, std::move(comps), max_d);
}

// Saturation with respect to the irrelevant ideal, as the fixpoint of
// iterated colons.  Components are compared on degrees <= max_d; the
// iteration uses `slack` extra degrees of I and fails loudly if the chain
// has not stabilized.
template <typename S>
Ideal<S> saturate(const Ideal<S>& ideal, int max_d, int slack = 4) {
    Ideal<S> prev = colon_by_irrelevant(ideal, max_d + slack - 1);
    if (ideal.equals_up_to(prev, max_d))
        return prev;
    for (int step = 1; step < slack; ++step) {
        Ideal<S> next = colon_by_irrelevant(prev, max_d + slack - 1 - step);
        if (prev.equals_up_to(next, max_d))
            return next;
        prev = std::move(next);
    }
    throw ComputeError("saturation did not stabilize within " + std::to_string(slack) +
                       " colon iterations up to degree " + std::to_string(max_d));
}

// Ideal of k x k minors of a matrix of linear forms.
template <typename S>
Ideal<S> minors_ideal(const RingPtr<S>& ring, const std::vector<std::vector<Element<S>>>& m, int k) {
    if (m.empty())
        throw UsageError("minors of an empty matrix");
    std::size_t rows = m.size(), cols = m[0].size();
    for (const auto& row : m)
        if (row.size() != cols)
            throw UsageError("ragged matrix of linear forms");
    for (const auto& row : m)
        for (const Element<S>& e : row)
            if (!e.is_zero() && (!e.is_homogeneous() || e.degree() != 1))
                throw UsageError("minors require a matrix of linear forms");
    if (k < 1 || k > static_cast<int>(std::min(rows, cols)))
        throw UsageError("minor size out of range");

    auto det = [&](auto&& self, const std::vector<int>& ri, const std::vector<int>& ci)
        -> Element<S> {
        if (ri.size() == 1)
            return m[ri[0]][ci[0]];
        Element<S> acc(ring);
        std::vector<int> sub_r(ri.begin() + 1, ri.end());
        for (std::size_t j = 0; j < ci.size(); ++j) {
            std::vector<int> sub_c;
            for (std::size_t l = 0; l < ci.size(); ++l)
                if (l != j)
                    sub_c.push_back(ci[l]);
            Element<S> term = m[ri[0]][ci[j]] * self(self, sub_r, sub_c);
            acc = (j % 2 == 0) ? acc + term : acc - term;
        }
        return acc;
    };
    std::vector<Element<S>> gens;
    for (const auto& ri : detail::k_subsets(static_cast<int>(rows), k)) {
        for (const auto& ci : detail::k_subsets(static_cast<int>(cols), k)) {
            Element<S> d = det(det, ri, ci);
            if (!d.is_zero())
                gens.push_back(d);
        }
    }
    return Ideal<S>::from_generators(ring, std::move(gens));
}

// Ideal of polynomials vanishing at the given points of projective space,
// tabulated up to max_d.
template <typename S>
Ideal<S> vanishing_ideal(const RingPtr<S>& ring, const std::vector<Vec<S>>& points, int max_d) {
    if (ring->kind != RingKind::Polynomial)
        throw UsageError("vanishing ideals are defined for polynomial rings");
    for (const Vec<S>& p : points) {
        if (p.size() != ring->n)
            throw UsageError("point has wrong coordinate count");
        bool nonzero = false;
        for (int i = 0; i < p.size(); ++i)
            if (!(p(i) == S(0)))
                nonzero = true;
        if (!nonzero)
            throw UsageError("projective point must have a nonzero coordinate");
    }
    std::map<int, Rref<S>> comps;
    for (int d = 0; d <= max_d; ++d) {
        auto basis = monomial_basis(*ring, d);
        Mat<S> eval(static_cast<int>(points.size()), static_cast<int>(basis.size()));
        for (std::size_t i = 0; i < points.size(); ++i) {
            for (std::size_t j = 0; j < basis.size(); ++j) {
                S v(1);
                for (int var = 0; var < ring->n; ++var)
                    for (int rep = 0; rep < basis[j].exp(var); ++rep)
                        v = v * points[i](var);
                eval(static_cast<int>(i), static_cast<int>(j)) = v;
            }
        }
        Mat<S> kernel = kernel_basis(eval);
        Rref<S> piece(static_cast<int>(basis.size()));
        for (int r = 0; r < kernel.rows(); ++r)
            piece.insert(kernel.row(r));
        comps.emplace(d, std::move(piece));
    }
    return Ideal<S>::from_components(ring, std::move(comps), max_d);
}

} // namespace lexpoint

#endif
