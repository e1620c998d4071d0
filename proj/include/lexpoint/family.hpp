// One-parameter families of graded ideals over K(t): specialization at field
// points and flat limits at t = 0 by t-adic echelon reduction.
//
// Family generators live in a ring over the rational-function field with all
// coefficients polynomial in t, so every fiber is defined.  The limit of a
// degree-d component is computed from any K(t)-basis: rows are kept with
// nonnegative t-valuation, pivots are placed on entries invertible at t = 0,
// rows whose entries all gained a factor of t are divided down, and the final
// mutually-reduced rows are evaluated at t = 0.  Pivot structure makes the
// evaluations independent, so each limit component has the generic dimension.
#ifndef LEXPOINT_FAMILY_HPP
#define LEXPOINT_FAMILY_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lexpoint/element.hpp"
#include "lexpoint/errors.hpp"
#include "lexpoint/hilbert.hpp"
#include "lexpoint/ideal.hpp"
#include "lexpoint/parse.hpp"
#include "lexpoint/rational_function.hpp"
#include "lexpoint/scalar.hpp"

namespace lexpoint {

template <typename K>
struct FamilyIdeal {
    using F = RationalFunction<K>;

    RingPtr<F> ring;
    std::vector<Element<F>> gens;

    static FamilyIdeal from_generators(RingPtr<F> ring, std::vector<Element<F>> gens) {
        std::vector<Element<F>> kept;
        for (auto& g : gens) {
            if (g.is_zero())
                continue;
            if (!g.is_homogeneous())
                throw UsageError("family generators must be homogeneous");
            for (const auto& term : g.terms())
                if (term.c.den().size() != 1)
                    throw UsageError("family coefficients must be polynomial in t");
            kept.push_back(std::move(g));
        }
        return FamilyIdeal{std::move(ring), std::move(kept)};
    }
};

template <typename K>
FamilyIdeal<K> family_from_strings(const RingPtr<RationalFunction<K>>& ring,
                                   const std::vector<std::string>& texts) {
    std::vector<Element<RationalFunction<K>>> gens;
    for (const auto& text : texts)
        gens.push_back(parse_element<RationalFunction<K>>(ring, text));
    return FamilyIdeal<K>::from_generators(ring, std::move(gens));
}

// The same ring over the base field (names and kind are determined by n).
template <typename K>
RingPtr<K> family_base_ring(const FamilyIdeal<K>& f) {
    return make_ring<K>(f.ring->kind, f.ring->n, f.ring->field.base);
}

template <typename K>
Ideal<K> specialize(const FamilyIdeal<K>& f, const K& t0) {
    RingPtr<K> r0 = family_base_ring(f);
    std::vector<Element<K>> gens;
    for (const auto& g : f.gens) {
        std::vector<typename Element<K>::Term> terms;
        for (const auto& term : g.terms())
            terms.push_back({term.m, term.c.evaluate_at(t0)});
        Element<K> e(r0, std::move(terms));
        if (!e.is_zero())
            gens.push_back(std::move(e));
    }
    return Ideal<K>::from_generators(r0, std::move(gens));
}

namespace detail {

// Distinct nonzero sample points, used to probe fibers for flatness.
template <typename Field>
std::vector<typename Field::Scalar> nonzero_sample_points(const Field& field, int count) {
    using S = typename Field::Scalar;
    std::vector<S> out;
    for (std::int64_t n = 1; static_cast<int>(out.size()) < count && n <= 64; ++n) {
        S v = field.from_int(n);
        if (v == S(0) || std::find(out.begin(), out.end(), v) != out.end())
            continue;
        out.push_back(v);
    }
    if (static_cast<int>(out.size()) < count)
        throw UsageError("base field too small to sample fibers");
    return out;
}

// Echelon basis over the local ring at t = 0: entries have nonnegative
// valuation, each row has a pivot entry equal to 1 with valuation 0, pivot
// columns are distinct, and rows are mutually reduced.
template <typename K>
class TAdicEchelon {
public:
    using F = RationalFunction<K>;

    explicit TAdicEchelon(int cols) : cols_(cols) {}

    void insert(RowVec<F> v) {
        strip(v);
        for (std::size_t k = 0; k < rows_.size(); ++k)
            if (!(v(pivots_[k]) == F(0)))
                v -= v(pivots_[k]) * rows_[k];
        if (!strip(v))
            return;
        int pivot = -1;
        for (int j = 0; j < cols_; ++j)
            if (!(v(j) == F(0)) && v(j).t_valuation() == 0) {
                pivot = j;
                break;
            }
        if (pivot < 0)
            throw ComputeError("t-adic reduction produced no unit pivot");
        F inv = F(1) / v(pivot);
        v *= inv;
        for (std::size_t k = 0; k < rows_.size(); ++k)
            if (!(rows_[k](pivot) == F(0)))
                rows_[k] -= rows_[k](pivot) * v;
        rows_.push_back(std::move(v));
        pivots_.push_back(pivot);
    }

    int rank() const { return static_cast<int>(rows_.size()); }

    // Evaluations at t = 0; independent because of the pivot structure.
    Rref<K> evaluate_at_zero() const {
        Rref<K> out(cols_);
        for (const auto& row : rows_) {
            RowVec<K> e(cols_);
            for (int j = 0; j < cols_; ++j)
                e(j) = row(j).evaluate_at(K(0));
            out.insert(e);
        }
        return out;
    }

private:
    // Divide out the largest common power of t; false when the row is zero.
    bool strip(RowVec<F>& v) {
        int minval = 0;
        bool any = false;
        for (int j = 0; j < cols_; ++j)
            if (!(v(j) == F(0))) {
                int val = v(j).t_valuation();
                minval = any ? std::min(minval, val) : val;
                any = true;
            }
        if (!any)
            return false;
        if (minval != 0)
            for (int j = 0; j < cols_; ++j)
                v(j) = v(j).times_t_power(-minval);
        return true;
    }

    int cols_;
    std::vector<RowVec<F>> rows_;
    std::vector<int> pivots_;
};

} // namespace detail

// Limit at t = 0 of the graded components, degree by degree up to max_d.
// Checked precondition: the fiber Hilbert function is constant on three
// distinct nonzero sample values of t.
template <typename K>
Ideal<K> flat_limit(const FamilyIdeal<K>& f, int max_d) {
    using F = RationalFunction<K>;
    std::vector<K> samples = detail::nonzero_sample_points(f.ring->field.base, 3);
    std::optional<std::vector<long long>> reference;
    for (const K& t0 : samples) {
        std::vector<long long> hf = hilbert_function(specialize(f, t0), max_d).prefix;
        if (reference && *reference != hf)
            throw ComputeError("family is not flat: fiber Hilbert functions differ");
        reference = std::move(hf);
    }

    RingPtr<K> r0 = family_base_ring(f);
    std::map<int, Rref<K>> comps;
    for (int d = 0; d <= max_d; ++d) {
        // Reduce the raw spanning set {m g} directly; its entries are small,
        // unlike a K(t) echelon basis of the component.
        std::vector<Monomial> basis = monomial_basis(*f.ring, d);
        detail::TAdicEchelon<K> ech(static_cast<int>(basis.size()));
        for (const auto& g : f.gens) {
            if (g.degree() > d)
                continue;
            for (const Monomial& m : monomial_basis(*f.ring, d - g.degree()))
                ech.insert(element_to_row(basis, Element<F>::monomial(f.ring, m) * g));
        }
        long long expected = graded_dimension(*f.ring, d) - (*reference)[static_cast<std::size_t>(d)];
        if (ech.rank() != expected)
            throw ComputeError("flat limit dropped dimension in degree " + std::to_string(d));
        comps.emplace(d, ech.evaluate_at_zero());
    }
    return Ideal<K>::from_components(r0, std::move(comps), max_d);
}

} // namespace lexpoint

#endif
