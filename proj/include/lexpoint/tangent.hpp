// Syzygies of minimal generating sets and the degree-0 tangent space
// Hom(I, R/I)_0 of a graded ideal.
//
// A relation in degree d is a tuple (a_1..a_m) with sum a_i g_i = 0, stored
// as one row with per-generator blocks over the degree d - deg(g_i) monomial
// bases.  A tangent vector assigns f_i in (R/I)_{deg g_i} to each generator
// so that every relation maps to zero: sum a_i f_i = 0 in R/I.  Constraining
// against the full relation space of each degree imposes exactly the same
// conditions as constraining against minimal relation generators, because
// the constraint is R-linear in the relation; this avoids minimalizing the
// syzygy module on the hot path.
//
// Exterior convention: generators and tangent values multiply from the left
// (a_i g_i and a_i f_i), with the usual alternating signs.
#ifndef LEXPOINT_TANGENT_HPP
#define LEXPOINT_TANGENT_HPP

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lexpoint/element.hpp"
#include "lexpoint/errors.hpp"
#include "lexpoint/ideal.hpp"
#include "lexpoint/linalg.hpp"
#include "lexpoint/subspace.hpp"

namespace lexpoint {

namespace detail {

// Block offsets of a degree-d relation vector; block i is empty when the
// generator degree exceeds d.
template <typename S>
std::vector<int> relation_offsets(const Ring<S>& ring, const std::vector<int>& degs, int d) {
    std::vector<int> off(degs.size() + 1, 0);
    for (std::size_t i = 0; i < degs.size(); ++i) {
        int rd = d - degs[i];
        off[i + 1] = off[i] + (rd >= 0 ? static_cast<int>(graded_dimension(ring, rd)) : 0);
    }
    return off;
}

// Echelon basis of {(a_i) : sum a_i g_i = 0} in degree d.
template <typename S>
Rref<S> relation_space(const RingPtr<S>& ring, const std::vector<Element<S>>& gens,
                       const std::vector<int>& degs, int d) {
    std::vector<int> off = relation_offsets(*ring, degs, d);
    int total = off.back();
    std::vector<Monomial> target = monomial_basis(*ring, d);
    Mat<S> map(static_cast<int>(target.size()), total);
    map.setZero();
    for (std::size_t i = 0; i < gens.size(); ++i) {
        int rd = d - degs[i];
        if (rd < 0)
            continue;
        std::vector<Monomial> source = monomial_basis(*ring, rd);
        for (std::size_t k = 0; k < source.size(); ++k) {
            RowVec<S> col =
                element_to_row(target, Element<S>::monomial(ring, source[k]) * gens[i]);
            map.col(off[i] + static_cast<int>(k)) = col.transpose();
        }
    }
    Rref<S> out(total);
    Mat<S> ker = kernel_basis(map);
    for (int r = 0; r < ker.rows(); ++r)
        out.insert(ker.row(r));
    return out;
}

// The blocks of a relation row, as ring elements.
template <typename S>
std::vector<Element<S>> relation_blocks(const RingPtr<S>& ring, const std::vector<int>& degs,
                                        int d, const RowVec<S>& row) {
    std::vector<int> off = relation_offsets(*ring, degs, d);
    std::vector<Element<S>> out;
    for (std::size_t i = 0; i < degs.size(); ++i) {
        int rd = d - degs[i];
        if (rd < 0) {
            out.push_back(Element<S>(ring));
            continue;
        }
        std::vector<Monomial> basis = monomial_basis(*ring, rd);
        out.push_back(
            row_to_element(ring, basis, RowVec<S>(row.segment(off[i], off[i + 1] - off[i]))));
    }
    return out;
}

// Re-coordinates a degree-(d-1) relation multiplied by one variable into the
// degree-d block layout.
template <typename S>
RowVec<S> shift_relation(const RingPtr<S>& ring, const std::vector<int>& degs, int d,
                         const RowVec<S>& row, int var) {
    std::vector<Element<S>> blocks = relation_blocks(ring, degs, d - 1, row);
    std::vector<int> off = relation_offsets(*ring, degs, d);
    RowVec<S> out(off.back());
    out.setZero();
    Element<S> v = Element<S>::variable(ring, var);
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        int rd = d - degs[i];
        if (rd < 0 || blocks[i].is_zero())
            continue;
        std::vector<Monomial> basis = monomial_basis(*ring, rd);
        out.segment(off[i], off[i + 1] - off[i]) = element_to_row(basis, v * blocks[i]);
    }
    return out;
}

} // namespace detail

// Relations among the minimal generators of the ideal in one degree.
template <typename S>
Rref<S> syzygy_components(const Ideal<S>& ideal, int d) {
    std::vector<Element<S>> gens = minimal_generators(ideal, d);
    std::vector<int> degs;
    for (const auto& g : gens)
        degs.push_back(g.degree());
    return detail::relation_space(ideal.ring(), gens, degs, d);
}

template <typename S>
struct SyzygyModule {
    std::vector<Element<S>> generators; // minimal generators of the ideal
    std::vector<int> degrees;
    std::map<int, Rref<S>> relations;  // full relation space per degree
    std::map<int, int> minimal_counts; // relation generators new in each degree
};

// Relation spaces up to d_syz together with minimal relation-generator
// counts: a degree-d relation is new when it is not a combination of
// variable-multiples of lower-degree relations.
template <typename S>
SyzygyModule<S> syzygy_generators(const Ideal<S>& ideal, int d_syz) {
    const RingPtr<S>& ring = ideal.ring();
    SyzygyModule<S> out;
    if (!ideal.is_tabulated())
        for (const auto& g : ideal.generators())
            if (g.degree() > d_syz)
                throw UsageError("syzygy bound below the largest generator degree");
    out.generators = minimal_generators(ideal, d_syz);
    for (const auto& g : out.generators)
        out.degrees.push_back(g.degree());
    for (int d = 0; d <= d_syz; ++d) {
        Rref<S> space = detail::relation_space(ring, out.generators, out.degrees, d);
        Rref<S> grown(space.cols());
        if (d > 0) {
            auto prev = out.relations.find(d - 1);
            if (prev != out.relations.end())
                for (int r = 0; r < prev->second.rank(); ++r)
                    for (int v = 0; v < ring->n; ++v)
                        grown.insert(detail::shift_relation(ring, out.degrees, d,
                                                            prev->second.row(r), v));
        }
        int fresh = 0;
        for (int r = 0; r < space.rank(); ++r)
            if (grown.insert(space.row(r)))
                ++fresh;
        if (fresh > 0)
            out.minimal_counts[d] = fresh;
        out.relations.emplace(d, std::move(space));
    }
    return out;
}

template <typename S>
struct TangentReport {
    std::vector<Element<S>> generators;
    std::vector<int> degrees;
    long long dimension = 0;
    // Basis tuples (f_1..f_m); entry i is reduced modulo the ideal.
    std::vector<std::vector<Element<S>>> basis;
    int unknowns = 0;
    int constraint_rows = 0;
    int d_syz = 0;
};

// Default relation-degree bound: generator degrees plus one full round of
// variables in the polynomial case; everything truncates at degree n in the
// exterior case.
template <typename S>
int default_syzygy_bound(const Ideal<S>& ideal) {
    const Ring<S>& ring = *ideal.ring();
    if (ring.kind == RingKind::Exterior)
        return ring.n;
    if (ideal.is_tabulated())
        throw UsageError("tabulated ideals need an explicit syzygy bound");
    int maxdeg = 0;
    for (const auto& g : ideal.generators())
        maxdeg = std::max(maxdeg, g.degree());
    return maxdeg + ring.n;
}

namespace detail {

template <typename S>
TangentReport<S> solve_tangent(const Ideal<S>& ideal, int d_syz) {
    const RingPtr<S>& ring = ideal.ring();
    TangentReport<S> rep;
    rep.d_syz = d_syz;
    rep.generators = minimal_generators(ideal, d_syz);
    for (const auto& g : rep.generators)
        rep.degrees.push_back(g.degree());

    // Unknown layout: one coordinate per standard monomial (free column of
    // the component) in each generator degree.
    std::vector<std::vector<int>> value_cols;
    std::vector<int> uoff{0};
    for (int dg : rep.degrees) {
        value_cols.push_back(ideal.component(dg).free_columns());
        uoff.push_back(uoff.back() + static_cast<int>(value_cols.back().size()));
    }
    int n_unknowns = uoff.back();
    rep.unknowns = n_unknowns;

    std::map<int, Rref<S>> spaces;
    for (int d = 0; d <= d_syz; ++d)
        spaces.emplace(d, relation_space(ring, rep.generators, rep.degrees, d));

    Rref<S> system(n_unknowns);
    int rows = 0;
    for (int d = 0; d <= d_syz; ++d) {
        const Rref<S>& space = spaces.at(d);
        if (space.rank() == 0)
            continue;
        const Rref<S>& comp = ideal.component(d);
        std::vector<int> out_cols = comp.free_columns();
        std::vector<Monomial> target = monomial_basis(*ring, d);
        for (int r = 0; r < space.rank(); ++r) {
            std::vector<Element<S>> blocks =
                relation_blocks(ring, rep.degrees, d, space.row(r));
            // reduced(i, k): a_i times the k-th standard monomial, mod I.
            std::vector<std::vector<RowVec<S>>> reduced(rep.generators.size());
            for (std::size_t i = 0; i < rep.generators.size(); ++i) {
                std::vector<Monomial> gb = monomial_basis(*ring, rep.degrees[i]);
                for (int col : value_cols[i]) {
                    Element<S> prod = blocks[i] * Element<S>::monomial(ring, gb[static_cast<std::size_t>(col)]);
                    reduced[i].push_back(comp.reduce(element_to_row(target, prod)));
                }
            }
            for (std::size_t oc = 0; oc < out_cols.size(); ++oc) {
                RowVec<S> cons(n_unknowns);
                cons.setZero();
                for (std::size_t i = 0; i < rep.generators.size(); ++i)
                    for (std::size_t k = 0; k < reduced[i].size(); ++k)
                        cons(uoff[i] + static_cast<int>(k)) = reduced[i][k](out_cols[oc]);
                ++rows;
                system.insert(cons);
            }
        }
    }
    rep.constraint_rows = rows;
    rep.dimension = n_unknowns - system.rank();

    Mat<S> sol = kernel_from_rref(system);
    for (int r = 0; r < sol.rows(); ++r) {
        std::vector<Element<S>> tuple;
        for (std::size_t i = 0; i < rep.generators.size(); ++i) {
            std::vector<Monomial> gb = monomial_basis(*ring, rep.degrees[i]);
            std::vector<typename Element<S>::Term> terms;
            for (std::size_t k = 0; k < value_cols[i].size(); ++k) {
                const S& c = sol(r, uoff[i] + static_cast<int>(k));
                if (!(c == S(0)))
                    terms.push_back({gb[static_cast<std::size_t>(value_cols[i][k])], c});
            }
            tuple.push_back(Element<S>(ring, std::move(terms)));
        }
        rep.basis.push_back(std::move(tuple));
    }

    // Re-verify every solution against every stored relation.
    for (int d = 0; d <= d_syz; ++d) {
        const Rref<S>& space = spaces.at(d);
        const Rref<S>& comp = ideal.component(d);
        std::vector<Monomial> target = monomial_basis(*ring, d);
        for (int r = 0; r < space.rank(); ++r) {
            std::vector<Element<S>> blocks =
                relation_blocks(ring, rep.degrees, d, space.row(r));
            for (const auto& tuple : rep.basis) {
                Element<S> sum(ring);
                for (std::size_t i = 0; i < blocks.size(); ++i)
                    sum = sum + blocks[i] * tuple[i];
                if (!comp.contains(element_to_row(target, sum)))
                    throw ComputeError("tangent solution failed syzygy re-verification");
            }
        }
    }
    return rep;
}

} // namespace detail

// Dimension and basis of Hom(I, R/I)_0.  Runs at the given relation-degree
// bound and once more at bound + 1; disagreement means the bound was too
// small and raises an error instead of returning a wrong answer.
template <typename S>
TangentReport<S> tangent_dimension(const Ideal<S>& ideal, int d_syz = -1) {
    if (d_syz < 0)
        d_syz = default_syzygy_bound(ideal);
    TangentReport<S> rep = detail::solve_tangent(ideal, d_syz);
    TangentReport<S> next = detail::solve_tangent(ideal, d_syz + 1);
    if (rep.dimension != next.dimension)
        throw ComputeError("tangent dimension unstable: raise the syzygy degree bound");
    return rep;
}

} // namespace lexpoint

#endif
