// Graded subspaces of a ring: one RREF per degree, columns indexed by the
// lex-descending monomial basis of that degree.
#ifndef LEXPOINT_SUBSPACE_HPP
#define LEXPOINT_SUBSPACE_HPP

#include <map>
#include <vector>

#include "lexpoint/element.hpp"
#include "lexpoint/linalg.hpp"
#include "lexpoint/ring.hpp"

namespace lexpoint {

template <typename S>
RowVec<S> element_to_row(const std::vector<Monomial>& basis, const Element<S>& e) {
    RowVec<S> row(static_cast<int>(basis.size()));
    row.setZero();
    for (const auto& t : e.terms())
        row(basis_index(basis, t.m)) = t.c;
    return row;
}

template <typename S>
Element<S> row_to_element(const RingPtr<S>& ring, const std::vector<Monomial>& basis,
                          const RowVec<S>& row) {
    std::vector<typename Element<S>::Term> terms;
    for (int i = 0; i < row.size(); ++i)
        if (!(row(i) == S(0)))
            terms.push_back({basis[static_cast<std::size_t>(i)], row(i)});
    return Element<S>(ring, std::move(terms));
}

template <typename S>
class GradedSubspace {
public:
    GradedSubspace() = default;
    explicit GradedSubspace(RingPtr<S> ring) : ring_(std::move(ring)) {}

    const RingPtr<S>& ring() const { return ring_; }

    bool has_degree(int d) const { return pieces_.count(d) > 0; }

    int max_degree() const {
        if (pieces_.empty())
            throw ComputeError("graded subspace has no computed degrees");
        return pieces_.rbegin()->first;
    }

    const Rref<S>& piece(int d) const {
        auto it = pieces_.find(d);
        if (it == pieces_.end())
            throw ComputeError("graded piece of degree " + std::to_string(d) +
                               " has not been computed");
        return it->second;
    }

    Rref<S>& piece_mut(int d) {
        auto it = pieces_.find(d);
        if (it == pieces_.end()) {
            it = pieces_
                     .emplace(d, Rref<S>(static_cast<int>(graded_dimension(*ring_, d))))
                     .first;
        }
        return it->second;
    }

    long long dim(int d) const { return piece(d).rank(); }

    void add_element(const Element<S>& e) {
        if (e.is_zero())
            return;
        int d = e.degree();
        piece_mut(d).insert(element_to_row(monomial_basis(*ring_, d), e));
    }

    bool contains(const Element<S>& e) const {
        if (e.is_zero())
            return true;
        int d = e.degree();
        if (!has_degree(d))
            return false;
        return piece(d).contains(element_to_row(monomial_basis(*ring_, d), e));
    }

    // Basis of the degree-d piece as canonical elements.
    std::vector<Element<S>> basis_elements(int d) const {
        const Rref<S>& p = piece(d);
        auto basis = monomial_basis(*ring_, d);
        std::vector<Element<S>> out;
        for (int r = 0; r < p.rank(); ++r)
            out.push_back(row_to_element(ring_, basis, p.row(r)));
        return out;
    }

    bool equals_up_to(const GradedSubspace& other, int max_d) const {
        for (int d = 0; d <= max_d; ++d)
            if (piece(d) != other.piece(d))
                return false;
        return true;
    }

private:
    RingPtr<S> ring_;
    std::map<int, Rref<S>> pieces_;
};

} // namespace lexpoint

#endif
