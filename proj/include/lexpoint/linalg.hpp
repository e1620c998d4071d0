// Exact Gaussian elimination.
//
// Rref maintains a row space in reduced row echelon form with pivots chosen
// at the leftmost nonzero column.  Columns are always indexed by a graded
// monomial basis in lex-descending order, so the pivot columns of an ideal
// component are exactly the initial monomials of that component.  Everything
// downstream (membership, initial ideals, kernels, dimension counts) runs
// through this type.
#ifndef LEXPOINT_LINALG_HPP
#define LEXPOINT_LINALG_HPP

#include <vector>

#include "lexpoint/errors.hpp"
#include "lexpoint/scalar.hpp"

namespace lexpoint {

template <typename S>
class Rref {
public:
    Rref() : cols_(0) {}
    explicit Rref(int cols) : cols_(cols) {}

    int cols() const { return cols_; }
    int rank() const { return static_cast<int>(rows_.size()); }
    const std::vector<int>& pivots() const { return pivots_; }
    const RowVec<S>& row(int i) const { return rows_[i]; }

    bool is_pivot_column(int c) const {
        for (int p : pivots_)
            if (p == c)
                return true;
        return false;
    }

    std::vector<int> free_columns() const {
        std::vector<int> free;
        std::size_t k = 0;
        for (int c = 0; c < cols_; ++c) {
            if (k < pivots_.size() && pivots_[k] == c)
                ++k;
            else
                free.push_back(c);
        }
        return free;
    }

    // Remainder of v after reduction against the basis.
    RowVec<S> reduce(RowVec<S> v) const {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const S& c = v(pivots_[r]);
            if (!(c == S(0))) {
                S factor = c;
                v -= factor * rows_[r];
            }
        }
        return v;
    }

    bool contains(const RowVec<S>& v) const {
        RowVec<S> rem = reduce(v);
        for (int i = 0; i < rem.size(); ++i)
            if (!(rem(i) == S(0)))
                return false;
        return true;
    }

    // Reduces v and, if independent, inserts it; returns true if rank grew.
    bool insert(RowVec<S> v) {
        if (v.size() != cols_)
            throw ComputeError("row length does not match ambient dimension");
        v = reduce(std::move(v));
        int lead = -1;
        for (int i = 0; i < cols_; ++i) {
            if (!(v(i) == S(0))) {
                lead = i;
                break;
            }
        }
        if (lead < 0)
            return false;
        S inv = S(1) / v(lead);
        v *= inv;
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const S& c = rows_[r](lead);
            if (!(c == S(0))) {
                S factor = c;
                rows_[r] -= factor * v;
            }
        }
        std::size_t at = 0;
        while (at < pivots_.size() && pivots_[at] < lead)
            ++at;
        rows_.insert(rows_.begin() + at, std::move(v));
        pivots_.insert(pivots_.begin() + at, lead);
        return true;
    }

    Mat<S> to_matrix() const {
        Mat<S> m(rank(), cols_);
        for (int r = 0; r < rank(); ++r)
            m.row(r) = rows_[r];
        return m;
    }

    // Canonical forms are unique, so subspace equality is row-wise equality.
    friend bool operator==(const Rref& a, const Rref& b) {
        if (a.cols_ != b.cols_ || a.pivots_ != b.pivots_)
            return false;
        for (int r = 0; r < a.rank(); ++r)
            for (int c = 0; c < a.cols_; ++c)
                if (!(a.rows_[r](c) == b.rows_[r](c)))
                    return false;
        return true;
    }
    friend bool operator!=(const Rref& a, const Rref& b) { return !(a == b); }

    bool contains_subspace(const Rref& other) const {
        for (int r = 0; r < other.rank(); ++r)
            if (!contains(other.row(r)))
                return false;
        return true;
    }

private:
    int cols_;
    std::vector<RowVec<S>> rows_;
    std::vector<int> pivots_;
};

template <typename S>
Rref<S> rref_from_rows(const Mat<S>& rows) {
    Rref<S> r(static_cast<int>(rows.cols()));
    for (int i = 0; i < rows.rows(); ++i)
        r.insert(rows.row(i));
    return r;
}

// Basis of the kernel of the row space viewed as a linear map, one solution
// per row: each vector has a 1 in a distinct free column.
template <typename S>
Mat<S> kernel_from_rref(const Rref<S>& r) {
    std::vector<int> free = r.free_columns();
    Mat<S> out(static_cast<int>(free.size()), r.cols());
    out.setZero();
    for (std::size_t k = 0; k < free.size(); ++k) {
        out(static_cast<int>(k), free[k]) = S(1);
        for (int p = 0; p < r.rank(); ++p)
            out(static_cast<int>(k), r.pivots()[p]) = -r.row(p)(free[k]);
    }
    return out;
}

// Basis of the right kernel {x : a x = 0}, one solution per row.
template <typename S>
Mat<S> kernel_basis(const Mat<S>& a) {
    return kernel_from_rref(rref_from_rows(a));
}

} // namespace lexpoint

#endif
