// RREF canonicality, kernels, and graded subspaces.
#include "doctest.h"

#include <random>

#include "lexpoint/parse.hpp"
#include "lexpoint/subspace.hpp"

using namespace lexpoint;

namespace {

template <typename S>
Mat<S> random_matrix(std::mt19937_64& rng, const FieldOfT<S>& field, int rows, int cols) {
    Mat<S> m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            m(i, j) = field.from_int(static_cast<std::int64_t>(rng() % 11) - 5);
    return m;
}

template <typename S>
void check_rref_shape(const Rref<S>& r) {
    for (std::size_t i = 0; i + 1 < r.pivots().size(); ++i)
        CHECK(r.pivots()[i] < r.pivots()[i + 1]);
    for (int i = 0; i < r.rank(); ++i) {
        CHECK(r.row(i)(r.pivots()[i]) == S(1));
        for (int j = 0; j < r.rank(); ++j)
            if (j != i)
                CHECK(r.row(j)(r.pivots()[i]) == S(0));
        for (int c = 0; c < r.pivots()[i]; ++c)
            CHECK(r.row(i)(c) == S(0));
    }
}

} // namespace

TEST_CASE("rref canonical form is order-independent") {
    std::mt19937_64 rng(29);
    PrimeField f101(101);
    for (int trial = 0; trial < 20; ++trial) {
        Mat<GFp> a = random_matrix<GFp>(rng, f101, 6, 8);
        Rref<GFp> fwd = rref_from_rows(a);
        Mat<GFp> rev(a.rows(), a.cols());
        for (int i = 0; i < a.rows(); ++i)
            rev.row(i) = a.row(a.rows() - 1 - i);
        Rref<GFp> bwd = rref_from_rows(rev);
        CHECK(fwd == bwd);
        check_rref_shape(fwd);
        for (int i = 0; i < a.rows(); ++i)
            CHECK(fwd.contains(a.row(i)));
    }
}

TEST_CASE("rref over the rationals stays exact") {
    std::mt19937_64 rng(31);
    RationalField qq;
    Mat<Rational> a = random_matrix<Rational>(rng, qq, 5, 7);
    a.row(3) = a.row(0) + a.row(1);
    a.row(4) = a.row(1) - a.row(2);
    Rref<Rational> r = rref_from_rows(a);
    CHECK(r.rank() <= 3);
    check_rref_shape(r);
    RowVec<Rational> combo = Rational(1, 2) * a.row(0) - Rational(7, 3) * a.row(2);
    CHECK(r.contains(combo));
    Rref<Rational> again = rref_from_rows(r.to_matrix());
    CHECK(again == r);
}

TEST_CASE("insert reports dependence and preserves the span") {
    PrimeField f(7);
    Rref<GFp> r(4);
    RowVec<GFp> v1(4), v2(4);
    v1 << f.from_int(1), f.from_int(2), f.from_int(0), f.from_int(3);
    v2 << f.from_int(2), f.from_int(4), f.from_int(0), f.from_int(6);
    CHECK(r.insert(v1));
    CHECK(!r.insert(v2));
    CHECK(r.rank() == 1);
    CHECK(r.free_columns() == std::vector<int>{1, 2, 3});
}

TEST_CASE("kernel vectors annihilate the matrix and fill the nullity") {
    std::mt19937_64 rng(37);
    PrimeField f101(101);
    for (int trial = 0; trial < 20; ++trial) {
        int rows = 3 + static_cast<int>(rng() % 4);
        int cols = 4 + static_cast<int>(rng() % 6);
        Mat<GFp> a = random_matrix<GFp>(rng, f101, rows, cols);
        Mat<GFp> k = kernel_basis(a);
        Rref<GFp> r = rref_from_rows(a);
        CHECK(k.rows() + r.rank() == cols);
        for (int i = 0; i < k.rows(); ++i) {
            Vec<GFp> prod = a * k.row(i).transpose();
            for (int j = 0; j < prod.size(); ++j)
                CHECK(prod(j) == GFp(0));
        }
        CHECK(rref_from_rows(k).rank() == k.rows());
    }
}

TEST_CASE("pivot columns are the initial monomials") {
    auto ring = make_ring<Rational>(RingKind::Polynomial, 3, RationalField{});
    GradedSubspace<Rational> v(ring);
    v.add_element(parse_element(ring, "x*y + z^2"));
    v.add_element(parse_element(ring, "y^2 - z^2"));
    // Degree-2 basis: x^2, x*y, x*z, y^2, y*z, z^2.
    CHECK(v.piece(2).pivots() == std::vector<int>{1, 3});
    CHECK(v.dim(2) == 2);
    CHECK(v.contains(parse_element(ring, "x*y + y^2")));
    CHECK(!v.contains(parse_element(ring, "x^2")));
}

TEST_CASE("graded subspace round-trips elements") {
    auto ring = make_ring<Rational>(RingKind::Exterior, 5, RationalField{});
    GradedSubspace<Rational> v(ring);
    auto f = parse_element(ring, "e1^e2 + 2*e3^e4");
    auto g = parse_element(ring, "e2^e3 - e3^e4");
    v.add_element(f);
    v.add_element(g);
    auto basis = v.basis_elements(2);
    REQUIRE(basis.size() == 2);
    GradedSubspace<Rational> w(ring);
    for (const auto& b : basis)
        w.add_element(b);
    CHECK(w.piece(2) == v.piece(2));
    CHECK(w.contains(f + g));
    CHECK_THROWS_AS(v.piece(3), ComputeError);
}
