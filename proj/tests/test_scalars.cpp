// Exact scalar arithmetic: canonical forms, field axioms, valuations,
// evaluation, and Eigen interoperability.
#include "doctest.h"

#include <Eigen/Dense>
#include <random>

#include "lexpoint/scalar.hpp"

using namespace lexpoint;

using QT = RationalFunction<Rational>;

TEST_CASE("rational canonical form and arithmetic") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-1, -2) == Rational(1, 2));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(1, -2).den() == 2);
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(3, 4) * Rational(4, 3) == Rational(1));
    CHECK(Rational(7, 3) - Rational(1, 3) == Rational(2));
    CHECK(Rational(5) / Rational(10) == Rational(1, 2));
    CHECK(Rational(2, 3) < Rational(3, 4));
    CHECK_THROWS_AS(Rational(1) / Rational(0), ComputeError);
    CHECK_THROWS_AS(Rational(1, 0), ComputeError);
}

TEST_CASE("rational overflow is detected, not silent") {
    Rational big(INT64_MAX, 1);
    CHECK_THROWS_AS(big * big, ComputeError);
    CHECK_THROWS_AS(big + big, ComputeError);
    // 128-bit intermediates keep legitimate near-limit results exact.
    CHECK(Rational(INT64_MAX, 2) * Rational(2, INT64_MAX) == Rational(1));
}

TEST_CASE("prime field arithmetic over GF(3)") {
    PrimeField f(3);
    GFp two = f.from_int(2);
    CHECK(two * two == f.from_int(1));
    CHECK(f.from_int(1) / two == two);
    CHECK(two + two == f.from_int(1));
    CHECK(-two == f.from_int(1));
    CHECK(f.from_int(3).is_zero());
    CHECK_THROWS_AS(f.from_int(0).inverse(), ComputeError);
}

TEST_CASE("prime field literals adopt a modulus on contact") {
    PrimeField f(7);
    GFp bound = f.from_int(3);
    GFp lit(10);
    CHECK(bound + lit == f.from_int(13));
    CHECK(lit * bound == f.from_int(30));
    CHECK(GFp(-1) + bound == f.from_int(2));
    CHECK(GFp(10) == f.from_int(3));
    PrimeField g(5);
    CHECK_THROWS_AS(f.from_int(1) + g.from_int(1), ComputeError);
}

TEST_CASE("prime field context rejects bad moduli") {
    CHECK_THROWS_AS(PrimeField(2), UsageError);
    CHECK_THROWS_AS(PrimeField(9), UsageError);
    CHECK_THROWS_AS(PrimeField(1), UsageError);
    CHECK_THROWS_AS(PrimeField(15), UsageError);
    CHECK_NOTHROW(PrimeField(101));
}

TEST_CASE("rational function canonical form") {
    QT t = QT::t();
    QT one(1);
    CHECK((one / t) * t == one);
    CHECK(t - t == QT(0));
    QT f = (t * t) / (one + t);
    CHECK(f.num() == detail::Poly<Rational>{Rational(0), Rational(0), Rational(1)});
    CHECK(f.den() == detail::Poly<Rational>{Rational(1), Rational(1)});
    // Denominator is forced monic.
    QT g = one / (QT(2) + QT(2) * t);
    CHECK(g.den().back() == Rational(1));
    CHECK(g * (QT(2) + QT(2) * t) == one);
    CHECK_THROWS_AS(one / QT(0), ComputeError);
}

TEST_CASE("t-adic valuation") {
    QT t = QT::t();
    QT one(1);
    CHECK(((t * t) / (one + t)).t_valuation() == 2);
    CHECK((one / t).t_valuation() == -1);
    CHECK(QT(3).t_valuation() == 0);
    CHECK((t * (one + t)).t_valuation() == 1);
    CHECK_THROWS_AS(QT(0).t_valuation(), ComputeError);
}

TEST_CASE("valuation is additive on products") {
    std::mt19937_64 rng(11);
    QT t = QT::t();
    auto random_elt = [&]() {
        QT f(0);
        for (int k = 0; k < 3; ++k) {
            std::int64_t c = static_cast<std::int64_t>(rng() % 7) - 3;
            f += QT(c) * t.times_t_power(k - 1).times_t_power(1);
        }
        return f;
    };
    int checked = 0;
    for (int trial = 0; trial < 50; ++trial) {
        QT f = random_elt() + t.times_t_power(static_cast<int>(rng() % 3));
        QT g = random_elt() + QT(1 + static_cast<std::int64_t>(rng() % 3));
        if (f.is_zero() || g.is_zero())
            continue;
        CHECK((f * g).t_valuation() == f.t_valuation() + g.t_valuation());
        ++checked;
    }
    CHECK(checked > 30);
}

TEST_CASE("evaluation commutes with arithmetic and detects poles") {
    QT t = QT::t();
    QT one(1);
    QT f = (one + t) / (one - t);
    CHECK(f.evaluate_at(Rational(0)) == Rational(1));
    CHECK(f.evaluate_at(Rational(2)) == Rational(-3));
    CHECK_THROWS_AS((one / t).evaluate_at(Rational(0)), ComputeError);
    CHECK_THROWS_AS(f.evaluate_at(Rational(1)), ComputeError);

    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        auto small = [&]() { return QT(static_cast<std::int64_t>(rng() % 9) - 4); };
        QT a = small() + small() * t;
        QT b = small() + small() * t * t;
        Rational c(static_cast<std::int64_t>(rng() % 11) - 5);
        CHECK((a + b).evaluate_at(c) == a.evaluate_at(c) + b.evaluate_at(c));
        CHECK((a * b).evaluate_at(c) == a.evaluate_at(c) * b.evaluate_at(c));
    }
}

TEST_CASE("rational functions over a prime field") {
    using FT = RationalFunction<GFp>;
    PrimeField f(3);
    FunctionField<PrimeField> ctx(f);
    FT t = ctx.t();
    FT two = ctx.from_int(2);
    CHECK(two * two == ctx.from_int(1));
    CHECK((t + two) * (t + two) == t * t + t + ctx.from_int(1));
    CHECK((t * t / (t + ctx.from_int(1))).t_valuation() == 2);
    CHECK(ctx.name() == "GF(3)(t)");
}

template <typename S>
static void field_axioms(const std::vector<S>& samples) {
    S zero(0), one(1);
    for (const S& a : samples)
        for (const S& b : samples)
            for (const S& c : samples) {
                CHECK((a + b) + c == a + (b + c));
                CHECK((a * b) * c == a * (b * c));
                CHECK(a + b == b + a);
                CHECK(a * b == b * a);
                CHECK(a * (b + c) == a * b + a * c);
            }
    for (const S& a : samples) {
        CHECK(a + zero == a);
        CHECK(a * one == a);
        CHECK(a - a == zero);
        if (!(a == zero))
            CHECK(a / a == one);
    }
}

TEST_CASE("field axioms hold on sampled elements") {
    field_axioms<Rational>({Rational(0), Rational(1), Rational(-1, 2), Rational(3, 4), Rational(7)});
    PrimeField f(5);
    field_axioms<GFp>({f.from_int(0), f.from_int(1), f.from_int(2), f.from_int(3), f.from_int(4)});
    QT t = QT::t();
    field_axioms<QT>({QT(0), QT(1), t, QT(1) + t, QT(1) / (QT(1) + t)});
}

TEST_CASE("Eigen matrices work over every scalar") {
    Mat<Rational> a(2, 2);
    a << Rational(1), Rational(1, 2), Rational(0), Rational(1);
    Mat<Rational> b = a * a;
    CHECK(b(0, 1) == Rational(1));

    PrimeField f(3);
    Mat<GFp> m(2, 2);
    m << f.from_int(1), f.from_int(2), f.from_int(2), f.from_int(2);
    Mat<GFp> m2 = m * m;
    CHECK(m2(0, 0) == f.from_int(2));
    CHECK(m2(1, 1) == f.from_int(2));

    QT t = QT::t();
    Mat<QT> q(2, 2);
    q << QT(1), t, QT(0), QT(1);
    Mat<QT> q2 = q * q;
    CHECK(q2(0, 1) == t + t);
    Vec<QT> v(2);
    v << QT(1), QT(1);
    Vec<QT> qv = q * v;
    CHECK(qv(0) == QT(1) + t);
}
