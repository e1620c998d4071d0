// Input grammars: specs, expressions, Hilbert functions, ideal files.
#include "doctest.h"

#include <random>

#include "lexpoint/parse.hpp"

using namespace lexpoint;

TEST_CASE("field specs") {
    CHECK(std::holds_alternative<RationalField>(parse_field_spec("QQ")));
    CHECK(std::get<PrimeField>(parse_field_spec("GF(7)")).p == 7);
    CHECK(std::holds_alternative<FunctionField<RationalField>>(parse_field_spec("QQ(t)")));
    CHECK(std::get<FunctionField<PrimeField>>(parse_field_spec("GF(3)(t)")).base.p == 3);
    CHECK(field_spec_name(parse_field_spec("GF(101)")) == "GF(101)");
    CHECK_THROWS_AS(parse_field_spec("GF(4)"), UsageError);
    CHECK_THROWS_AS(parse_field_spec("GF(9)"), UsageError);
    CHECK_THROWS_AS(parse_field_spec("RR"), UsageError);
    CHECK_THROWS_AS(parse_field_spec("QQ(s)"), UsageError);
}

TEST_CASE("ring specs") {
    ParsedRingSpec rs = parse_ring_spec("S:3@QQ");
    CHECK(rs.kind == RingKind::Polynomial);
    CHECK(rs.n == 3);
    with_parsed_ring(rs, [](auto ring) {
        CHECK(ring->spec_string() == "S:3@QQ");
        CHECK(ring->vars == std::vector<std::string>{"x", "y", "z"});
        return 0;
    });
    with_parsed_ring(parse_ring_spec("E:5@GF(3)"), [](auto ring) {
        CHECK(ring->kind == RingKind::Exterior);
        CHECK(ring->vars.size() == 5);
        CHECK(ring->vars[4] == "e5");
        return 0;
    });
    with_parsed_ring(parse_ring_spec("S:5@QQ"), [](auto ring) {
        CHECK(ring->vars[0] == "x1");
        return 0;
    });
    CHECK_THROWS_AS(parse_ring_spec("T:3@QQ"), UsageError);
    CHECK_THROWS_AS(parse_ring_spec("S:0@QQ"), UsageError);
    CHECK_THROWS_AS(parse_ring_spec("S:9@QQ"), UsageError);
    CHECK_THROWS_AS(parse_ring_spec("S:3"), UsageError);
}

TEST_CASE("polynomial expressions") {
    auto r = make_ring<Rational>(RingKind::Polynomial, 3, RationalField{});
    auto v = ring_variables(r);
    CHECK(parse_element(r, "x^2*y - 2*x*z^2") ==
          v[0] * v[0] * v[1] - Rational(2) * (v[0] * v[2] * v[2]));
    CHECK(parse_element(r, "(y^2+x*z)*x^2") == v[1] * v[1] * v[0] * v[0] + v[0] * v[0] * v[0] * v[2]);
    CHECK(parse_element(r, "1/2*x + 1/2*x") == v[0]);
    CHECK(parse_element(r, "-x + x").is_zero());
    CHECK(parse_element(r, "x^0") == Element<Rational>::constant(r, Rational(1)));
    CHECK(parse_element(r, "x*y+x*z-y^2") == v[0] * v[1] + v[0] * v[2] - v[1] * v[1]);
    CHECK_THROWS_AS(parse_element(r, "x + q"), UsageError);
    CHECK_THROWS_AS(parse_element(r, "x/y"), UsageError);
    CHECK_THROWS_AS(parse_element(r, "x^y"), UsageError);
    CHECK_THROWS_AS(parse_element(r, "x +"), UsageError);
    CHECK_THROWS_AS(parse_element(r, "t*x"), UsageError);
    CHECK_THROWS_AS(parse_element(r, "(x"), UsageError);
}

TEST_CASE("exterior expressions use ^ as wedge") {
    auto r = make_ring<Rational>(RingKind::Exterior, 5, RationalField{});
    auto e = ring_variables(r);
    CHECK(parse_element(r, "e1^e2 + e3^e4") == e[0] * e[1] + e[2] * e[3]);
    CHECK(parse_element(r, "e1^e2^e5") == e[0] * e[1] * e[4]);
    CHECK(parse_element(r, "e2^e4^(e3+e5)") == e[1] * e[3] * e[2] + e[1] * e[3] * e[4]);
    CHECK(parse_element(r, "e2^e1") == -(e[0] * e[1]));
    CHECK(parse_element(r, "e1^2").is_zero());
    CHECK(parse_element(r, "2*e1^e2") == Rational(2) * (e[0] * e[1]));
}

TEST_CASE("function field expressions admit t") {
    auto rs = parse_ring_spec("S:3@QQ(t)");
    with_parsed_ring(rs, [](auto ring) {
        using S = typename std::decay_t<decltype(*ring)>::Scalar;
        if constexpr (std::is_same_v<S, RationalFunction<Rational>>) {
            auto v = ring_variables(ring);
            auto f = parse_element(ring, "x*y + t*y^2");
            CHECK(f == v[0] * v[1] + S::t() * (v[1] * v[1]));
            auto g = parse_element(ring, "(t^2+1)*x");
            CHECK(g.coefficient(Monomial::variable(0)) == S::t() * S::t() + S(1));
        } else {
            FAIL("expected the QQ(t) alternative");
        }
        return 0;
    });
}

TEST_CASE("GF(p) coefficients reduce modulo p") {
    auto r = make_ring<GFp>(RingKind::Polynomial, 3, PrimeField(3));
    auto v = ring_variables(r);
    CHECK(parse_element(r, "2*x + 2*x") == v[0]);
    CHECK(parse_element(r, "3*x").is_zero());
    CHECK(parse_element(r, "x/2") == GFp(2, 3) * v[0]);
}

TEST_CASE("printing round-trips through the parser") {
    std::mt19937_64 rng(23);
    auto roundtrip = [&](auto ring, int deg) {
        using S = typename std::decay_t<decltype(*ring)>::Scalar;
        auto basis = monomial_basis(*ring, deg);
        Element<S> e(ring);
        for (const Monomial& m : basis) {
            std::int64_t c = static_cast<std::int64_t>(rng() % 7) - 3;
            if (c != 0)
                e = e + Element<S>::monomial(ring, m, ring->field.from_int(c));
        }
        CHECK(parse_element(ring, e.to_string()) == e);
    };
    auto s3 = make_ring<Rational>(RingKind::Polynomial, 3, RationalField{});
    auto e5 = make_ring<Rational>(RingKind::Exterior, 5, RationalField{});
    auto g3 = make_ring<GFp>(RingKind::Exterior, 5, PrimeField(3));
    for (int trial = 0; trial < 25; ++trial) {
        roundtrip(s3, 2);
        roundtrip(s3, 3);
        roundtrip(e5, 2);
        roundtrip(g3, 3);
    }
    // Rational-function coefficients print with parentheses and re-parse.
    auto st = make_ring<RationalFunction<Rational>>(
        RingKind::Polynomial, 3, FunctionField<RationalField>(RationalField{}));
    auto f = parse_element(st, "(t^2+1)*x^2 - t*x*y + 3*z^2");
    CHECK(parse_element(st, f.to_string()) == f);
}

TEST_CASE("Hilbert function specs") {
    HfSpec h = parse_hf_spec("1,3,4,4,3,3+");
    CHECK(h.values == std::vector<long long>{1, 3, 4, 4, 3, 3});
    CHECK(h.eventually_constant);
    CHECK(h.to_string() == "1,3,4,4,3,3+");
    HfSpec f = parse_hf_spec("1,5,7,2");
    CHECK(!f.eventually_constant);
    CHECK(f.values.size() == 4);
    CHECK_THROWS_AS(parse_hf_spec("1,,3"), UsageError);
    CHECK_THROWS_AS(parse_hf_spec("1,a"), UsageError);
    CHECK_THROWS_AS(parse_hf_spec(""), UsageError);
}

TEST_CASE("ideal files") {
    std::string text = "# three points on a conic\nS:3@QQ\nx^2\nx*y + x*z - y^2  # second generator\n\n";
    IdealFileData data = parse_ideal_file_text(text);
    CHECK(data.ring_text == "S:3@QQ");
    CHECK(data.generator_texts.size() == 2);
    CHECK(data.generator_texts[1] == "x*y + x*z - y^2");
    CHECK_THROWS_AS(parse_ideal_file_text("# only comments\n"), UsageError);
    CHECK(split_generator_list("x^2; x*y ;y^2") ==
          std::vector<std::string>{"x^2", "x*y", "y^2"});
}
