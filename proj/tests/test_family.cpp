// One-parameter families: specialization, flat limits at t = 0, and the
// published degeneration fixtures for one-point strata.
#include "doctest.h"

#include <string>
#include <vector>

#include "lexpoint/family.hpp"

using namespace lexpoint;

namespace {

using FQ = RationalFunction<Rational>;

RingPtr<FQ> st3() {
    return make_ring<FQ>(RingKind::Polynomial, 3, FunctionField<RationalField>(RationalField{}));
}

RingPtr<Rational> s3() { return make_ring<Rational>(RingKind::Polynomial, 3, RationalField{}); }

FamilyIdeal<Rational> fam(const RingPtr<FQ>& r, const std::vector<std::string>& gens) {
    return family_from_strings<Rational>(r, gens);
}

Ideal<Rational> base_ideal(const std::vector<std::string>& gens) {
    return ideal_from_strings(s3(), gens);
}

std::string ab(int a, const std::string& var1, int b, const std::string& var2) {
    return std::to_string(a) + "*" + var1 + " + " + std::to_string(b) + "*" + var2;
}

} // namespace

TEST_CASE("constant families specialize and degenerate to themselves") {
    auto r = st3();
    auto f = fam(r, {"x^2", "x*y + z^2"});
    auto expected = base_ideal({"x^2", "x*y + z^2"});
    CHECK(specialize(f, Rational(7)).equals_up_to(expected, 6));
    CHECK(specialize(f, Rational(0)).equals_up_to(expected, 6));
    CHECK(flat_limit(f, 6).equals_up_to(expected, 6));
}

TEST_CASE("a moving hyperplane degenerates to its limit position") {
    auto r = st3();
    auto f = fam(r, {"x + t*y"});
    CHECK(flat_limit(f, 5).equals_up_to(base_ideal({"x"}), 5));
    // Nonzero fibers are translates with the same Hilbert function.
    CHECK(hilbert_function(specialize(f, Rational(4)), 5).prefix ==
          hilbert_function(specialize(f, Rational(1)), 5).prefix);
}

TEST_CASE("family construction rejects bad input") {
    auto r = st3();
    CHECK_THROWS_AS(fam(r, {"x + y^2"}), UsageError);
    // 1/(1+t) is a unit at t = 0 but not polynomial in t.
    auto unit = parse_element<FQ>(r, "x");
    auto c = FQ(1) / (FQ(1) + FQ::t());
    CHECK_THROWS_AS(FamilyIdeal<Rational>::from_generators(r, {c * unit}), UsageError);
}

TEST_CASE("non-flat samples are reported") {
    auto r = st3();
    // The fiber at t = 1 collapses, so sampled Hilbert functions disagree.
    auto f = fam(r, {"t*x - x"});
    CHECK_THROWS_AS(flat_limit(f, 4), ComputeError);
}

TEST_CASE("one-point stratum 1: limit, saturation, and naive-fiber gap") {
    auto r = st3();
    for (auto [a, b] : {std::pair{1, 1}, std::pair{1, 2}, std::pair{2, 1}}) {
        CAPTURE(a);
        CAPTURE(b);
        auto f = fam(r, {"x*y + t*y*(" + ab(a, "y", b, "z") + ")", "x*z", "y^3*z", "y^2*z^2",
                         "y*z^3"});
        auto limit = flat_limit(f, 8);
        auto target = base_ideal({"x*z", "x*y", "y*z*(" + ab(a, "y", b, "z") + ")", "y^3*z",
                                  "y^2*z^2", "y*z^3"});
        CHECK(limit.equals_up_to(target, 8));

        // Fibers carry the one-point Hilbert function.
        auto fiber = specialize(f, Rational(1));
        CHECK(hilbert_function(fiber, 8).to_string() == "1,3,4,4,3,3,3,3,3");
        CHECK(hilbert_function(limit, 8).prefix == hilbert_function(fiber, 8).prefix);

        // The naive t = 0 fiber is smaller: degree 3 drops from 6 to 5.
        auto naive = specialize(f, Rational(0));
        CHECK(naive.dim(3) == 5);
        CHECK(limit.dim(3) == 6);
        for (int d = 0; d <= 8; ++d)
            CHECK(limit.component(d).contains_subspace(naive.component(d)));
    }
}

TEST_CASE("one-point stratum 1: generic saturation is determinantal") {
    auto r = st3();
    int a = 1, b = 1;
    auto f = fam(r, {"x*y + t*y*(" + ab(a, "y", b, "z") + ")", "x*z", "y^3*z", "y^2*z^2",
                     "y*z^3"});
    auto it = Ideal<FQ>::from_generators(f.ring, f.gens);
    auto sat = saturate(it, 5);

    auto x = parse_element<FQ>(r, "x"), y = parse_element<FQ>(r, "y"),
         z = parse_element<FQ>(r, "z");
    auto zero = Element<FQ>(r);
    auto t = Element<FQ>::constant(r, FQ::t());
    std::vector<std::vector<Element<FQ>>> m{{x, y, zero},
                                            {-(Rational(a) * t) * y, y, z}};
    auto minors = minors_ideal(r, m, 2);
    CHECK(sat.equals_up_to(minors, 5));
    CHECK(hilbert_function(minors, 5).to_string() == "1,3,3,3,3,3");
    CHECK(sat.contains(parse_element<FQ>(r, "x*y + t*y^2")));
    CHECK(sat.contains(parse_element<FQ>(r, "y*z")));
}

TEST_CASE("one-point stratum 2: both pencils degenerate to their strata") {
    auto r = st3();
    for (auto [a, b] : {std::pair{1, 1}, std::pair{1, 2}, std::pair{2, 1}}) {
        CAPTURE(a);
        CAPTURE(b);
        auto f1 = fam(r, {"y*z + t*x*(" + ab(a, "x", b, "z") + ")", "x*y", "x^4", "x^3*z",
                          "x^2*z^2"});
        auto t1 = base_ideal({"y*z", "x*y", "x^2*(" + ab(a, "x", b, "z") + ")", "x^4", "x^3*z",
                              "x^2*z^2"});
        CHECK(flat_limit(f1, 8).equals_up_to(t1, 8));

        auto f2 = fam(r, {"x^2 + t*(" + ab(a, "y", b, "z") + ")*z", "x*y", "y^3*z", "y^2*z^2",
                          "y*z^3"});
        auto t2 = base_ideal({"x^2", "x*y", "y*z*(" + ab(a, "y", b, "z") + ")", "y^3*z",
                              "y^2*z^2", "y*z^3"});
        CHECK(flat_limit(f2, 8).equals_up_to(t2, 8));

        CHECK(hilbert_function(specialize(f1, Rational(1)), 8).to_string() == "1,3,4,4,3,3,3,3,3");
        CHECK(hilbert_function(specialize(f2, Rational(1)), 8).to_string() == "1,3,4,4,3,3,3,3,3");
    }
}

TEST_CASE("one-point stratum 3: irreducible-conic stratum degenerates correctly") {
    auto r = st3();
    for (auto [a, b] : {std::pair{1, 1}, std::pair{1, 2}, std::pair{2, 1}}) {
        CAPTURE(a);
        CAPTURE(b);
        std::string sa = std::to_string(a), sb = std::to_string(b);
        std::vector<std::string> gens{
            "x^2 + t*(" + sa + "*y^2 + " + sb + "*z*y)",
            "x*y - t*(" + sa + "*y*z + " + sb + "*z^2)"};
        for (const char* q : {"x^2", "x*y", "x*z", "y^2", "y*z", "z^2"})
            gens.push_back(std::string("(y^2 + x*z)*") + q);
        auto f = fam(r, gens);

        std::vector<std::string> tgt{"x^2", "x*y",
                                     "(y^2 + x*z)*(" + ab(a, "y", b, "z") + ")"};
        for (const char* q : {"y^2", "y*z", "z^2"})
            tgt.push_back(std::string("(y^2 + x*z)*") + q);
        CHECK(flat_limit(f, 8).equals_up_to(base_ideal(tgt), 8));
        CHECK(hilbert_function(specialize(f, Rational(1)), 8).to_string() == "1,3,4,4,3,3,3,3,3");
    }
}

TEST_CASE("one-point stratum 4: double-line stratum degenerates correctly") {
    auto r = st3();
    for (auto [a, b] : {std::pair{1, 1}, std::pair{1, 2}, std::pair{2, 1}}) {
        CAPTURE(a);
        CAPTURE(b);
        auto f = fam(r, {"x^2 + t*y*(" + ab(a, "y", b, "z") + ")", "x*y", "y^4", "y^3*z",
                         "y^2*z^2"});
        auto tgt = base_ideal({"x^2", "x*y", "y^2*(" + ab(a, "y", b, "z") + ")", "y^4", "y^3*z",
                               "y^2*z^2"});
        CHECK(flat_limit(f, 8).equals_up_to(tgt, 8));
        CHECK(hilbert_function(specialize(f, Rational(1)), 8).to_string() == "1,3,4,4,3,3,3,3,3");
    }
}
