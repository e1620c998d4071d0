// Seeded rejection samplers for the parametrized families of ideals behind
// the component analyses, plus randomized validators for the quadric-space
// facts those analyses rest on.  All randomness flows through mt19937_64
// with modulo draws, so a seed determines the output on every platform.
//
// Every sampler re-verifies its defining predicates through the public
// kernel operations before returning; construction is never trusted.
#ifndef LEXPOINT_SAMPLE_HPP
#define LEXPOINT_SAMPLE_HPP

#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "lexpoint/exterior.hpp"
#include "lexpoint/hilbert.hpp"
#include "lexpoint/ideal.hpp"

namespace lexpoint {

// X3/Y3: quotient growth 1,3,4,4,3,3,... in three polynomial variables.
// Z4/PTS4: quotient growth 1,4,4,4,... in four polynomial variables.
// X5/Y5: quotient growth 1,5,7,2 in the five-variable exterior algebra.
enum class Locus { X3, Y3, X5, Y5, Z4, PTS4 };

inline std::string locus_name(Locus locus) {
    switch (locus) {
    case Locus::X3:
        return "X3";
    case Locus::Y3:
        return "Y3";
    case Locus::X5:
        return "X5";
    case Locus::Y5:
        return "Y5";
    case Locus::Z4:
        return "Z4";
    case Locus::PTS4:
        return "PTS4";
    }
    throw UsageError("unknown locus");
}

inline Locus locus_from_name(const std::string& name) {
    for (Locus l : {Locus::X3, Locus::Y3, Locus::X5, Locus::Y5, Locus::Z4, Locus::PTS4})
        if (locus_name(l) == name)
            return l;
    throw UsageError("unknown locus name: " + name);
}

// Dimension of the family's parameter space; a lower bound for the tangent
// dimension at any sample.
inline int locus_parameter_dimension(Locus locus) {
    switch (locus) {
    case Locus::X3:
    case Locus::Y3:
        return 8;
    case Locus::X5:
        return 14;
    case Locus::Y5:
        return 15;
    case Locus::Z4:
        return 14;
    case Locus::PTS4:
        return 12;
    }
    throw UsageError("unknown locus");
}

template <typename S>
struct Sample {
    Ideal<S> ideal;
    int attempts = 0;
    // Defining pieces keyed by role, for recoverability and uniqueness
    // checks downstream.
    std::map<std::string, std::vector<Element<S>>> parts;
};

// h-vector of the saturation, for ideals whose quotient is supported on
// three points: (1,2) and (1,1,1) are the two possible outcomes.
template <typename S>
HVector classify_three_points(const Ideal<S>& I, int max_d = 8) {
    HVector h = h_vector(hilbert_function(saturate(I, max_d), max_d));
    if (h.sum() != 3)
        throw UsageError("saturation does not define three points");
    return h;
}

namespace detail {

template <typename F>
typename F::Scalar random_scalar(const F& field, std::mt19937_64& rng) {
    if constexpr (std::is_same_v<F, PrimeField>)
        return field.from_int(
            static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(field.p)));
    else
        // Small draws keep 64-bit rational arithmetic inside its range
        // through the degree-window eliminations.
        return field.from_int(static_cast<std::int64_t>(rng() % 5) - 2);
}

// Generators are only defined up to scalar; over the rationals, clearing
// denominators and content keeps later eliminations in 64-bit range.
template <typename S>
Element<S> primitive_scale(const Element<S>& e) {
    if constexpr (std::is_same_v<S, Rational>) {
        if (e.is_zero())
            return e;
        std::int64_t l = 1;
        for (const auto& t : e.terms()) {
            std::int64_t step = t.c.den() / std::gcd(l, t.c.den());
            l = (Rational(l) * Rational(step)).num(); // range-checked product
        }
        std::int64_t g = 0;
        for (const auto& t : e.terms())
            g = std::gcd(g, (Rational(l) * t.c).num());
        return Rational(l, g) * e;
    } else {
        return e;
    }
}

template <typename S>
Element<S> random_form(const RingPtr<S>& ring, int d, std::mt19937_64& rng) {
    std::vector<typename Element<S>::Term> terms;
    for (const Monomial& m : monomial_basis(*ring, d)) {
        S c = random_scalar(ring->field, rng);
        if (!(c == S(0)))
            terms.push_back({m, c});
    }
    return Element<S>(ring, std::move(terms));
}

// Random combination of the rows of an echelon space of degree-d forms.
template <typename S>
Element<S> random_member(const RingPtr<S>& ring, int d, const Rref<S>& space,
                         std::mt19937_64& rng) {
    RowVec<S> acc(space.cols());
    acc.setZero();
    for (int r = 0; r < space.rank(); ++r)
        acc += random_scalar(ring->field, rng) * space.row(r);
    return primitive_scale(row_to_element(ring, monomial_basis(*ring, d), acc));
}

template <typename S>
Vec<S> random_point(const RingPtr<S>& ring, std::mt19937_64& rng) {
    while (true) {
        Vec<S> p(ring->n);
        bool nonzero = false;
        for (int i = 0; i < ring->n; ++i) {
            p(i) = random_scalar(ring->field, rng);
            if (!(p(i) == S(0)))
                nonzero = true;
        }
        if (nonzero)
            return p;
    }
}

template <typename S>
int span_rank(const RingPtr<S>& ring, int d, const std::vector<Element<S>>& forms) {
    auto basis = monomial_basis(*ring, d);
    Rref<S> span(static_cast<int>(basis.size()));
    for (const auto& f : forms)
        span.insert(element_to_row(basis, f));
    return span.rank();
}

template <typename S>
std::vector<Element<S>> component_elements(const Ideal<S>& I, int d) {
    auto basis = monomial_basis(*I.ring(), d);
    const Rref<S>& comp = I.component(d);
    std::vector<Element<S>> out;
    for (int r = 0; r < comp.rank(); ++r)
        out.push_back(primitive_scale(row_to_element(I.ring(), basis, comp.row(r))));
    return out;
}

// Two general quadrics of a three-point ideal with h-vector (1,2), plus the
// full quartic component.
template <typename S>
std::optional<Sample<S>> try_x3(const RingPtr<S>& ring, int max_d, std::mt19937_64& rng) {
    std::vector<Vec<S>> pts;
    for (int i = 0; i < 3; ++i)
        pts.push_back(random_point(ring, rng));
    Ideal<S> J = vanishing_ideal(ring, pts, max_d);
    HVector two{{1, 2}};
    if (!(h_vector(hilbert_function(J, max_d)) == two))
        return std::nullopt; // collapsed or collinear points

    Element<S> q1 = random_member(ring, 2, J.component(2), rng);
    Element<S> q2 = random_member(ring, 2, J.component(2), rng);
    if (span_rank(ring, 2, {q1, q2}) != 2)
        return std::nullopt;
    // The pair must cut out the points alone: complete-intersection growth
    // 1,3,4,4,4,... certifies codimension two.
    Ideal<S> pair = Ideal<S>::from_generators(ring, {q1, q2});
    for (int d = 2; d <= 5; ++d)
        if (pair.quotient_dim(d) != 4)
            return std::nullopt;

    std::vector<Element<S>> gens{q1, q2};
    for (auto& f : component_elements(J, 4))
        gens.push_back(std::move(f));
    Ideal<S> I = Ideal<S>::from_generators(ring, gens);
    if (!hilbert_function(I, max_d).matches(HfSpec{{1, 3, 4, 4, 3}, true}))
        return std::nullopt;
    if (!(classify_three_points(I, max_d) == two))
        return std::nullopt;

    Sample<S> out{std::move(I), 0, {}};
    out.parts["quadrics"] = {q1, q2};
    return out;
}

// Two quadric multiples of a linear form, one extra cubic from a collinear
// three-point ideal, plus the full quartic component.
template <typename S>
std::optional<Sample<S>> try_y3(const RingPtr<S>& ring, int max_d, std::mt19937_64& rng) {
    Element<S> l1 = random_form(ring, 1, rng);
    Element<S> c1 = random_form(ring, 3, rng);
    if (l1.is_zero() || c1.is_zero())
        return std::nullopt;
    if (Ideal<S>::from_generators(ring, {l1}).contains(c1))
        return std::nullopt;
    Ideal<S> J = Ideal<S>::from_generators(ring, {l1, c1});
    HVector line{{1, 1, 1}};
    if (!(h_vector(hilbert_function(J, max_d)) == line))
        return std::nullopt;

    Element<S> p1 = l1 * random_form(ring, 1, rng);
    Element<S> p2 = l1 * random_form(ring, 1, rng);
    if (span_rank(ring, 2, {p1, p2}) != 2)
        return std::nullopt;
    // c2 must be a cubic of J outside the span of linear multiples of p1, p2.
    auto basis3 = monomial_basis(*ring, 3);
    Rref<S> grown(static_cast<int>(basis3.size()));
    for (int v = 0; v < ring->n; ++v) {
        Element<S> var = Element<S>::variable(ring, v);
        grown.insert(element_to_row(basis3, var * p1));
        grown.insert(element_to_row(basis3, var * p2));
    }
    Element<S> c2 = random_member(ring, 3, J.component(3), rng);
    if (grown.contains(element_to_row(basis3, c2)))
        return std::nullopt;

    std::vector<Element<S>> gens{p1, p2, c2};
    for (auto& f : component_elements(J, 4))
        gens.push_back(std::move(f));
    Ideal<S> I = Ideal<S>::from_generators(ring, gens);
    if (!hilbert_function(I, max_d).matches(HfSpec{{1, 3, 4, 4, 3}, true}))
        return std::nullopt;
    if (!(classify_three_points(I, max_d) == line))
        return std::nullopt;

    Sample<S> out{std::move(I), 0, {}};
    out.parts["line"] = {l1};
    out.parts["products"] = {p1, p2};
    out.parts["cubic"] = {c2};
    return out;
}

// Six of the seven quadrics of a codimension-two linear ideal, its full
// cubic component, and one quartic that is regular modulo the linear ideal.
template <typename S>
std::optional<Sample<S>> try_z4(const RingPtr<S>& ring, int max_d, std::mt19937_64& rng) {
    Element<S> l1 = random_form(ring, 1, rng);
    Element<S> l2 = random_form(ring, 1, rng);
    if (span_rank(ring, 1, {l1, l2}) != 2)
        return std::nullopt;
    Ideal<S> plane = Ideal<S>::from_generators(ring, {l1, l2});

    // A 6-dimensional quadric subspace; it cannot acquire a common factor
    // (that would force dimension at most 4), so it stays codimension two.
    std::vector<Element<S>> quads;
    for (int i = 0; i < 6; ++i)
        quads.push_back(random_member(ring, 2, plane.component(2), rng));
    if (span_rank(ring, 2, quads) != 6)
        return std::nullopt;
    for (const auto& q : quads)
        if (!plane.contains(q))
            return std::nullopt;

    Element<S> quartic = random_form(ring, 4, rng);
    if (quartic.is_zero() || plane.contains(quartic))
        return std::nullopt;
    // Regularity within the window: the colon by the quartic changes nothing.
    if (!colon_by_element(plane, quartic, 6).equals_up_to(plane, 6))
        return std::nullopt;

    std::vector<Element<S>> gens = quads;
    for (auto& f : component_elements(plane, 3))
        gens.push_back(std::move(f));
    gens.push_back(quartic);
    Ideal<S> I = Ideal<S>::from_generators(ring, gens);
    if (!hilbert_function(I, max_d).matches(HfSpec{{1, 4}, true}))
        return std::nullopt;
    // The quadric part must be exactly the chosen subspace.
    if (I.dim(2) != 6)
        return std::nullopt;
    for (const auto& q : quads)
        if (!I.contains(q))
            return std::nullopt;

    Sample<S> out{std::move(I), 0, {}};
    out.parts["linear"] = {l1, l2};
    out.parts["quadrics"] = quads;
    out.parts["quartic"] = {quartic};
    return out;
}

// Four general points with the generic quotient growth 1,4,4,4,...
template <typename S>
std::optional<Sample<S>> try_pts4(const RingPtr<S>& ring, int max_d, std::mt19937_64& rng) {
    std::vector<Vec<S>> pts;
    for (int i = 0; i < 4; ++i)
        pts.push_back(random_point(ring, rng));
    Ideal<S> J = vanishing_ideal(ring, pts, max_d);
    if (!hilbert_function(J, max_d).matches(HfSpec{{1, 4}, true}))
        return std::nullopt;
    return Sample<S>{std::move(J), 0, {}};
}

// A pencil of quadrics with the common factor l1 plus one quadric of the
// form l1 ^ a + b ^ c, whose square is annihilated by l1.
template <typename S>
std::optional<Sample<S>> try_x5(const RingPtr<S>& ring, int max_d, std::mt19937_64& rng) {
    Element<S> l1 = random_form(ring, 1, rng);
    Element<S> l2 = random_form(ring, 1, rng);
    Element<S> l3 = random_form(ring, 1, rng);
    if (span_rank(ring, 1, {l1, l2, l3}) != 3)
        return std::nullopt;
    Element<S> q = l1 * random_form(ring, 1, rng) +
                   random_form(ring, 1, rng) * random_form(ring, 1, rng);
    Element<S> p1 = l1 * l2;
    Element<S> p2 = l1 * l3;
    if (span_rank(ring, 2, {p1, p2, q}) != 3)
        return std::nullopt;
    if (!(l1 * (q * q)).is_zero())
        return std::nullopt;

    Ideal<S> I = Ideal<S>::from_generators(ring, {p1, p2, q});
    if (I.dim(3) != 8)
        return std::nullopt;
    if (!hilbert_function(I, max_d).matches(HfSpec{{1, 5, 7, 2}, false}))
        return std::nullopt;

    Sample<S> out{std::move(I), 0, {}};
    out.parts["linear"] = {l1, l2, l3};
    out.parts["pencil"] = {p1, p2};
    out.parts["quadric"] = {q};
    return out;
}

// Three quadrics confined to the wedge square of a unique 4-space, with
// 7-dimensional cubic span, plus one cubic outside that span.
template <typename S>
std::optional<Sample<S>> try_y5(const RingPtr<S>& ring, int max_d, std::mt19937_64& rng) {
    std::vector<Element<S>> v;
    for (int i = 0; i < 4; ++i)
        v.push_back(random_form(ring, 1, rng));
    if (span_rank(ring, 1, v) != 4)
        return std::nullopt;
    std::vector<Element<S>> vv;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            vv.push_back(v[i] * v[j]);
    if (span_rank(ring, 2, vv) != 6)
        return std::nullopt;

    auto random_quadric = [&]() {
        Element<S> acc(ring);
        for (const auto& b : vv)
            acc = acc + random_scalar(ring->field, rng) * b;
        return acc;
    };
    std::vector<Element<S>> qs{random_quadric(), random_quadric(), random_quadric()};
    if (span_rank(ring, 2, qs) != 3)
        return std::nullopt;
    QuadricSpace<S> u = QuadricSpace<S>::from_elements(ring, qs);
    if (u_squared_zero(u))
        return std::nullopt; // would fit in the wedge square of a 3-space
    if (annihilator_space(u).size() != 1)
        return std::nullopt; // the enveloping 4-space must be unique
    auto envelope = envelope_space(u, 4);
    if (!envelope)
        return std::nullopt;
    auto basis1 = monomial_basis(*ring, 1);
    Rref<S> sampled(static_cast<int>(basis1.size()));
    Rref<S> recovered(static_cast<int>(basis1.size()));
    for (const auto& f : v)
        sampled.insert(element_to_row(basis1, f));
    for (const auto& f : *envelope)
        recovered.insert(element_to_row(basis1, f));
    if (!(sampled == recovered))
        return std::nullopt;

    Ideal<S> Q = Ideal<S>::from_generators(ring, qs);
    if (Q.dim(3) != 7)
        return std::nullopt;
    Element<S> c = random_form(ring, 3, rng);
    if (c.is_zero() || Q.component(3).contains(element_to_row(monomial_basis(*ring, 3), c)))
        return std::nullopt;

    Ideal<S> I = Ideal<S>::from_generators(ring, {qs[0], qs[1], qs[2], c});
    if (!hilbert_function(I, max_d).matches(HfSpec{{1, 5, 7, 2}, false}))
        return std::nullopt;

    Sample<S> out{std::move(I), 0, {}};
    out.parts["space"] = v;
    out.parts["quadrics"] = qs;
    out.parts["cubic"] = {c};
    return out;
}

} // namespace detail

// Draws from the named family until every defining predicate re-verifies,
// up to 50 attempts.  The attempt count is recorded in the sample.
template <typename S>
Sample<S> sample_locus(Locus locus, std::uint64_t seed, const FieldOfT<S>& field,
                       int max_d = -1) {
    RingPtr<S> ring;
    switch (locus) {
    case Locus::X3:
    case Locus::Y3:
        ring = make_ring<S>(RingKind::Polynomial, 3, field);
        break;
    case Locus::Z4:
    case Locus::PTS4:
        ring = make_ring<S>(RingKind::Polynomial, 4, field);
        break;
    default:
        ring = make_ring<S>(RingKind::Exterior, 5, field);
        break;
    }
    if (max_d < 0)
        max_d = ring->kind == RingKind::Exterior ? 5 : 8;

    std::mt19937_64 rng(seed);
    for (int attempt = 1; attempt <= 50; ++attempt) {
        std::optional<Sample<S>> got;
        try {
            switch (locus) {
            case Locus::X3:
                got = detail::try_x3(ring, max_d, rng);
                break;
            case Locus::Y3:
                got = detail::try_y3(ring, max_d, rng);
                break;
            case Locus::Z4:
                got = detail::try_z4(ring, max_d, rng);
                break;
            case Locus::PTS4:
                got = detail::try_pts4(ring, max_d, rng);
                break;
            case Locus::X5:
                got = detail::try_x5(ring, max_d, rng);
                break;
            case Locus::Y5:
                got = detail::try_y5(ring, max_d, rng);
                break;
            }
        } catch (const OverflowError&) {
            // A draw whose verification leaves 64-bit range cannot be
            // certified; discard it like any other rejection.
            got.reset();
        }
        if (got) {
            got->attempts = attempt;
            return std::move(*got);
        }
    }
    throw ComputeError("rejection sampling exhausted for locus " + locus_name(locus));
}

// Tallies of a randomized check; any counterexample is recorded verbatim.
struct TrialSummary {
    int requested = 0;
    int checked = 0;
    int filtered = 0;   // excluded by the statement's hypothesis
    int rejected = 0;   // never met the sampling preconditions
    int agree_true = 0; // equivalence checks: both sides true
    int agree_false = 0;
    std::vector<std::string> counterexamples;
    std::string note;

    bool pass() const { return counterexamples.empty(); }
};

enum class PencilFreeOutcome { Filtered, Holds, Fails };

inline std::string describe_generators(const std::vector<Element<GFp>>& gens) {
    std::string out;
    for (const auto& g : gens) {
        if (!out.empty())
            out += "; ";
        out += g.to_string();
    }
    return out;
}

// For one ideal with quotient growth 1,5,7,2: if no 2-dimensional subspace
// of the quadric part consists of rank <= 2 quadrics, the quadric part must
// fit inside the wedge square of a 4-dimensional space of linear forms.
inline PencilFreeOutcome pencil_free_envelope_step(const Ideal<GFp>& I) {
    auto quadrics = detail::component_elements(I, 2);
    QuadricSpace<GFp> u = QuadricSpace<GFp>::from_elements(I.ring(), quadrics);
    if (!find_rank2_pencils(u).empty())
        return PencilFreeOutcome::Filtered;
    return envelope_space(u, 4) ? PencilFreeOutcome::Holds : PencilFreeOutcome::Fails;
}

namespace detail {

// Three random quadrics spanning the degree-2 part of a wedge square.
inline std::vector<Element<GFp>> confined_quadrics(const RingPtr<GFp>& ring, int space_dim,
                                                   std::mt19937_64& rng) {
    std::vector<Element<GFp>> v;
    for (int i = 0; i < space_dim; ++i)
        v.push_back(random_form(ring, 1, rng));
    if (span_rank(ring, 1, v) != space_dim)
        return {};
    std::vector<Element<GFp>> out;
    for (int k = 0; k < 3; ++k) {
        Element<GFp> acc(ring);
        for (int i = 0; i < space_dim; ++i)
            for (int j = i + 1; j < space_dim; ++j)
                acc = acc + random_scalar(ring->field, rng) * (v[i] * v[j]);
        out.push_back(acc);
    }
    return out;
}

// A random ideal with quotient growth 1,5,7,2.  Unconstrained quadric
// triples almost always generate the whole degree-3 part, so the proposal
// mixes in triples confined to a wedge square and triples containing a
// decomposable pencil; random cubics top the ideal up to growth 8.
inline std::optional<Ideal<GFp>> try_random_1572(const RingPtr<GFp>& ring,
                                                 std::mt19937_64& rng) {
    std::vector<Element<GFp>> gens;
    switch (rng() % 4) {
    case 0:
    case 1:
        gens = confined_quadrics(ring, 4, rng);
        break;
    case 2: {
        Element<GFp> l1 = random_form(ring, 1, rng);
        gens.push_back(l1 * random_form(ring, 1, rng));
        gens.push_back(l1 * random_form(ring, 1, rng));
        gens.push_back(l1 * random_form(ring, 1, rng) +
                       random_form(ring, 1, rng) * random_form(ring, 1, rng));
        break;
    }
    default:
        for (int i = 0; i < 3; ++i)
            gens.push_back(random_form(ring, 2, rng));
        break;
    }
    if (gens.empty() || span_rank(ring, 2, gens) != 3)
        return std::nullopt;
    auto basis3 = monomial_basis(*ring, 3);
    Ideal<GFp> Q = Ideal<GFp>::from_generators(ring, gens);
    if (Q.dim(3) > 8)
        return std::nullopt;
    Rref<GFp> span3 = Q.component(3);
    for (int draws = 0; span3.rank() < 8; ++draws) {
        if (draws >= 25)
            return std::nullopt;
        Element<GFp> c = random_form(ring, 3, rng);
        if (span3.insert(element_to_row(basis3, c)))
            gens.push_back(c);
    }
    Ideal<GFp> I = Ideal<GFp>::from_generators(ring, gens);
    if (!hilbert_function(I, 5).matches(HfSpec{{1, 5, 7, 2}, false}))
        return std::nullopt;
    return I;
}

} // namespace detail

// Samples ideals with quotient growth 1,5,7,2 and checks that every one
// whose quadric part has no rank-2 pencil admits an enveloping 4-space.
inline TrialSummary check_pencil_free_envelope(std::uint64_t seed, int trials,
                                               const PrimeField& field) {
    TrialSummary out;
    out.requested = trials;
    auto ring = make_ring<GFp>(RingKind::Exterior, 5, field);
    std::mt19937_64 rng(seed);
    for (int t = 0; t < trials; ++t) {
        auto I = detail::try_random_1572(ring, rng);
        if (!I) {
            ++out.rejected;
            continue;
        }
        switch (pencil_free_envelope_step(*I)) {
        case PencilFreeOutcome::Filtered:
            ++out.filtered;
            break;
        case PencilFreeOutcome::Holds:
            ++out.checked;
            break;
        case PencilFreeOutcome::Fails:
            ++out.checked;
            out.counterexamples.push_back(describe_generators(I->generators()));
            break;
        }
    }
    if (out.checked == 0)
        out.note = "no qualifying samples";
    return out;
}

namespace detail {

// Echelon span of the pairwise products of a list of linear forms.
template <typename S>
Rref<S> wedge_square_span(const RingPtr<S>& ring, const std::vector<Element<S>>& v) {
    auto basis = monomial_basis(*ring, 2);
    Rref<S> out(static_cast<int>(basis.size()));
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j)
            out.insert(element_to_row(basis, v[i] * v[j]));
    return out;
}

template <typename S>
bool in_span(const RingPtr<S>& ring, int d, const std::vector<Element<S>>& v,
             const Element<S>& e) {
    auto basis = monomial_basis(*ring, d);
    Rref<S> span(static_cast<int>(basis.size()));
    for (const auto& f : v)
        span.insert(element_to_row(basis, f));
    return span.contains(element_to_row(basis, e));
}

} // namespace detail

// Randomized checks of five facts about exterior quadrics in 5 variables;
// item selects the fact:
//   1: every pencil member has rank <= 2 iff the pencil has a common
//      linear factor
//   2: rank(q) <= 2 iff q^2 = 0
//   3: for q = l1^l2 of rank 2, q lies in the wedge square of V iff
//      l1 and l2 lie in V
//   4: for q = l1^l2 + l3^l4 of rank 4, q lies in the wedge square of V
//      iff all four factors lie in V
//   5: for q = l1^l2 + l3^l4 of rank 4, l^q^2 = 0 iff l lies in the span
//      of the four factors
inline TrialSummary check_quadric_fact(int item, std::uint64_t seed, int trials,
                                       const PrimeField& field) {
    if (item < 1 || item > 5)
        throw UsageError("quadric fact item must be 1..5");
    TrialSummary out;
    out.requested = trials;
    auto ring = make_ring<GFp>(RingKind::Exterior, 5, field);
    std::mt19937_64 rng(seed);
    auto lin = [&]() { return detail::random_form(ring, 1, rng); };

    for (int t = 0; t < trials; ++t) {
        if (item == 1) {
            Element<GFp> q1(ring), q2(ring);
            if (rng() % 2 == 0) {
                Element<GFp> l1 = lin(), l2 = lin(), l3 = lin();
                if (detail::span_rank(ring, 1, {l1, l2, l3}) != 3) {
                    ++out.rejected;
                    continue;
                }
                q1 = l1 * l2;
                q2 = l1 * l3;
            } else {
                q1 = detail::random_form(ring, 2, rng);
                q2 = detail::random_form(ring, 2, rng);
            }
            if (detail::span_rank(ring, 2, {q1, q2}) != 2) {
                ++out.rejected;
                continue;
            }
            // Enumerate the projective members of the pencil directly.
            bool all_low = quadric_rank(q2) <= 2;
            for (std::int64_t b = 0; b < field.p && all_low; ++b)
                all_low = quadric_rank(q1 + field.from_int(b) * q2) <= 2;
            auto pc = is_rank2_pencil(q1, q2);
            ++out.checked;
            bool witness_ok =
                !pc.is_rank2 || (!pc.witness.is_zero() && (pc.witness * q1).is_zero() &&
                                 (pc.witness * q2).is_zero());
            if (pc.is_rank2 != all_low || !witness_ok)
                out.counterexamples.push_back(describe_generators({q1, q2}));
            else if (pc.is_rank2)
                ++out.agree_true;
            else
                ++out.agree_false;
            continue;
        }
        if (item == 2) {
            Element<GFp> q = detail::random_form(ring, 2, rng);
            bool low = quadric_rank(q) <= 2;
            bool square = (q * q).is_zero();
            ++out.checked;
            if (low != square)
                out.counterexamples.push_back(describe_generators({q}));
            else if (low)
                ++out.agree_true;
            else
                ++out.agree_false;
            continue;
        }
        if (item == 3) {
            Element<GFp> l1 = lin(), l2 = lin();
            if (detail::span_rank(ring, 1, {l1, l2}) != 2) {
                ++out.rejected;
                continue;
            }
            Element<GFp> q = l1 * l2;
            std::vector<Element<GFp>> v =
                rng() % 2 == 0 ? std::vector<Element<GFp>>{l1, l2, lin()}
                               : std::vector<Element<GFp>>{lin(), lin(), lin()};
            if (detail::span_rank(ring, 1, v) != 3) {
                ++out.rejected;
                continue;
            }
            bool inside = detail::wedge_square_span(ring, v).contains(
                element_to_row(monomial_basis(*ring, 2), q));
            bool factors = detail::in_span(ring, 1, v, l1) && detail::in_span(ring, 1, v, l2);
            ++out.checked;
            if (inside != factors)
                out.counterexamples.push_back(describe_generators({q}));
            else if (inside)
                ++out.agree_true;
            else
                ++out.agree_false;
            continue;
        }
        // Items 4 and 5 share the rank-4 setup.
        std::vector<Element<GFp>> l{lin(), lin(), lin(), lin()};
        if (detail::span_rank(ring, 1, l) != 4) {
            ++out.rejected;
            continue;
        }
        Element<GFp> q = l[0] * l[1] + l[2] * l[3];
        if (quadric_rank(q) != 4) {
            ++out.rejected;
            continue;
        }
        if (item == 4) {
            std::vector<Element<GFp>> v =
                rng() % 2 == 0 ? l : std::vector<Element<GFp>>{lin(), lin(), lin(), lin()};
            if (detail::span_rank(ring, 1, v) != 4) {
                ++out.rejected;
                continue;
            }
            bool inside = detail::wedge_square_span(ring, v).contains(
                element_to_row(monomial_basis(*ring, 2), q));
            bool factors = true;
            for (const auto& li : l)
                factors = factors && detail::in_span(ring, 1, v, li);
            ++out.checked;
            if (inside != factors)
                out.counterexamples.push_back(describe_generators({q}));
            else if (inside)
                ++out.agree_true;
            else
                ++out.agree_false;
        } else {
            Element<GFp> l5(ring);
            if (rng() % 2 == 0) {
                for (const auto& li : l)
                    l5 = l5 + detail::random_scalar(ring->field, rng) * li;
            } else {
                l5 = lin();
            }
            bool kills = (l5 * (q * q)).is_zero();
            bool inside = detail::in_span(ring, 1, l, l5);
            ++out.checked;
            if (kills != inside)
                out.counterexamples.push_back(describe_generators({q, l5}));
            else if (kills)
                ++out.agree_true;
            else
                ++out.agree_false;
        }
    }
    if (out.checked == 0)
        out.note = "no qualifying samples";
    return out;
}

// Samples 3-dimensional quadric spaces whose cubic span has dimension at
// least 7 and checks: square zero <=> the space fits inside the wedge
// square of some 3-dimensional space of linear forms.  The proposal mixes
// wedge squares of 3-spaces (the square-zero side), triples confined to a
// 4-space, and unconstrained triples.
inline TrialSummary check_square_zero_envelope(std::uint64_t seed, int trials,
                                               const PrimeField& field) {
    TrialSummary out;
    out.requested = trials;
    auto ring = make_ring<GFp>(RingKind::Exterior, 5, field);
    std::mt19937_64 rng(seed);
    for (int t = 0; t < trials; ++t) {
        std::vector<Element<GFp>> qs;
        switch (rng() % 3) {
        case 0: {
            std::vector<Element<GFp>> w;
            for (int i = 0; i < 3; ++i)
                w.push_back(detail::random_form(ring, 1, rng));
            if (detail::span_rank(ring, 1, w) == 3)
                qs = {w[0] * w[1], w[0] * w[2], w[1] * w[2]};
            break;
        }
        case 1:
            qs = detail::confined_quadrics(ring, 4, rng);
            break;
        default:
            for (int i = 0; i < 3; ++i)
                qs.push_back(detail::random_form(ring, 2, rng));
            break;
        }
        if (qs.empty() || detail::span_rank(ring, 2, qs) != 3) {
            ++out.rejected;
            continue;
        }
        if (Ideal<GFp>::from_generators(ring, qs).dim(3) < 7) {
            ++out.filtered;
            continue;
        }
        QuadricSpace<GFp> u = QuadricSpace<GFp>::from_elements(ring, qs);
        bool square = u_squared_zero(u);
        bool envelope = envelope_space(u, 3).has_value();
        ++out.checked;
        if (square != envelope)
            out.counterexamples.push_back(describe_generators(qs));
        else if (square)
            ++out.agree_true;
        else
            ++out.agree_false;
    }
    if (out.checked == 0)
        out.note = "no qualifying samples";
    return out;
}

} // namespace lexpoint

#endif
