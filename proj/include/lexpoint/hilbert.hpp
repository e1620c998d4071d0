// Hilbert functions, h-vectors, growth bounds, and lex-segment ideals.
//
// Hilbert functions are recorded on the quotient: hf(d) = dim (R/I)_d.  A
// computed prefix may carry a tail: certified when the quotient provably
// stays constant (it hit zero, or the ring is exterior), heuristic when a
// trailing window of equal values is extrapolated.  Growth is bounded by
// Macaulay's theorem in polynomial rings and Kruskal-Katona in exterior
// algebras; admissible functions are exactly those realized by lex-segment
// ideals, which lex_ideal constructs degree by degree.
#ifndef LEXPOINT_HILBERT_HPP
#define LEXPOINT_HILBERT_HPP

#include <optional>
#include <string>
#include <vector>

#include "lexpoint/ideal.hpp"

namespace lexpoint {

struct TailInfo {
    long long value = 0;
    int from_degree = 0;
    bool certified = false;
};

struct HilbertFunction {
    std::vector<long long> prefix; // prefix[d] = dim (R/I)_d
    std::optional<TailInfo> tail;

    long long at(int d) const {
        if (d < static_cast<int>(prefix.size()))
            return prefix[static_cast<std::size_t>(d)];
        if (tail && d >= tail->from_degree)
            return tail->value;
        throw ComputeError("Hilbert function not known in degree " + std::to_string(d));
    }

    std::string to_string() const {
        std::string out;
        for (std::size_t i = 0; i < prefix.size(); ++i) {
            if (i)
                out += ",";
            out += std::to_string(prefix[i]);
        }
        return out;
    }

    // Agreement with a declared prefix: every prescribed value matches, and
    // computed values beyond the prescription follow its tail convention
    // (trailing '+' repeats the last value, otherwise zero).
    bool matches(const HfSpec& spec) const {
        for (std::size_t d = 0; d < prefix.size(); ++d) {
            long long want;
            if (d < spec.values.size())
                want = spec.values[d];
            else
                want = spec.eventually_constant ? spec.values.back() : 0;
            if (prefix[d] != want)
                return false;
        }
        return prefix.size() >= spec.values.size();
    }
};

// Quotient Hilbert function of I on degrees 0..max_d, window = number of
// trailing agreements required before extrapolating a heuristic tail.
template <typename S>
HilbertFunction hilbert_function(const Ideal<S>& ideal, int max_d, int window = 3) {
    HilbertFunction hf;
    const Ring<S>& ring = *ideal.ring();
    for (int d = 0; d <= max_d; ++d)
        hf.prefix.push_back(ideal.quotient_dim(d));
    for (int d = 0; d <= max_d; ++d) {
        if (hf.prefix[static_cast<std::size_t>(d)] == 0) {
            // Quotients are generated in degree 0, so once a graded piece
            // vanishes all later ones do.
            hf.tail = TailInfo{0, d, true};
            return hf;
        }
    }
    if (ring.kind == RingKind::Exterior) {
        hf.tail = TailInfo{0, ring.n + 1, true};
        return hf;
    }
    if (max_d >= window) {
        long long last = hf.prefix.back();
        bool stable = true;
        for (int d = max_d - window; d <= max_d; ++d)
            if (hf.prefix[static_cast<std::size_t>(d)] != last)
                stable = false;
        if (stable)
            hf.tail = TailInfo{last, max_d - window, false};
    }
    return hf;
}

struct HVector {
    std::vector<long long> values;

    long long sum() const {
        long long s = 0;
        for (long long v : values)
            s += v;
        return s;
    }

    std::string to_string() const {
        std::string out = "(";
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (i)
                out += ",";
            out += std::to_string(values[i]);
        }
        return out + ")";
    }

    friend bool operator==(const HVector& a, const HVector& b) { return a.values == b.values; }
};

// Numerator coefficients of the reduced Hilbert series.  A zero tail means
// the quotient is finite and the h-vector is the function itself; a positive
// constant tail corresponds to a one-dimensional quotient, whose h-vector is
// the sequence of first differences.
inline HVector h_vector(const HilbertFunction& hf) {
    if (!hf.tail)
        throw ComputeError("cannot form an h-vector without knowing the tail");
    std::vector<long long> vals;
    if (hf.tail->value == 0) {
        vals = hf.prefix;
    } else {
        vals.resize(hf.prefix.size());
        for (std::size_t d = 0; d < hf.prefix.size(); ++d)
            vals[d] = hf.prefix[d] - (d == 0 ? 0 : hf.prefix[d - 1]);
    }
    while (!vals.empty() && vals.back() == 0)
        vals.pop_back();
    return HVector{std::move(vals)};
}

// Greedy binomial expansion a = C(b_d, d) + C(b_{d-1}, d-1) + ...; the
// b_i are strictly decreasing and each term is maximal.
inline std::vector<std::pair<long long, long long>> macaulay_expansion(long long a, int d) {
    if (a < 0 || d < 1)
        throw UsageError("binomial expansion needs a >= 0 and d >= 1");
    std::vector<std::pair<long long, long long>> terms;
    long long rem = a;
    long long i = d;
    while (rem > 0 && i >= 1) {
        long long b = i;
        while (binomial(b + 1, i) <= rem)
            ++b;
        terms.push_back({b, i});
        rem -= binomial(b, i);
        --i;
    }
    if (rem != 0)
        throw ComputeError("binomial expansion failed");
    return terms;
}

// Macaulay bound: if dim (R/I)_d = a in a polynomial ring then
// dim (R/I)_{d+1} <= macaulay_next_bound(a, d).
inline long long macaulay_next_bound(long long a, int d) {
    long long bound = 0;
    for (auto [b, i] : macaulay_expansion(a, d))
        bound += binomial(b + 1, i + 1);
    return bound;
}

// Kruskal-Katona bound: the exterior-algebra analogue.
inline long long kk_next_bound(long long a, int d) {
    long long bound = 0;
    for (auto [b, i] : macaulay_expansion(a, d))
        bound += binomial(b, i + 1);
    return bound;
}

struct AdmissibilityReport {
    bool ok = true;
    int degree = -1;
    std::string reason;
};

namespace detail {

// Target quotient dimensions on 0..max_d implied by a declared prefix.
inline std::vector<long long> resolve_hf_targets(const HfSpec& spec, int max_d) {
    std::vector<long long> targets;
    for (int d = 0; d <= max_d; ++d) {
        if (d < static_cast<int>(spec.values.size()))
            targets.push_back(spec.values[static_cast<std::size_t>(d)]);
        else
            targets.push_back(spec.eventually_constant ? spec.values.back() : 0);
    }
    return targets;
}

} // namespace detail

// Checks hf(0) = 1, the ambient dimension bounds, and the degree-to-degree
// growth bounds for the ring kind.
template <typename S>
AdmissibilityReport is_admissible(const Ring<S>& ring, const HfSpec& spec) {
    auto fail = [](int d, const std::string& why) {
        return AdmissibilityReport{false, d, why};
    };
    if (spec.values.empty() || spec.values[0] != 1)
        return fail(0, "hf(0) must equal 1");
    int horizon = static_cast<int>(spec.values.size());
    if (ring.kind == RingKind::Exterior)
        horizon = std::max(horizon, ring.n + 1);
    std::vector<long long> vals = detail::resolve_hf_targets(spec, horizon);
    for (int d = 0; d < static_cast<int>(vals.size()); ++d) {
        if (vals[d] < 0 || vals[d] > graded_dimension(ring, d))
            return fail(d, "value exceeds the ambient graded dimension");
    }
    for (int d = 1; d + 1 <= static_cast<int>(vals.size()); ++d) {
        long long cur = vals[static_cast<std::size_t>(d)];
        long long nxt = (d + 1 < static_cast<int>(vals.size()))
                            ? vals[static_cast<std::size_t>(d + 1)]
                            : (spec.eventually_constant ? spec.values.back() : 0);
        if (cur == 0) {
            if (nxt != 0)
                return fail(d + 1, "function cannot revive after reaching zero");
            continue;
        }
        long long bound = ring.kind == RingKind::Polynomial ? macaulay_next_bound(cur, d)
                                                            : kk_next_bound(cur, d);
        if (nxt > bound)
            return fail(d + 1,
                        "growth " + std::to_string(cur) + " -> " + std::to_string(nxt) +
                            " in degree " + std::to_string(d + 1) + " exceeds the bound " +
                            std::to_string(bound));
    }
    return AdmissibilityReport{};
}

// The lex point: the unique lex-segment monomial ideal with the given
// quotient Hilbert function.  In each degree the component is spanned by the
// lex-largest monomials; closure under multiplication is revalidated on the
// fly, and for a polynomial ring with a constant tail the construction
// insists on a two-degree window with no new generators before the bound.
template <typename S>
Ideal<S> lex_ideal(const RingPtr<S>& ring, const HfSpec& spec) {
    AdmissibilityReport adm = is_admissible(*ring, spec);
    if (!adm.ok)
        throw UsageError("inadmissible Hilbert function '" + spec.to_string() + "' for " +
                         ring->spec_string() + " in degree " + std::to_string(adm.degree) + ": " +
                         adm.reason);
    int last = static_cast<int>(spec.values.size()) - 1;
    int max_d = ring->kind == RingKind::Exterior ? ring->n : std::max(8, 2 * last);
    std::vector<long long> targets = detail::resolve_hf_targets(spec, max_d);

    std::vector<Element<S>> gens;
    std::vector<Monomial> prev_segment;
    int last_gen_degree = -1;
    for (int d = 0; d <= max_d; ++d) {
        auto basis = monomial_basis(*ring, d);
        long long seg = graded_dimension(*ring, d) - targets[static_cast<std::size_t>(d)];
        if (seg < 0)
            throw ComputeError("negative lex segment size");
        std::vector<bool> reached(basis.size(), false);
        for (const Monomial& m : prev_segment) {
            for (int v = 0; v < ring->n; ++v) {
                Element<S> prod =
                    Element<S>::variable(ring, v) * Element<S>::monomial(ring, m);
                if (prod.is_zero())
                    continue;
                int idx = basis_index(basis, prod.leading_monomial());
                if (idx >= seg)
                    throw ComputeError("lex segments failed to close under multiplication");
                reached[static_cast<std::size_t>(idx)] = true;
            }
        }
        std::vector<Monomial> segment(basis.begin(), basis.begin() + seg);
        for (long long i = 0; i < seg; ++i) {
            if (!reached[static_cast<std::size_t>(i)]) {
                gens.push_back(Element<S>::monomial(ring, basis[static_cast<std::size_t>(i)]));
                last_gen_degree = d;
            }
        }
        prev_segment = std::move(segment);
    }
    if (ring->kind == RingKind::Polynomial && last_gen_degree > max_d - 2)
        throw ComputeError("lex ideal generators had not stabilized " +
                           std::to_string(max_d - last_gen_degree) +
                           " degrees before the bound " + std::to_string(max_d));
    return Ideal<S>::from_generators(ring, std::move(gens));
}

} // namespace lexpoint

#endif
