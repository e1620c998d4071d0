// Ring elements: exact-coefficient linear combinations of monomials.
//
// Terms are kept sorted in lex-descending monomial order with no zero
// coefficients, so equal elements have identical representations.  Products
// respect the ring kind: polynomial multiplication adds exponents, exterior
// multiplication is the wedge with Koszul signs and square-zero variables.
#ifndef LEXPOINT_ELEMENT_HPP
#define LEXPOINT_ELEMENT_HPP

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "lexpoint/errors.hpp"
#include "lexpoint/ring.hpp"

namespace lexpoint {

template <typename S>
class Element {
public:
    struct Term {
        Monomial m;
        S c;
    };

    Element() : ring_(nullptr) {}
    explicit Element(RingPtr<S> ring) : ring_(std::move(ring)) {}
    Element(RingPtr<S> ring, std::vector<Term> terms) : ring_(std::move(ring)) {
        normalize(std::move(terms));
    }

    static Element constant(RingPtr<S> ring, const S& c) {
        return Element(ring, {Term{Monomial::unit(), c}});
    }

    static Element variable(RingPtr<S> ring, int i) {
        if (i < 0 || i >= ring->n)
            throw UsageError("variable index out of range");
        return Element(ring, {Term{Monomial::variable(i), S(1)}});
    }

    static Element monomial(RingPtr<S> ring, const Monomial& m, const S& c = S(1)) {
        return Element(ring, {Term{m, c}});
    }

    const RingPtr<S>& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // True when every term has the same total degree (zero counts as
    // homogeneous of any degree).
    bool is_homogeneous() const {
        for (const Term& t : terms_)
            if (t.m.degree() != terms_.front().m.degree())
                return false;
        return true;
    }

    // Degree of a homogeneous element; -1 for zero.
    int degree() const {
        if (terms_.empty())
            return -1;
        if (!is_homogeneous())
            throw ComputeError("degree of an inhomogeneous element");
        return terms_.front().m.degree();
    }

    const Monomial& leading_monomial() const {
        if (terms_.empty())
            throw ComputeError("leading monomial of zero");
        return terms_.front().m;
    }

    S coefficient(const Monomial& m) const {
        for (const Term& t : terms_) {
            if (t.m == m)
                return t.c;
            if (t.m < m)
                break;
        }
        return S(0);
    }

    Element operator-() const {
        Element r(*this);
        for (Term& t : r.terms_)
            t.c = -t.c;
        return r;
    }

    friend Element operator+(const Element& a, const Element& b) {
        check_same_ring(a, b);
        std::vector<Term> merged = a.terms_;
        merged.insert(merged.end(), b.terms_.begin(), b.terms_.end());
        return Element(a.ring_ ? a.ring_ : b.ring_, std::move(merged));
    }
    friend Element operator-(const Element& a, const Element& b) { return a + (-b); }

    friend Element operator*(const S& c, const Element& a) {
        Element r(a);
        for (Term& t : r.terms_)
            t.c = c * t.c;
        r.normalize(std::move(r.terms_));
        return r;
    }
    friend Element operator*(const Element& a, const S& c) { return c * a; }

    friend Element operator*(const Element& a, const Element& b) {
        check_same_ring(a, b);
        RingPtr<S> ring = a.ring_ ? a.ring_ : b.ring_;
        std::vector<Term> out;
        for (const Term& ta : a.terms_) {
            for (const Term& tb : b.terms_) {
                if (!ring || ring->kind == RingKind::Polynomial) {
                    Monomial p;
                    for (int i = 0; i < kMaxVars; ++i) {
                        int e = ta.m.exp(i) + tb.m.exp(i);
                        if (e > 200)
                            throw ComputeError("monomial degree exceeds supported range");
                        p.set_exp(i, e);
                    }
                    out.push_back(Term{p, ta.c * tb.c});
                } else {
                    bool overlap = false;
                    Monomial p;
                    for (int i = 0; i < kMaxVars; ++i) {
                        if (ta.m.exp(i) && tb.m.exp(i))
                            overlap = true;
                        p.set_exp(i, ta.m.exp(i) + tb.m.exp(i));
                    }
                    if (overlap)
                        continue;
                    int sign = wedge_sign(ta.m, tb.m);
                    out.push_back(Term{p, sign == 1 ? ta.c * tb.c : -(ta.c * tb.c)});
                }
            }
        }
        return Element(ring, std::move(out));
    }

    friend bool operator==(const Element& a, const Element& b) {
        if (a.terms_.size() != b.terms_.size())
            return false;
        for (std::size_t i = 0; i < a.terms_.size(); ++i)
            if (!(a.terms_[i].m == b.terms_[i].m) || !(a.terms_[i].c == b.terms_[i].c))
                return false;
        return true;
    }
    friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

    // Replace each variable by the corresponding image.  For exterior rings
    // the images must be homogeneous of degree 1, so that the map is an
    // algebra homomorphism.
    Element substitute(const std::vector<Element>& images) const {
        if (static_cast<int>(images.size()) != ring_->n)
            throw UsageError("substitution needs one image per variable");
        if (ring_->kind == RingKind::Exterior)
            for (const Element& im : images)
                if (!im.is_zero() && (!im.is_homogeneous() || im.degree() != 1))
                    throw UsageError("exterior substitution images must be linear forms");
        Element acc(ring_);
        for (const Term& t : terms_) {
            Element prod = constant(ring_, t.c);
            for (int i = 0; i < ring_->n; ++i)
                for (int rep = 0; rep < t.m.exp(i); ++rep)
                    prod = prod * images[i];
            acc = acc + prod;
        }
        return acc;
    }

    std::string to_string() const {
        if (terms_.empty())
            return "0";
        std::string out;
        for (const Term& t : terms_) {
            std::string cs = t.c.to_string();
            bool negated = false;
            if (cs.size() > 1 && cs[0] == '-' && cs.find(' ') == std::string::npos &&
                cs.find("/(") == std::string::npos) {
                negated = true;
                cs = cs.substr(1);
            }
            bool composite = cs.find(' ') != std::string::npos || cs.find('(') != std::string::npos;
            if (composite)
                cs = "(" + cs + ")";
            std::string body;
            if (t.m.is_unit())
                body = cs;
            else if (cs == "1")
                body = monomial_to_string(*ring_, t.m);
            else
                body = cs + "*" + monomial_to_string(*ring_, t.m);
            if (out.empty())
                out = negated ? "-" + body : body;
            else
                out += (negated ? " - " : " + ") + body;
        }
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const Element& e) {
        return os << e.to_string();
    }

private:
    static void check_same_ring(const Element& a, const Element& b) {
        if (a.ring_ && b.ring_ && *a.ring_ != *b.ring_)
            throw UsageError("elements belong to different rings");
    }

    void normalize(std::vector<Term> terms) {
        std::sort(terms.begin(), terms.end(),
                  [](const Term& a, const Term& b) { return a.m > b.m; });
        terms_.clear();
        for (Term& t : terms) {
            if (!terms_.empty() && terms_.back().m == t.m)
                terms_.back().c = terms_.back().c + t.c;
            else
                terms_.push_back(std::move(t));
        }
        std::erase_if(terms_, [](const Term& t) { return t.c == S(0); });
    }

    RingPtr<S> ring_;
    std::vector<Term> terms_;
};

// Convenience: i-th coordinate form, and the full list of variables.
template <typename S>
std::vector<Element<S>> ring_variables(const RingPtr<S>& ring) {
    std::vector<Element<S>> vars;
    for (int i = 0; i < ring->n; ++i)
        vars.push_back(Element<S>::variable(ring, i));
    return vars;
}

} // namespace lexpoint

#endif
