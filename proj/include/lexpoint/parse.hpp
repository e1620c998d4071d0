// Input grammars: field and ring specs, ring elements, Hilbert function
// prefixes, and ideal files.
//
// Element syntax is a small expression language: +, -, *, / (by constants),
// ^ and parentheses.  In polynomial rings ^ is exponentiation; in exterior
// rings a ^ between two positive-degree factors is the wedge product, so
// "e1^e2^e5" denotes a basis monomial.  The variable t names the parameter
// of a function field and is rejected over plain QQ or GF(p).
#ifndef LEXPOINT_PARSE_HPP
#define LEXPOINT_PARSE_HPP

#include <cctype>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lexpoint/element.hpp"
#include "lexpoint/errors.hpp"
#include "lexpoint/ring.hpp"

namespace lexpoint {

using FieldVariant =
    std::variant<RationalField, PrimeField, FunctionField<RationalField>, FunctionField<PrimeField>>;

inline FieldVariant parse_field_spec(const std::string& text) {
    if (text == "QQ")
        return RationalField{};
    if (text == "QQ(t)")
        return FunctionField<RationalField>(RationalField{});
    auto parse_modulus = [&](std::size_t end) -> std::int64_t {
        std::string digits = text.substr(3, end - 3);
        if (digits.empty())
            throw UsageError("bad field spec '" + text + "'");
        for (char ch : digits)
            if (!std::isdigit(static_cast<unsigned char>(ch)))
                throw UsageError("bad field spec '" + text + "'");
        if (digits.size() > 9)
            throw UsageError("prime field modulus too large in '" + text + "'");
        return std::stoll(digits);
    };
    if (text.rfind("GF(", 0) == 0 && text.size() > 4) {
        if (text.back() == ')' && text.find(')') == text.size() - 1)
            return PrimeField(parse_modulus(text.size() - 1));
        std::size_t close = text.find(')');
        if (close != std::string::npos && text.substr(close) == ")(t)")
            return FunctionField<PrimeField>(PrimeField(parse_modulus(close)));
    }
    throw UsageError("bad field spec '" + text + "': expected QQ, GF(p), QQ(t) or GF(p)(t)");
}

inline std::string field_spec_name(const FieldVariant& f) {
    return std::visit([](const auto& ctx) { return ctx.name(); }, f);
}

struct ParsedRingSpec {
    RingKind kind;
    int n;
    FieldVariant field;
};

// Grammar: ("S" | "E") ":" n "@" field-spec, e.g. "S:3@QQ", "E:5@GF(3)".
inline ParsedRingSpec parse_ring_spec(const std::string& text) {
    std::size_t colon = text.find(':');
    std::size_t at = text.find('@');
    if (colon == std::string::npos || at == std::string::npos || at < colon)
        throw UsageError("bad ring spec '" + text + "': expected S:n@field or E:n@field");
    std::string kind = text.substr(0, colon);
    std::string count = text.substr(colon + 1, at - colon - 1);
    if (kind != "S" && kind != "E")
        throw UsageError("bad ring spec '" + text + "': ring kind must be S or E");
    if (count.empty() || count.size() > 2 ||
        !std::all_of(count.begin(), count.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw UsageError("bad ring spec '" + text + "': variable count must be a small integer");
    int n = std::stoi(count);
    if (n < 1 || n > kMaxVars)
        throw UsageError("bad ring spec '" + text + "': variable count must be 1.." +
                         std::to_string(kMaxVars));
    return ParsedRingSpec{kind == "S" ? RingKind::Polynomial : RingKind::Exterior, n,
                          parse_field_spec(text.substr(at + 1))};
}

// Builds the ring for a parsed spec and invokes fn with the typed RingPtr.
template <typename Fn>
auto with_parsed_ring(const ParsedRingSpec& rs, Fn&& fn) {
    return std::visit(
        [&](const auto& field) {
            using F = std::decay_t<decltype(field)>;
            using S = typename F::Scalar;
            return fn(make_ring<S>(rs.kind, rs.n, field));
        },
        rs.field);
}

namespace detail {

struct Token {
    enum Kind { Number, Ident, Op, End } kind;
    std::string text;
    std::size_t pos;
};

inline std::vector<Token> tokenize_element(const std::string& src) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < src.size()) {
        char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j])))
                ++j;
            out.push_back({Token::Number, src.substr(i, j - i), i});
            i = j;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_'))
                ++j;
            out.push_back({Token::Ident, src.substr(i, j - i), i});
            i = j;
            continue;
        }
        if (std::string("+-*/^()").find(c) != std::string::npos) {
            out.push_back({Token::Op, std::string(1, c), i});
            ++i;
            continue;
        }
        throw UsageError("unexpected character '" + std::string(1, c) + "' at position " +
                         std::to_string(i));
    }
    out.push_back({Token::End, "", src.size()});
    return out;
}

template <typename S>
class ElementParser {
public:
    ElementParser(RingPtr<S> ring, const std::string& src)
        : ring_(std::move(ring)), src_(src), tokens_(tokenize_element(src)) {}

    Element<S> parse() {
        Element<S> e = expr();
        if (!at_end())
            fail("unexpected trailing input");
        return e;
    }

private:
    Element<S> expr() {
        bool negate = false;
        if (peek_op("+"))
            advance();
        else if (peek_op("-")) {
            advance();
            negate = true;
        }
        Element<S> acc = term();
        if (negate)
            acc = -acc;
        while (peek_op("+") || peek_op("-")) {
            bool minus = peek_op("-");
            advance();
            Element<S> rhs = term();
            acc = minus ? acc - rhs : acc + rhs;
        }
        return acc;
    }

    Element<S> term() {
        Element<S> acc = power();
        while (peek_op("*") || peek_op("/")) {
            bool divide = peek_op("/");
            advance();
            Element<S> rhs = power();
            if (divide) {
                if (rhs.is_zero())
                    fail("division by zero");
                if (!rhs.terms().front().m.is_unit() || rhs.terms().size() != 1)
                    fail("division is only defined by nonzero constants");
                acc = (S(1) / rhs.terms().front().c) * acc;
            } else {
                acc = acc * rhs;
            }
        }
        return acc;
    }

    Element<S> power() {
        Element<S> acc = atom();
        while (peek_op("^")) {
            advance();
            Element<S> rhs = atom();
            std::optional<int> k = constant_exponent(rhs);
            if (k) {
                Element<S> r = Element<S>::constant(ring_, S(1));
                for (int rep = 0; rep < *k; ++rep)
                    r = r * acc;
                acc = r;
            } else if (ring_->kind == RingKind::Exterior) {
                acc = acc * rhs;
            } else {
                fail("exponent must be a nonnegative integer");
            }
        }
        return acc;
    }

    Element<S> atom() {
        const Token& t = tokens_[pos_];
        if (t.kind == Token::Number) {
            advance();
            if (t.text.size() > 18)
                fail("integer literal too large");
            return Element<S>::constant(ring_, ring_->field.from_int(std::stoll(t.text)));
        }
        if (t.kind == Token::Ident) {
            advance();
            for (int i = 0; i < ring_->n; ++i)
                if (ring_->vars[i] == t.text)
                    return Element<S>::variable(ring_, i);
            if (t.text == "t") {
                if constexpr (is_function_field<typename Ring<S>::Field>)
                    return Element<S>::constant(ring_, ring_->field.t());
                else
                    fail("variable t requires a function field such as QQ(t)");
            }
            fail("unknown variable '" + t.text + "' in ring " + ring_->spec_string());
        }
        if (t.kind == Token::Op && t.text == "(") {
            advance();
            Element<S> inner = expr();
            if (!peek_op(")"))
                fail("expected ')'");
            advance();
            return inner;
        }
        fail("expected a number, variable or '('");
        return Element<S>(ring_); // unreachable
    }

    // Recognizes constants representing the integers 0..64 exactly, which is
    // how ^ distinguishes exponentiation from the exterior wedge.
    std::optional<int> constant_exponent(const Element<S>& e) {
        if (e.is_zero())
            return 0;
        if (e.terms().size() != 1 || !e.terms().front().m.is_unit())
            return std::nullopt;
        const S& c = e.terms().front().c;
        for (int k = 0; k <= 64; ++k)
            if (c == ring_->field.from_int(k))
                return k;
        return std::nullopt;
    }

    bool peek_op(const char* op) const {
        return tokens_[pos_].kind == Token::Op && tokens_[pos_].text == op;
    }
    bool at_end() const { return tokens_[pos_].kind == Token::End; }
    void advance() { ++pos_; }

    [[noreturn]] void fail(const std::string& msg) const {
        throw UsageError("cannot parse '" + src_ + "' at position " +
                         std::to_string(tokens_[pos_].pos) + ": " + msg);
    }

    RingPtr<S> ring_;
    std::string src_;
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

} // namespace detail

template <typename S>
Element<S> parse_element(const RingPtr<S>& ring, const std::string& text) {
    return detail::ElementParser<S>(ring, text).parse();
}

template <typename S>
std::vector<Element<S>> parse_elements(const RingPtr<S>& ring, const std::vector<std::string>& texts) {
    std::vector<Element<S>> out;
    for (const std::string& t : texts)
        out.push_back(parse_element(ring, t));
    return out;
}

// Splits "expr;expr;expr" as passed to --gens.
inline std::vector<std::string> split_generator_list(const std::string& text) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : text) {
        if (c == ';') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    std::vector<std::string> out;
    for (std::string& p : parts) {
        std::size_t a = p.find_first_not_of(" \t");
        if (a == std::string::npos)
            continue;
        std::size_t b = p.find_last_not_of(" \t");
        out.push_back(p.substr(a, b - a + 1));
    }
    return out;
}

// Hilbert function input: comma-separated quotient dimensions, optionally
// ending in '+' to mark an eventually constant tail, e.g. "1,3,4,4,3,3+".
struct HfSpec {
    std::vector<long long> values;
    bool eventually_constant = false;

    std::string to_string() const {
        std::string out;
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (i)
                out += ",";
            out += std::to_string(values[i]);
        }
        if (eventually_constant)
            out += "+";
        return out;
    }
};

inline HfSpec parse_hf_spec(const std::string& text) {
    HfSpec spec;
    std::string body = text;
    if (!body.empty() && body.back() == '+') {
        spec.eventually_constant = true;
        body.pop_back();
    }
    std::string cur;
    auto flush = [&]() {
        std::size_t a = cur.find_first_not_of(" \t");
        std::size_t b = cur.find_last_not_of(" \t");
        if (a == std::string::npos)
            throw UsageError("bad Hilbert function '" + text + "': empty entry");
        std::string digits = cur.substr(a, b - a + 1);
        if (digits.empty() || digits.size() > 9 ||
            !std::all_of(digits.begin(), digits.end(),
                         [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            throw UsageError("bad Hilbert function '" + text + "': entries must be small "
                             "nonnegative integers");
        spec.values.push_back(std::stoll(digits));
        cur.clear();
    };
    for (char c : body) {
        if (c == ',')
            flush();
        else
            cur += c;
    }
    flush();
    return spec;
}

// Ideal file: optional comments (# to end of line), a ring spec line, then
// one generator expression per line.
struct IdealFileData {
    ParsedRingSpec ring;
    std::string ring_text;
    std::vector<std::string> generator_texts;
};

inline IdealFileData parse_ideal_file_text(const std::string& content) {
    std::vector<std::string> lines;
    std::string cur;
    auto push_line = [&]() {
        std::size_t hash = cur.find('#');
        if (hash != std::string::npos)
            cur = cur.substr(0, hash);
        std::size_t a = cur.find_first_not_of(" \t\r");
        if (a != std::string::npos) {
            std::size_t b = cur.find_last_not_of(" \t\r");
            lines.push_back(cur.substr(a, b - a + 1));
        }
        cur.clear();
    };
    for (char c : content) {
        if (c == '\n')
            push_line();
        else
            cur += c;
    }
    push_line();
    if (lines.empty())
        throw UsageError("ideal file is empty");
    IdealFileData data{parse_ring_spec(lines[0]), lines[0], {}};
    data.generator_texts.assign(lines.begin() + 1, lines.end());
    return data;
}

} // namespace lexpoint

#endif
