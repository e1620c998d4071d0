// Field contexts and Eigen glue for the exact scalar types.
//
// A field context carries the runtime data a bare scalar type cannot: the
// modulus for GF(p), the base field for K(t).  Contexts build literals, name
// the field for reports, and compare for compatibility checks.  NumTraits
// specializations let Eigen dense matrices range over all three scalars.
#ifndef LEXPOINT_SCALAR_HPP
#define LEXPOINT_SCALAR_HPP

#include <Eigen/Core>
#include <cstdint>
#include <string>

#include "lexpoint/errors.hpp"
#include "lexpoint/prime_field.hpp"
#include "lexpoint/rational.hpp"
#include "lexpoint/rational_function.hpp"

namespace lexpoint {

struct RationalField {
    using Scalar = Rational;
    std::string name() const { return "QQ"; }
    Scalar from_int(std::int64_t n) const { return Rational(n); }
    Scalar from_fraction(std::int64_t n, std::int64_t d) const { return Rational(n, d); }
    friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

struct PrimeField {
    using Scalar = GFp;
    std::int64_t p;

    explicit PrimeField(std::int64_t p_) : p(p_) {
        if (p < 3 || p % 2 == 0)
            throw UsageError("prime field modulus must be an odd prime, got " + std::to_string(p_));
        for (std::int64_t d = 3; d * d <= p; d += 2)
            if (p % d == 0)
                throw UsageError("prime field modulus must be prime, got " + std::to_string(p_));
    }

    std::string name() const { return "GF(" + std::to_string(p) + ")"; }
    Scalar from_int(std::int64_t n) const { return GFp(n, p); }
    friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p == b.p; }
};

template <typename Base>
struct FunctionField {
    using Scalar = RationalFunction<typename Base::Scalar>;
    Base base;

    explicit FunctionField(Base b) : base(std::move(b)) {}

    std::string name() const { return base.name() + "(t)"; }
    Scalar from_int(std::int64_t n) const { return Scalar(base.from_int(n)); }
    Scalar t() const { return Scalar::t(); }
    friend bool operator==(const FunctionField& a, const FunctionField& b) {
        return a.base == b.base;
    }
};

// Maps a scalar type to its field context type.
template <typename S>
struct FieldOf;
template <>
struct FieldOf<Rational> {
    using type = RationalField;
};
template <>
struct FieldOf<GFp> {
    using type = PrimeField;
};
template <typename K>
struct FieldOf<RationalFunction<K>> {
    using type = FunctionField<typename FieldOf<K>::type>;
};

template <typename S>
using FieldOfT = typename FieldOf<S>::type;

template <typename F>
inline constexpr bool is_function_field = false;
template <typename B>
inline constexpr bool is_function_field<FunctionField<B>> = true;

inline std::int64_t characteristic(const RationalField&) { return 0; }
inline std::int64_t characteristic(const PrimeField& f) { return f.p; }
template <typename B>
std::int64_t characteristic(const FunctionField<B>& f) {
    return characteristic(f.base);
}

} // namespace lexpoint

namespace Eigen {

template <>
struct NumTraits<lexpoint::Rational> {
    typedef lexpoint::Rational Real;
    typedef lexpoint::Rational NonInteger;
    typedef lexpoint::Rational Nested;
    typedef lexpoint::Rational Literal;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 30,
        MulCost = 30
    };
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
};

template <>
struct NumTraits<lexpoint::GFp> {
    typedef lexpoint::GFp Real;
    typedef lexpoint::GFp NonInteger;
    typedef lexpoint::GFp Nested;
    typedef lexpoint::GFp Literal;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 2,
        AddCost = 4,
        MulCost = 8
    };
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
};

template <typename K>
struct NumTraits<lexpoint::RationalFunction<K>> {
    typedef lexpoint::RationalFunction<K> Real;
    typedef lexpoint::RationalFunction<K> NonInteger;
    typedef lexpoint::RationalFunction<K> Nested;
    typedef lexpoint::RationalFunction<K> Literal;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 32,
        AddCost = 200,
        MulCost = 200
    };
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
};

} // namespace Eigen

namespace lexpoint {

// Dense matrix and vector aliases used throughout the kernel.
template <typename S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <typename S>
using Vec = Eigen::Matrix<S, Eigen::Dynamic, 1>;
template <typename S>
using RowVec = Eigen::Matrix<S, 1, Eigen::Dynamic>;

} // namespace lexpoint

#endif
