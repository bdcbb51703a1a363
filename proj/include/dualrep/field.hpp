#pragma once
#include <cstdint>
#include <string>
#include <variant>
#include <boost/multiprecision/cpp_int.hpp>

#include "dualrep/error.hpp"

namespace dualrep {

using Rational = boost::multiprecision::cpp_rational;

/* A scalar is either a residue in [0, p) (prime field) or an exact rational.
 * Which alternative is active is determined by the Field owning the value. */
using Scalar = std::variant<std::int64_t, Rational>;

class Field {
public:
    enum class Kind { prime, rationals };

    static Field fp(std::int64_t p);  // throws BadModulus unless p is prime
    static Field rationals() { return Field(Kind::rationals, 0); }

    Kind kind() const { return kind_; }
    std::int64_t modulus() const { return p_; }

    bool operator==(const Field& o) const { return kind_ == o.kind_ && p_ == o.p_; }
    bool operator!=(const Field& o) const { return !(*this == o); }

    Scalar zero() const;
    Scalar one() const;
    Scalar from_int(std::int64_t n) const;
    Scalar from_rational(const Rational& r) const;  // prime field: reduces num/den mod p

    Scalar add(const Scalar& a, const Scalar& b) const;
    Scalar sub(const Scalar& a, const Scalar& b) const;
    Scalar mul(const Scalar& a, const Scalar& b) const;
    Scalar neg(const Scalar& a) const;
    Scalar inv(const Scalar& a) const;  // throws DivisionByZero
    Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

    bool is_zero(const Scalar& a) const;
    bool is_one(const Scalar& a) const;
    bool equal(const Scalar& a, const Scalar& b) const { return a == b; }

    std::string to_string(const Scalar& a) const;     // canonical: residue / "n" / "n/d"
    Scalar parse(const std::string& s) const;         // throws Error("BadScalar")

    std::string describe() const;  // "F32003" or "Q"

private:
    Field(Kind k, std::int64_t p) : kind_(k), p_(p) {}
    Kind kind_;
    std::int64_t p_;
};

}  // namespace dualrep
