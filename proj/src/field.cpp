#include "dualrep/field.hpp"

namespace dualrep {

namespace {

bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
    // extended euclid; a in [1, p)
    std::int64_t old_r = a, r = p, old_s = 1, s = 0;
    while (r != 0) {
        std::int64_t q = old_r / r;
        std::int64_t t = old_r - q * r; old_r = r; r = t;
        t = old_s - q * s; old_s = s; s = t;
    }
    std::int64_t inv = old_s % p;
    return inv < 0 ? inv + p : inv;
}

}  // namespace

Field Field::fp(std::int64_t p) {
    if (!is_prime(p)) throw Error("BadModulus", "modulus " + std::to_string(p) + " is not prime");
    return Field(Kind::prime, p);
}

Scalar Field::zero() const {
    return kind_ == Kind::prime ? Scalar(std::int64_t{0}) : Scalar(Rational(0));
}

Scalar Field::one() const {
    return kind_ == Kind::prime ? Scalar(std::int64_t{1}) : Scalar(Rational(1));
}

Scalar Field::from_int(std::int64_t n) const {
    if (kind_ == Kind::prime) {
        std::int64_t r = n % p_;
        return Scalar(r < 0 ? r + p_ : r);
    }
    return Scalar(Rational(n));
}

Scalar Field::from_rational(const Rational& r) const {
    if (kind_ == Kind::rationals) return Scalar(r);
    using boost::multiprecision::cpp_int;
    cpp_int num = numerator(r) % p_, den = denominator(r) % p_;
    std::int64_t n = num.convert_to<std::int64_t>();
    std::int64_t d = den.convert_to<std::int64_t>();
    if (n < 0) n += p_;
    if (d < 0) d += p_;
    if (d == 0) throw Error("DivisionByZero", "denominator divisible by " + std::to_string(p_));
    return mul(Scalar(n), Scalar(mod_inverse(d, p_)));
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
    if (kind_ == Kind::prime) {
        std::int64_t r = std::get<0>(a) + std::get<0>(b);
        if (r >= p_) r -= p_;
        return Scalar(r);
    }
    return Scalar(std::get<1>(a) + std::get<1>(b));
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
    if (kind_ == Kind::prime) {
        std::int64_t r = std::get<0>(a) - std::get<0>(b);
        if (r < 0) r += p_;
        return Scalar(r);
    }
    return Scalar(std::get<1>(a) - std::get<1>(b));
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
    if (kind_ == Kind::prime) {
        __int128 r = static_cast<__int128>(std::get<0>(a)) * std::get<0>(b);
        return Scalar(static_cast<std::int64_t>(r % p_));
    }
    return Scalar(std::get<1>(a) * std::get<1>(b));
}

Scalar Field::neg(const Scalar& a) const {
    if (kind_ == Kind::prime) {
        std::int64_t v = std::get<0>(a);
        return Scalar(v == 0 ? 0 : p_ - v);
    }
    return Scalar(-std::get<1>(a));
}

Scalar Field::inv(const Scalar& a) const {
    if (is_zero(a)) throw Error("DivisionByZero", "inverse of zero");
    if (kind_ == Kind::prime) return Scalar(mod_inverse(std::get<0>(a), p_));
    return Scalar(Rational(1) / std::get<1>(a));
}

bool Field::is_zero(const Scalar& a) const {
    return kind_ == Kind::prime ? std::get<0>(a) == 0 : std::get<1>(a).is_zero();
}

bool Field::is_one(const Scalar& a) const {
    return kind_ == Kind::prime ? std::get<0>(a) == 1 : std::get<1>(a) == 1;
}

std::string Field::to_string(const Scalar& a) const {
    if (kind_ == Kind::prime) return std::to_string(std::get<0>(a));
    const Rational& r = std::get<1>(a);
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

Scalar Field::parse(const std::string& s) const {
    try {
        auto slash = s.find('/');
        if (slash == std::string::npos) {
            Rational r{boost::multiprecision::cpp_int(s)};
            return from_rational(r);
        }
        boost::multiprecision::cpp_int num(s.substr(0, slash)), den(s.substr(slash + 1));
        if (den == 0) throw Error("BadScalar", "zero denominator in '" + s + "'");
        return from_rational(Rational(num, den));
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        throw Error("BadScalar", "cannot parse scalar '" + s + "'");
    }
}

std::string Field::describe() const {
    return kind_ == Kind::prime ? "F" + std::to_string(p_) : "Q";
}

}  // namespace dualrep
