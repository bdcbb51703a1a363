#include "dualrep/poly.hpp"

#include <algorithm>

namespace dualrep {

Poly poly_trim(const Field& f, Poly p) {
    while (!p.empty() && f.is_zero(p.back())) p.pop_back();
    return p;
}

Poly poly_from_ints(const Field& f, std::initializer_list<std::int64_t> coeffs) {
    Poly p;
    for (std::int64_t c : coeffs) p.push_back(f.from_int(c));
    return poly_trim(f, std::move(p));
}

int poly_deg(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Poly poly_add(const Field& f, const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), f.zero());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = f.add(r[i], b[i]);
    return poly_trim(f, std::move(r));
}

Poly poly_sub(const Field& f, const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), f.zero());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = f.sub(r[i], b[i]);
    return poly_trim(f, std::move(r));
}

Poly poly_mul(const Field& f, const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, f.zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (f.is_zero(a[i])) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
    }
    return poly_trim(f, std::move(r));
}

Poly poly_monic(const Field& f, const Poly& a) {
    if (a.empty()) return a;
    Scalar inv = f.inv(a.back());
    Poly r = a;
    for (auto& c : r) c = f.mul(c, inv);
    return r;
}

std::pair<Poly, Poly> poly_divmod(const Field& f, const Poly& a, const Poly& b) {
    if (b.empty()) throw Error("DivisionByZero", "polynomial division by zero");
    Poly rem = a, quot(a.size() > b.size() ? a.size() - b.size() + 1 : 1, f.zero());
    Scalar lead_inv = f.inv(b.back());
    while (rem.size() >= b.size() && !rem.empty()) {
        std::size_t shift = rem.size() - b.size();
        Scalar c = f.mul(rem.back(), lead_inv);
        quot[shift] = f.add(quot[shift], c);
        for (std::size_t i = 0; i < b.size(); ++i)
            rem[shift + i] = f.sub(rem[shift + i], f.mul(c, b[i]));
        rem = poly_trim(f, std::move(rem));
    }
    return {poly_trim(f, std::move(quot)), rem};
}

Poly poly_mod(const Field& f, const Poly& a, const Poly& b) { return poly_divmod(f, a, b).second; }

Poly poly_gcd(const Field& f, Poly a, Poly b) {
    while (!b.empty()) {
        Poly r = poly_mod(f, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(f, a);
}

Poly poly_derivative(const Field& f, const Poly& a) {
    Poly r;
    for (std::size_t i = 1; i < a.size(); ++i) r.push_back(f.mul(a[i], f.from_int(i)));
    return poly_trim(f, std::move(r));
}

Scalar poly_eval(const Field& f, const Poly& a, const Scalar& x) {
    Scalar r = f.zero();
    for (std::size_t i = a.size(); i-- > 0;) r = f.add(f.mul(r, x), a[i]);
    return r;
}

Poly poly_powmod(const Field& f, Poly a, boost::multiprecision::cpp_int e, const Poly& m) {
    Poly r = poly_from_ints(f, {1});
    a = poly_mod(f, a, m);
    while (e > 0) {
        if ((e & 1) != 0) r = poly_mod(f, poly_mul(f, r, a), m);
        a = poly_mod(f, poly_mul(f, a, a), m);
        e >>= 1;
    }
    return r;
}

namespace {

/* Yun squarefree decomposition; valid in characteristic 0 or p > deg. */
std::vector<PolyFactor> squarefree_parts(const Field& f, const Poly& p) {
    std::vector<PolyFactor> out;
    Poly a = poly_monic(f, p);
    Poly d = poly_derivative(f, a);
    Poly g = poly_gcd(f, a, d);
    Poly w = poly_divmod(f, a, g).first;
    Poly y = poly_divmod(f, d, g).first;
    int mult = 1;
    while (poly_deg(w) > 0) {
        Poly z = poly_sub(f, y, poly_derivative(f, w));
        Poly part = poly_gcd(f, w, z);
        if (poly_deg(part) > 0) out.push_back({part, mult});
        w = poly_divmod(f, w, part.empty() ? w : part).first;
        y = poly_divmod(f, z, part.empty() ? z : part).first;
        ++mult;
    }
    return out;
}

struct CzRng {
    std::uint64_t s;
    std::uint64_t next() {
        s ^= s << 13; s ^= s >> 7; s ^= s << 17;
        return s;
    }
};

/* Cantor-Zassenhaus equal-degree split of a squarefree product of degree-d
 * irreducibles over F_p, p odd. */
void equal_degree_split(const Field& f, const Poly& g, int d, CzRng& rng,
                        std::vector<Poly>& out) {
    if (poly_deg(g) == d) {
        out.push_back(poly_monic(f, g));
        return;
    }
    boost::multiprecision::cpp_int e =
        (boost::multiprecision::pow(boost::multiprecision::cpp_int(f.modulus()), d) - 1) / 2;
    for (;;) {
        Poly a(static_cast<std::size_t>(poly_deg(g)), f.zero());
        for (auto& c : a) c = f.from_int(static_cast<std::int64_t>(rng.next() % f.modulus()));
        a = poly_trim(f, std::move(a));
        if (poly_deg(a) < 1) continue;
        Poly b = poly_powmod(f, a, e, g);
        b = poly_sub(f, b, poly_from_ints(f, {1}));
        Poly h = poly_gcd(f, b, g);
        if (poly_deg(h) > 0 && poly_deg(h) < poly_deg(g)) {
            equal_degree_split(f, h, d, rng, out);
            equal_degree_split(f, poly_divmod(f, g, h).first, d, rng, out);
            return;
        }
    }
}

/* Distinct-degree then equal-degree factorization of a squarefree monic poly. */
std::vector<Poly> factor_squarefree_fp(const Field& f, Poly g, CzRng& rng) {
    std::vector<Poly> out;
    if (f.modulus() == 2) {
        // tiny-field fallback: peel linear roots, keep the rest as one part
        for (std::int64_t v = 0; v < 2; ++v) {
            Poly lin = poly_from_ints(f, {-v, 1});
            if (poly_deg(g) > 0 && f.is_zero(poly_eval(f, g, f.from_int(v)))) {
                out.push_back(lin);
                g = poly_divmod(f, g, lin).first;
            }
        }
        if (poly_deg(g) > 0) out.push_back(poly_monic(f, g));
        return out;
    }
    Poly x = poly_from_ints(f, {0, 1});
    Poly h = x;  // x^(p^d) mod g, advanced degree by degree
    for (int d = 1; poly_deg(g) >= 2 * d; ++d) {
        h = poly_powmod(f, h, f.modulus(), g);
        Poly part = poly_gcd(f, poly_sub(f, h, x), g);
        if (poly_deg(part) > 0) {
            equal_degree_split(f, part, d, rng, out);
            g = poly_divmod(f, g, part).first;
            h = poly_mod(f, h, g);
        }
    }
    if (poly_deg(g) > 0) out.push_back(poly_monic(f, g));
    return out;
}

}  // namespace

std::vector<PolyFactor> poly_coprime_factor(const Field& f, const Poly& p, std::uint64_t seed) {
    if (poly_deg(p) < 1) return {};
    std::vector<PolyFactor> sqf = squarefree_parts(f, p);
    if (f.kind() == Field::Kind::rationals) return sqf;
    CzRng rng{seed | 1};
    std::vector<PolyFactor> out;
    for (const auto& [part, mult] : sqf)
        for (Poly& irr : factor_squarefree_fp(f, part, rng)) out.push_back({std::move(irr), mult});
    return out;
}

}  // namespace dualrep
