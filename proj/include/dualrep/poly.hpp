#pragma once
#include <vector>

#include "dualrep/field.hpp"

namespace dualrep {

/* Coefficient list, index = degree, no trailing zeros (zero poly = {}). */
using Poly = std::vector<Scalar>;

Poly poly_trim(const Field& f, Poly p);
Poly poly_from_ints(const Field& f, std::initializer_list<std::int64_t> coeffs);
int poly_deg(const Poly& p);  // -1 for zero
Poly poly_add(const Field& f, const Poly& a, const Poly& b);
Poly poly_sub(const Field& f, const Poly& a, const Poly& b);
Poly poly_mul(const Field& f, const Poly& a, const Poly& b);
Poly poly_monic(const Field& f, const Poly& a);
/* division with remainder: returns {quotient, remainder} */
std::pair<Poly, Poly> poly_divmod(const Field& f, const Poly& a, const Poly& b);
Poly poly_mod(const Field& f, const Poly& a, const Poly& b);
Poly poly_gcd(const Field& f, Poly a, Poly b);  // monic
Poly poly_derivative(const Field& f, const Poly& a);
Scalar poly_eval(const Field& f, const Poly& a, const Scalar& x);
/* a(x)^e mod m(x), e an arbitrary-precision exponent */
Poly poly_powmod(const Field& f, Poly a, boost::multiprecision::cpp_int e, const Poly& m);

/* Pairwise-coprime factorization of a monic polynomial with multiplicities.
 * Over F_p (p > deg f) the parts are irreducible (distinct-degree plus
 * Cantor-Zassenhaus equal-degree splitting, deterministically seeded); over Q
 * only the squarefree split is performed, which is all the module splitter
 * needs to make progress.  Product of parts^mult == input. */
struct PolyFactor {
    Poly part;
    int multiplicity;
};
std::vector<PolyFactor> poly_coprime_factor(const Field& f, const Poly& p, std::uint64_t seed);

}  // namespace dualrep
