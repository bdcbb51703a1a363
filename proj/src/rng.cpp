#include "dualrep/rng.hpp"

namespace dualrep {

Rng::Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

std::uint64_t Rng::next() {
    state_ ^= state_ >> 12;
    state_ ^= state_ << 25;
    state_ ^= state_ >> 27;
    return state_ * 0x2545f4914f6cdd1dULL;
}

std::int64_t Rng::below(std::int64_t n) {
    if (n <= 0) return 0;
    return static_cast<std::int64_t>(next() % static_cast<std::uint64_t>(n));
}

Scalar Rng::field_scalar(const Field& f) {
    if (f.kind() == Field::Kind::prime) return f.from_int(below(f.modulus()));
    /* small integers keep rational arithmetic cheap */
    return f.from_int(below(9) - 4);
}

Scalar Rng::nonzero_scalar(const Field& f) {
    for (;;) {
        Scalar s = field_scalar(f);
        if (!f.is_zero(s)) return s;
    }
}

} // namespace dualrep
