#pragma once

#include <cstdint>

#include "dualrep/field.hpp"

namespace dualrep {

/* xorshift64* generator; avoids std distributions so streams are identical
   across platforms for a given seed */
class Rng {
public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t next();
    std::int64_t below(std::int64_t n); /* uniform-ish in [0, n) */
    Scalar field_scalar(const Field& f);
    Scalar nonzero_scalar(const Field& f);

private:
    std::uint64_t state_;
};

} // namespace dualrep
