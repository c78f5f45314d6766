#pragma once

#include <cstdint>
#include <numeric>

#include "qsym/errors.hpp"

namespace qsym {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer addition overflow");
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer subtraction overflow");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer multiplication overflow");
    return r;
}

/// lcm of two positive integers, overflow checked.
inline std::int64_t checked_lcm(std::int64_t a, std::int64_t b) {
    const std::int64_t g = std::gcd(a, b);
    return checked_mul(a / g, b);
}

}  // namespace qsym
