#pragma once

#include <cstdint>
#include <string>

#include "covest/errors.hpp"

namespace covest::detail {

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out))
        throw CapacityError("count overflow: " + std::to_string(a) + " * " + std::to_string(b));
    return out;
}

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t out = 0;
    if (__builtin_add_overflow(a, b, &out))
        throw CapacityError("count overflow: " + std::to_string(a) + " + " + std::to_string(b));
    return out;
}

} // namespace covest::detail
