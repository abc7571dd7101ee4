#pragma once

#include <cmath>
#include <string>

#include "zetaverify/ball.hpp"

namespace testutil {

inline zv::PrecisionReal ref(const char* decimal) {
    return zv::PrecisionReal::from_decimal(decimal, 60);
}

// |midpoint(a) - literal| <= tol
inline bool mid_within(const zv::PrecisionReal& a, const char* literal, double tol) {
    zv::PrecisionReal diff = a - ref(literal);
    return std::fabs(diff.midpoint_double()) <= tol;
}

// distance of two midpoints
inline double mid_distance(const zv::PrecisionReal& a, const zv::PrecisionReal& b) {
    return std::fabs((a - b).midpoint_double());
}

} // namespace testutil
