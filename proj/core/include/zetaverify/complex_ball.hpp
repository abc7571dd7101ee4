#pragma once

#include <string>

#include "zetaverify/ball.hpp"

namespace zv {

/// Complex ball: componentwise PrecisionReal enclosures.
struct PrecisionComplex {
    PrecisionReal re;
    PrecisionReal im;

    PrecisionComplex() = default;
    PrecisionComplex(PrecisionReal r, PrecisionReal i)
        : re(std::move(r)), im(std::move(i)) {}

    static PrecisionComplex exact(long r, long i, int digits = PrecisionReal::kDefaultDigits) {
        return {PrecisionReal::exact(r, digits), PrecisionReal::exact(i, digits)};
    }
    static PrecisionComplex zero(int digits = PrecisionReal::kDefaultDigits) {
        return exact(0, 0, digits);
    }

    bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }

    PrecisionComplex conj() const { return {re, -im}; }
    PrecisionComplex operator-() const { return {-re, -im}; }

    /// |re.mid| + |im.mid| style upper bound of |z| over the ball.
    double abs_upper_double() const;
    /// Ball for |z|.
    PrecisionReal abs() const;
    /// Ball for re^2 + im^2.
    PrecisionReal norm2() const;

    std::string to_string() const;
};

PrecisionComplex operator+(const PrecisionComplex& a, const PrecisionComplex& b);
PrecisionComplex operator-(const PrecisionComplex& a, const PrecisionComplex& b);
PrecisionComplex operator*(const PrecisionComplex& a, const PrecisionComplex& b);
PrecisionComplex operator*(const PrecisionReal& a, const PrecisionComplex& b);
/// Throws DivisorStraddlesZero when |b|^2's ball contains 0.
PrecisionComplex operator/(const PrecisionComplex& a, const PrecisionComplex& b);

PrecisionComplex exp(const PrecisionComplex& z);
PrecisionComplex pow_int(const PrecisionComplex& z, long k);
/// 1/z; throws DivisorStraddlesZero when z's ball contains 0.
PrecisionComplex reciprocal(const PrecisionComplex& z);

} // namespace zv
