#pragma once

#include <mpfr.h>

#include <string>

#include "zetaverify/errors.hpp"
#include "zetaverify/rational.hpp"

namespace zv {

/// Arbitrary-precision real ball: an MPFR midpoint plus a nonnegative
/// absolute error radius. Every operation returns a ball that provably
/// encloses the exact result of applying the operation to any values inside
/// the operand balls, with the midpoint's own rounding error folded into the
/// radius.
///
/// `context_digits` records the decimal-digit request the value was built
/// for; "digits D" means absolute error <= 10^-D, not relative.
class PrecisionReal {
public:
    static constexpr int kDefaultDigits = 30;

    PrecisionReal();                                   // 0 +/- 0
    explicit PrecisionReal(long value, int digits = kDefaultDigits);
    PrecisionReal(const PrecisionReal& o);
    PrecisionReal(PrecisionReal&& o) noexcept;
    PrecisionReal& operator=(const PrecisionReal& o);
    PrecisionReal& operator=(PrecisionReal&& o) noexcept;
    ~PrecisionReal();

    static PrecisionReal exact(long value, int digits = kDefaultDigits);
    /// 2^e, exact.
    static PrecisionReal exact_pow2(long e, int digits = kDefaultDigits);
    /// Exact dyadic value of a finite double (no rounding).
    static PrecisionReal from_double_exact(double value, int digits = kDefaultDigits);
    static PrecisionReal from_rational(const BigRational& q, int digits);
    /// Base-10 literal; the radius covers the conversion rounding.
    static PrecisionReal from_decimal(const std::string& text, int digits);
    /// pi with radius <= 10^-digits.
    static PrecisionReal pi(int digits);

    int context_digits() const { return digits_; }
    PrecisionReal with_context_digits(int digits) const;

    bool is_exact() const;                 // radius == 0
    bool contains_zero() const;            // |mid| <= rad
    bool excludes_zero() const { return !contains_zero(); }
    bool definitely_positive() const;      // mid - rad > 0
    bool definitely_negative() const;
    int midpoint_sign() const;

    /// True when the other ball's midpoint lies inside this ball.
    bool contains_midpoint_of(const PrecisionReal& o) const;
    /// True when the two balls certainly overlap: |a.mid-b.mid| <= a.rad+b.rad
    /// evaluated with outward rounding on the left, inward on the right.
    bool certainly_intersects(const PrecisionReal& o) const;
    /// rad <= 10^exponent10, decided conservatively.
    bool radius_at_most_pow10(long exponent10) const;

    double midpoint_double() const;
    double radius_double() const;          // rounded up
    /// Upper bound of |value| over the ball, as a double (rounded up).
    double abs_upper_double() const;

    /// Scientific-notation midpoint with `significant` digits
    /// (0 = context digits).
    std::string midpoint_string(int significant = 0) const;
    /// Radius rounded up to 3 significant digits.
    std::string radius_string() const;
    /// "midpoint ± radius" with explicit exponents.
    std::string to_string() const;

    PrecisionReal operator-() const;
    friend PrecisionReal operator+(const PrecisionReal& a, const PrecisionReal& b);
    friend PrecisionReal operator-(const PrecisionReal& a, const PrecisionReal& b);
    friend PrecisionReal operator*(const PrecisionReal& a, const PrecisionReal& b);
    /// Throws DivisorStraddlesZero when b's ball contains 0.
    friend PrecisionReal operator/(const PrecisionReal& a, const PrecisionReal& b);

    friend PrecisionReal abs(const PrecisionReal& a);
    friend PrecisionReal sqrt(const PrecisionReal& a);      // DomainError if ball dips below 0
    friend PrecisionReal exp(const PrecisionReal& a);
    friend PrecisionReal sin(const PrecisionReal& a);
    friend PrecisionReal cos(const PrecisionReal& a);
    friend PrecisionReal pow_int(const PrecisionReal& a, long k);
    /// sqrt(a^2 + b^2); well-defined for balls containing zero.
    friend PrecisionReal hypot(const PrecisionReal& a, const PrecisionReal& b);

    /// Widens the radius by `extra` (test/diagnostic helper).
    PrecisionReal inflate(double extra) const;
    /// Widens the radius by an upper bound of |bound| over its ball; used to
    /// fold analytic truncation/tail bounds into a result.
    PrecisionReal padded(const PrecisionReal& bound) const;

    /// Raw accessors for modules that need direct MPFR interop.
    mpfr_srcptr midpoint_raw() const { return mid_; }
    mpfr_srcptr radius_raw() const { return rad_; }

private:
    friend struct BallAccess;
    mpfr_t mid_;
    mpfr_t rad_;
    int digits_;
};

} // namespace zv
