#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "zetaverify/errors.hpp"

namespace zv {

/// Exact arbitrary-size rational.
///
/// Invariants: the denominator is always positive and the fraction is always
/// in lowest terms, so equality is structural. All arithmetic is exact;
/// nothing in this class ever rounds. GMP's mpq layer does the heavy lifting
/// behind the fixed surface.
class BigRational {
public:
    BigRational() : q_(0) {}
    BigRational(long numerator) : q_(numerator) {}
    BigRational(long numerator, long denominator) {
        if (denominator == 0)
            throw DomainError("BigRational: zero denominator");
        q_ = mpq_class(numerator, denominator);
        q_.canonicalize();
    }
    explicit BigRational(const mpz_class& numerator) : q_(numerator) {}
    BigRational(const mpz_class& numerator, const mpz_class& denominator) {
        if (denominator == 0)
            throw DomainError("BigRational: zero denominator");
        q_ = mpq_class(numerator, denominator);
        q_.canonicalize();
    }
    explicit BigRational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    /// Parses "p/q" or "p" in base 10.
    static BigRational from_string(const std::string& text);

    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    BigRational operator-() const { return BigRational(mpq_class(-q_)); }
    BigRational inverse() const {
        if (is_zero())
            throw DomainError("BigRational: inverse of zero");
        return BigRational(mpq_class(1 / q_));
    }

    friend BigRational operator+(const BigRational& a, const BigRational& b) {
        return BigRational(mpq_class(a.q_ + b.q_));
    }
    friend BigRational operator-(const BigRational& a, const BigRational& b) {
        return BigRational(mpq_class(a.q_ - b.q_));
    }
    friend BigRational operator*(const BigRational& a, const BigRational& b) {
        return BigRational(mpq_class(a.q_ * b.q_));
    }
    friend BigRational operator/(const BigRational& a, const BigRational& b) {
        if (b.is_zero())
            throw DomainError("BigRational: division by zero");
        return BigRational(mpq_class(a.q_ / b.q_));
    }

    BigRational& operator+=(const BigRational& o) { q_ += o.q_; return *this; }
    BigRational& operator-=(const BigRational& o) { q_ -= o.q_; return *this; }
    BigRational& operator*=(const BigRational& o) { q_ *= o.q_; return *this; }
    BigRational& operator/=(const BigRational& o) {
        if (o.is_zero())
            throw DomainError("BigRational: division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend bool operator==(const BigRational& a, const BigRational& b) {
        return mpq_equal(a.q_.get_mpq_t(), b.q_.get_mpq_t()) != 0;
    }
    friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
        const int c = mpq_cmp(a.q_.get_mpq_t(), b.q_.get_mpq_t());
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    /// "p/q", or just "p" when the denominator is 1.
    std::string to_string() const;

private:
    mpq_class q_;
};

BigRational abs(const BigRational& r);

std::ostream& operator<<(std::ostream& os, const BigRational& r);

} // namespace zv
