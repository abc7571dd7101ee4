#include "zetaverify/complex_ball.hpp"

#include <algorithm>

namespace zv {

namespace {

int digits_of(const PrecisionComplex& z) {
    return std::max(z.re.context_digits(), z.im.context_digits());
}

} // namespace

double PrecisionComplex::abs_upper_double() const {
    return abs().abs_upper_double();
}

PrecisionReal PrecisionComplex::abs() const {
    return hypot(re, im);
}

PrecisionReal PrecisionComplex::norm2() const {
    return re * re + im * im;
}

std::string PrecisionComplex::to_string() const {
    return "(" + re.to_string() + ") + (" + im.to_string() + ") i";
}

PrecisionComplex operator+(const PrecisionComplex& a, const PrecisionComplex& b) {
    return {a.re + b.re, a.im + b.im};
}

PrecisionComplex operator-(const PrecisionComplex& a, const PrecisionComplex& b) {
    return {a.re - b.re, a.im - b.im};
}

PrecisionComplex operator*(const PrecisionComplex& a, const PrecisionComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

PrecisionComplex operator*(const PrecisionReal& a, const PrecisionComplex& b) {
    return {a * b.re, a * b.im};
}

PrecisionComplex operator/(const PrecisionComplex& a, const PrecisionComplex& b) {
    PrecisionReal den = b.norm2();
    if (!den.definitely_positive())
        throw DivisorStraddlesZero("complex ball division: divisor ball contains zero");
    PrecisionComplex num = a * b.conj();
    return {num.re / den, num.im / den};
}

PrecisionComplex exp(const PrecisionComplex& z) {
    PrecisionReal er = exp(z.re);
    return {er * cos(z.im), er * sin(z.im)};
}

PrecisionComplex reciprocal(const PrecisionComplex& z) {
    PrecisionReal den = z.norm2();
    if (!den.definitely_positive())
        throw DivisorStraddlesZero("complex ball reciprocal: ball contains zero");
    return {z.re / den, (-z.im) / den};
}

PrecisionComplex pow_int(const PrecisionComplex& z, long k) {
    const int d = digits_of(z);
    if (k < 0)
        return reciprocal(pow_int(z, -k));
    if (k == 0)
        return PrecisionComplex::exact(1, 0, d);
    PrecisionComplex result = PrecisionComplex::exact(1, 0, d);
    PrecisionComplex base = z;
    unsigned long e = static_cast<unsigned long>(k);
    while (true) {
        if (e & 1UL)
            result = result * base;
        e >>= 1;
        if (e == 0)
            break;
        base = base * base;
    }
    return result;
}

} // namespace zv
