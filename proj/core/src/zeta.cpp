#include "zetaverify/zeta.hpp"

#include <cmath>
#include <string>

namespace zv {

namespace {

int ceil_log10(unsigned long n) {
    int d = 0;
    unsigned long v = 1;
    while (v < n) {
        v = (v > n / 10) ? n + 1 : v * 10;  // overflow-safe
        ++d;
    }
    return d;
}

// Terms needed so that 3*(3+sqrt 8)^-N, scaled by 1/(1-2^(1-s)) <= 2, stays
// below 10^-(digits+3).
long accelerated_terms(int digits) {
    constexpr double kLnRate = 1.7627471740390861;  // ln(3+sqrt 8)
    constexpr double kLn10 = 2.302585092994046;
    return static_cast<long>(std::ceil(((digits + 3) * kLn10 + std::log(6.0)) / kLnRate)) + 2;
}

// One pass of the Cohen--Villegas--Zagier acceleration of the eta series at
// working precision `work_digits`; the proven truncation bound is folded
// into the radius before returning.
PrecisionReal zeta_once(long s, int digits, int work_digits) {
    const long n_terms = accelerated_terms(digits);
    const int W = work_digits;

    PrecisionReal sqrt8 = sqrt(PrecisionReal::exact(8, W));
    PrecisionReal rate = PrecisionReal::exact(3, W) + sqrt8;     // 3+sqrt(8)
    PrecisionReal d = pow_int(rate, n_terms);
    d = (d + PrecisionReal::exact(1, W) / d) / PrecisionReal::exact(2, W);

    PrecisionReal b = -PrecisionReal::exact(1, W);
    PrecisionReal c = -d;
    PrecisionReal acc = PrecisionReal::exact(0, W);
    for (long k = 0; k < n_terms; ++k) {
        c = b - c;
        // a_k = (k+1)^-s
        PrecisionReal ak = PrecisionReal::exact(1, W) / pow_int(PrecisionReal::exact(k + 1, W), s);
        acc = acc + c * ak;
        // b <- b * (k+n)(k-n) / ((k+1/2)(k+1))
        b = b * PrecisionReal::exact(2 * (k + n_terms), W) * PrecisionReal::exact(k - n_terms, W)
              / (PrecisionReal::exact(2 * k + 1, W) * PrecisionReal::exact(k + 1, W));
    }
    PrecisionReal eta = acc / d;

    // zeta = eta / (1 - 2^(1-s))
    PrecisionReal denom = PrecisionReal::exact(1, W) - PrecisionReal::exact_pow2(1 - s, W);
    PrecisionReal zeta = eta / denom;

    // truncation: |eta - S_N| <= 3 (3+sqrt 8)^-N (totally monotone a_k)
    PrecisionReal trunc =
        PrecisionReal::exact(3, W) * (PrecisionReal::exact(1, W) / pow_int(rate, n_terms)) / denom;
    return zeta.padded(trunc);
}

} // namespace

PrecisionReal zeta_int(long s, int digits) {
    if (s < 2)
        throw DomainError("zeta_int: s must be an integer >= 2");
    if (digits < 1)
        throw DomainError("zeta_int: digits must be >= 1");

    const long n_terms = accelerated_terms(digits);
    const int base_work = digits + 10 + ceil_log10(static_cast<unsigned long>(n_terms) + 1);
    for (int factor = 1; factor <= 8; factor *= 2) {
        PrecisionReal z = zeta_once(s, digits, base_work * factor);
        if (z.radius_at_most_pow10(-digits))
            return z.with_context_digits(digits);
    }
    throw PrecisionNotAchieved("zeta_int(" + std::to_string(s) + ", " + std::to_string(digits) +
                               "): escalation cap (8x working precision) reached");
}

PrecisionReal zeta_series_oracle(long s, unsigned long terms, int working_digits) {
    if (s < 2)
        throw DomainError("zeta_series_oracle: s must be an integer >= 2");
    if (terms < 1)
        throw DomainError("zeta_series_oracle: terms must be >= 1");
    const int W = working_digits;

    PrecisionReal acc = PrecisionReal::exact(0, W);
    for (unsigned long k = 1; k <= terms; ++k) {
        acc = acc + PrecisionReal::exact(1, W) /
                        pow_int(PrecisionReal::exact(static_cast<long>(k), W), s);
    }
    // integral tail bound: sum_{k>N} k^-s <= N^(1-s)/(s-1)
    PrecisionReal tail =
        PrecisionReal::exact(1, W) /
        (pow_int(PrecisionReal::exact(static_cast<long>(terms), W), s - 1) *
         PrecisionReal::exact(s - 1, W));
    return acc.padded(tail);
}

PrecisionReal pi(int digits) {
    return PrecisionReal::pi(digits);
}

} // namespace zv
