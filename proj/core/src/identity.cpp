#include "zetaverify/identity.hpp"

#include <mpfr.h>

#include <string>

#include "zetaverify/bernoulli.hpp"
#include "zetaverify/zeta.hpp"

namespace zv {

namespace {

int ceil_log10(unsigned long n) {
    int d = 0;
    unsigned long v = 1;
    while (v < n) {
        v = (v > n / 10) ? n + 1 : v * 10;
        ++d;
    }
    return d;
}

int working_digits(int digits, long scale_hint) {
    return digits + 6 + ceil_log10(static_cast<unsigned long>(scale_hint) + 1);
}

} // namespace

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::HoldsWithinBound: return "HOLDS_WITHIN_BOUND";
        case Verdict::FailsAtPrecision: return "FAILS_AT_PRECISION";
        case Verdict::Inconclusive: return "INCONCLUSIVE";
    }
    return "INCONCLUSIVE";
}

Verdict classify_residual(const PrecisionReal& residual) {
    if (residual.contains_zero())
        return Verdict::HoldsWithinBound;
    // FAILS only beyond a factor-10 guard band: |mid| > 10 * rad.
    mpfr_t guard;
    mpfr_init2(guard, 64);
    mpfr_mul_ui(guard, residual.radius_raw(), 10, MPFR_RNDU);
    const bool fails = mpfr_cmpabs(residual.midpoint_raw(), guard) > 0;
    mpfr_clear(guard);
    return fails ? Verdict::FailsAtPrecision : Verdict::Inconclusive;
}

PrecisionReal rhs_sum(long n, int digits) {
    if (n < 2)
        throw InvalidN("rhs_sum: n must be >= 2");
    const long p_max = truncation_bound(n);
    const int W = working_digits(digits, 2 * n);
    PrecisionReal acc = PrecisionReal::exact(0, W);
    for (long p = 1; p <= p_max; ++p)
        acc = acc + zeta_int(2 * p, W) * zeta_int(4 * n - 1 - 2 * p, W);
    acc = acc / PrecisionReal::exact(2 * n - 1, W);
    return acc.with_context_digits(digits);
}

IdentityReport verify_identity(long n, int digits) {
    if (n < 2)
        throw InvalidN("verify_identity: n must be >= 2 (the claim is stated for n = 2, 3, 4, ...)");
    IdentityReport report;
    report.n = n;
    report.digits = digits;
    try {
        const int W = working_digits(digits, 2 * n);
        report.lhs = zeta_int(4 * n - 1, W).with_context_digits(digits);
        report.rhs = rhs_sum(n, digits);
        report.residual = report.lhs - report.rhs;
        report.verdict = classify_residual(report.residual);
    } catch (const PrecisionNotAchieved& e) {
        report.verdict = Verdict::Inconclusive;
        report.diagnostic = e.what();
    }
    return report;
}

IdentityReport euler_even_crosscheck(long n, int digits) {
    if (n < 2)
        throw InvalidN("euler_even_crosscheck: n must be >= 2");
    IdentityReport report;
    report.n = n;
    report.digits = digits;
    try {
        const int W = working_digits(digits, 2 * n);
        PrecisionReal acc = PrecisionReal::exact(0, W);
        for (long k = 1; k <= n - 1; ++k)
            acc = acc + zeta_int(2 * k, W) * zeta_int(2 * n - 2 * k, W);
        report.lhs = acc.with_context_digits(digits);
        // (n + 1/2) zeta(2n)
        report.rhs = (PrecisionReal::exact(2 * n + 1, W) * zeta_int(2 * n, W) /
                      PrecisionReal::exact(2, W))
                         .with_context_digits(digits);
        report.residual = report.lhs - report.rhs;
        report.verdict = classify_residual(report.residual);
    } catch (const PrecisionNotAchieved& e) {
        report.verdict = Verdict::Inconclusive;
        report.diagnostic = e.what();
    }
    return report;
}

OddZetaRatio odd_ratio(long k, int digits) {
    if (k < 3 || k % 2 == 0)
        throw DomainError("odd_ratio: k must be odd and >= 3");
    const int W = working_digits(digits, k);
    PrecisionReal value = zeta_int(k, W) / pow_int(PrecisionReal::pi(W), k);
    return {k, value.with_context_digits(digits)};
}

IdentityReport verify_ratio_recurrence(long n, int digits) {
    if (n < 2)
        throw InvalidN("verify_ratio_recurrence: n must be >= 2");
    IdentityReport report;
    report.n = n;
    report.digits = digits;
    try {
        const int W = working_digits(digits, 4 * n);
        report.lhs = odd_ratio(4 * n - 1, W).value.with_context_digits(digits);
        const long p_max = truncation_bound(n);
        const BigRational scale(2 * n - 1);
        PrecisionReal acc = PrecisionReal::exact(0, W);
        for (long p = 1; p <= p_max; ++p) {
            const BigRational coeff = a_constant(static_cast<std::size_t>(p)) / scale;
            acc = acc + PrecisionReal::from_rational(coeff, W) *
                            odd_ratio(4 * n - 1 - 2 * p, W).value;
        }
        report.rhs = acc.with_context_digits(digits);
        report.residual = report.lhs - report.rhs;
        report.verdict = classify_residual(report.residual);
    } catch (const PrecisionNotAchieved& e) {
        report.verdict = Verdict::Inconclusive;
        report.diagnostic = e.what();
    }
    return report;
}

RationalMatrix build_matrix(long n) {
    if (n < 2)
        throw InvalidN("build_matrix: n must be >= 2");
    const std::size_t dim = static_cast<std::size_t>(truncation_bound(n));
    RationalMatrix m(dim, dim);
    const BigRational scale(2 * n - 1);
    for (std::size_t j = 0; j < dim; ++j)
        m.at(0, j) = a_constant(j + 1) / scale;
    for (std::size_t i = 1; i < dim; ++i)
        m.at(i, i) = BigRational(1);
    return m;
}

std::vector<PrecisionReal> apply_matrix(long n, int digits) {
    RationalMatrix m = build_matrix(n);
    const std::size_t dim = m.rows();
    std::vector<PrecisionReal> x;
    x.reserve(dim);
    for (std::size_t j = 0; j < dim; ++j)
        x.push_back(odd_ratio(4 * n - 1 - 2 * static_cast<long>(j + 1), digits).value);
    std::vector<PrecisionReal> y;
    y.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        PrecisionReal acc = PrecisionReal::exact(0, digits);
        for (std::size_t j = 0; j < dim; ++j) {
            if (m.at(i, j).is_zero())
                continue;
            acc = acc + PrecisionReal::from_rational(m.at(i, j), digits) * x[j];
        }
        y.push_back(std::move(acc));
    }
    return y;
}

} // namespace zv
