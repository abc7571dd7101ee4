#pragma once

#include <string>
#include <vector>

#include "zetaverify/ball.hpp"
#include "zetaverify/rational_matrix.hpp"

namespace zv {

/// Three-way outcome of an error-bounded identity measurement.
enum class Verdict {
    HoldsWithinBound,   // 0 lies inside the residual ball
    FailsAtPrecision,   // |residual midpoint| > 10 x residual radius
    Inconclusive,       // everything in between, or evaluation failure
};

const char* to_string(Verdict v);

/// Classifies a residual ball. Deterministic in (midpoint, radius); exactly
/// one verdict applies. The factor-10 guard band between HOLDS and FAILS
/// keeps borderline numerics out of the FAILS bucket.
Verdict classify_residual(const PrecisionReal& residual);

/// One verification outcome: lhs and rhs enclosures, their difference, and
/// the verdict. `diagnostic` is non-empty only when evaluation itself failed
/// (then the verdict is Inconclusive).
struct IdentityReport {
    long n = 0;
    int digits = 0;
    PrecisionReal lhs;
    PrecisionReal rhs;
    PrecisionReal residual;
    Verdict verdict = Verdict::Inconclusive;
    std::string diagnostic;
};

/// Right side of the claim under test:
/// (1/(2n-1)) * sum_{p=1}^{2n-2} zeta(2p) zeta(4n-1-2p),
/// the summation limit coming from truncation_bound(n).
PrecisionReal rhs_sum(long n, int digits);

/// Measures zeta(4n-1) against rhs_sum(n). The claim is treated strictly as
/// a hypothesis: the verdict is whatever the enclosures support.
IdentityReport verify_identity(long n, int digits);

/// Calibration measurement of the classical (known-true) even-weight
/// convolution sum_{k=1}^{n-1} zeta(2k) zeta(2n-2k) = (n+1/2) zeta(2n),
/// run through the identical pipeline and verdict logic. A non-HOLDS result
/// here indicates an evaluator bug, never new mathematics.
IdentityReport euler_even_crosscheck(long n, int digits);

/// zeta(k)/pi^k for odd k >= 3; always in (0,1).
struct OddZetaRatio {
    long k = 0;
    PrecisionReal value;
};

OddZetaRatio odd_ratio(long k, int digits);

/// Normalized form of the claim: ratio(4n-1) vs
/// sum_p A_{2p}/(2n-1) * ratio(4n-1-2p). Its residual equals the
/// verify_identity residual divided by pi^(4n-1), which tests assert.
IdentityReport verify_ratio_recurrence(long n, int digits);

/// The (2n-2)x(2n-2) upper-triangular rational matrix whose first row is
/// (A_2/(2n-1), ..., A_{4n-4}/(2n-1)) and whose remaining rows are identity
/// rows, so that row 1 of (matrix)*(ratio vector) reproduces the normalized
/// recurrence and the other rows pass their inputs through.
RationalMatrix build_matrix(long n);

/// build_matrix(n) applied to (ratio(4n-3), ratio(4n-5), ..., ratio(3)).
std::vector<PrecisionReal> apply_matrix(long n, int digits);

} // namespace zv
