#pragma once

#include <cstddef>
#include <vector>

#include "zetaverify/complex_ball.hpp"

namespace zv {

/// The meromorphic family g(z) = z^-k * e^(z(m-1)) / (e^z - 1)^m with
/// k >= 2 and pole order m in {1, 2}. Poles sit at z = 2*pi*i*p for nonzero
/// integer p, and at z = 0.
struct Integrand {
    long k;
    int m;

    Integrand(long k_, int m_);
};

/// g(z) on a ball that excludes all poles. Throws PoleProximity when the
/// denominator ball straddles zero.
PrecisionComplex evaluate_integrand(const Integrand& g, const PrecisionComplex& z);

/// 2*pi*i * sum_{p=1}^{P} (2*pi*i*p)^-k. For odd k the imaginary component
/// is exactly zero; for even k the real component is.
PrecisionComplex residue_sum(long k, long poles, int digits);

/// Output of an adaptive quadrature run. The ball radius covers arithmetic
/// rounding only; the Simpson discretization error is a heuristic estimate
/// and is reported separately, never folded into the ball.
struct QuadratureOutcome {
    PrecisionComplex value;
    double error_estimate = 0.0;
    long evaluations = 0;
};

/// Counterclockwise integral of g(k, m=1) over the rectangle with corners
/// (-X, i*pi) and (X, i*(2P+1)*pi). The horizontal edges sit at odd
/// multiples of pi, midway between poles, so the boundary is pole-free and
/// the residue theorem predicts residue_sum(k, P). X = 0 degenerates to an
/// exact zero (zero-length edges). Adaptive Simpson per edge with budget
/// tol/4 and depth cap 40; throws QuadratureNoConverge at the cap.
QuadratureOutcome rectangle_integral(long k, long poles, double half_width,
                                     int digits, double tol);

/// Real part of residue_sum(2n+1, P). As P grows this converges to
/// (-1)^n (2*pi)^-2n zeta(2n+1), with |partial - limit| below the integral
/// tail bound (2*pi)^-2n * P^-2n/(2n).
PrecisionReal residue_tail_limit(long n, long poles, int digits);

/// Quadrature of f = d/dz [ z^-2n/(e^z - 1) ] along the straight segment
/// [a, b] (which must avoid all poles). The fundamental theorem predicts
/// F(b) - F(a) with F = g(2n, m=1); callers compare against
/// evaluate_integrand at the endpoints.
QuadratureOutcome path_check_fundamental(long n, const PrecisionComplex& a,
                                         const PrecisionComplex& b,
                                         int digits, double tol);

/// One arc-decay sample: sup over sampled upper-half-circle points of
/// |R * g(z)| at radius R = odd_multiple * pi.
struct ArcDecaySample {
    long odd_multiple;      // R = odd_multiple * pi
    double sup_estimate;
};

/// Samples |R*g| on upper half circles of radius (2q+1)*pi. A sequence
/// decreasing in R supports (without proving) the vanishing-arc step.
/// Requires odd multiples and samples_per_arc >= 16.
std::vector<ArcDecaySample> arc_decay_probe(long k,
                                            const std::vector<long>& odd_multiples,
                                            int samples_per_arc,
                                            int digits = PrecisionReal::kDefaultDigits);

/// |e^z/(e^z-1) - sum_{m=0}^{M} e^-mz| for Re z > 0 (certainly), as a real
/// ball. Must stay below the geometric tail |e^-(M+1)z|/(1 - |e^-z|);
/// DomainError when the ball does not certify Re z > 0.
PrecisionReal geometric_series_check(const PrecisionComplex& z, long terms,
                                     int digits);

/// Quadrature vs residue-sum comparison for one (k, P, X) configuration.
struct ContourReport {
    long k = 0;
    long poles = 0;
    double half_width = 0.0;
    double tol = 0.0;
    int digits = 0;
    PrecisionComplex quadrature;
    PrecisionComplex residue;
    double discrepancy = 0.0;       // max component |quad.mid - residue.mid|
    double error_estimate = 0.0;    // accumulated Simpson estimate
    long evaluations = 0;
    bool pass = false;              // discrepancy <= 10 * tol
};

ContourReport contour_report(long k, long poles, double half_width,
                             int digits, double tol);

} // namespace zv
