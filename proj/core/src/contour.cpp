#include "zetaverify/contour.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "zetaverify/zeta.hpp"

namespace zv {

namespace {

constexpr int kDepthCap = 40;

int ceil_log10(unsigned long n) {
    int d = 0;
    unsigned long v = 1;
    while (v < n) {
        v = (v > n / 10) ? n + 1 : v * 10;
        ++d;
    }
    return d;
}

using ComplexFn = std::function<PrecisionComplex(const PrecisionComplex&)>;

struct SimpsonState {
    const ComplexFn* f = nullptr;
    PrecisionComplex origin;      // segment start
    PrecisionComplex direction;   // segment end - start
    int digits = 0;
    double error_estimate = 0.0;
    long evaluations = 0;

    PrecisionComplex eval(double t) {
        ++evaluations;
        PrecisionComplex z = origin + PrecisionReal::from_double_exact(t, digits) * direction;
        return (*f)(z);
    }
};

PrecisionComplex simpson_value(const PrecisionComplex& fa, const PrecisionComplex& fm,
                               const PrecisionComplex& fb, double width, int digits) {
    PrecisionComplex s = fa + PrecisionReal::exact(4, digits) * fm + fb;
    PrecisionReal scale = PrecisionReal::from_double_exact(width, digits) /
                          PrecisionReal::exact(6, digits);
    return scale * s;
}

double midpoint_max_abs(const PrecisionComplex& z) {
    return std::max(std::fabs(z.re.midpoint_double()), std::fabs(z.im.midpoint_double()));
}

// Classic adaptive Simpson with Richardson correction. All interval
// endpoints are dyadic doubles (exact), so midpoints stay exact through the
// depth cap. `budget` is the allowed discretization error for [tl, tr].
PrecisionComplex simpson_adapt(SimpsonState& st, double tl, double tr,
                               const PrecisionComplex& fa, const PrecisionComplex& fm,
                               const PrecisionComplex& fb, const PrecisionComplex& whole,
                               double budget, int depth) {
    const double tm = 0.5 * (tl + tr);
    const double tlm = 0.5 * (tl + tm);
    const double trm = 0.5 * (tm + tr);
    PrecisionComplex flm = st.eval(tlm);
    PrecisionComplex frm = st.eval(trm);
    PrecisionComplex left = simpson_value(fa, flm, fm, tm - tl, st.digits);
    PrecisionComplex right = simpson_value(fm, frm, fb, tr - tm, st.digits);
    PrecisionComplex sum = left + right;
    PrecisionComplex delta = sum - whole;
    const double est = midpoint_max_abs(delta) / 15.0;
    if (est <= budget) {
        st.error_estimate += est;
        PrecisionComplex correction =
            PrecisionReal::exact(1, st.digits) / PrecisionReal::exact(15, st.digits) * delta;
        return sum + correction;
    }
    if (depth >= kDepthCap)
        throw QuadratureNoConverge("adaptive Simpson: depth cap " + std::to_string(kDepthCap) +
                                   " reached before meeting the error budget");
    return simpson_adapt(st, tl, tm, fa, flm, fm, left, budget / 2, depth + 1) +
           simpson_adapt(st, tm, tr, fm, frm, fb, right, budget / 2, depth + 1);
}

// Integral of f along the straight segment [a, b] with discretization
// budget `tol` (in the integral's own scale).
QuadratureOutcome integrate_segment(const ComplexFn& f, const PrecisionComplex& a,
                                    const PrecisionComplex& b, int digits, double tol) {
    SimpsonState st;
    st.f = &f;
    st.origin = a;
    st.direction = b - a;
    st.digits = digits;

    const double dir_abs = st.direction.abs_upper_double();
    if (dir_abs == 0.0)
        return {PrecisionComplex::zero(digits), 0.0, 0};

    const double param_budget = tol / dir_abs;
    PrecisionComplex fa = st.eval(0.0);
    PrecisionComplex fm = st.eval(0.5);
    PrecisionComplex fb = st.eval(1.0);
    PrecisionComplex whole = simpson_value(fa, fm, fb, 1.0, digits);
    PrecisionComplex integral = simpson_adapt(st, 0.0, 1.0, fa, fm, fb, whole, param_budget, 0);

    QuadratureOutcome out;
    out.value = st.direction * integral;
    out.error_estimate = st.error_estimate * dir_abs;
    out.evaluations = st.evaluations;
    return out;
}

} // namespace

Integrand::Integrand(long k_, int m_) : k(k_), m(m_) {
    if (k < 2)
        throw DomainError("Integrand: exponent k must be >= 2");
    if (m != 1 && m != 2)
        throw DomainError("Integrand: pole order m must be 1 or 2");
}

PrecisionComplex evaluate_integrand(const Integrand& g, const PrecisionComplex& z) {
    const int digits = std::max(z.re.context_digits(), z.im.context_digits());
    try {
        PrecisionComplex ez = exp(z);
        PrecisionComplex one = PrecisionComplex::exact(1, 0, digits);
        PrecisionComplex den = ez - one;
        if (g.m == 2)
            den = den * den;
        PrecisionComplex denom_total = pow_int(z, g.k) * den;
        PrecisionComplex numer = (g.m == 2) ? ez : one;
        return numer / denom_total;
    } catch (const DivisorStraddlesZero&) {
        throw PoleProximity("evaluate_integrand: denominator ball straddles zero (pole too close)");
    }
}

PrecisionComplex residue_sum(long k, long poles, int digits) {
    if (k < 2)
        throw DomainError("residue_sum: k must be >= 2");
    if (poles < 1)
        throw InvalidN("residue_sum: P must be >= 1");
    const int W = digits + 10 + ceil_log10(static_cast<unsigned long>(poles) + 1);
    PrecisionReal two_pi = PrecisionReal::exact(2, W) * PrecisionReal::pi(W);
    PrecisionComplex two_pi_i(PrecisionReal::exact(0, W), two_pi);
    PrecisionComplex acc = PrecisionComplex::zero(W);
    for (long p = 1; p <= poles; ++p) {
        PrecisionComplex pole(PrecisionReal::exact(0, W), two_pi * PrecisionReal::exact(p, W));
        acc = acc + pow_int(pole, -k);
    }
    PrecisionComplex result = two_pi_i * acc;
    return {result.re.with_context_digits(digits), result.im.with_context_digits(digits)};
}

QuadratureOutcome rectangle_integral(long k, long poles, double half_width,
                                     int digits, double tol) {
    Integrand g(k, 1);
    if (poles < 0)
        throw InvalidN("rectangle_integral: P must be >= 0");
    if (!(half_width >= 0.0))
        throw DomainError("rectangle_integral: half-width must be >= 0");
    if (!(tol > 0.0))
        throw DomainError("rectangle_integral: tol must be > 0");
    if (digits < 1)
        throw DomainError("rectangle_integral: digits must be >= 1");

    // Degenerate rectangle: all edges have zero length or cancel exactly.
    if (half_width == 0.0)
        return {PrecisionComplex::zero(digits), 0.0, 0};

    PrecisionReal x = PrecisionReal::from_double_exact(half_width, digits);
    PrecisionReal y_lo = PrecisionReal::pi(digits);
    PrecisionReal y_hi = PrecisionReal::exact(2 * poles + 1, digits) * PrecisionReal::pi(digits);
    PrecisionComplex c0(-x, y_lo);   // bottom left
    PrecisionComplex c1(x, y_lo);    // bottom right
    PrecisionComplex c2(x, y_hi);    // top right
    PrecisionComplex c3(-x, y_hi);   // top left

    ComplexFn f = [&g](const PrecisionComplex& z) { return evaluate_integrand(g, z); };
    const double edge_budget = tol / 4.0;

    QuadratureOutcome total{PrecisionComplex::zero(digits), 0.0, 0};
    const PrecisionComplex* corners[5] = {&c0, &c1, &c2, &c3, &c0};
    for (int e = 0; e < 4; ++e) {
        QuadratureOutcome edge = integrate_segment(f, *corners[e], *corners[e + 1], digits, edge_budget);
        total.value = total.value + edge.value;
        total.error_estimate += edge.error_estimate;
        total.evaluations += edge.evaluations;
    }
    return total;
}

PrecisionReal residue_tail_limit(long n, long poles, int digits) {
    if (n < 1)
        throw DomainError("residue_tail_limit: n must be >= 1");
    return residue_sum(2 * n + 1, poles, digits).re;
}

QuadratureOutcome path_check_fundamental(long n, const PrecisionComplex& a,
                                         const PrecisionComplex& b,
                                         int digits, double tol) {
    if (n < 1)
        throw DomainError("path_check_fundamental: n must be >= 1");
    if (!(tol > 0.0))
        throw DomainError("path_check_fundamental: tol must be > 0");
    Integrand g1(2 * n + 1, 1);
    Integrand g2(2 * n, 2);
    // f = F' = -2n z^-(2n+1)/(e^z-1) - z^-2n e^z/(e^z-1)^2
    ComplexFn f = [&](const PrecisionComplex& z) {
        return PrecisionReal::exact(-2 * n, digits) * evaluate_integrand(g1, z) -
               evaluate_integrand(g2, z);
    };
    return integrate_segment(f, a, b, digits, tol);
}

std::vector<ArcDecaySample> arc_decay_probe(long k, const std::vector<long>& odd_multiples,
                                            int samples_per_arc, int digits) {
    Integrand g(k, 1);
    if (samples_per_arc < 16)
        throw DomainError("arc_decay_probe: need at least 16 samples per arc");
    for (long m : odd_multiples)
        if (m < 1 || m % 2 == 0)
            throw DomainError("arc_decay_probe: radii must be odd multiples of pi");

    std::vector<ArcDecaySample> out;
    out.reserve(odd_multiples.size());
    PrecisionReal pi_ball = PrecisionReal::pi(digits);
    for (long m : odd_multiples) {
        PrecisionReal radius = PrecisionReal::exact(m, digits) * pi_ball;
        double sup = 0.0;
        for (int j = 0; j < samples_per_arc; ++j) {
            PrecisionReal theta = pi_ball * PrecisionReal::exact(j, digits) /
                                  PrecisionReal::exact(samples_per_arc - 1, digits);
            PrecisionComplex z(radius * cos(theta), radius * sin(theta));
            PrecisionComplex value = evaluate_integrand(g, z);
            sup = std::max(sup, (radius * value.abs()).abs_upper_double());
        }
        out.push_back({m, sup});
    }
    return out;
}

PrecisionReal geometric_series_check(const PrecisionComplex& z, long terms, int digits) {
    if (terms < 0)
        throw DomainError("geometric_series_check: M must be >= 0");
    if (!z.re.definitely_positive())
        throw DomainError("geometric_series_check: Re z must be certainly positive "
                          "(the expansion diverges for Re z <= 0)");
    PrecisionComplex ez = exp(z);
    PrecisionComplex one = PrecisionComplex::exact(1, 0, digits);
    PrecisionComplex lhs = ez / (ez - one);
    PrecisionComplex em = exp(-z);
    PrecisionComplex term = one;
    PrecisionComplex acc = one;     // m = 0 term
    for (long m = 1; m <= terms; ++m) {
        term = term * em;
        acc = acc + term;
    }
    return (lhs - acc).abs().with_context_digits(digits);
}

ContourReport contour_report(long k, long poles, double half_width, int digits, double tol) {
    ContourReport r;
    r.k = k;
    r.poles = poles;
    r.half_width = half_width;
    r.tol = tol;
    r.digits = digits;
    QuadratureOutcome quad = rectangle_integral(k, poles, half_width, digits, tol);
    r.quadrature = quad.value;
    r.error_estimate = quad.error_estimate;
    r.evaluations = quad.evaluations;
    r.residue = (poles >= 1) ? residue_sum(k, poles, digits) : PrecisionComplex::zero(digits);
    PrecisionComplex diff = r.quadrature - r.residue;
    r.discrepancy = midpoint_max_abs(diff);
    r.pass = r.discrepancy <= 10.0 * tol;
    return r;
}

} // namespace zv
