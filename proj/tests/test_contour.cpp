#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "support/frozen_values.hpp"
#include "support/test_utils.hpp"
#include "zetaverify/contour.hpp"
#include "zetaverify/zeta.hpp"

using zv::Integrand;
using zv::PrecisionComplex;
using zv::PrecisionReal;

namespace {

PrecisionComplex cpx(double re, double im, int digits = 30) {
    return {PrecisionReal::from_double_exact(re, digits),
            PrecisionReal::from_double_exact(im, digits)};
}

} // namespace

TEST_CASE("integrand validation") {
    CHECK_THROWS_AS(Integrand(1, 1), zv::DomainError);
    CHECK_THROWS_AS(Integrand(3, 3), zv::DomainError);
    CHECK_NOTHROW(Integrand(2, 1));
    CHECK_NOTHROW(Integrand(2, 2));
}

TEST_CASE("hand-evaluated integrand values") {
    // g(k=2, m=1) at i*pi: (i pi)^-2 / (e^{i pi} - 1) = 1/(2 pi^2)
    PrecisionComplex ipi(PrecisionReal::exact(0, 40), PrecisionReal::pi(40));
    PrecisionComplex v = zv::evaluate_integrand(Integrand(2, 1), ipi);
    CHECK(testutil::mid_within(v.re, frozen::kIntegrandAtIPi, 1e-35));
    CHECK(std::fabs(v.im.midpoint_double()) < 1e-35);

    // g(k=3, m=1) at 1: 1/(e - 1)
    PrecisionComplex one = PrecisionComplex::exact(1, 0, 40);
    PrecisionComplex w = zv::evaluate_integrand(Integrand(3, 1), one);
    CHECK(testutil::mid_within(w.re, frozen::kIntegrandAtOne, 1e-35));
    CHECK(std::fabs(w.im.midpoint_double()) < 1e-35);
}

TEST_CASE("a ball containing a pole raises PoleProximity") {
    // z = 2 pi i with a radius that straddles the pole of e^z - 1
    PrecisionReal two_pi = PrecisionReal::exact(2, 30) * PrecisionReal::pi(30);
    PrecisionComplex z(PrecisionReal::exact(0, 30).inflate(1e-3), two_pi.inflate(1e-3));
    CHECK_THROWS_AS(zv::evaluate_integrand(Integrand(3, 1), z), zv::PoleProximity);
    // the origin is also a pole (through z^-k)
    PrecisionComplex origin(PrecisionReal::exact(0, 30).inflate(1e-6),
                            PrecisionReal::exact(0, 30).inflate(1e-6));
    CHECK_THROWS_AS(zv::evaluate_integrand(Integrand(3, 1), origin), zv::PoleProximity);
}

TEST_CASE("conjugate symmetry g(conj z) = conj(g(z))") {
    std::mt19937 rng(31415u);
    std::uniform_real_distribution<double> re(0.5, 3.0);
    std::uniform_real_distribution<double> im(-2.5, 2.5);
    for (int i = 0; i < 25; ++i) {
        PrecisionComplex z = cpx(re(rng), im(rng), 40);
        for (int m = 1; m <= 2; ++m) {
            PrecisionComplex a = zv::evaluate_integrand(Integrand(3, m), z.conj());
            PrecisionComplex b = zv::evaluate_integrand(Integrand(3, m), z).conj();
            CHECK(a.re.certainly_intersects(b.re));
            CHECK(a.im.certainly_intersects(b.im));
            CHECK(testutil::mid_distance(a.re, b.re) < 1e-30);
            CHECK(testutil::mid_distance(a.im, b.im) < 1e-30);
        }
    }
}

TEST_CASE("residue sums: closed forms and parity") {
    PrecisionComplex r1 = zv::residue_sum(3, 1, 40);
    CHECK(testutil::mid_within(r1.re, frozen::kResidueSum3P1, 1e-38));
    CHECK(r1.im.midpoint_double() == 0.0);     // exactly real for odd k
    CHECK(r1.im.is_exact());

    PrecisionComplex r3 = zv::residue_sum(3, 3, 40);
    CHECK(testutil::mid_within(r3.re, frozen::kResidueSum3P3, 1e-38));

    for (long k : {5L, 7L}) {
        PrecisionComplex r = zv::residue_sum(k, 4, 30);
        CHECK(r.im.midpoint_double() == 0.0);
        CHECK(r.im.radius_at_most_pow10(-30));
    }
    // for even k the sum is purely imaginary instead
    PrecisionComplex re = zv::residue_sum(4, 2, 30);
    CHECK(re.re.midpoint_double() == 0.0);
    CHECK_THROWS_AS(zv::residue_sum(1, 1, 30), zv::DomainError);
    CHECK_THROWS_AS(zv::residue_sum(3, 0, 30), zv::InvalidN);
}

TEST_CASE("rectangle quadrature reproduces the residue theorem") {
    zv::QuadratureOutcome quad = zv::rectangle_integral(3, 1, 40.0, 30, 1e-12);
    PrecisionComplex res = zv::residue_sum(3, 1, 30);
    CHECK(testutil::mid_distance(quad.value.re, res.re) <= 1e-11);
    CHECK(std::fabs(quad.value.im.midpoint_double()) <= 1e-11);
    CHECK(quad.error_estimate <= 1e-12);
    CHECK(quad.evaluations > 100);
}

TEST_CASE("rectangle edge cases") {
    // degenerate half-width: zero-length edges
    zv::QuadratureOutcome degenerate = zv::rectangle_integral(3, 1, 0.0, 30, 1e-12);
    CHECK(degenerate.value.re.is_exact());
    CHECK(degenerate.value.re.midpoint_double() == 0.0);
    CHECK(degenerate.evaluations == 0);

    // pole-free band (P = 0): closed-contour integral vanishes
    zv::QuadratureOutcome band = zv::rectangle_integral(3, 0, 40.0, 30, 1e-12);
    CHECK(band.value.abs_upper_double() <= 1e-11);

    CHECK_THROWS_AS(zv::rectangle_integral(3, -1, 40.0, 30, 1e-12), zv::InvalidN);
    CHECK_THROWS_AS(zv::rectangle_integral(3, 1, 40.0, 30, 0.0), zv::DomainError);
    CHECK_THROWS_AS(zv::rectangle_integral(3, 1, -1.0, 30, 1e-12), zv::DomainError);
}

TEST_CASE("X-independence of the rectangle value") {
    zv::QuadratureOutcome narrow = zv::rectangle_integral(3, 1, 30.0, 30, 1e-12);
    zv::QuadratureOutcome wide = zv::rectangle_integral(3, 1, 50.0, 30, 1e-12);
    CHECK(testutil::mid_distance(narrow.value.re, wide.value.re) <= 2e-12);
    CHECK(testutil::mid_distance(narrow.value.im, wide.value.im) <= 2e-12);
}

TEST_CASE("unreachable tolerance raises QuadratureNoConverge") {
    CHECK_THROWS_AS(zv::rectangle_integral(3, 1, 40.0, 30, 1e-60), zv::QuadratureNoConverge);
}

TEST_CASE("residue tail limit converges at the proven rate") {
    PrecisionReal limit = testutil::ref(frozen::kResidueTailLimit1);
    double previous_error = 1e9;
    for (long P : {1L, 2L, 4L, 8L}) {
        PrecisionReal partial = zv::residue_tail_limit(1, P, 40);
        const double err = testutil::mid_distance(partial, limit);
        const double bound = 1.0 / (4 * M_PI * M_PI) / (2.0 * static_cast<double>(P) * P);
        CHECK(err <= bound);
        CHECK(err < previous_error);     // monotone decreasing in P
        previous_error = err;
    }
}

TEST_CASE("fundamental theorem on pole-free segments") {
    // real segment [1, 2], n = 1: quadrature equals F(2) - F(1)
    zv::QuadratureOutcome quad =
        zv::path_check_fundamental(1, cpx(1, 0, 40), cpx(2, 0, 40), 40, 1e-15);
    CHECK(testutil::mid_within(quad.value.re, frozen::kEndpointDiffN1, 1e-14));
    CHECK(std::fabs(quad.value.im.midpoint_double()) <= 1e-14);

    // zero-length segment
    zv::QuadratureOutcome zero =
        zv::path_check_fundamental(1, cpx(1, 0), cpx(1, 0), 30, 1e-12);
    CHECK(zero.value.re.midpoint_double() == 0.0);

    // vertical segment from 1 to 1 + i*pi
    PrecisionComplex top(PrecisionReal::exact(1, 40), PrecisionReal::pi(40));
    zv::QuadratureOutcome vert =
        zv::path_check_fundamental(1, cpx(1, 0, 40), top, 40, 1e-13);
    Integrand antider(2, 1);
    PrecisionComplex diff = zv::evaluate_integrand(antider, top) -
                            zv::evaluate_integrand(antider, cpx(1, 0, 40));
    CHECK(testutil::mid_distance(vert.value.re, diff.re) <= 1e-12);
    CHECK(testutil::mid_distance(vert.value.im, diff.im) <= 1e-12);
}

TEST_CASE("fundamental theorem property on random pole-free segments") {
    std::mt19937 rng(2718281u);
    std::uniform_real_distribution<double> re(0.5, 3.0);
    std::uniform_real_distribution<double> im(0.0, 3.0);
    std::uniform_int_distribution<long> enn(1, 3);
    for (int i = 0; i < 20; ++i) {
        const long n = enn(rng);
        PrecisionComplex a = cpx(re(rng), im(rng), 40);
        PrecisionComplex b = cpx(re(rng), im(rng), 40);
        const double tol = 1e-12;
        zv::QuadratureOutcome quad = zv::path_check_fundamental(n, a, b, 40, tol);
        Integrand antider(2 * n, 1);
        PrecisionComplex diff =
            zv::evaluate_integrand(antider, b) - zv::evaluate_integrand(antider, a);
        const double slack =
            tol + diff.re.radius_double() + diff.im.radius_double() +
            quad.value.re.radius_double() + quad.value.im.radius_double();
        CHECK(testutil::mid_distance(quad.value.re, diff.re) <= slack);
        CHECK(testutil::mid_distance(quad.value.im, diff.im) <= slack);
    }
}

TEST_CASE("quadrature over the mirrored segment conjugates the result") {
    std::mt19937 rng(1618033u);
    std::uniform_real_distribution<double> re(0.6, 2.5);
    std::uniform_real_distribution<double> im(0.2, 2.5);
    for (int i = 0; i < 5; ++i) {
        PrecisionComplex a = cpx(re(rng), im(rng), 40);
        PrecisionComplex b = cpx(re(rng), im(rng), 40);
        zv::QuadratureOutcome upper = zv::path_check_fundamental(1, a, b, 40, 1e-12);
        zv::QuadratureOutcome lower =
            zv::path_check_fundamental(1, a.conj(), b.conj(), 40, 1e-12);
        PrecisionComplex mirrored = lower.value.conj();
        const double slack = 2e-12 + upper.value.re.radius_double() +
                             upper.value.im.radius_double() + mirrored.re.radius_double() +
                             mirrored.im.radius_double();
        CHECK(testutil::mid_distance(upper.value.re, mirrored.re) <= slack);
        CHECK(testutil::mid_distance(upper.value.im, mirrored.im) <= slack);
    }
}

TEST_CASE("arc decay probe") {
    auto samples = zv::arc_decay_probe(3, {11, 21, 41}, 32);
    REQUIRE(samples.size() == 3);
    CHECK(samples[0].sup_estimate > samples[1].sup_estimate);
    CHECK(samples[1].sup_estimate > samples[2].sup_estimate);

    CHECK_THROWS_AS(zv::arc_decay_probe(3, {10}, 32), zv::DomainError);
    CHECK_THROWS_AS(zv::arc_decay_probe(3, {11}, 8), zv::DomainError);
}

TEST_CASE("arc samples obey the asymptotic envelopes") {
    const int digits = 30;
    const int samples = 24;
    Integrand g(3, 1);
    PrecisionReal pi_ball = PrecisionReal::pi(digits);
    for (long mult : {11L, 21L}) {
        PrecisionReal radius = PrecisionReal::exact(mult, digits) * pi_ball;
        const double R = radius.midpoint_double();
        for (int j = 0; j < samples; ++j) {
            PrecisionReal theta = pi_ball * PrecisionReal::exact(j, digits) /
                                  PrecisionReal::exact(samples - 1, digits);
            const double th = theta.midpoint_double();
            PrecisionComplex z(radius * cos(theta), radius * sin(theta));
            const double gz = zv::evaluate_integrand(g, z).abs_upper_double();
            const double x = R * std::cos(th);
            if (x >= 1.0) {
                // right half: |e^z - 1| >= e^x - 1 >= e^x/2
                CHECK(gz <= 2.0 * std::exp(-x) / std::pow(R, 3) * 1.001 + 1e-60);
            }
            if (std::fabs(th - M_PI) < 1e-9) {
                // negative real axis: |g| = R^-3/(1 - e^-R)
                const double expected = std::pow(R, -3.0) / (1.0 - std::exp(-R));
                CHECK(gz == doctest::Approx(expected).epsilon(1e-6));
            }
        }
    }
}

TEST_CASE("geometric series truncation stays below its tail bound") {
    // z = 1, M = 40
    PrecisionComplex z1 = cpx(1, 0, 40);
    PrecisionReal err = zv::geometric_series_check(z1, 40, 40);
    const double bound = std::exp(-41.0) / (1.0 - std::exp(-1.0));
    CHECK(err.midpoint_double() <= bound);
    CHECK(err.abs_upper_double() <= bound * 1.0001 + 1e-50);

    // z = 1 + i*pi, M = 60
    PrecisionComplex z2(PrecisionReal::exact(1, 40), PrecisionReal::pi(40));
    PrecisionReal err2 = zv::geometric_series_check(z2, 60, 40);
    CHECK(err2.abs_upper_double() <= std::exp(-61.0) / (1.0 - std::exp(-1.0)) * 1.0001 + 1e-50);

    CHECK_THROWS_AS(zv::geometric_series_check(cpx(-1, 0), 10, 30), zv::DomainError);
    CHECK_THROWS_AS(zv::geometric_series_check(cpx(0, 1), 10, 30), zv::DomainError);
}

TEST_CASE("contour report aggregates quadrature vs residue sum") {
    zv::ContourReport r = zv::contour_report(3, 1, 40.0, 30, 1e-12);
    CHECK(r.pass);
    CHECK(r.discrepancy <= 1e-11);
    CHECK(r.k == 3);
    CHECK(r.poles == 1);
    zv::ContourReport empty = zv::contour_report(3, 0, 40.0, 30, 1e-12);
    CHECK(empty.pass);
    CHECK(empty.discrepancy <= 1e-11);
}
