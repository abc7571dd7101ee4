#pragma once

#include "zetaverify/ball.hpp"

namespace zv {

/// zeta(s) for integer s >= 2 with radius <= 10^-digits.
///
/// Evaluated through the alternating (eta) series accelerated by the
/// Cohen--Villegas--Zagier scheme, whose truncation error after N terms is
/// provably below 3*(3+sqrt(8))^-N for totally monotone coefficients; that
/// bound is added to the radius explicitly, so the enclosure never rests on
/// a heuristic cutoff. Working precision starts at
/// digits + 10 + ceil(log10(terms)) and escalates x2 (cap 8x) before
/// PrecisionNotAchieved is raised. Independent of the Bernoulli module by
/// construction, so the two can cross-check each other.
PrecisionReal zeta_int(long s, int digits);

/// Plain partial sum sum_{k=1}^{terms} k^-s with the integral tail bound
/// terms^(1-s)/(s-1) folded into the radius. Deliberately naive; serves as
/// an independent oracle for zeta_int.
PrecisionReal zeta_series_oracle(long s, unsigned long terms,
                                 int working_digits = 48);

/// pi with radius <= 10^-digits (re-exported from PrecisionReal::pi).
PrecisionReal pi(int digits);

} // namespace zv
