#pragma once

#include <stdexcept>
#include <string>

namespace zv {

/// Base class for every error this library raises deliberately.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A Bernoulli index beyond the configured table maximum.
struct IndexTooLarge : Error {
    using Error::Error;
};

/// An identity/matrix parameter outside its admissible range (n >= 2 etc.).
struct InvalidN : Error {
    using Error::Error;
};

/// The working-precision escalation cap was reached without meeting the
/// requested radius.
struct PrecisionNotAchieved : Error {
    using Error::Error;
};

/// Ball division where the divisor ball contains zero.
struct DivisorStraddlesZero : Error {
    using Error::Error;
};

/// An integrand was evaluated on a ball whose denominator straddles zero.
struct PoleProximity : Error {
    using Error::Error;
};

/// Adaptive quadrature hit its subdivision depth cap.
struct QuadratureNoConverge : Error {
    using Error::Error;
};

/// Input outside the mathematical domain of the operation.
struct DomainError : Error {
    using Error::Error;
};

/// Determinant of a non-square matrix.
struct NotSquare : Error {
    using Error::Error;
};

/// Ledger or report I/O failure.
struct IoError : Error {
    using Error::Error;
};

} // namespace zv
