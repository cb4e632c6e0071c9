#ifndef SBWAVE_ERRORS_HPP
#define SBWAVE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sbwave {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Invalid scalar input (nonpositive frequency, zero momentum, ...).
struct DomainError : Error {
    using Error::Error;
};

/// Degenerate kinematics: vanishing k·p, parallel momenta, singular
/// frequency combination.
struct KinematicsError : Error {
    using Error::Error;
};

/// A series could not be evaluated to the requested accuracy.
struct AccuracyError : Error {
    AccuracyError(const std::string& msg, double achieved_bound)
        : Error(msg), achieved(achieved_bound) {}
    double achieved;  ///< best tail bound that could be certified
};

/// A quadrature self-check failed (nonvanishing imaginary residual).
struct RepresentationMismatchError : Error {
    RepresentationMismatchError(const std::string& msg, double res)
        : Error(msg), residual(res) {}
    double residual;
};

/// A spectrum failed to accumulate unit mass inside the window cap.
struct NormalizationError : Error {
    NormalizationError(const std::string& msg, double sum)
        : Error(msg), achieved_sum(sum) {}
    double achieved_sum;
};

/// Scenario file violates a physical invariant.
struct ValidationError : Error {
    using Error::Error;
};

/// Scenario file is syntactically malformed.
struct ParseError : Error {
    using Error::Error;
};

/// ratio_regimes was asked for an odd-combination cell.
struct NoMatchingCellError : Error {
    using Error::Error;
};

}  // namespace sbwave

#endif
