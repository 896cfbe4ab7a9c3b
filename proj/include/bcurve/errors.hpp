#pragma once

#include <stdexcept>
#include <string>

namespace bcurve {

/// (lambda, e1) outside the admissible domain e1 > eta_lambda.
class AdmissibilityError : public std::domain_error {
  public:
    explicit AdmissibilityError(const std::string& what) : std::domain_error(what) {}
};

/// Adaptive step control failed to reach the requested tolerance.
class IntegrationError : public std::runtime_error {
  public:
    explicit IntegrationError(const std::string& what) : std::runtime_error(what) {}
};

/// Raw jump integral requested on the exceptional locus.
class ExceptionalPathError : public std::domain_error {
  public:
    explicit ExceptionalPathError(const std::string& what) : std::domain_error(what) {}
};

/// A derived quantity violated a numerical sanity bound.
class NumericalError : public std::runtime_error {
  public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

/// Parameters fail the closure residual required for invariant counting.
class NotClosedError : public std::runtime_error {
  public:
    explicit NotClosedError(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid (m, n) closure specification.
class InvalidSpecError : public std::invalid_argument {
  public:
    explicit InvalidSpecError(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace bcurve
