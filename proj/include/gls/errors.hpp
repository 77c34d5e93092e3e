#ifndef GLS_ERRORS_HPP
#define GLS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gls {

// Invalid parameters, evaluation outside an open domain, unusable inputs.
// CLI maps these to exit code 2.
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// A derivative was requested from a profile that has no analytic derivatives
// and finite differences were not permitted.
class SmoothnessError : public DomainError {
public:
    explicit SmoothnessError(const std::string& what) : DomainError(what) {}
};

// Numerical failure: quadrature did not converge, a root bracketing failed,
// a self-check (round trip, probe verification) exceeded its tolerance.
// CLI maps these to exit code 3.
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

class ConvergenceError : public NumericError {
public:
    explicit ConvergenceError(const std::string& what) : NumericError(what) {}
};

// An integral whose convergence precheck failed (tail or origin).
class DivergenceError : public DomainError {
public:
    explicit DivergenceError(const std::string& what) : DomainError(what) {}
};

// A constructed object failed its own verification probe (Poisson solve,
// spectral round trip).
class RoundTripError : public NumericError {
public:
    explicit RoundTripError(const std::string& what) : NumericError(what) {}
};

} // namespace gls

#endif
