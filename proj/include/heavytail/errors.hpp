#pragma once

#include <stdexcept>
#include <string>

namespace heavytail {

// Base class for all library errors so callers can catch the whole family.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Argument outside the domain of a tail function, survival function, or
// operation precondition.
struct DomainError : Error {
  using Error::Error;
};

// An iterative kernel (quadrature, root polish) exhausted its budget
// before reaching the requested tolerance.
struct NonConvergenceError : Error {
  using Error::Error;
};

// find_root was called without a sign change over [lo, hi].
struct BracketError : Error {
  using Error::Error;
};

// An integrand was detected to be non-integrable (infinite value estimate).
struct DivergenceError : Error {
  using Error::Error;
};

// A bound that requires I(t)/t nonincreasing was requested for a family
// where that cannot be certified.
struct InvalidFamilyError : Error {
  using Error::Error;
};

// bound_subweibull_asymptotic called below its certified threshold m*t.
struct ThresholdError : Error {
  using Error::Error;
};

// certify_c_epsilon found no grid point after which the constant stays
// within variance + epsilon.
struct NotCertifiedError : Error {
  using Error::Error;
};

// Large-deviation ratio check requested for a tail family it does not
// cover (polynomial tails route to the dedicated limit check).
struct FamilyError : Error {
  using Error::Error;
};

// The deviation sequence satisfies neither growth condition of the
// polynomial large-deviation limit.
struct ConditionError : Error {
  using Error::Error;
};

// The constant provider produced a non-finite value (tail too heavy).
struct DivergentCError : Error {
  using Error::Error;
};

// One or more Monte Carlo cells violated the claimed upper bound.
struct DominationFailure : Error {
  using Error::Error;
};

}  // namespace heavytail
