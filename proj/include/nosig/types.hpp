#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace nosig {

using cdouble = std::complex<double>;
using ComplexVector = std::vector<cdouble>;

// Global comparison tolerance for operator identities and probabilities.
inline constexpr double kTol = 1e-10;
// Tighter tolerance for exact algebraic identities.
inline constexpr double kTightTol = 1e-12;
// States whose norm deviates from 1 by more than this are rejected rather
// than silently renormalized, so that protocol bugs surface early.
inline constexpr double kNormRejectTol = 1e-8;

// Shape or index problems: wrong dimensions, invalid factors, bad wiring.
struct StructuralError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// An input violates a mathematical precondition (not a projector, not
// Hermitian, channel not normalized, ...).
struct ContractError : std::domain_error {
  using std::domain_error::domain_error;
};

// Valid request lying outside what this artifact supports.
struct UnsupportedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Conditioning on an outcome whose probability is numerically zero.
struct ImpossibleOutcomeError : ContractError {
  using ContractError::ContractError;
};

}  // namespace nosig
