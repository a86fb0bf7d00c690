#pragma once

#include <stdexcept>
#include <string>

namespace adjrep {

/// Malformed input: bad text, schema violations, mismatched registries.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input is well formed but violates an operation's precondition
/// (non-simple arrangement, unbounded polytope, wrong degree, ...).
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An exact certificate that should hold by theory came out false. Signals
/// degenerate input or a pipeline bug; never raised for ordinary "no" answers.
class CertificateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace adjrep
