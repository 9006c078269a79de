#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace annigraph {

enum class ErrorKind {
  InvalidOrder,
  OrderTooLarge,
  NotPrime,
  NotPrimePower,
  InvalidPolynomial,
  ReduciblePolynomial,
  PresentationNotConfluent,
  TrivialRing,
  NonFiniteQuotient,
  ArityError,
  AxiomViolation,
  EmptySet,
  NoZeroDivisors,
  InvalidVertexPair,
  InvalidRotation,
  SyntaxError,
  InvalidCorpus,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries a machine-checkable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace annigraph
