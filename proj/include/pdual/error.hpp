#ifndef PDUAL_ERROR_HPP
#define PDUAL_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pdual {

enum class ErrorKind {
  DimensionMismatch,
  FieldMismatch,
  AlgebraMismatch,
  NotAssociative,
  NoIdentity,
  NoInverse,
  UnitFails,
  NotCentralIdempotent,
  AxiomIFails,
  AxiomIIFails,
  AxiomIIIFails,
  NotIsoOnIdeal,
  NotGlobal,
  HopfAxiomFails,
  AntipodeNotInvertible,
  Axiom1Fails,
  Axiom2Fails,
  Axiom3Fails,
  InternalFailure,
  ParseError,
};

std::string_view kind_name(ErrorKind kind);

/// Every rejected input carries the name of the failed law and the indices
/// (group elements, basis vectors) that witness the failure.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message, std::vector<std::size_t> witness = {})
      : std::runtime_error(std::string(kind_name(kind)) + ": " + message),
        kind_(kind),
        witness_(std::move(witness)) {}

  ErrorKind kind() const { return kind_; }
  const std::vector<std::size_t>& witness() const { return witness_; }

 private:
  ErrorKind kind_;
  std::vector<std::size_t> witness_;
};

}  // namespace pdual

#endif  // PDUAL_ERROR_HPP
