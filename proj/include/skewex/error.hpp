#ifndef SKEWEX_ERROR_HPP
#define SKEWEX_ERROR_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace skewex {

enum class ErrorKind {
  DimensionMismatch,
  InvalidParameter,
  NotAssociative,
  UnitFails,
  NotAnIdeal,
  ImproperIdeal,
  NotInvertible,
  NotLocallyNilpotent,
  NotInKernelChain,
  NotAutomorphism,
  NotMonic,
  AnnihilatorFails,
  ConstantTermZero,
  AssociativityFails,
  EmbeddingFails,
  NotCommutative,
  CapExceeded,
  NotIdempotent,
  PhibarNotSurjective,
  ParseError,
  ValidationError,
  UnknownSuite,
  InternalConsistency,
};

const char* to_string(ErrorKind kind);

/// Every failure in the library is reported through this type. `witness`
/// carries basis indices (i, j, k triples, a basis pair, a coordinate)
/// that reproduce the violation.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what, std::vector<long> witness = {})
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        m_kind(kind),
        m_message(what),
        m_witness(std::move(witness)) {}

  ErrorKind kind() const { return m_kind; }
  /// what() without the kind prefix.
  const std::string& message() const { return m_message; }
  const std::vector<long>& witness() const { return m_witness; }

 private:
  ErrorKind m_kind;
  std::string m_message;
  std::vector<long> m_witness;
};

}  // namespace skewex

#endif  // SKEWEX_ERROR_HPP
