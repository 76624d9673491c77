#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace aslkit {

enum class ErrorCode {
  ParseError,
  CycleDetected,
  DuplicateLabel,
  UnknownElement,
  EmptyPoset,
  NotPartialOrder,
  NotALattice,
  NotDistributive,
  InvalidMultiChain,
  RankTooLarge,
  RelationNotTransitive,
  SupportClassSizeMismatch,
  IncoherentChainMaps,
  ProofObligationFailed,
  NonTermination,
  InvalidField,
  GenericityFailed,
  RankDeficient,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries one of the codes above plus an
// optional witness (a rendering of the offending elements).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::string witness = {})
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code),
        witness_(std::move(witness)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& witness() const noexcept { return witness_; }

 private:
  ErrorCode code_;
  std::string witness_;
};

}  // namespace aslkit
