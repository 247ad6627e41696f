#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace icsi {

enum class Errc {
  NotPrime,
  ReduciblePolynomial,
  FieldTooLarge,
  FieldMismatch,
  InvalidArgument,
  DimensionMismatch,
  IndexOutOfRange,
  EmptyInput,
  ZeroCode,
  ZeroDual,
  TooLargeToEnumerate,
  FieldTooSmall,
  MalformedInstance,
  EmptyDemand,
  ConfinementViolation,
  NotDecodable,
  InconsistentObservation,
  ListTooLarge,
  RankDeficient,
};

std::string_view errc_name(Errc code) noexcept;

/// Every failure raised by the library carries one of the Errc kinds so
/// front ends can map it to an exit status without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace icsi
