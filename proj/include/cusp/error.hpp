#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cusp {

enum class ErrorKind {
  UnsupportedFamily,
  MalformedWord,
  ResourceLimit,
  EmptyGraph,
  Disconnected,
  DepthClipped,
  EnumerationCap,
  SampleExhausted,
  TooShort,
  HalfIntegerOffset,
  NoOverlap,
  RaysEquivalent,
  ResolutionMismatch,
  TooFewPoints,
  NormalFormUnavailable,
  EndpointRemoved,
  EmptyNet,
  ParseError,
  UnknownVertex,
  StaleCache,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

// Single exception type carrying a machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace cusp
