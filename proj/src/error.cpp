#include "cusp/error.hpp"

namespace cusp {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UnsupportedFamily: return "UnsupportedFamily";
    case ErrorKind::MalformedWord: return "MalformedWord";
    case ErrorKind::ResourceLimit: return "ResourceLimit";
    case ErrorKind::EmptyGraph: return "EmptyGraph";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::DepthClipped: return "DepthClipped";
    case ErrorKind::EnumerationCap: return "EnumerationCap";
    case ErrorKind::SampleExhausted: return "SampleExhausted";
    case ErrorKind::TooShort: return "TooShort";
    case ErrorKind::HalfIntegerOffset: return "HalfIntegerOffset";
    case ErrorKind::NoOverlap: return "NoOverlap";
    case ErrorKind::RaysEquivalent: return "RaysEquivalent";
    case ErrorKind::ResolutionMismatch: return "ResolutionMismatch";
    case ErrorKind::TooFewPoints: return "TooFewPoints";
    case ErrorKind::NormalFormUnavailable: return "NormalFormUnavailable";
    case ErrorKind::EndpointRemoved: return "EndpointRemoved";
    case ErrorKind::EmptyNet: return "EmptyNet";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::StaleCache: return "StaleCache";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace cusp
