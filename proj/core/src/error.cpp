#include "zel/error.hpp"

namespace zel {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::NonIntegralOrNegativeLength: return "NonIntegralOrNegativeLength";
    case Errc::LineMismatch: return "LineMismatch";
    case Errc::UnionNotASegment: return "UnionNotASegment";
    case Errc::ClosureTooLarge: return "ClosureTooLarge";
    case Errc::BasisMismatch: return "BasisMismatch";
    case Errc::NotALadder: return "NotALadder";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::InvalidIndex: return "InvalidIndex";
    case Errc::InternalInconsistency: return "InternalInconsistency";
    case Errc::NotSpeh: return "NotSpeh";
    case Errc::AgreementFailure: return "AgreementFailure";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace zel
