#ifndef ZEL_ERROR_HPP
#define ZEL_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace zel {

enum class Errc {
  NonIntegralOrNegativeLength,
  LineMismatch,
  UnionNotASegment,
  ClosureTooLarge,
  BasisMismatch,
  NotALadder,
  OutOfRange,
  InvalidIndex,
  InternalInconsistency,
  NotSpeh,
  AgreementFailure,
  ParseError,
};

std::string_view to_string(Errc code);

// All library failures are reported through this one exception type; the
// code is what callers (and the CLI's error JSON) switch on.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace zel

#endif  // ZEL_ERROR_HPP
