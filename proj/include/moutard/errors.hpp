#pragma once

#include <stdexcept>
#include <string>

namespace moutard {

/// Base class of every error raised by the library. `kind()` is the stable
/// identifier used in the CLI's structured error JSON.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define MOUTARD_DEFINE_ERROR(Name)                                  \
  class Name : public Error {                                       \
   public:                                                          \
    explicit Name(const std::string& what) : Error(#Name, what) {}  \
  };

MOUTARD_DEFINE_ERROR(PoleError)
MOUTARD_DEFINE_ERROR(ZeroTau)
MOUTARD_DEFINE_ERROR(NotHolomorphic)
MOUTARD_DEFINE_ERROR(DegenerateSeed)
MOUTARD_DEFINE_ERROR(NotOnFlow)
MOUTARD_DEFINE_ERROR(NotClosed)
MOUTARD_DEFINE_ERROR(NotAffineInT)
MOUTARD_DEFINE_ERROR(NoBlowup)
MOUTARD_DEFINE_ERROR(ZeroLambda)
MOUTARD_DEFINE_ERROR(PairingFailure)
MOUTARD_DEFINE_ERROR(NotInKernel)
MOUTARD_DEFINE_ERROR(Unsupported)
MOUTARD_DEFINE_ERROR(ParseError)
MOUTARD_DEFINE_ERROR(FitError)

#undef MOUTARD_DEFINE_ERROR

}  // namespace moutard
