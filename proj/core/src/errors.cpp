#include "pair_radiance/errors.hpp"

namespace pair_radiance {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "invalid-input";
    case ErrorKind::OutOfRegime: return "out-of-regime";
    case ErrorKind::SingularInput: return "singular-input";
    case ErrorKind::NumericalFailure: return "numerical-failure";
    case ErrorKind::DivisionByZero: return "division-by-zero";
    case ErrorKind::ConfigError: return "config-error";
    case ErrorKind::IoError: return "io-error";
  }
  return "unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace pair_radiance
