#include "kgu/error.hpp"

namespace kgu {

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::unsupported_dimension: return "unsupported dimension";
    case Errc::invalid_size: return "invalid size";
    case Errc::invalid_parameter: return "invalid parameter";
    case Errc::invalid_index: return "invalid index";
    case Errc::shape_mismatch: return "shape mismatch";
    case Errc::domain_error: return "domain error";
    case Errc::insufficient_data: return "insufficient data";
    case Errc::reference_unreliable: return "reference unreliable";
    case Errc::io_failure: return "i/o failure";
  }
  return "unknown error";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace kgu
