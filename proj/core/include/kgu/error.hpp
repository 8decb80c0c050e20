#pragma once

#include <stdexcept>
#include <string>

namespace kgu {

enum class Errc {
  unsupported_dimension,
  invalid_size,
  invalid_parameter,
  invalid_index,
  shape_mismatch,
  domain_error,
  insufficient_data,
  reference_unreliable,
  io_failure,
};

const char* to_string(Errc code) noexcept;

/// Exception type thrown by every kgu operation; `code()` identifies the failure class.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace kgu
