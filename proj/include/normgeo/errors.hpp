#pragma once

#include <stdexcept>
#include <string>

namespace normgeo {

enum class errc {
  invalid_p,
  non_positive_weight,
  non_symmetric_matrix,
  not_positive_definite,
  dimension_mismatch,
  near_zero_vector,
  not_inner_product_spec,
  invalid_argument,
  invalid_config,
  internal_error,
};

const char* errc_name(errc code);

/// Library error carrying a stable error code alongside the message.
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& message) {
  throw error(code, message);
}

}  // namespace normgeo
