#ifndef RIGCAT_ERRORS_HPP
#define RIGCAT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rigcat {

enum class errc {
  domain_mismatch,
  malformed_cycles,
  parse_error,
  index_out_of_range,
  invalid_projection,
  range_error,
  zero_modulus,
  overflow,
  non_invertible_data,
  endpoint_mismatch,
  target_mismatch,
  enumeration_unsupported,
};

const char *errc_name(errc code);

/// Library error carrying a machine-checkable code alongside the message.
class error : public std::runtime_error {
public:
  error(errc code, const std::string &what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  errc code() const { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string &what) {
  throw error(code, what);
}

} // namespace rigcat

#endif
