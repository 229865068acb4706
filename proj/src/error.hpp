#pragma once

#include <stdexcept>
#include <string>

namespace ginkit {

enum class errc {
  invalid_params,
  structural_violation,
  index_out_of_range,
  coverage_gap,
  scale_exceeded,
  cap_exceeded,
  unstable,
  regularity_failure,
  internal,
};

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw error(code, msg); }

}  // namespace ginkit
