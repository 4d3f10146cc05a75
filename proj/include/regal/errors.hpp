#ifndef REGAL_ERRORS_HPP
#define REGAL_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace regal {

// Every failure carries a stable machine-readable code (e.g. "MixedVariables",
// "DegreeCapExceeded") next to a human-readable message. The CLI maps codes
// into its JSON error reports.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& msg)
      : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace regal

#endif
