#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace tropkit {

// Library failure with a stable code the CLI maps to exit statuses.
// Codes like "UnequalBasisSize" identify the violated precondition.
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

private:
  std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& msg) {
  throw Error(code, msg);
}

} // namespace tropkit
