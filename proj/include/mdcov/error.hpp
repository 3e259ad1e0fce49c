#pragma once

#include <stdexcept>
#include <string>

namespace mdcov {

// Input errors (bad files, malformed data) map to CLI exit code 2,
// precondition violations (valid input, invalid request) to exit code 3.
enum class ErrorKind { input, precondition };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void input_error(const std::string& msg) {
  throw Error(ErrorKind::input, msg);
}

[[noreturn]] inline void precondition_error(const std::string& msg) {
  throw Error(ErrorKind::precondition, msg);
}

}  // namespace mdcov
