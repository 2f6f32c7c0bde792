#pragma once

#include <stdexcept>
#include <string>

namespace choquet {

// Structured failure carrying a stable machine-readable code
// ("DuplicatePoints", "NotSimplicial", ...) next to the human message.
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& msg)
      : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

private:
  std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& msg) {
  throw Error(code, msg);
}

} // namespace choquet
