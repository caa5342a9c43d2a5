#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace hstar {

/// Domain error carrying a stable machine-readable code such as
/// "DegenerateSimplex" or "NotConstantAge".
class Error : public std::runtime_error {
  public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

  private:
    std::string code_;
};

/// A configured resource cap was exceeded. Kept distinct so callers can
/// report it separately from mathematical preconditions.
class ResourceLimit : public Error {
  public:
    explicit ResourceLimit(const std::string& message) : Error("ResourceLimit", message) {}
};

[[noreturn]] inline void fail(const std::string& code, const std::string& message) {
    throw Error(code, message);
}

}  // namespace hstar
