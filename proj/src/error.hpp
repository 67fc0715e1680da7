#pragma once

#include <stdexcept>
#include <string>

namespace ue {

enum class ErrorCode {
  InvalidArgument = 1,
  NotMetric = 2,
  NotUltrametric = 3,
  BoundViolation = 4,
  Undecided = 5,
  CapExceeded = 6,
  Io = 7,
  BadJson = 8,
};

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

}  // namespace ue
