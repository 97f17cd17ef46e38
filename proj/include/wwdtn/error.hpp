#pragma once

#include <stdexcept>
#include <string>

namespace wwdtn {

// Failure categories shared by every module. The C API maps each one to a
// distinct status code, so keep the two lists in sync (see capi.cpp).
enum class ErrorKind {
  invalid_argument,
  degenerate_weight,
  singular,
  not_converged,
  infeasible,
  overflow,
  not_monotone,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool cond, const std::string& what) {
  if (!cond) fail(ErrorKind::invalid_argument, what);
}

}  // namespace wwdtn
