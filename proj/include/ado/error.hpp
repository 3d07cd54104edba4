#pragma once

#include <stdexcept>
#include <string>

namespace ado {

/// Failure categories. The numeric values double as CLI exit codes.
enum class ErrorKind {
  usage = 2,
  io = 3,
  format = 4,
  input = 5,  // argument outside an operation's domain
  non_convergence = 6,
  capacity = 7,
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace ado
