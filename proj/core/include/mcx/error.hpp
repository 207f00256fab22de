#pragma once

#include <stdexcept>
#include <string>

namespace mcx {

// Error classes map onto the CLI exit codes (see tools/main.cpp).
enum class ErrorKind {
  Inconsistency,  // internal cross-check failed
  Parse,          // malformed input text
  InvalidSpec,    // parameters outside a family's domain
  Budget,         // face budget or size gate exceeded
  Contract,       // a caller-supplied precondition was violated
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace mcx
