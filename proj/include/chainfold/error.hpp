#pragma once

#include <stdexcept>
#include <string>

namespace chainfold {

// Domain errors (invalid fan, infeasible input, cap exceeded) map to CLI
// exit code 1; parse/schema errors map to exit code 2.
class Error : public std::runtime_error {
 public:
  enum class Kind { Domain, Parse };
  Error(Kind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
  Kind kind() const { return kind_; }

  static Error domain(const std::string& msg) { return Error(Kind::Domain, msg); }
  static Error parse(const std::string& msg) { return Error(Kind::Parse, msg); }

 private:
  Kind kind_;
};

}  // namespace chainfold
