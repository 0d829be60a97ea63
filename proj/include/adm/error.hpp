#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace adm {

/// Base of every exception thrown by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad input to a function or the command line (exit code 2 in the CLI).
class argument_error : public error {
 public:
  using error::error;
};

class division_by_zero : public argument_error {
 public:
  division_by_zero() : argument_error("division by zero") {}
};

/// A monomial whose total degree or weight does not match its polynomial.
class invalid_monomial : public argument_error {
 public:
  using argument_error::argument_error;
};

/// Too few components supplied to substitute into a polynomial.
class arity_error : public argument_error {
 public:
  using argument_error::argument_error;
};

class range_error : public argument_error {
 public:
  using argument_error::argument_error;
};

/// Problem outside the class handled by the closed-form reference.
class unsupported_problem : public argument_error {
 public:
  using argument_error::argument_error;
};

/// Evaluation at or past a finite-time singularity (exit code 3 in the CLI).
class domain_error : public error {
 public:
  using error::error;
};

class singularity_error : public domain_error {
 public:
  singularity_error(std::string t, std::string blow_up, const std::string& what)
      : domain_error(what), t_(std::move(t)), blow_up_(std::move(blow_up)) {}

  /// Offending time, as printed decimal text.
  const std::string& t() const noexcept { return t_; }
  /// Blow-up time, empty when the failure is a branch violation without one.
  const std::string& blow_up_time() const noexcept { return blow_up_; }

 private:
  std::string t_;
  std::string blow_up_;
};

}  // namespace adm
