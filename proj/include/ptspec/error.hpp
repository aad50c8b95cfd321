#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ptspec {

enum class ErrorKind {
  domain,
  overflow,
  discriminant,
  singular_origin,
  invalid_parameter,
  mismatch,
  depth_exceeds_order,
  no_root,
  complex_domain,
  node_count_mismatch,
  no_convergence,
  parse,
  validation,
  io,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Single exception type for the library; `kind()` is the machine-readable tag
/// that the CLI forwards in its error record.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised by adaptive routines that still have a usable estimate.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double best_estimate, double error_estimate)
      : Error(ErrorKind::no_convergence, what),
        best_estimate_(best_estimate),
        error_estimate_(error_estimate) {}

  double best_estimate() const noexcept { return best_estimate_; }
  double error_estimate() const noexcept { return error_estimate_; }

 private:
  double best_estimate_;
  double error_estimate_;
};

}  // namespace ptspec
