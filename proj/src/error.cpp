#include "ptspec/error.hpp"

namespace ptspec {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::domain: return "domain";
    case ErrorKind::overflow: return "overflow";
    case ErrorKind::discriminant: return "discriminant";
    case ErrorKind::singular_origin: return "singular_origin";
    case ErrorKind::invalid_parameter: return "invalid_parameter";
    case ErrorKind::mismatch: return "mismatch";
    case ErrorKind::depth_exceeds_order: return "depth_exceeds_order";
    case ErrorKind::no_root: return "no_root";
    case ErrorKind::complex_domain: return "complex_domain";
    case ErrorKind::node_count_mismatch: return "node_count_mismatch";
    case ErrorKind::no_convergence: return "no_convergence";
    case ErrorKind::parse: return "parse";
    case ErrorKind::validation: return "validation";
    case ErrorKind::io: return "io";
  }
  return "unknown";
}

}  // namespace ptspec
