#include "plmono/error.hpp"

namespace plmono {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::invalid_order: return "invalid-order";
    case ErrorKind::invalid_input: return "invalid-input";
    case ErrorKind::invalid_table: return "invalid-table";
    case ErrorKind::not_reduced: return "not-reduced";
    case ErrorKind::non_homogeneous: return "non-homogeneous";
    case ErrorKind::unsupported_dimension: return "unsupported-dimension";
    case ErrorKind::unsupported_shape: return "unsupported-shape";
    case ErrorKind::parse: return "parse";
    case ErrorKind::internal_consistency: return "internal-consistency";
    case ErrorKind::not_cyclotomic_groupable: return "not-cyclotomic-groupable";
  }
  return "unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

ParseError::ParseError(std::size_t offset, const std::string& message)
    : Error(ErrorKind::parse, message + " at offset " + std::to_string(offset)),
      offset_(offset) {}

}  // namespace plmono
