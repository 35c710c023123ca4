#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace plmono {

enum class ErrorKind {
  invalid_order,
  invalid_input,
  invalid_table,
  not_reduced,
  non_homogeneous,
  unsupported_dimension,
  unsupported_shape,
  parse,
  internal_consistency,
  not_cyclotomic_groupable,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every failure raised by the library carries one of the kinds above so that
// front ends can map it to an exit status without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& message);

  // Byte offset into the source text where the problem was detected.
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace plmono
