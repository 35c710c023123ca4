#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "plmono/linalg.hpp"

namespace plmono {

/// A polynomial variable such as x1 or y12. Ordered naturally: by the
/// alphabetic prefix, then by the numeric suffix, so x2 < x10.
struct Variable {
  std::string name;

  friend bool operator==(const Variable&, const Variable&) = default;
  friend std::strong_ordering operator<=>(const Variable& a, const Variable& b);
};

struct PolyExpr;

/// A nonzero integer scalar factor. It does not change the Milnor fiber.
struct Constant {
  Rational value;
  friend bool operator==(const Constant&, const Constant&) = default;
};

/// sum c_v * v with at least one nonzero coefficient.
struct LinearForm {
  std::map<Variable, Rational> coefficients;
  friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

/// v^k with k >= 2.
struct Power {
  Variable variable;
  std::int64_t exponent = 2;
  friend bool operator==(const Power&, const Power&) = default;
};

/// sum of pure powers in pairwise distinct variables, in source order.
struct Sum {
  std::vector<Power> terms;
  friend bool operator==(const Sum&, const Sum&) = default;
};

/// Flattened product: never contains another Product, and holds at most one
/// Constant, which comes first.
struct Product {
  std::vector<PolyExpr> factors;
  friend bool operator==(const Product&, const Product&) = default;
};

struct PolyExpr {
  std::variant<Product, LinearForm, Power, Sum, Constant> node;
  friend bool operator==(const PolyExpr&, const PolyExpr&) = default;
};

/// Grammar (whitespace insensitive):
///   expr   := term (('+' | '-') term)*     (optional leading sign)
///   term   := factor ('*' factor)*
///   factor := '(' expr ')' | integer | variable ('^' integer)?
/// A single term becomes a Product (or its sole factor). Several terms must
/// all be degree-one monomials (giving a LinearForm) or all be bare powers
/// v^k, k >= 2 (giving a Sum). Throws ParseError with the offending byte
/// offset, or ErrorKind::unsupported_shape for well-formed but unsupported
/// sums.
PolyExpr parse(std::string_view src);

/// Canonical text that parses back to the same AST.
std::string to_text(const PolyExpr& e);

}  // namespace plmono
