#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace plmono {

using Rational = boost::multiprecision::cpp_rational;
using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;

/// Reduced row echelon form over Q with zero rows removed. Two matrices span
/// the same row space iff their reduced forms compare equal.
RationalMatrix reduced_row_echelon(RationalMatrix rows);

std::size_t rank(const RationalMatrix& rows);

/// True iff v lies in the row space of an already reduced matrix.
bool in_row_space(const RationalMatrix& reduced, const RationalVector& v);

std::string to_string(const Rational& q);

}  // namespace plmono
