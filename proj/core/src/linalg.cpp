#include "plmono/linalg.hpp"

#include <utility>

namespace plmono {

RationalMatrix reduced_row_echelon(RationalMatrix rows) {
  if (rows.empty()) return rows;
  const std::size_t cols = rows.front().size();
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < cols && pivot_row < rows.size(); ++c) {
    std::size_t r = pivot_row;
    while (r < rows.size() && rows[r][c] == 0) ++r;
    if (r == rows.size()) continue;
    std::swap(rows[pivot_row], rows[r]);

    const Rational lead = rows[pivot_row][c];
    for (auto& x : rows[pivot_row]) x /= lead;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == pivot_row || rows[i][c] == 0) continue;
      const Rational factor = rows[i][c];
      for (std::size_t k = c; k < cols; ++k) rows[i][k] -= factor * rows[pivot_row][k];
    }
    ++pivot_row;
  }
  rows.resize(pivot_row);
  return rows;
}

std::size_t rank(const RationalMatrix& rows) { return reduced_row_echelon(rows).size(); }

bool in_row_space(const RationalMatrix& reduced, const RationalVector& v) {
  // Eliminate against each pivot; v is in the span iff nothing is left.
  RationalVector rest = v;
  for (const auto& row : reduced) {
    std::size_t pivot = 0;
    while (pivot < row.size() && row[pivot] == 0) ++pivot;
    if (pivot == row.size() || rest[pivot] == 0) continue;
    const Rational factor = rest[pivot];
    for (std::size_t k = pivot; k < row.size(); ++k) rest[k] -= factor * row[k];
  }
  for (const auto& x : rest) {
    if (x != 0) return false;
  }
  return true;
}

std::string to_string(const Rational& q) { return q.str(); }

}  // namespace plmono
