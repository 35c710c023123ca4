#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "plmono/cyclotomic.hpp"

namespace plmono {

/// Dimensions of a graded vector space, indexed by cohomological degree.
/// Trailing zeros are trimmed, so the zero space is the empty sequence.
class GradedDims {
 public:
  GradedDims() = default;
  GradedDims(std::initializer_list<std::int64_t> dims);
  explicit GradedDims(std::vector<std::int64_t> dims);

  /// Dimension in degree j; zero past the stored range.
  std::int64_t operator[](std::size_t j) const noexcept {
    return j < dims_.size() ? dims_[j] : 0;
  }
  /// One past the highest nonzero degree.
  std::size_t size() const noexcept { return dims_.size(); }
  bool is_zero() const noexcept { return dims_.empty(); }
  std::span<const std::int64_t> values() const noexcept { return dims_; }
  std::int64_t total() const noexcept;

  GradedDims& operator+=(const GradedDims& other);
  friend GradedDims operator+(GradedDims a, const GradedDims& b) { return a += b; }
  friend bool operator==(const GradedDims&, const GradedDims&) = default;

 private:
  void trim();
  std::vector<std::int64_t> dims_;
};

/// H^*(C^*, C): one dimension in degree 0 and one in degree 1.
inline const GradedDims kCircleCohomology{1, 1};

/// Kunneth convolution: result[k] = sum over i + j = k of a[i] * b[j].
GradedDims tensor_graded(const GradedDims& a, const GradedDims& b);

/// Alternating sum of dimensions.
std::int64_t euler_char(const GradedDims& g);

std::string to_string(const GradedDims& g);

/// Eigenspace decomposition of the algebraic monodromy on H^*(F, C) for a
/// reduced homogeneous polynomial of the given degree.
///
/// Only nonzero eigenspaces are stored. The constructor enforces:
///  - degree >= 1 and every eigenvalue satisfies eta^degree = 1;
///  - the eigenvalue 1 is present with dimension exactly 1 in degree 0;
///  - every other eigenvalue has nothing in degree 0 (the fiber is connected).
/// Zero entries passed in are dropped rather than rejected.
class EigenTable {
 public:
  using Entries = std::map<RootOfUnity, GradedDims>;

  EigenTable(std::int64_t degree, Entries entries);

  std::int64_t degree() const noexcept { return degree_; }
  const Entries& entries() const noexcept { return entries_; }
  /// Total lookup; absent eigenvalues are the zero space.
  GradedDims get(RootOfUnity eta) const;
  bool contains(RootOfUnity eta) const { return entries_.contains(eta); }
  std::vector<RootOfUnity> keys() const;

  friend bool operator==(const EigenTable&, const EigenTable&) = default;

 private:
  std::int64_t degree_;
  Entries entries_;
};

inline GradedDims table_get(const EigenTable& t, RootOfUnity eta) { return t.get(eta); }

/// Eigenspaces of fg for f, g in disjoint variables:
/// H(fg)_eta = H(f)_eta (x) H(g)_eta (x) H(C^*). The caller vouches for
/// disjointness; the computation only sees the two tables.
EigenTable product_formula(const EigenTable& tf, const EigenTable& tg);

/// Left fold of product_formula over two or more blocks; a single table is
/// returned unchanged. Throws invalid_input on an empty list.
EigenTable product_formula(std::span<const EigenTable> tables);

enum class BettiIndexSet {
  /// Only eta with eta^gcd(r,s) = 1; every other term vanishes.
  pruned,
  /// Every eta with eta^(r+s) = 1, as in the fibration argument.
  literal,
};

/// Total cohomology of the Milnor fiber of fg from the fibration
/// F_f x F_g -> F_fg -> C^* whose monodromy is T_f (x) T_g^{-1}:
///   result[l] = sum_{lambda = l-1}^{l} sum_eta sum_{i+j=lambda}
///               dim H^i(f)_eta * dim H^j(g)_{eta^{-1}}.
GradedDims betti_formula(const EigenTable& tf, const EigenTable& tg,
                         BettiIndexSet index_set = BettiIndexSet::pruned);

GradedDims total_betti(const EigenTable& t);

/// True iff every eigenspace has the same dimensions as its complex conjugate.
bool check_conjugation_symmetry(const EigenTable& t);

/// True iff keys(tfg) = keys(tf) /\ keys(tg) and every key of tfg satisfies
/// eta^gcd(r,s) = 1.
bool check_support_corollary(const EigenTable& tf, const EigenTable& tg, const EigenTable& tfg);

}  // namespace plmono
