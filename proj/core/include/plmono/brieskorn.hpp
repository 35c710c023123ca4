#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "plmono/eigencalc.hpp"

namespace plmono {

/// x_1^{a_1} + ... + x_n^{a_n} with n >= 2 and every a_i >= 2.
class BrieskornPham {
 public:
  explicit BrieskornPham(std::vector<std::int64_t> exponents);

  const std::vector<std::int64_t>& exponents() const noexcept { return exponents_; }
  std::size_t variables() const noexcept { return exponents_.size(); }
  bool is_homogeneous() const noexcept;
  /// Common exponent; throws non_homogeneous when the exponents differ.
  std::int64_t degree() const;

  friend bool operator==(const BrieskornPham&, const BrieskornPham&) = default;

 private:
  std::vector<std::int64_t> exponents_;
};

/// prod (a_i - 1).
std::int64_t bp_milnor_number(const BrieskornPham& b);

/// Eigenvalue multiset of the monodromy on the middle cohomology H^{n-1}:
/// each tuple 1 <= k_i <= a_i - 1 contributes prod exp(2 pi i k_i / a_i).
/// Works for unequal exponents.
std::map<RootOfUnity, std::int64_t> bp_spectrum(const BrieskornPham& b);

/// Full eigenspace table for the homogeneous (Fermat) case: H^0 is the
/// trivial eigenvalue, the spectrum sits in degree n - 1.
EigenTable bp_eigentable(const BrieskornPham& b);

/// 1 + (-1)^{n-1} * Milnor number.
std::int64_t bp_milnor_fiber_euler(const BrieskornPham& b);

}  // namespace plmono
