#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace plmono {

/// An exact root of unity exp(2*pi*i*k/n), i.e. an element k/n of Q/Z.
///
/// Values are always stored reduced: 0 <= k < n and gcd(k, n) = 1, so the
/// identity is (0, 1) and equality is plain field comparison. Ordering is by
/// (denominator, numerator), which is the row order used by every table
/// emitter.
class RootOfUnity {
 public:
  constexpr RootOfUnity() noexcept = default;

  std::int64_t numerator() const noexcept { return num_; }
  std::int64_t denominator() const noexcept { return den_; }
  /// Multiplicative order; equal to the reduced denominator.
  std::int64_t order() const noexcept { return den_; }
  bool is_one() const noexcept { return den_ == 1; }

  RootOfUnity inverse() const noexcept;

  friend bool operator==(const RootOfUnity&, const RootOfUnity&) = default;
  friend std::strong_ordering operator<=>(const RootOfUnity& a, const RootOfUnity& b) noexcept {
    if (auto c = a.den_ <=> b.den_; c != 0) return c;
    return a.num_ <=> b.num_;
  }

 private:
  friend RootOfUnity rou(std::int64_t k, std::int64_t n);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Canonical representative of exp(2*pi*i*k/n). Any integer k is accepted and
/// reduced modulo n; throws ErrorKind::invalid_order when n < 1.
RootOfUnity rou(std::int64_t k, std::int64_t n);

RootOfUnity rou_mul(RootOfUnity a, RootOfUnity b);
RootOfUnity rou_pow(RootOfUnity a, std::int64_t m);

inline RootOfUnity operator*(RootOfUnity a, RootOfUnity b) { return rou_mul(a, b); }

/// All n solutions of x^n = 1, listed as e(0/n), e(1/n), ..., e((n-1)/n).
std::vector<RootOfUnity> roots_of(std::int64_t n);

/// "1", "-1" or "e(k/n)".
std::string to_string(RootOfUnity a);
/// Always "k/n"; the identity is "0/1". Used by the JSON and CSV schemas.
std::string to_fraction_string(RootOfUnity a);
/// Inverse of to_fraction_string. Accepts any "k/n" with n >= 1 and normalizes.
RootOfUnity parse_fraction(std::string_view text);

}  // namespace plmono
