#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "plmono/eigencalc.hpp"
#include "plmono/error.hpp"

namespace plmono {

/// prod_eta (1 - eta t)^{e_eta}; zero exponents are never stored.
struct LinearFactorProduct {
  std::map<RootOfUnity, std::int64_t> exponents;

  bool empty() const noexcept { return exponents.empty(); }
  friend bool operator==(const LinearFactorProduct&, const LinearFactorProduct&) = default;
};

/// prod_m (1 - t^m)^{e_m}; the constant 1 is the empty map.
struct ZetaFunction {
  std::map<std::int64_t, std::int64_t> exponents;

  bool empty() const noexcept { return exponents.empty(); }
  friend bool operator==(const ZetaFunction&, const ZetaFunction&) = default;
};

/// Thrown by group_cyclotomic. Carries what was extracted so far and the
/// residue that could not be matched to full orbits.
class NotGroupableError : public Error {
 public:
  NotGroupableError(ZetaFunction grouped, LinearFactorProduct residue);

  const ZetaFunction& grouped() const noexcept { return grouped_; }
  const LinearFactorProduct& residue() const noexcept { return residue_; }

 private:
  ZetaFunction grouped_;
  LinearFactorProduct residue_;
};

/// zeta(t) = prod_j det(I - t T | H^j)^{(-1)^{j+1}}; the exponent of
/// (1 - eta t) is sum_j (-1)^{j+1} dim H^j_eta.
LinearFactorProduct zeta_from_table(const EigenTable& t);

/// Rewrites full orbits of m-th roots as (1 - t^m), for m running down the
/// divisors of the lcm of the orders present. Throws NotGroupableError if
/// anything is left over.
ZetaFunction group_cyclotomic(const LinearFactorProduct& p);

/// (1 - t^d)^{-chi/d}, the zeta function of a homogeneous polynomial of
/// degree d whose Milnor fiber has Euler characteristic chi.
ZetaFunction zeta_homogeneous(std::int64_t degree, std::int64_t euler);

/// "(1-t^4)^2", "(1-t)^-1", juxtaposed by ascending m; "1" when empty.
std::string to_string(const ZetaFunction& z);
/// "(1-t)^2(1-e(1/4)t)^2..." in eigenvalue order; "1" when empty.
std::string to_string(const LinearFactorProduct& p);

}  // namespace plmono
