#include "plmono/zeta.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <vector>

namespace plmono {
namespace {

std::string describe(const ZetaFunction& grouped, const LinearFactorProduct& residue) {
  return "cannot group " + to_string(residue) + " into cyclotomic factors (grouped so far: " +
         to_string(grouped) + ")";
}

std::string power_suffix(std::int64_t e) { return e == 1 ? "" : "^" + std::to_string(e); }

}  // namespace

NotGroupableError::NotGroupableError(ZetaFunction grouped, LinearFactorProduct residue)
    : Error(ErrorKind::not_cyclotomic_groupable, describe(grouped, residue)),
      grouped_(std::move(grouped)),
      residue_(std::move(residue)) {}

LinearFactorProduct zeta_from_table(const EigenTable& t) {
  LinearFactorProduct out;
  for (const auto& [eta, dims] : t.entries()) {
    // (-1)^{j+1} is minus the Euler sign.
    const std::int64_t e = -euler_char(dims);
    if (e != 0) out.exponents.emplace(eta, e);
  }
  return out;
}

ZetaFunction group_cyclotomic(const LinearFactorProduct& p) {
  std::int64_t lcm = 1;
  for (const auto& [eta, e] : p.exponents) lcm = std::lcm(lcm, eta.order());

  std::vector<std::int64_t> divisors;
  for (std::int64_t m = lcm; m >= 1; --m) {
    if (lcm % m == 0) divisors.push_back(m);
  }

  LinearFactorProduct residue = p;
  ZetaFunction out;
  for (std::int64_t m : divisors) {
    const auto orbit = roots_of(m);
    // Largest k, sign-consistent across the orbit, with |k| <= every |e|.
    std::int64_t k = 0;
    bool first = true;
    for (RootOfUnity eta : orbit) {
      auto it = residue.exponents.find(eta);
      const std::int64_t e = it == residue.exponents.end() ? 0 : it->second;
      if (first) {
        k = e;
        first = false;
      } else if ((e > 0) != (k > 0) || e == 0) {
        k = 0;
      } else if (std::llabs(e) < std::llabs(k)) {
        k = e;
      }
      if (k == 0) break;
    }
    if (k == 0) continue;
    for (RootOfUnity eta : orbit) {
      auto it = residue.exponents.find(eta);
      it->second -= k;
      if (it->second == 0) residue.exponents.erase(it);
    }
    out.exponents[m] += k;
  }
  if (!residue.empty()) throw NotGroupableError(std::move(out), std::move(residue));
  return out;
}

ZetaFunction zeta_homogeneous(std::int64_t degree, std::int64_t euler) {
  if (degree < 1) {
    throw Error(ErrorKind::invalid_input, "degree must be positive, got " + std::to_string(degree));
  }
  if (euler % degree != 0) {
    throw Error(ErrorKind::invalid_input, "Euler characteristic " + std::to_string(euler) +
                                              " is not divisible by the degree " +
                                              std::to_string(degree));
  }
  ZetaFunction out;
  if (euler != 0) out.exponents.emplace(degree, -euler / degree);
  return out;
}

std::string to_string(const ZetaFunction& z) {
  if (z.empty()) return "1";
  std::string out;
  for (const auto& [m, e] : z.exponents) {
    out += m == 1 ? "(1-t)" : "(1-t^" + std::to_string(m) + ")";
    out += power_suffix(e);
  }
  return out;
}

std::string to_string(const LinearFactorProduct& p) {
  if (p.empty()) return "1";
  std::string out;
  for (const auto& [eta, e] : p.exponents) {
    if (eta.is_one()) {
      out += "(1-t)";
    } else if (eta.denominator() == 2) {
      out += "(1+t)";
    } else {
      out += "(1-" + to_string(eta) + "t)";
    }
    out += power_suffix(e);
  }
  return out;
}

}  // namespace plmono
