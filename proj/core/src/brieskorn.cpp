#include "plmono/brieskorn.hpp"

#include <algorithm>

#include "plmono/error.hpp"

namespace plmono {

BrieskornPham::BrieskornPham(std::vector<std::int64_t> exponents) : exponents_(std::move(exponents)) {
  if (exponents_.size() < 2) {
    throw Error(ErrorKind::invalid_input, "Brieskorn-Pham polynomial needs at least two variables");
  }
  for (auto a : exponents_) {
    if (a < 2) {
      throw Error(ErrorKind::invalid_input,
                  "Brieskorn-Pham exponents must be >= 2, got " + std::to_string(a));
    }
  }
}

bool BrieskornPham::is_homogeneous() const noexcept {
  return std::adjacent_find(exponents_.begin(), exponents_.end(), std::not_equal_to<>{}) ==
         exponents_.end();
}

std::int64_t BrieskornPham::degree() const {
  if (!is_homogeneous()) {
    throw Error(ErrorKind::non_homogeneous,
                "Brieskorn-Pham exponents differ; use the raw spectrum instead of a table");
  }
  return exponents_.front();
}

std::int64_t bp_milnor_number(const BrieskornPham& b) {
  std::int64_t mu = 1;
  for (auto a : b.exponents()) mu *= a - 1;
  return mu;
}

std::map<RootOfUnity, std::int64_t> bp_spectrum(const BrieskornPham& b) {
  const auto& a = b.exponents();
  const std::size_t n = a.size();
  std::vector<std::int64_t> k(n, 1);

  // partial[i] = product of the first i factors, so advancing the odometer
  // only recomputes the suffix that changed.
  std::vector<RootOfUnity> partial(n + 1);
  for (std::size_t i = 0; i < n; ++i) partial[i + 1] = partial[i] * rou(k[i], a[i]);

  std::map<RootOfUnity, std::int64_t> counts;
  while (true) {
    ++counts[partial[n]];
    std::size_t pos = n;
    while (pos > 0) {
      --pos;
      if (++k[pos] < a[pos]) break;
      k[pos] = 1;
      if (pos == 0) return counts;
    }
    for (std::size_t i = pos; i < n; ++i) partial[i + 1] = partial[i] * rou(k[i], a[i]);
  }
}

EigenTable bp_eigentable(const BrieskornPham& b) {
  const std::int64_t d = b.degree();
  const std::size_t middle = b.variables() - 1;

  EigenTable::Entries entries;
  std::vector<std::int64_t> trivial(middle + 1, 0);
  trivial[0] = 1;
  entries.emplace(RootOfUnity{}, GradedDims(trivial));
  for (const auto& [eta, count] : bp_spectrum(b)) {
    std::vector<std::int64_t> dims(middle + 1, 0);
    dims[middle] = count;
    auto [it, inserted] = entries.emplace(eta, GradedDims(dims));
    if (!inserted) it->second += GradedDims(std::move(dims));
  }
  return EigenTable(d, std::move(entries));
}

std::int64_t bp_milnor_fiber_euler(const BrieskornPham& b) {
  const std::int64_t sign = b.variables() % 2 == 1 ? 1 : -1;  // (-1)^{n-1}
  return 1 + sign * bp_milnor_number(b);
}

}  // namespace plmono
