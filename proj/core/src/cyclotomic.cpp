#include "plmono/cyclotomic.hpp"

#include <charconv>
#include <numeric>

#include "plmono/error.hpp"

namespace plmono {
namespace {

std::int64_t floor_mod(std::int64_t a, std::int64_t n) {
  const std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

}  // namespace

RootOfUnity rou(std::int64_t k, std::int64_t n) {
  if (n < 1) {
    throw Error(ErrorKind::invalid_order,
                "root of unity denominator must be positive, got " + std::to_string(n));
  }
  k = floor_mod(k, n);
  const std::int64_t g = std::gcd(k, n);  // gcd(0, n) = n collapses to (0, 1)
  RootOfUnity out;
  out.num_ = k / g;
  out.den_ = n / g;
  return out;
}

RootOfUnity RootOfUnity::inverse() const noexcept {
  RootOfUnity out;
  out.den_ = den_;
  out.num_ = num_ == 0 ? 0 : den_ - num_;
  return out;
}

RootOfUnity rou_mul(RootOfUnity a, RootOfUnity b) {
  const std::int64_t n = std::lcm(a.denominator(), b.denominator());
  const std::int64_t k = a.numerator() * (n / a.denominator()) +
                         b.numerator() * (n / b.denominator());
  return rou(k, n);
}

RootOfUnity rou_pow(RootOfUnity a, std::int64_t m) {
  const std::int64_t n = a.denominator();
  return rou(a.numerator() * floor_mod(m, n), n);
}

std::vector<RootOfUnity> roots_of(std::int64_t n) {
  if (n < 1) {
    throw Error(ErrorKind::invalid_order, "roots_of needs n >= 1, got " + std::to_string(n));
  }
  std::vector<RootOfUnity> out;
  out.reserve(static_cast<std::size_t>(n));
  for (std::int64_t k = 0; k < n; ++k) out.push_back(rou(k, n));
  return out;
}

std::string to_string(RootOfUnity a) {
  if (a.is_one()) return "1";
  if (a.denominator() == 2) return "-1";
  return "e(" + to_fraction_string(a) + ")";
}

std::string to_fraction_string(RootOfUnity a) {
  return std::to_string(a.numerator()) + "/" + std::to_string(a.denominator());
}

RootOfUnity parse_fraction(std::string_view text) {
  const auto slash = text.find('/');
  auto bad = [&] {
    return Error(ErrorKind::invalid_input, "expected eigenvalue of the form k/n, got '" +
                                               std::string(text) + "'");
  };
  if (slash == std::string_view::npos) throw bad();
  std::int64_t k = 0;
  std::int64_t n = 0;
  const char* first = text.data();
  const char* mid = first + slash;
  const char* last = first + text.size();
  auto r1 = std::from_chars(first, mid, k);
  auto r2 = std::from_chars(mid + 1, last, n);
  if (r1.ec != std::errc{} || r1.ptr != mid || r2.ec != std::errc{} || r2.ptr != last) throw bad();
  return rou(k, n);
}

}  // namespace plmono
