#pragma once

// Tables transcribed from the two worked examples, plus random generators
// shared by the unit and acceptance suites.

#include <cstdint>
#include <random>
#include <vector>

#include "plmono/plmono.hpp"
#include "oracles.hpp"

namespace plmono::fixtures {

// Example 1: f = x1 x2 (x1+x2)(x1+2x2), g = y1 y2 (y1+y2)(y1+2y2)(y1+3y2).
inline EigenTable example1_f() {
  return EigenTable(4, {{rou(0, 1), {1, 3}},
                        {rou(1, 4), {0, 2}},
                        {rou(1, 2), {0, 2}},
                        {rou(3, 4), {0, 2}}});
}

inline EigenTable example1_g() {
  EigenTable::Entries e{{rou(0, 1), {1, 4}}};
  for (int k = 1; k <= 4; ++k) e.emplace(rou(k, 5), GradedDims{0, 3});
  return EigenTable(5, std::move(e));
}

inline EigenTable example1_fg() { return EigenTable(9, {{rou(0, 1), {1, 8, 19, 12}}}); }

// Example 2 writes its eigenvalues as powers of omega = exp(2 pi i / 6).
inline EigenTable example2_f() {
  return EigenTable(3, {{rou(0, 6), {1, 0, 2}}, {rou(2, 6), {0, 0, 3}}, {rou(4, 6), {0, 0, 3}}});
}

inline EigenTable example2_g() {
  EigenTable::Entries e{{rou(0, 6), {1, 5}}};
  for (int k = 1; k <= 5; ++k) e.emplace(rou(k, 6), GradedDims{0, 4});
  return EigenTable(6, std::move(e));
}

inline EigenTable example2_fg() {
  return EigenTable(9, {{rou(0, 6), {1, 6, 7, 12, 10}},
                        {rou(2, 6), {0, 0, 0, 12, 12}},
                        {rou(4, 6), {0, 0, 0, 12, 12}}});
}

inline constexpr const char* kExample1F = "x1*x2*(x1+x2)*(x1+2*x2)";
inline constexpr const char* kExample1G = "y1*y2*(y1+y2)*(y1+2*y2)*(y1+3*y2)";
inline constexpr const char* kExample1 =
    "x1*x2*(x1+x2)*(x1+2*x2)*y1*y2*(y1+y2)*(y1+2*y2)*(y1+3*y2)";
inline constexpr const char* kExample2F = "x1^3+x2^3+x3^3";
inline constexpr const char* kExample2G = "y1*y2*(y1+y2)*(y1+2*y2)*(y1+3*y2)*(y1+4*y2)";
inline constexpr const char* kExample2 =
    "(x1^3+x2^3+x3^3)*(y1*y2*(y1+y2)*(y1+2*y2)*(y1+3*y2)*(y1+4*y2))";

/// Lines y = k x through the origin: (1, k) for k = 0..d-2 plus (0, 1).
inline Arrangement generic_lines(int d) {
  std::vector<Hyperplane> hs;
  if (d >= 1) hs.emplace_back(RationalVector{0, 1});
  for (int k = 0; k + 1 < d; ++k) hs.emplace_back(RationalVector{1, k});
  return Arrangement(2, std::move(hs));
}

/// Coordinate hyperplanes x_1 ... x_n.
inline Arrangement boolean_arrangement(std::size_t n) {
  std::vector<Hyperplane> hs;
  for (std::size_t i = 0; i < n; ++i) {
    RationalVector v(n, Rational(0));
    v[i] = 1;
    hs.emplace_back(std::move(v));
  }
  return Arrangement(n, std::move(hs));
}

/// Random reduced arrangement of `count` hyperplanes in Q^n with small
/// rational coefficients. Proportional candidates are redrawn.
inline Arrangement random_arrangement(std::mt19937_64& rng, std::size_t n, std::size_t count,
                                      bool rational = true) {
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, rational ? 4 : 1);
  std::vector<Hyperplane> hs;
  while (hs.size() < count) {
    RationalVector v(n);
    bool nonzero = false;
    for (auto& x : v) {
      x = Rational(num(rng), den(rng));
      nonzero = nonzero || x != 0;
    }
    if (!nonzero) continue;
    bool proportional = false;
    for (const auto& h : hs) {
      if (rank({h.coefficients(), v}) < 2) proportional = true;
    }
    if (!proportional) hs.emplace_back(std::move(v));
  }
  return Arrangement(n, std::move(hs));
}

/// Clears denominators row by row so the oracle can work over Z.
inline std::vector<oracle::IntRow> integer_forms(const Arrangement& a) {
  std::vector<oracle::IntRow> out;
  for (const auto& h : a.hyperplanes()) {
    boost::multiprecision::cpp_int l = 1;
    for (const auto& q : h.coefficients()) {
      const auto d = boost::multiprecision::denominator(q);
      l = l / boost::multiprecision::gcd(l, d) * d;
    }
    oracle::IntRow row;
    for (const auto& q : h.coefficients()) {
      const Rational scaled = q * l;
      row.push_back(static_cast<std::int64_t>(boost::multiprecision::numerator(scaled)));
    }
    out.push_back(std::move(row));
  }
  return out;
}

inline oracle::PlainTable plain(const EigenTable& t) {
  oracle::PlainTable out;
  for (const auto& [eta, dims] : t.entries()) {
    out[{eta.numerator(), eta.denominator()}] =
        std::vector<std::int64_t>(dims.values().begin(), dims.values().end());
  }
  return out;
}

/// One side of a randomized pair: a line arrangement with 1..8 lines or a
/// Fermat polynomial x_1^d + ... + x_n^d with 2 <= d <= 4 and 2 <= n <= 4.
inline EigenTable random_builder_table(std::mt19937_64& rng, bool allow_fermat) {
  std::uniform_int_distribution<int> coin(0, 1);
  if (allow_fermat && coin(rng)) {
    std::uniform_int_distribution<int> deg(2, 4);
    std::uniform_int_distribution<int> vars(2, 4);
    const int d = deg(rng);
    return bp_eigentable(BrieskornPham(std::vector<std::int64_t>(static_cast<std::size_t>(vars(rng)), d)));
  }
  std::uniform_int_distribution<int> lines(1, 8);
  return line_arrangement_eigentable(random_arrangement(rng, 2, static_cast<std::size_t>(lines(rng))));
}

}  // namespace plmono::fixtures
