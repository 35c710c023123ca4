#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracles.hpp"

namespace plmono {
namespace {

std::map<oracle::Fraction, std::int64_t> plain_spectrum(const BrieskornPham& b) {
  std::map<oracle::Fraction, std::int64_t> out;
  for (const auto& [eta, c] : bp_spectrum(b)) out[{eta.numerator(), eta.denominator()}] = c;
  return out;
}

TEST(BrieskornPham, Validation) {
  EXPECT_THROW(BrieskornPham({3}), Error);
  EXPECT_THROW(BrieskornPham({3, 1}), Error);
  EXPECT_FALSE(BrieskornPham({2, 3}).is_homogeneous());
  try {
    bp_eigentable(BrieskornPham({2, 3}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::non_homogeneous);
  }
}

TEST(BrieskornPham, MilnorNumber) {
  EXPECT_EQ(bp_milnor_number(BrieskornPham({3, 3, 3})), 8);
  EXPECT_EQ(bp_milnor_number(BrieskornPham({2, 2})), 1);
  std::int64_t tuples = 0;
  for (const auto& [eta, c] : oracle::bp_tuple_counts({2, 3, 4})) tuples += c;
  EXPECT_EQ(tuples, 6);
  EXPECT_EQ(bp_milnor_number(BrieskornPham({2, 3, 4})), 6);
}

TEST(BrieskornPham, FermatCubicSurface) {
  EXPECT_EQ(bp_eigentable(BrieskornPham({3, 3, 3})), fixtures::example2_f());
}

TEST(BrieskornPham, SmallCasesFromEnumeration) {
  // Oracle: the single tuple (1,1) has eigenvalue e(1/2 + 1/2) = 1.
  EXPECT_EQ(oracle::bp_tuple_counts({2, 2}), (std::map<oracle::Fraction, std::int64_t>{{{0, 1}, 1}}));
  EXPECT_EQ(bp_eigentable(BrieskornPham({2, 2})), EigenTable(2, {{RootOfUnity{}, {1, 1}}}));

  // Oracle: (1,1,1) has eigenvalue e(3/2) = -1.
  EXPECT_EQ(oracle::bp_tuple_counts({2, 2, 2}), (std::map<oracle::Fraction, std::int64_t>{{{1, 2}, 1}}));
  EXPECT_EQ(bp_eigentable(BrieskornPham({2, 2, 2})),
            EigenTable(2, {{RootOfUnity{}, {1}}, {rou(1, 2), {0, 0, 1}}}));
}

TEST(BrieskornPham, SpectrumMatchesOracleIncludingUnequalExponents) {
  for (std::int64_t a = 2; a <= 7; ++a) {
    for (std::int64_t b = 2; b <= 7; ++b) {
      for (std::int64_t c = 2; c <= 5; ++c) {
        const BrieskornPham bp({a, b, c});
        EXPECT_EQ(plain_spectrum(bp), oracle::bp_tuple_counts({a, b, c}));
      }
    }
  }
}

TEST(BrieskornPham, TableProperties) {
  for (std::int64_t d = 2; d <= 6; ++d) {
    for (std::size_t n = 2; n <= 5; ++n) {
      const BrieskornPham bp(std::vector<std::int64_t>(n, d));
      const auto t = bp_eigentable(bp);
      std::int64_t middle = 0;
      for (const auto& [eta, dims] : t.entries()) {
        EXPECT_TRUE(rou_pow(eta, d).is_one());
        middle += dims[n - 1];
      }
      EXPECT_EQ(middle, bp_milnor_number(bp));
      EXPECT_TRUE(check_conjugation_symmetry(t));
      const std::int64_t sign = n % 2 == 1 ? 1 : -1;
      EXPECT_EQ(euler_char(total_betti(t)), 1 + sign * bp_milnor_number(bp));
      EXPECT_EQ(euler_char(total_betti(t)), bp_milnor_fiber_euler(bp));
    }
  }
}

}  // namespace
}  // namespace plmono
