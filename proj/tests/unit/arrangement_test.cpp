#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "fixtures.hpp"
#include "oracles.hpp"

namespace plmono {
namespace {

using fixtures::generic_lines;

std::int64_t kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return static_cast<std::int64_t>(e.kind());
  }
  return -1;
}

// Lattice in oracle form: (sorted closure bitmask, codim, mobius).
std::vector<std::tuple<std::uint32_t, std::size_t, std::int64_t>> summary(const IntersectionLattice& l) {
  std::vector<std::tuple<std::uint32_t, std::size_t, std::int64_t>> out;
  for (const auto& f : l.flats()) {
    std::uint32_t mask = 0;
    for (auto g : f.generators) mask |= 1u << g;
    out.emplace_back(mask, f.codim, f.mobius);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::tuple<std::uint32_t, std::size_t, std::int64_t>> summary(
    const std::vector<oracle::BruteFlat>& flats) {
  std::vector<std::tuple<std::uint32_t, std::size_t, std::int64_t>> out;
  for (const auto& f : flats) out.emplace_back(f.closure, f.codim, f.mobius);
  std::sort(out.begin(), out.end());
  return out;
}

void expect_lattice_invariants(const IntersectionLattice& l) {
  const auto& flats = l.flats();
  ASSERT_FALSE(flats.empty());
  EXPECT_EQ(flats.front().codim, 0u);
  EXPECT_EQ(flats.front().mobius, 1);
  for (const auto& x : flats) {
    EXPECT_EQ(x.dim + x.codim, l.ambient_dim());
    const std::int64_t sign = x.codim % 2 == 0 ? 1 : -1;
    EXPECT_GT(sign * x.mobius, 0);
    if (x.codim == 0) continue;
    std::int64_t sum = 0;
    for (const auto& y : flats) {
      if (IntersectionLattice::contains(y, x)) sum += y.mobius;
    }
    EXPECT_EQ(sum, 0);
  }
}

TEST(Arrangement, RejectsProportionalHyperplanes) {
  EXPECT_EQ(kind_of([] { Arrangement(2, {Hyperplane({1, 2}), Hyperplane({-2, -4})}); }),
            static_cast<std::int64_t>(ErrorKind::not_reduced));
  EXPECT_EQ(kind_of([] { Arrangement(2, {Hyperplane({1, 2, 3})}); }),
            static_cast<std::int64_t>(ErrorKind::invalid_input));
  EXPECT_THROW(Hyperplane({0, 0}), Error);
}

TEST(BuildLattice, FourGenericLines) {
  const auto lattice = build_lattice(generic_lines(4));
  ASSERT_EQ(lattice.flats().size(), 6u);
  EXPECT_EQ(lattice.flats()[0].mobius, 1);
  for (std::size_t i = 1; i <= 4; ++i) {
    EXPECT_EQ(lattice.flats()[i].codim, 1u);
    EXPECT_EQ(lattice.flats()[i].mobius, -1);
  }
  EXPECT_EQ(lattice.flats()[5].codim, 2u);
  EXPECT_EQ(lattice.flats()[5].mobius, 3);
  EXPECT_EQ(lattice.flats()[5].generators, (std::vector<std::size_t>{0, 1, 2, 3}));
  expect_lattice_invariants(lattice);
}

TEST(BuildLattice, BooleanPairAndEmpty) {
  const auto pair = build_lattice(fixtures::boolean_arrangement(2));
  EXPECT_EQ(pair.flats().back().mobius, 1);
  const auto empty = build_lattice(Arrangement(3, {}));
  ASSERT_EQ(empty.flats().size(), 1u);
  EXPECT_EQ(empty.flats().front().mobius, 1);
  EXPECT_EQ(char_poly(empty), CharPoly({0, 0, 0, 1}));
}

TEST(BuildLattice, AgreesWithSubsetOracle) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(trial % 3);
    const std::size_t count = 1 + static_cast<std::size_t>(trial % 7);
    const auto a = fixtures::random_arrangement(rng, n, count);
    const auto lattice = build_lattice(a);
    expect_lattice_invariants(lattice);
    const auto forms = fixtures::integer_forms(a);
    EXPECT_EQ(summary(lattice), summary(oracle::brute_lattice(forms)));
    EXPECT_EQ(char_poly(lattice).coefficients(), oracle::whitney_char_poly(n, forms));
  }
}

TEST(BuildLattice, NonGenericPlaneArrangement) {
  // Braid arrangement x_i - x_j in Q^4.
  std::vector<Hyperplane> hs;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      RationalVector v(4, Rational(0));
      v[static_cast<std::size_t>(i)] = 1;
      v[static_cast<std::size_t>(j)] = -1;
      hs.emplace_back(std::move(v));
    }
  }
  const Arrangement braid(4, std::move(hs));
  const auto lattice = build_lattice(braid);
  expect_lattice_invariants(lattice);
  // t(t-1)(t-2)(t-3)
  EXPECT_EQ(char_poly(lattice), CharPoly({0, -6, 11, -6, 1}));
  EXPECT_EQ(char_poly(lattice).coefficients(), oracle::whitney_char_poly(4, fixtures::integer_forms(braid)));
}

TEST(BuildLattice, IndependentOfOrderAndScaling) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = fixtures::random_arrangement(rng, 3, 5);
    auto hs = a.hyperplanes();
    std::shuffle(hs.begin(), hs.end(), rng);
    std::vector<Hyperplane> scaled;
    for (const auto& h : hs) {
      RationalVector v = h.coefficients();
      for (auto& x : v) x *= Rational(-3, 7);
      scaled.emplace_back(std::move(v));
    }
    const auto l1 = build_lattice(a);
    const auto l2 = build_lattice(Arrangement(3, std::move(scaled)));
    ASSERT_EQ(l1.flats().size(), l2.flats().size());
    for (std::size_t i = 0; i < l1.flats().size(); ++i) {
      EXPECT_EQ(l1.flats()[i].basis, l2.flats()[i].basis);
      EXPECT_EQ(l1.flats()[i].mobius, l2.flats()[i].mobius);
    }
  }
}

TEST(CharPoly, GenericLines) {
  EXPECT_EQ(char_poly(build_lattice(generic_lines(4))), CharPoly({3, -4, 1}));
  EXPECT_EQ(to_string(char_poly(build_lattice(generic_lines(4)))), "t^2 - 4*t + 3");
  for (int d = 2; d <= 6; ++d) {
    const auto forms = fixtures::integer_forms(generic_lines(d));
    EXPECT_EQ(oracle::whitney_char_poly(2, forms), (std::vector<std::int64_t>{d - 1, -d, 1}));
    EXPECT_EQ(char_poly(build_lattice(generic_lines(d))), CharPoly({d - 1, -d, 1}));
  }
}

TEST(CharPoly, PoincareAtOneCountsMobiusMagnitudes) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const auto lattice = build_lattice(fixtures::random_arrangement(rng, 3, 1 + trial % 6));
    const auto pi = poincare_polynomial(lattice);
    std::int64_t at_one = 0;
    for (auto c : pi) {
      EXPECT_GE(c, 0);
      at_one += c;
    }
    std::int64_t abs_sum = 0;
    for (const auto& f : lattice.flats()) abs_sum += f.mobius < 0 ? -f.mobius : f.mobius;
    EXPECT_EQ(at_one, abs_sum);
  }
}

TEST(EulerCharacteristics, GenericLines) {
  EXPECT_EQ(proj_complement_euler(generic_lines(4)), -2);
  EXPECT_EQ(proj_complement_euler(generic_lines(5)), -3);
  EXPECT_EQ(milnor_fiber_euler(generic_lines(4)), -8);
  EXPECT_EQ(milnor_fiber_euler(generic_lines(6)), -24);
  for (std::size_t n = 1; n <= 4; ++n) {
    RationalVector v(n, Rational(0));
    v[0] = 1;
    const Arrangement one(n, {Hyperplane(v)});
    EXPECT_EQ(proj_complement_euler(one), 1);
    EXPECT_EQ(milnor_fiber_euler(one), 1);
  }
  EXPECT_THROW(proj_complement_euler(Arrangement(2, {})), Error);
}

TEST(EulerCharacteristics, BooleanArrangementIsATorus) {
  // Complement of the coordinate hyperplanes in P^{n-1} is (C^*)^{n-1}.
  for (std::size_t n = 2; n <= 4; ++n) {
    EXPECT_EQ(proj_complement_euler(fixtures::boolean_arrangement(n)), 0);
  }
}

TEST(LineArrangementEigentable, GoldenTables) {
  EXPECT_EQ(line_arrangement_eigentable(generic_lines(4)), fixtures::example1_f());
  EXPECT_EQ(line_arrangement_eigentable(generic_lines(5)), fixtures::example1_g());
  EXPECT_EQ(line_arrangement_eigentable(generic_lines(6)), fixtures::example2_g());
  EXPECT_EQ(line_arrangement_eigentable(generic_lines(1)), EigenTable(1, {{RootOfUnity{}, {1}}}));
  // Two lines: the -1 eigenspace is zero and absent.
  EXPECT_EQ(line_arrangement_eigentable(generic_lines(2)), EigenTable(2, {{RootOfUnity{}, {1, 1}}}));
}

TEST(LineArrangementEigentable, RejectsHigherDimension) {
  EXPECT_EQ(kind_of([] { line_arrangement_eigentable(fixtures::boolean_arrangement(3)); }),
            static_cast<std::int64_t>(ErrorKind::unsupported_dimension));
}

TEST(LineArrangementEigentable, CrossChecks) {
  for (int d = 1; d <= 10; ++d) {
    const auto a = generic_lines(d);
    const auto t = line_arrangement_eigentable(a);
    EXPECT_EQ(total_betti(t), GradedDims({1, (d - 1) * (d - 1)}));
    EXPECT_EQ(euler_char(total_betti(t)), milnor_fiber_euler(a));
    EXPECT_TRUE(check_conjugation_symmetry(t));
    if (d >= 2) {
      // x^d + y^d splits into d distinct lines over C.
      EXPECT_EQ(t, bp_eigentable(BrieskornPham({d, d})));
    }
  }
}

TEST(ArrangementFile, ParsesCommentsAndRationals) {
  std::istringstream in("# four lines\n1 0\n0 1\n\n1 1   # diagonal\n1 2\n");
  const auto a = read_arrangement(in);
  EXPECT_EQ(a.ambient_dim(), 2u);
  EXPECT_EQ(a.size(), 4u);
  EXPECT_EQ(char_poly(build_lattice(a)), CharPoly({3, -4, 1}));

  std::istringstream half("1/2 -3/4 1\n");
  EXPECT_EQ(read_arrangement(half).hyperplanes().front().coefficients()[1], Rational(-3, 4));

  std::istringstream ragged("1 0\n1 2 3\n");
  EXPECT_THROW(read_arrangement(ragged), Error);
  std::istringstream junk("1 x\n");
  EXPECT_THROW(read_arrangement(junk), Error);
  std::istringstream nothing("# empty\n");
  EXPECT_THROW(read_arrangement(nothing), Error);
  std::istringstream dup("1 1\n2 2\n");
  EXPECT_THROW(read_arrangement(dup), Error);
}

}  // namespace
}  // namespace plmono
