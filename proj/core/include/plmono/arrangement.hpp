#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "plmono/eigencalc.hpp"
#include "plmono/linalg.hpp"

namespace plmono {

/// A linear hyperplane through the origin, given by the coefficients of its
/// defining linear form.
class Hyperplane {
 public:
  explicit Hyperplane(RationalVector coefficients);

  const RationalVector& coefficients() const noexcept { return coefficients_; }
  std::size_t dimension() const noexcept { return coefficients_.size(); }

  friend bool operator==(const Hyperplane&, const Hyperplane&) = default;

 private:
  RationalVector coefficients_;
};

/// A central arrangement in Q^n. The defining polynomial is the product of
/// the linear forms, so pairwise proportional forms (a non-reduced
/// polynomial) are rejected with ErrorKind::not_reduced.
class Arrangement {
 public:
  Arrangement(std::size_t ambient_dim, std::vector<Hyperplane> hyperplanes);

  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  const std::vector<Hyperplane>& hyperplanes() const noexcept { return hyperplanes_; }
  /// Number of hyperplanes, i.e. the degree of the defining polynomial.
  std::size_t size() const noexcept { return hyperplanes_.size(); }

 private:
  std::size_t ambient_dim_;
  std::vector<Hyperplane> hyperplanes_;
};

/// A flat X of the intersection lattice. `basis` is the reduced row echelon
/// form of the linear forms vanishing on X, so codim(X) = basis.size().
/// `generators` lists, in increasing order, every hyperplane containing X.
struct Flat {
  RationalMatrix basis;
  std::size_t codim = 0;
  std::size_t dim = 0;
  std::int64_t mobius = 0;
  std::vector<std::size_t> generators;
};

class IntersectionLattice {
 public:
  IntersectionLattice(std::size_t ambient_dim, std::vector<Flat> flats);

  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  /// Sorted by codimension, then by basis; flats().front() is the ambient space.
  const std::vector<Flat>& flats() const noexcept { return flats_; }
  std::size_t rank() const noexcept;

  /// True iff generators(y) is a subset of generators(x), i.e. X lies in Y.
  static bool contains(const Flat& y, const Flat& x);

 private:
  std::size_t ambient_dim_;
  std::vector<Flat> flats_;
};

/// Integer polynomial stored by ascending power of t.
class CharPoly {
 public:
  explicit CharPoly(std::vector<std::int64_t> coefficients);

  const std::vector<std::int64_t>& coefficients() const noexcept { return coefficients_; }
  std::size_t degree() const noexcept { return coefficients_.size() - 1; }
  std::int64_t operator()(std::int64_t t) const;
  std::int64_t coefficient(std::size_t power) const noexcept {
    return power < coefficients_.size() ? coefficients_[power] : 0;
  }

  friend bool operator==(const CharPoly&, const CharPoly&) = default;

 private:
  std::vector<std::int64_t> coefficients_;
};

/// Formats as e.g. "t^2 - 4*t + 3".
std::string to_string(const CharPoly& p);

/// Breadth-first closure of the ambient space under intersection with each
/// hyperplane, followed by the Mobius recursion mu(X) = -sum_{Y strictly
/// containing X} mu(Y).
IntersectionLattice build_lattice(const Arrangement& a);

/// chi(A, t) = sum over flats X of mu(X) * t^dim(X).
CharPoly char_poly(const IntersectionLattice& lattice);

/// Poincare polynomial of the complement, pi(A, t) = sum mu(X) (-t)^codim(X),
/// in ascending powers. All coefficients are nonnegative.
std::vector<std::int64_t> poincare_polynomial(const IntersectionLattice& lattice);

/// Euler characteristic of the projectivized complement: pi(A, t) / (1 + t)
/// evaluated at t = -1. Needs at least one hyperplane.
std::int64_t proj_complement_euler(const Arrangement& a);

/// Euler characteristic of the Milnor fiber, deg * chi(projectivized complement).
std::int64_t milnor_fiber_euler(const Arrangement& a);

/// Monodromy eigenspaces of d >= 1 distinct lines through the origin in C^2.
/// The projectivized complement is P^1 minus d points; the rank one local
/// system with monodromy eta around each point has no H^0 for eta != 1 and
/// H^1 of dimension d - 2. Throws unsupported_dimension off the plane.
EigenTable line_arrangement_eigentable(const Arrangement& a);

/// Plain text arrangement: one hyperplane per line as whitespace separated
/// rationals ("1", "-2", "3/4"); '#' starts a comment; blank lines skipped.
Arrangement read_arrangement(std::istream& in);
Arrangement load_arrangement(const std::filesystem::path& path);

}  // namespace plmono
