#include "plmono/arrangement.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>

#include "plmono/error.hpp"

namespace plmono {

Hyperplane::Hyperplane(RationalVector coefficients) : coefficients_(std::move(coefficients)) {
  const bool nonzero = std::any_of(coefficients_.begin(), coefficients_.end(),
                                   [](const Rational& q) { return q != 0; });
  if (!nonzero) throw Error(ErrorKind::invalid_input, "hyperplane with all-zero linear form");
}

Arrangement::Arrangement(std::size_t ambient_dim, std::vector<Hyperplane> hyperplanes)
    : ambient_dim_(ambient_dim), hyperplanes_(std::move(hyperplanes)) {
  if (ambient_dim_ == 0) throw Error(ErrorKind::invalid_input, "ambient dimension must be positive");
  for (std::size_t i = 0; i < hyperplanes_.size(); ++i) {
    if (hyperplanes_[i].dimension() != ambient_dim_) {
      throw Error(ErrorKind::invalid_input,
                  "hyperplane " + std::to_string(i) + " has " +
                      std::to_string(hyperplanes_[i].dimension()) + " coefficients, expected " +
                      std::to_string(ambient_dim_));
    }
  }
  for (std::size_t i = 0; i < hyperplanes_.size(); ++i) {
    for (std::size_t j = i + 1; j < hyperplanes_.size(); ++j) {
      if (rank({hyperplanes_[i].coefficients(), hyperplanes_[j].coefficients()}) < 2) {
        throw Error(ErrorKind::not_reduced, "hyperplanes " + std::to_string(i) + " and " +
                                                std::to_string(j) + " are proportional");
      }
    }
  }
}

IntersectionLattice::IntersectionLattice(std::size_t ambient_dim, std::vector<Flat> flats)
    : ambient_dim_(ambient_dim), flats_(std::move(flats)) {}

std::size_t IntersectionLattice::rank() const noexcept {
  std::size_t r = 0;
  for (const auto& f : flats_) r = std::max(r, f.codim);
  return r;
}

bool IntersectionLattice::contains(const Flat& y, const Flat& x) {
  return std::includes(x.generators.begin(), x.generators.end(), y.generators.begin(),
                       y.generators.end());
}

CharPoly::CharPoly(std::vector<std::int64_t> coefficients) : coefficients_(std::move(coefficients)) {
  while (coefficients_.size() > 1 && coefficients_.back() == 0) coefficients_.pop_back();
  if (coefficients_.empty()) coefficients_.push_back(0);
}

std::int64_t CharPoly::operator()(std::int64_t t) const {
  std::int64_t value = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) value = value * t + *it;
  return value;
}

std::string to_string(const CharPoly& p) {
  std::string out;
  for (std::size_t k = p.coefficients().size(); k-- > 0;) {
    const std::int64_t c = p.coefficients()[k];
    if (c == 0) continue;
    const std::int64_t mag = c < 0 ? -c : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (k == 0) {
      out += std::to_string(mag);
      continue;
    }
    if (mag != 1) out += std::to_string(mag) + "*";
    out += k == 1 ? "t" : "t^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

IntersectionLattice build_lattice(const Arrangement& a) {
  const auto& hs = a.hyperplanes();
  const std::size_t n = a.ambient_dim();

  std::vector<Flat> flats;
  std::map<RationalMatrix, std::size_t> seen;
  flats.push_back(Flat{{}, 0, n, 1, {}});
  seen.emplace(RationalMatrix{}, 0);

  std::vector<std::size_t> frontier{0};
  while (!frontier.empty()) {
    std::vector<std::size_t> next;
    for (std::size_t idx : frontier) {
      for (std::size_t i = 0; i < hs.size(); ++i) {
        const auto& gens = flats[idx].generators;
        if (std::binary_search(gens.begin(), gens.end(), i)) continue;

        RationalMatrix rows = flats[idx].basis;
        rows.push_back(hs[i].coefficients());
        RationalMatrix basis = reduced_row_echelon(std::move(rows));
        if (seen.contains(basis)) continue;

        Flat flat;
        flat.codim = basis.size();
        flat.dim = n - flat.codim;
        for (std::size_t j = 0; j < hs.size(); ++j) {
          if (in_row_space(basis, hs[j].coefficients())) flat.generators.push_back(j);
        }
        flat.basis = std::move(basis);
        seen.emplace(flat.basis, flats.size());
        next.push_back(flats.size());
        flats.push_back(std::move(flat));
      }
    }
    frontier = std::move(next);
  }

  std::sort(flats.begin(), flats.end(), [](const Flat& x, const Flat& y) {
    if (x.codim != y.codim) return x.codim < y.codim;
    return x.basis < y.basis;
  });

  for (std::size_t x = 1; x < flats.size(); ++x) {
    std::int64_t sum = 0;
    for (std::size_t y = 0; y < x && flats[y].codim < flats[x].codim; ++y) {
      if (IntersectionLattice::contains(flats[y], flats[x])) sum += flats[y].mobius;
    }
    flats[x].mobius = -sum;
  }
  return IntersectionLattice(n, std::move(flats));
}

CharPoly char_poly(const IntersectionLattice& lattice) {
  std::vector<std::int64_t> coeffs(lattice.ambient_dim() + 1, 0);
  for (const auto& f : lattice.flats()) coeffs[f.dim] += f.mobius;
  return CharPoly(std::move(coeffs));
}

std::vector<std::int64_t> poincare_polynomial(const IntersectionLattice& lattice) {
  std::vector<std::int64_t> coeffs(lattice.rank() + 1, 0);
  for (const auto& f : lattice.flats()) {
    coeffs[f.codim] += (f.codim % 2 == 0 ? 1 : -1) * f.mobius;
  }
  return coeffs;
}

std::int64_t proj_complement_euler(const Arrangement& a) {
  if (a.size() == 0) {
    throw Error(ErrorKind::invalid_input, "projectivized complement needs at least one hyperplane");
  }
  const auto pi = poincare_polynomial(build_lattice(a));
  const std::size_t top = pi.size() - 1;

  // pi(t) = (1 + t) q(t), synthetic division in ascending powers.
  std::vector<std::int64_t> q(top, 0);
  q[0] = pi[0];
  for (std::size_t i = 1; i < top; ++i) q[i] = pi[i] - q[i - 1];
  if (pi[top] != q[top - 1]) {
    throw Error(ErrorKind::internal_consistency,
                "Poincare polynomial of a central arrangement is not divisible by 1 + t");
  }
  std::int64_t value = 0;
  for (std::size_t i = 0; i < q.size(); ++i) value += (i % 2 == 0 ? 1 : -1) * q[i];
  return value;
}

std::int64_t milnor_fiber_euler(const Arrangement& a) {
  return static_cast<std::int64_t>(a.size()) * proj_complement_euler(a);
}

EigenTable line_arrangement_eigentable(const Arrangement& a) {
  if (a.ambient_dim() != 2) {
    throw Error(ErrorKind::unsupported_dimension,
                "eigenspace tables are only available for line arrangements in 2 variables, got " +
                    std::to_string(a.ambient_dim()) + " variables");
  }
  const auto d = static_cast<std::int64_t>(a.size());
  if (d < 1) throw Error(ErrorKind::invalid_input, "line arrangement needs at least one line");

  EigenTable::Entries entries;
  entries.emplace(RootOfUnity{}, GradedDims{1, d - 1});
  if (d >= 3) {
    for (RootOfUnity eta : roots_of(d)) {
      if (!eta.is_one()) entries.emplace(eta, GradedDims{0, d - 2});
    }
  }
  return EigenTable(d, std::move(entries));
}

namespace {

Rational parse_rational(const std::string& token, std::size_t line_no) {
  auto bad = [&] {
    return Error(ErrorKind::invalid_input,
                 "line " + std::to_string(line_no) + ": not a rational number: '" + token + "'");
  };
  const auto slash = token.find('/');
  const std::string num = token.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : token.substr(slash + 1);
  auto is_integer = [](const std::string& s, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
                       [](unsigned char c) { return std::isdigit(c) != 0; });
  };
  if (!is_integer(num, true) || !is_integer(den, false)) throw bad();
  using boost::multiprecision::cpp_int;
  const cpp_int n(num[0] == '+' ? num.substr(1) : num);
  const cpp_int d(den);
  if (d == 0) throw bad();
  return Rational(n, d);
}

}  // namespace

Arrangement read_arrangement(std::istream& in) {
  std::vector<Hyperplane> hyperplanes;
  std::size_t dim = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    RationalVector coeffs;
    for (std::string token; fields >> token;) coeffs.push_back(parse_rational(token, line_no));
    if (coeffs.empty()) continue;
    if (dim == 0) dim = coeffs.size();
    if (coeffs.size() != dim) {
      throw Error(ErrorKind::invalid_input, "line " + std::to_string(line_no) + ": expected " +
                                                std::to_string(dim) + " coefficients, got " +
                                                std::to_string(coeffs.size()));
    }
    hyperplanes.emplace_back(std::move(coeffs));
  }
  if (hyperplanes.empty()) throw Error(ErrorKind::invalid_input, "arrangement file has no hyperplanes");
  return Arrangement(dim, std::move(hyperplanes));
}

Arrangement load_arrangement(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::invalid_input, "cannot open arrangement file " + path.string());
  return read_arrangement(in);
}

}  // namespace plmono
