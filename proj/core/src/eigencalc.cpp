#include "plmono/eigencalc.hpp"

#include <algorithm>
#include <numeric>

#include "plmono/error.hpp"

namespace plmono {

GradedDims::GradedDims(std::initializer_list<std::int64_t> dims)
    : GradedDims(std::vector<std::int64_t>(dims)) {}

GradedDims::GradedDims(std::vector<std::int64_t> dims) : dims_(std::move(dims)) {
  for (std::size_t j = 0; j < dims_.size(); ++j) {
    if (dims_[j] < 0) {
      throw Error(ErrorKind::invalid_input, "negative dimension " + std::to_string(dims_[j]) +
                                                " in degree " + std::to_string(j));
    }
  }
  trim();
}

void GradedDims::trim() {
  while (!dims_.empty() && dims_.back() == 0) dims_.pop_back();
}

std::int64_t GradedDims::total() const noexcept {
  return std::accumulate(dims_.begin(), dims_.end(), std::int64_t{0});
}

GradedDims& GradedDims::operator+=(const GradedDims& other) {
  if (other.dims_.size() > dims_.size()) dims_.resize(other.dims_.size(), 0);
  for (std::size_t j = 0; j < other.dims_.size(); ++j) dims_[j] += other.dims_[j];
  trim();
  return *this;
}

GradedDims tensor_graded(const GradedDims& a, const GradedDims& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<std::int64_t> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return GradedDims(std::move(out));
}

std::int64_t euler_char(const GradedDims& g) {
  std::int64_t chi = 0;
  for (std::size_t j = 0; j < g.size(); ++j) chi += (j % 2 == 0 ? 1 : -1) * g[j];
  return chi;
}

std::string to_string(const GradedDims& g) {
  std::string out = "(";
  for (std::size_t j = 0; j < g.size(); ++j) {
    if (j) out += ",";
    out += std::to_string(g[j]);
  }
  return out + ")";
}

EigenTable::EigenTable(std::int64_t degree, Entries entries) : degree_(degree) {
  if (degree < 1) {
    throw Error(ErrorKind::invalid_table, "degree must be positive, got " + std::to_string(degree));
  }
  for (auto& [eta, dims] : entries) {
    if (dims.is_zero()) continue;
    if (degree % eta.order() != 0) {
      throw Error(ErrorKind::invalid_table, "eigenvalue " + to_string(eta) +
                                                " is not a root of unity of order dividing " +
                                                std::to_string(degree));
    }
    if (!eta.is_one() && dims[0] != 0) {
      throw Error(ErrorKind::invalid_table,
                  "eigenvalue " + to_string(eta) + " has nonzero dimension in degree 0");
    }
    entries_.emplace(eta, std::move(dims));
  }
  auto one = entries_.find(RootOfUnity{});
  if (one == entries_.end() || one->second[0] != 1) {
    throw Error(ErrorKind::invalid_table,
                "eigenvalue 1 must have dimension 1 in degree 0 (connected Milnor fiber)");
  }
}

GradedDims EigenTable::get(RootOfUnity eta) const {
  auto it = entries_.find(eta);
  return it == entries_.end() ? GradedDims{} : it->second;
}

std::vector<RootOfUnity> EigenTable::keys() const {
  std::vector<RootOfUnity> out;
  out.reserve(entries_.size());
  for (const auto& [eta, dims] : entries_) out.push_back(eta);
  return out;
}

EigenTable product_formula(const EigenTable& tf, const EigenTable& tg) {
  EigenTable::Entries out;
  for (const auto& [eta, df] : tf.entries()) {
    const GradedDims dg = tg.get(eta);
    if (dg.is_zero()) continue;
    out.emplace(eta, tensor_graded(tensor_graded(df, dg), kCircleCohomology));
  }
  return EigenTable(tf.degree() + tg.degree(), std::move(out));
}

EigenTable product_formula(std::span<const EigenTable> tables) {
  if (tables.empty()) throw Error(ErrorKind::invalid_input, "product of zero tables");
  EigenTable acc = tables.front();
  for (const auto& t : tables.subspan(1)) acc = product_formula(acc, t);
  return acc;
}

GradedDims betti_formula(const EigenTable& tf, const EigenTable& tg, BettiIndexSet index_set) {
  const std::int64_t order = index_set == BettiIndexSet::literal
                                 ? tf.degree() + tg.degree()
                                 : std::gcd(tf.degree(), tg.degree());
  // gamma[lambda] = sum_eta sum_{i+j=lambda} dim H^i(f)_eta * dim H^j(g)_{eta^-1}
  GradedDims gamma;
  for (RootOfUnity eta : roots_of(order)) {
    gamma += tensor_graded(tf.get(eta), tg.get(eta.inverse()));
  }
  // H^l = gamma[l] + gamma[l-1]
  return tensor_graded(gamma, kCircleCohomology);
}

GradedDims total_betti(const EigenTable& t) {
  GradedDims sum;
  for (const auto& [eta, dims] : t.entries()) sum += dims;
  return sum;
}

bool check_conjugation_symmetry(const EigenTable& t) {
  return std::all_of(t.entries().begin(), t.entries().end(), [&](const auto& entry) {
    return t.get(entry.first.inverse()) == entry.second;
  });
}

bool check_support_corollary(const EigenTable& tf, const EigenTable& tg, const EigenTable& tfg) {
  std::vector<RootOfUnity> expected;
  const auto kf = tf.keys();
  const auto kg = tg.keys();
  std::set_intersection(kf.begin(), kf.end(), kg.begin(), kg.end(), std::back_inserter(expected));
  if (tfg.keys() != expected) return false;
  const std::int64_t g = std::gcd(tf.degree(), tg.degree());
  return std::all_of(expected.begin(), expected.end(),
                     [g](RootOfUnity eta) { return rou_pow(eta, g).is_one(); });
}

}  // namespace plmono
