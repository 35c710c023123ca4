#include "plmono/classify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "plmono/error.hpp"

namespace plmono {
namespace {

// Non-constant factors of a parsed expression. A zero constant is rejected
// here since the zero polynomial has no Milnor fiber.
std::vector<const PolyExpr*> factors_of(const PolyExpr& e) {
  std::vector<const PolyExpr*> out;
  auto visit_one = [&](const PolyExpr& f) {
    if (const auto* c = std::get_if<Constant>(&f.node)) {
      if (c->value == 0) throw Error(ErrorKind::invalid_input, "the polynomial is identically zero");
      return;
    }
    out.push_back(&f);
  };
  if (const auto* p = std::get_if<Product>(&e.node)) {
    for (const auto& f : p->factors) visit_one(f);
  } else {
    visit_one(e);
  }
  if (out.empty()) throw Error(ErrorKind::invalid_input, "the polynomial has degree 0");
  return out;
}

std::set<Variable> variables_of(const PolyExpr& f) {
  std::set<Variable> vars;
  if (const auto* lf = std::get_if<LinearForm>(&f.node)) {
    for (const auto& [v, c] : lf->coefficients) vars.insert(v);
  } else if (const auto* s = std::get_if<Sum>(&f.node)) {
    for (const auto& p : s->terms) vars.insert(p.variable);
  } else if (const auto* p = std::get_if<Power>(&f.node)) {
    vars.insert(p->variable);
  }
  return vars;
}

Hyperplane to_hyperplane(const LinearForm& lf, const std::vector<Variable>& coords) {
  RationalVector coeffs(coords.size(), Rational(0));
  for (const auto& [v, c] : lf.coefficients) {
    auto it = std::lower_bound(coords.begin(), coords.end(), v);
    coeffs[static_cast<std::size_t>(it - coords.begin())] = c;
  }
  return Hyperplane(std::move(coeffs));
}

// Alphabetic prefix of a variable name: x12 belongs to family x.
std::string family(const Variable& v) {
  const auto end = v.name.find_last_not_of("0123456789");
  return v.name.substr(0, end == std::string::npos ? 0 : end + 1);
}

void reject_power(const Power& p) {
  throw Error(ErrorKind::not_reduced,
              "factor " + p.variable.name + "^" + std::to_string(p.exponent) + " is not reduced");
}

}  // namespace

const std::vector<Variable>& block_variables(const Block& b) {
  return std::visit([](const auto& blk) -> const std::vector<Variable>& { return blk.variables; }, b);
}

ClassifiedInput classify(const PolyExpr& e) {
  const auto factors = factors_of(e);

  // Union-find over factor indices, joined through shared variable families.
  std::vector<std::size_t> parent(factors.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  std::map<std::string, std::size_t> owner;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (const auto* p = std::get_if<Power>(&factors[i]->node)) reject_power(*p);
    for (const auto& v : variables_of(*factors[i])) {
      auto [it, fresh] = owner.emplace(family(v), i);
      if (!fresh) parent[find(i)] = find(it->second);
    }
  }

  // Components in order of first appearance.
  std::vector<std::size_t> roots;
  std::map<std::size_t, std::vector<std::size_t>> members;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const std::size_t r = find(i);
    if (!members.contains(r)) roots.push_back(r);
    members[r].push_back(i);
  }

  ClassifiedInput out;
  for (std::size_t r : roots) {
    const auto& idx = members[r];
    std::set<Variable> vars;
    std::size_t sums = 0;
    for (std::size_t i : idx) {
      vars.merge(variables_of(*factors[i]));
      if (std::holds_alternative<Sum>(factors[i]->node)) ++sums;
    }
    std::vector<Variable> coords(vars.begin(), vars.end());

    if (sums > 0) {
      if (idx.size() != 1) {
        throw Error(ErrorKind::unsupported_shape,
                    "a sum of powers shares variables with another factor");
      }
      const auto& s = std::get<Sum>(factors[idx.front()]->node);
      std::vector<std::int64_t> exponents;
      for (const auto& v : coords) {
        auto it = std::find_if(s.terms.begin(), s.terms.end(),
                               [&](const Power& p) { return p.variable == v; });
        exponents.push_back(it->exponent);
      }
      if (exponents.size() < 2) {
        throw Error(ErrorKind::not_reduced, "a single power " + to_text(*factors[idx.front()]) +
                                                " is not reduced");
      }
      BrieskornPham bp(std::move(exponents));
      if (!bp.is_homogeneous()) {
        throw Error(ErrorKind::non_homogeneous,
                    "sum of powers " + to_text(*factors[idx.front()]) + " has unequal exponents");
      }
      out.blocks.emplace_back(BPBlock{std::move(bp), std::move(coords)});
      continue;
    }

    std::vector<Hyperplane> hyperplanes;
    for (std::size_t i : idx) {
      hyperplanes.push_back(to_hyperplane(std::get<LinearForm>(factors[i]->node), coords));
    }
    Arrangement arr(coords.size(), std::move(hyperplanes));
    out.blocks.emplace_back(ArrangementBlock{std::move(arr), std::move(coords)});
  }
  return out;
}

EigenTable block_table(const Block& b) {
  if (const auto* bp = std::get_if<BPBlock>(&b)) return bp_eigentable(bp->polynomial);
  const auto& arr = std::get<ArrangementBlock>(b).arrangement;
  if (arr.ambient_dim() == 1) {
    // A single linear form in one variable: the fiber is one point.
    return EigenTable(1, {{RootOfUnity{}, GradedDims{1}}});
  }
  return line_arrangement_eigentable(arr);
}

std::int64_t block_degree(const Block& b) {
  if (const auto* bp = std::get_if<BPBlock>(&b)) return bp->polynomial.degree();
  return static_cast<std::int64_t>(std::get<ArrangementBlock>(b).arrangement.size());
}

std::int64_t block_euler(const Block& b) {
  if (const auto* bp = std::get_if<BPBlock>(&b)) return bp_milnor_fiber_euler(bp->polynomial);
  return milnor_fiber_euler(std::get<ArrangementBlock>(b).arrangement);
}

EigenTable evaluate(const ClassifiedInput& c) {
  if (c.blocks.empty()) throw Error(ErrorKind::invalid_input, "nothing to evaluate");
  std::vector<EigenTable> tables;
  tables.reserve(c.blocks.size());
  for (const auto& b : c.blocks) tables.push_back(block_table(b));
  return product_formula(tables);
}

ZetaFunction evaluate_zeta(const ClassifiedInput& c) {
  if (c.blocks.empty()) throw Error(ErrorKind::invalid_input, "nothing to evaluate");
  std::int64_t degree = 0;
  for (const auto& b : c.blocks) degree += block_degree(b);
  const std::int64_t euler = c.blocks.size() == 1 ? block_euler(c.blocks.front()) : 0;
  return zeta_homogeneous(degree, euler);
}

Arrangement collect_arrangement(const PolyExpr& e) {
  const auto factors = factors_of(e);
  std::set<Variable> vars;
  for (const auto* f : factors) {
    if (const auto* p = std::get_if<Power>(&f->node)) reject_power(*p);
    if (!std::holds_alternative<LinearForm>(f->node)) {
      throw Error(ErrorKind::unsupported_shape,
                  "only products of linear forms define an arrangement, found " + to_text(*f));
    }
    vars.merge(variables_of(*f));
  }
  const std::vector<Variable> coords(vars.begin(), vars.end());
  std::vector<Hyperplane> hyperplanes;
  for (const auto* f : factors) hyperplanes.push_back(to_hyperplane(std::get<LinearForm>(f->node), coords));
  return Arrangement(coords.size(), std::move(hyperplanes));
}

}  // namespace plmono
