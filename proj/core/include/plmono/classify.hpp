#pragma once

#include <variant>
#include <vector>

#include "plmono/arrangement.hpp"
#include "plmono/brieskorn.hpp"
#include "plmono/parser.hpp"
#include "plmono/zeta.hpp"

namespace plmono {

/// Linear factors sharing variables, as an arrangement over those variables
/// (coordinates in natural variable order).
struct ArrangementBlock {
  Arrangement arrangement;
  std::vector<Variable> variables;
};

struct BPBlock {
  BrieskornPham polynomial;
  std::vector<Variable> variables;
};

using Block = std::variant<ArrangementBlock, BPBlock>;

/// Factors of the input grouped into blocks with pairwise disjoint variable
/// sets, in order of first appearance.
struct ClassifiedInput {
  std::vector<Block> blocks;
};

const std::vector<Variable>& block_variables(const Block& b);

/// Splits a parsed product into connected components of the "uses the same
/// variable family" relation, where the family of x12 is x. So x1*x2*y1*y2
/// has blocks {x1,x2} and {y1,y2}. A component must be all linear forms or
/// one sum of powers. Errors: not_reduced (proportional linear forms or a repeated
/// factor such as x1^2), non_homogeneous (unequal exponents in a sum),
/// unsupported_shape (a sum sharing a family with other factors),
/// invalid_input (zero or constant polynomial).
ClassifiedInput classify(const PolyExpr& e);

/// Eigenspace table of one block. A one-variable block is a single point
/// fiber; two-variable blocks use the line formula; sums use Brieskorn-Pham
/// counting. Arrangements in three or more variables throw
/// unsupported_dimension.
EigenTable block_table(const Block& b);

/// Degree of the block's defining polynomial.
std::int64_t block_degree(const Block& b);

/// Euler characteristic of the block's Milnor fiber, valid in any dimension.
std::int64_t block_euler(const Block& b);

/// Left fold of the product formula over the blocks.
EigenTable evaluate(const ClassifiedInput& c);

/// Zeta function of the whole input. Single blocks use the Euler route
/// (any dimension); products of two or more blocks have a C^* factor in the
/// projectivized fiber and so zeta = 1.
ZetaFunction evaluate_zeta(const ClassifiedInput& c);

/// Every linear factor of e over all of its variables, for lattice work in
/// any dimension. Sums or powers throw unsupported_shape.
Arrangement collect_arrangement(const PolyExpr& e);

}  // namespace plmono
