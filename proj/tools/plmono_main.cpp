// plmono: monodromy eigenspace tables for products of homogeneous polynomials.
//
// Exit status: 0 success, 2 parse or classification error, 3 unsupported
// shape or dimension, 4 internal consistency failure (including a failed
// `check`).

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "plmono/plmono.hpp"

namespace {

using namespace plmono;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitUnsupported = 3;
constexpr int kExitInternal = 4;

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::unsupported_shape:
    case ErrorKind::unsupported_dimension:
      return kExitUnsupported;
    case ErrorKind::internal_consistency:
    case ErrorKind::not_cyclotomic_groupable:
      return kExitInternal;
    default:
      return kExitInput;
  }
}

struct InputArgs {
  std::string expr;
  std::vector<std::int64_t> bp;

  void attach(CLI::App* cmd) {
    cmd->add_option("expr", expr, "Polynomial, e.g. \"x1*x2*(x1+x2)*(y1^3+y2^3)\"");
    cmd->add_option("--bp", bp, "Brieskorn-Pham exponents a1,a2,... instead of an expression")
        ->delimiter(',');
  }

  ClassifiedInput classified() const {
    if (!bp.empty() && !expr.empty()) {
      throw Error(ErrorKind::invalid_input, "give either an expression or --bp, not both");
    }
    if (!bp.empty()) {
      BrieskornPham poly(bp);
      poly.degree();  // rejects unequal exponents
      std::vector<Variable> vars;
      for (std::size_t i = 1; i <= bp.size(); ++i) vars.push_back(Variable{"x" + std::to_string(i)});
      return ClassifiedInput{{BPBlock{std::move(poly), std::move(vars)}}};
    }
    if (expr.empty()) throw Error(ErrorKind::invalid_input, "no input polynomial given");
    return classify(parse(expr));
  }
};

std::vector<EigenTable> block_tables(const ClassifiedInput& c) {
  std::vector<EigenTable> out;
  for (const auto& b : c.blocks) out.push_back(block_table(b));
  return out;
}

int run_table(const InputArgs& in, const std::string& format) {
  const auto fmt = parse_table_format(format);
  std::cout << render(evaluate(in.classified()), fmt);
  return kExitOk;
}

int run_betti(const InputArgs& in, bool literal, const std::string& format) {
  const auto tables = block_tables(in.classified());
  GradedDims dims;
  if (tables.size() == 1) {
    dims = total_betti(tables.front());
  } else {
    const EigenTable head =
        product_formula(std::span<const EigenTable>(tables).first(tables.size() - 1));
    dims = betti_formula(head, tables.back(),
                         literal ? BettiIndexSet::literal : BettiIndexSet::pruned);
  }
  if (format == "json") {
    std::cout << to_json(dims).dump() << "\n";
  } else {
    std::cout << to_string(dims) << "\n";
  }
  return kExitOk;
}

int run_zeta(const InputArgs& in, const std::string& format) {
  const auto c = in.classified();
  ZetaFunction zeta;
  std::string route = "eigentable";
  try {
    zeta = group_cyclotomic(zeta_from_table(evaluate(c)));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::unsupported_dimension) throw;
    route = "euler";
    zeta = evaluate_zeta(c);
  }
  if (route == "eigentable" && evaluate_zeta(c) != zeta) {
    throw Error(ErrorKind::internal_consistency,
                "eigentable zeta " + to_string(zeta) + " disagrees with Euler characteristic route " +
                    to_string(evaluate_zeta(c)));
  }
  if (format == "json") {
    nlohmann::json out{{"zeta", to_json(zeta)},
                       {"route", route},
                       {"convention", "prod_j det(I - t T | H^j)^((-1)^(j+1))"}};
    std::cout << out.dump() << "\n";
  } else {
    std::cout << to_string(zeta) << "\n";
  }
  return kExitOk;
}

int run_charpoly(const std::string& expr, const std::string& file, const std::string& format) {
  if (expr.empty() == file.empty()) {
    throw Error(ErrorKind::invalid_input, "charpoly needs exactly one of an expression or --file");
  }
  const Arrangement a = file.empty() ? collect_arrangement(parse(expr)) : load_arrangement(file);
  const auto lattice = build_lattice(a);
  const auto chi = char_poly(lattice);
  const std::int64_t proj = proj_complement_euler(a);
  const std::int64_t fiber = milnor_fiber_euler(a);
  if (format == "json") {
    nlohmann::json out{{"ambient_dim", a.ambient_dim()},
                       {"hyperplanes", a.size()},
                       {"flats", lattice.flats().size()},
                       {"char_poly", to_json(chi)},
                       {"proj_complement_euler", proj},
                       {"milnor_fiber_euler", fiber}};
    std::cout << out.dump() << "\n";
  } else {
    std::cout << to_string(chi) << "\n"
              << "flats: " << lattice.flats().size() << "\n"
              << "euler(F*): " << proj << "\n"
              << "euler(F): " << fiber << "\n";
  }
  return kExitOk;
}

int run_check(const InputArgs& in) {
  const auto c = in.classified();
  const auto tables = block_tables(c);
  bool all = true;
  auto report = [&](bool ok, const std::string& name) {
    std::cout << (ok ? "PASS " : "FAIL ") << name << "\n";
    all = all && ok;
  };

  for (std::size_t i = 0; i < tables.size(); ++i) {
    const std::string tag = " block " + std::to_string(i + 1);
    report(check_conjugation_symmetry(tables[i]), "conjugation-symmetry" + tag);
    const auto via_table = group_cyclotomic(zeta_from_table(tables[i]));
    const auto via_euler = zeta_homogeneous(tables[i].degree(), block_euler(c.blocks[i]));
    report(via_table == via_euler, "zeta-dual-route" + tag);
  }
  EigenTable acc = tables.front();
  for (std::size_t i = 1; i < tables.size(); ++i) {
    const std::string tag = " step " + std::to_string(i);
    const EigenTable next = product_formula(acc, tables[i]);
    report(check_support_corollary(acc, tables[i], next), "support-corollary" + tag);
    const auto betti = betti_formula(acc, tables[i]);
    report(total_betti(next) == betti &&
               betti == betti_formula(acc, tables[i], BettiIndexSet::literal),
           "product-betti" + tag);
    report(zeta_from_table(next).empty(), "zeta-triviality" + tag);
    report(check_conjugation_symmetry(next), "conjugation-symmetry product" + tag);
    acc = next;
  }
  return all ? kExitOk : kExitInternal;
}

int run_spectrum(const std::vector<std::int64_t>& exponents) {
  const BrieskornPham bp(exponents);
  for (const auto& [eta, count] : bp_spectrum(bp)) std::cout << to_string(eta) << " " << count << "\n";
  std::cout << "total " << bp_milnor_number(bp) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monodromy eigenspace tables for Milnor fibers of homogeneous polynomials"};
  app.require_subcommand(1);

  InputArgs table_in, betti_in, zeta_in, check_in;
  std::string table_format = "text";
  std::string betti_format = "text";
  std::string zeta_format = "text";
  std::string charpoly_format = "text";
  std::string charpoly_expr, charpoly_file;
  std::vector<std::int64_t> spectrum_bp;
  bool literal = false;

  auto* table = app.add_subcommand("table", "Eigenspace table of the monodromy");
  table_in.attach(table);
  table->add_option("--format", table_format, "text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  auto* betti = app.add_subcommand("betti", "Total Betti numbers via the fibration over C^*");
  betti_in.attach(betti);
  betti->add_flag("--literal", literal, "Sum over every (r+s)-th root instead of gcd(r,s)-th roots");
  betti->add_option("--format", betti_format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* zeta = app.add_subcommand("zeta", "Zeta function of the monodromy");
  zeta_in.attach(zeta);
  zeta->add_option("--format", zeta_format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* charpoly = app.add_subcommand("charpoly", "Characteristic polynomial of an arrangement");
  charpoly->add_option("expr", charpoly_expr, "Product of linear forms");
  charpoly->add_option("--file", charpoly_file, "Arrangement file, one hyperplane per line");
  charpoly->add_option("--format", charpoly_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* check = app.add_subcommand("check", "Run the consistency checks on an input");
  check_in.attach(check);

  auto* spectrum = app.add_subcommand("spectrum", "Raw Brieskorn-Pham spectrum (any exponents)");
  spectrum->add_option("--bp", spectrum_bp, "Exponents a1,a2,...")->delimiter(',')->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*table) return run_table(table_in, table_format);
    if (*betti) return run_betti(betti_in, literal, betti_format);
    if (*zeta) return run_zeta(zeta_in, zeta_format);
    if (*charpoly) return run_charpoly(charpoly_expr, charpoly_file, charpoly_format);
    if (*check) return run_check(check_in);
    if (*spectrum) return run_spectrum(spectrum_bp);
  } catch (const Error& e) {
    std::cerr << "plmono: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "plmono: internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInput;
}
