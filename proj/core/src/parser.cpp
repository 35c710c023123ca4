#include "plmono/parser.hpp"

#include <cctype>
#include <set>

#include "plmono/error.hpp"

namespace plmono {

std::strong_ordering operator<=>(const Variable& a, const Variable& b) {
  auto split = [](const std::string& s) {
    std::size_t cut = s.size();
    while (cut > 0 && std::isdigit(static_cast<unsigned char>(s[cut - 1]))) --cut;
    std::string digits = s.substr(cut);
    digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size()));
    return std::pair{s.substr(0, cut), digits};
  };
  const auto [pa, da] = split(a.name);
  const auto [pb, db] = split(b.name);
  if (auto c = pa <=> pb; c != 0) return c;
  // Numeric comparison of the suffixes without overflow: shorter is smaller.
  if (auto c = da.size() <=> db.size(); c != 0) return c;
  if (auto c = da <=> db; c != 0) return c;
  return a.name <=> b.name;
}

namespace {

enum class Tok { ident, integer, plus, minus, star, caret, lparen, rparen, end };

struct Token {
  Tok kind;
  std::string text;
  std::size_t offset;
};

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < src.size()) {
    const char c = src[i];
    const auto uc = static_cast<unsigned char>(c);
    if (std::isspace(uc)) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isalpha(uc)) {
      while (i < src.size() && (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_')) ++i;
      out.push_back({Tok::ident, std::string(src.substr(start, i - start)), start});
      continue;
    }
    if (std::isdigit(uc)) {
      while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
      out.push_back({Tok::integer, std::string(src.substr(start, i - start)), start});
      continue;
    }
    Tok kind;
    switch (c) {
      case '+': kind = Tok::plus; break;
      case '-': kind = Tok::minus; break;
      case '*': kind = Tok::star; break;
      case '^': kind = Tok::caret; break;
      case '(': kind = Tok::lparen; break;
      case ')': kind = Tok::rparen; break;
      default:
        throw ParseError(start, std::string("unexpected character '") + c + "'");
    }
    out.push_back({kind, std::string(1, c), start});
    ++i;
  }
  out.push_back({Tok::end, "", src.size()});
  return out;
}

// A variable raised to a positive power, as written in the source.
struct VarPow {
  Variable variable;
  std::int64_t exponent;
};

struct RawTerm {
  Rational coefficient{1};
  std::vector<VarPow> monomial;  // bare variables and powers, in source order
  std::vector<PolyExpr> groups;  // parenthesized subexpressions
  std::vector<bool> order;       // true = next monomial entry, false = next group
  std::size_t offset = 0;
};

PolyExpr var_factor(const VarPow& vp) {
  if (vp.exponent == 1) return PolyExpr{LinearForm{{{vp.variable, Rational(1)}}}};
  return PolyExpr{Power{vp.variable, vp.exponent}};
}

PolyExpr build_product(const RawTerm& t) {
  Rational scale = t.coefficient;
  std::vector<PolyExpr> factors;
  std::size_t mi = 0;
  std::size_t gi = 0;
  for (bool is_mono : t.order) {
    if (is_mono) {
      factors.push_back(var_factor(t.monomial[mi++]));
      continue;
    }
    const PolyExpr& g = t.groups[gi++];
    if (const auto* p = std::get_if<Product>(&g.node)) {
      for (const auto& f : p->factors) {
        if (const auto* c = std::get_if<Constant>(&f.node)) {
          scale *= c->value;
        } else {
          factors.push_back(f);
        }
      }
    } else if (const auto* c = std::get_if<Constant>(&g.node)) {
      scale *= c->value;
    } else {
      factors.push_back(g);
    }
  }

  if (factors.empty()) return PolyExpr{Constant{scale}};
  if (factors.size() == 1) {
    if (auto* lf = std::get_if<LinearForm>(&factors.front().node); lf && scale != 0) {
      for (auto& [v, c] : lf->coefficients) c *= scale;
      return factors.front();
    }
    if (scale == 1) return factors.front();
  }
  Product out;
  if (scale != 1) out.factors.push_back(PolyExpr{Constant{scale}});
  for (auto& f : factors) out.factors.push_back(std::move(f));
  return PolyExpr{std::move(out)};
}

PolyExpr build_sum(const std::vector<RawTerm>& terms) {
  LinearForm linear;
  Sum powers;
  bool any_linear = false;
  bool any_power = false;
  std::set<Variable> power_vars;

  for (const auto& t : terms) {
    auto unsupported = [&](const std::string& why) {
      return Error(ErrorKind::unsupported_shape,
                   why + " (term at offset " + std::to_string(t.offset) + ")");
    };
    if (!t.groups.empty()) throw unsupported("parenthesized factor inside a sum");
    if (t.monomial.empty()) throw unsupported("constant term in a sum is not homogeneous");
    if (t.monomial.size() != 1) throw unsupported("only linear terms or pure powers may be summed");
    const VarPow& vp = t.monomial.front();
    if (vp.exponent == 1) {
      any_linear = true;
      linear.coefficients[vp.variable] += t.coefficient;
    } else {
      if (t.coefficient != 1) throw unsupported("coefficients on powers are not supported");
      if (!power_vars.insert(vp.variable).second) {
        throw unsupported("variable " + vp.variable.name + " repeated in a sum of powers");
      }
      any_power = true;
      powers.terms.push_back(Power{vp.variable, vp.exponent});
    }
  }
  if (any_linear && any_power) {
    throw Error(ErrorKind::unsupported_shape,
                "mixed sum of linear terms and powers (offset " + std::to_string(terms.front().offset) + ")");
  }
  if (any_power) return PolyExpr{std::move(powers)};

  std::erase_if(linear.coefficients, [](const auto& kv) { return kv.second == 0; });
  if (linear.coefficients.empty()) {
    throw Error(ErrorKind::invalid_input, "linear form at offset " +
                                              std::to_string(terms.front().offset) +
                                              " vanishes identically");
  }
  return PolyExpr{std::move(linear)};
}

class Parser {
 public:
  explicit Parser(std::string_view src) : tokens_(lex(src)) {}

  PolyExpr parse_all() {
    PolyExpr e = parse_expr();
    if (peek().kind == Tok::rparen) throw ParseError(peek().offset, "unbalanced ')'");
    if (peek().kind != Tok::end) throw ParseError(peek().offset, "unexpected '" + peek().text + "'");
    return e;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& advance() { return tokens_[pos_++]; }

  PolyExpr parse_expr() {
    std::vector<RawTerm> terms;
    int sign = 1;
    if (peek().kind == Tok::plus || peek().kind == Tok::minus) {
      sign = advance().kind == Tok::minus ? -1 : 1;
    }
    terms.push_back(parse_term(sign));
    while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
      sign = advance().kind == Tok::minus ? -1 : 1;
      terms.push_back(parse_term(sign));
    }
    return terms.size() == 1 ? build_product(terms.front()) : build_sum(terms);
  }

  RawTerm parse_term(int sign) {
    RawTerm t;
    t.coefficient = sign;
    t.offset = peek().offset;
    parse_factor(t);
    while (peek().kind == Tok::star) {
      advance();
      parse_factor(t);
    }
    return t;
  }

  void parse_factor(RawTerm& t) {
    const Token& tok = advance();
    switch (tok.kind) {
      case Tok::lparen: {
        PolyExpr inner = parse_expr();
        if (peek().kind != Tok::rparen) {
          throw ParseError(peek().offset, peek().kind == Tok::end
                                              ? "unbalanced '(' opened at offset " + std::to_string(tok.offset)
                                              : "expected ')'");
        }
        advance();
        t.groups.push_back(std::move(inner));
        t.order.push_back(false);
        return;
      }
      case Tok::integer:
        t.coefficient *= Rational(boost::multiprecision::cpp_int(tok.text));
        return;
      case Tok::ident: {
        std::int64_t exponent = 1;
        if (peek().kind == Tok::caret) {
          advance();
          const Token& e = advance();
          if (e.kind != Tok::integer) throw ParseError(e.offset, "expected integer exponent");
          if (e.text.size() > 9) throw ParseError(e.offset, "exponent too large");
          exponent = std::stoll(e.text);
          if (exponent < 1) throw ParseError(e.offset, "exponent must be positive");
        }
        t.monomial.push_back(VarPow{Variable{tok.text}, exponent});
        t.order.push_back(true);
        return;
      }
      case Tok::end:
        throw ParseError(tok.offset, "unexpected end of input");
      default:
        throw ParseError(tok.offset, "unexpected '" + tok.text + "'");
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

std::string linear_text(const LinearForm& lf) {
  std::string out;
  for (const auto& [v, c] : lf.coefficients) {
    const Rational mag = c < 0 ? Rational(-c) : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? "-" : "+";
    }
    if (mag != 1) out += to_string(mag) + "*";
    out += v.name;
  }
  return out;
}

std::string sum_text(const Sum& s) {
  std::string out;
  for (const auto& p : s.terms) {
    if (!out.empty()) out += "+";
    out += p.variable.name + "^" + std::to_string(p.exponent);
  }
  return out;
}

}  // namespace

PolyExpr parse(std::string_view src) { return Parser(src).parse_all(); }

std::string to_text(const PolyExpr& e) {
  struct Visitor {
    std::string operator()(const Constant& c) const { return to_string(c.value); }
    std::string operator()(const LinearForm& lf) const { return linear_text(lf); }
    std::string operator()(const Power& p) const {
      return p.variable.name + "^" + std::to_string(p.exponent);
    }
    std::string operator()(const Sum& s) const { return sum_text(s); }
    std::string operator()(const Product& p) const {
      std::string out;
      for (const auto& f : p.factors) {
        if (!out.empty()) out += "*";
        if (const auto* lf = std::get_if<LinearForm>(&f.node)) {
          const bool bare = lf->coefficients.size() == 1 && lf->coefficients.begin()->second == 1;
          out += bare ? linear_text(*lf) : "(" + linear_text(*lf) + ")";
        } else if (const auto* s = std::get_if<Sum>(&f.node)) {
          out += "(" + sum_text(*s) + ")";
        } else {
          out += to_text(f);
        }
      }
      return out;
    }
  };
  return std::visit(Visitor{}, e.node);
}

}  // namespace plmono
