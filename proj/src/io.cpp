#include "abelzero/io.hpp"

#include <cctype>
#include <sstream>

namespace abelzero {
namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  ParsedPoly run() {
    skip();
    if (pos_ == s_.size()) throw ParseError("empty polynomial", pos_);
    BiPoly p = expr();
    skip();
    if (pos_ != s_.size()) throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
    return ParsedPoly{std::move(p), parameter_};
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  BiPoly expr() {
    BiPoly acc = term();
    for (;;) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        return acc;
    }
  }

  BiPoly term() {
    BiPoly acc = unary();
    for (;;) {
      if (accept('*')) {
        acc = acc * unary();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        BiPoly d = unary();
        if (d.degree() != 0 || d[0].degree() != 0) throw ParseError("division by a non-constant", at);
        acc = UniPoly::constant(Rational(1 / d[0][0])) * acc;
      } else {
        return acc;
      }
    }
  }

  BiPoly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  BiPoly power() {
    BiPoly base = atom();
    if (!accept('^')) return base;
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected a non-negative integer exponent", start);
    if (pos_ - start > 4) throw ParseError("exponent too large", start);
    const unsigned e = static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start))));
    return pow(base, e);
  }

  BiPoly atom() {
    skip();
    if (pos_ == s_.size()) throw ParseError("unexpected end of input", pos_);
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      BiPoly inner = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) ++pos_;
      try {
        return BiPoly::constant(UniPoly::constant(parse_rational(s_.substr(start, pos_ - start))));
      } catch (const std::invalid_argument&) {
        throw ParseError("malformed number", start);
      }
    }
    if (c == 'x') {
      ++pos_;
      return BiPoly::variable();
    }
    if (c == 't' || c == 'z') {
      const Parameter p = c == 't' ? Parameter::t : Parameter::z;
      if (parameter_ && *parameter_ != p) throw ParseError("both t and z used", pos_);
      parameter_ = p;
      ++pos_;
      return BiPoly::constant(UniPoly::variable());
    }
    if (std::isalpha(static_cast<unsigned char>(c))) throw ParseError(std::string("unknown variable '") + c + "'", pos_);
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  std::optional<Parameter> parameter_;
};

struct Monomial {
  Rational c;
  int outer;
  int inner;
};

void append_var(std::ostringstream& os, bool& wrote, char var, int e) {
  if (e == 0) return;
  if (wrote) os << '*';
  os << var;
  if (e > 1) os << '^' << e;
  wrote = true;
}

std::string format_monomials(const std::vector<Monomial>& terms, char outer, char inner) {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const Monomial& m : terms) {
    const bool negative = sgn(m.c) < 0;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    const Rational mag = abs(m.c);
    bool wrote = false;
    if (mag != 1 || (m.outer == 0 && m.inner == 0)) {
      os << to_string(mag);
      wrote = true;
    }
    append_var(os, wrote, outer, m.outer);
    append_var(os, wrote, inner, m.inner);
    first = false;
  }
  return os.str();
}

}  // namespace

ParsedPoly parse_poly(std::string_view text) { return Parser(text).run(); }

UniPoly parse_univariate(std::string_view text) {
  ParsedPoly p = parse_poly(text);
  if (p.parameter) throw ParseError(std::string("unexpected parameter ") + parameter_name(*p.parameter), 0);
  std::vector<Rational> v;
  for (const UniPoly& c : p.coeffs.coefficients()) v.push_back(c.coeff(0));
  return UniPoly(std::move(v));
}

ParamPoly parse_param_poly(std::string_view text, Parameter fallback) {
  ParsedPoly p = parse_poly(text);
  return ParamPoly{std::move(p.coeffs), p.parameter.value_or(fallback)};
}

std::string format_poly(const UniPoly& p, char var) {
  std::vector<Monomial> terms;
  for (int i = p.degree(); i >= 0; --i)
    if (sgn(p[static_cast<std::size_t>(i)]) != 0) terms.push_back({p[static_cast<std::size_t>(i)], i, 0});
  return format_monomials(terms, var, '?');
}

std::string format_bipoly(const BiPoly& p, char outer, char inner) {
  std::vector<Monomial> terms;
  for (int i = p.degree(); i >= 0; --i) {
    const UniPoly& c = p[static_cast<std::size_t>(i)];
    for (int j = c.degree(); j >= 0; --j)
      if (sgn(c[static_cast<std::size_t>(j)]) != 0) terms.push_back({c[static_cast<std::size_t>(j)], i, j});
  }
  return format_monomials(terms, outer, inner);
}

std::string format_poly(const ParamPoly& p) { return format_bipoly(p.coeffs, 'x', parameter_name(p.parameter)); }

std::vector<std::string> coefficient_strings(const UniPoly& p) {
  std::vector<std::string> out;
  for (const Rational& c : p.coefficients()) out.push_back(to_string(c));
  return out;
}

UniPoly from_coefficient_strings(const std::vector<std::string>& coeffs) {
  std::vector<Rational> v;
  for (const std::string& s : coeffs) v.push_back(parse_rational(s));
  return UniPoly(std::move(v));
}

}  // namespace abelzero
