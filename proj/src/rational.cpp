#include "abelzero/rational.hpp"

#include <cctype>

namespace abelzero {

std::string to_string(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  return c.get_str(10);
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  bool negative = false;
  std::size_t pos = 0;
  if (s[0] == '-' || s[0] == '+') {
    negative = s[0] == '-';
    pos = 1;
  }
  std::string body = s.substr(pos);
  auto all_digits = [](const std::string& v) {
    if (v.empty()) return false;
    for (char c : v)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  Rational out;
  if (auto slash = body.find('/'); slash != std::string::npos) {
    std::string num = body.substr(0, slash), den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) throw std::invalid_argument("bad rational literal: " + s);
    Integer d(den, 10);
    if (d == 0) throw std::invalid_argument("zero denominator: " + s);
    out = Rational(Integer(num, 10), d);
  } else if (auto dot = body.find('.'); dot != std::string::npos) {
    std::string whole = body.substr(0, dot), frac = body.substr(dot + 1);
    if (whole.empty()) whole = "0";
    if (!all_digits(whole) || (!frac.empty() && !all_digits(frac)))
      throw std::invalid_argument("bad decimal literal: " + s);
    Integer den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    out = Rational(Integer(whole + frac, 10), den);
  } else {
    if (!all_digits(body)) throw std::invalid_argument("bad integer literal: " + s);
    out = Rational(Integer(body, 10));
  }
  out.canonicalize();
  if (negative) out = -out;
  return out;
}

}  // namespace abelzero
