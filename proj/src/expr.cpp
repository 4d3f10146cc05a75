#include "regal/expr.hpp"

#include <cctype>

#include "regal/errors.hpp"

namespace regal {

namespace {

struct Parser {
  const std::string& s;
  std::size_t pos = 0;
  const std::string& tvar;
  const std::string& xvar;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }

  [[noreturn]] void bad(const std::string& what) {
    fail("ParseError", what + " at position " + std::to_string(pos) + " in '" + s + "'");
  }

  bool eat_word(const std::string& w) {
    skip_ws();
    if (s.compare(pos, w.size(), w) == 0) {
      // the next character must not extend the identifier
      std::size_t after = pos + w.size();
      if (after < s.size() &&
          (std::isalnum(static_cast<unsigned char>(s[after])) || s[after] == '_'))
        return false;
      pos = after;
      return true;
    }
    return false;
  }

  BiPoly expr() {
    BiPoly acc = term();
    while (true) {
      if (eat('+')) acc = acc + term();
      else if (eat('-')) acc = acc - term();
      else return acc;
    }
  }

  BiPoly term() {
    BiPoly acc = unary();
    while (true) {
      skip_ws();
      if (eat('*')) acc = acc * unary();
      else return acc;
    }
  }

  // exponentiation binds tighter than unary minus: -X^2 == -(X^2)
  BiPoly unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  BiPoly power() {
    BiPoly base = atom();
    if (eat('^')) {
      skip_ws();
      std::size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (pos == start) bad("expected a nonnegative integer exponent");
      long e = std::stol(s.substr(start, pos - start));
      BiPoly out({QPoly::constant(1)});
      for (long i = 0; i < e; ++i) out = out * base;
      return out;
    }
    return base;
  }

  BiPoly atom() {
    skip_ws();
    if (eat('(')) {
      BiPoly inner = expr();
      if (!eat(')')) bad("expected ')'");
      return inner;
    }
    if (eat_word(xvar)) return BiPoly::X();
    if (eat_word(tvar)) return BiPoly::T();
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      std::size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      Int num(s.substr(start, pos - start));
      // optional /denominator
      std::size_t save = pos;
      skip_ws();
      if (pos < s.size() && s[pos] == '/') {
        ++pos;
        skip_ws();
        std::size_t dstart = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == dstart) bad("expected a denominator");
        Int den(s.substr(dstart, pos - dstart));
        if (den == 0) bad("zero denominator");
        Rat r(num, den);
        r.canonicalize();
        return BiPoly({QPoly::constant(r)});
      }
      pos = save;
      return BiPoly({QPoly::constant(Rat(num))});
    }
    bad("unexpected token");
  }
};

}  // namespace

BiPoly parse_bipoly(const std::string& text, const std::string& tvar,
                    const std::string& xvar) {
  Parser p{text, 0, tvar, xvar};
  BiPoly out = p.expr();
  p.skip_ws();
  if (p.pos != text.size()) p.bad("trailing input");
  return out;
}

QPoly parse_qpoly(const std::string& text, const std::string& xvar) {
  // use an impossible parameter name so any other identifier errors out
  BiPoly b = parse_bipoly(text, "never", xvar);
  if (b.degree_T() > 0) fail("ParseError", "unexpected parameter variable");
  QPoly out;
  for (int i = 0; i <= b.degree_X(); ++i)
    out = out + QPoly::monomial(i, b.coeff_X(i).coeff(0));
  return out;
}

}  // namespace regal
