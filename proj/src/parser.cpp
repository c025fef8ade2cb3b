#include <cctype>
#include <string>

#include "topdeg/poly.hpp"

namespace topdeg {

namespace {

// Grammar: expr = ['+'|'-'] term (('+'|'-') term)*
//          term = [integer ['*']] factor ('*' factor)*
//          factor = var ['^' int] | '(' expr ')' ['^' int]
// Juxtaposition without '*' is only allowed right after the leading integer.
struct Parser {
  const std::string& text;
  RingPtr ring;
  size_t pos = 0;

  [[noreturn]] void error(const std::string& what) const {
    fail(Errc::syntax_error, what + " at position " + std::to_string(pos));
  }

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool peek(char c) {
    skip_ws();
    return pos < text.size() && text[pos] == c;
  }

  bool eat(char c) {
    if (peek(c)) {
      ++pos;
      return true;
    }
    return false;
  }

  int64_t parse_int() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) error("expected integer");
    try {
      return std::stoll(text.substr(start, pos - start));
    } catch (const std::exception&) {
      error("integer literal out of range");
    }
  }

  bool at_ident() {
    skip_ws();
    return pos < text.size() &&
           (std::isalpha(static_cast<unsigned char>(text[pos])) || text[pos] == '_');
  }

  std::string parse_ident() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) ++pos;
    return text.substr(start, pos - start);
  }

  size_t resolve_var(const std::string& name, size_t at) {
    if (auto idx = ring->var_index(name)) return *idx;
    // x,y,z aliases on 3-variable rings named x0,x1,x2
    if (ring->nvars() == 3 && ring->var_names() == std::vector<std::string>{"x0", "x1", "x2"}) {
      if (name == "x") return 0;
      if (name == "y") return 1;
      if (name == "z") return 2;
    }
    pos = at;
    fail(Errc::unknown_variable, "unknown variable '" + name + "' at position " + std::to_string(at));
  }

  uint32_t parse_exponent() {
    if (!eat('^')) return 1;
    int64_t e = parse_int();
    if (e < 0 || e > 0xffff) error("exponent out of range");
    return static_cast<uint32_t>(e);
  }

  Polynomial parse_factor() {
    skip_ws();
    if (eat('(')) {
      Polynomial inner = parse_expr();
      if (!eat(')')) error("expected ')'");
      uint32_t e = parse_exponent();
      return poly_pow(inner, e);
    }
    if (at_ident()) {
      size_t at = pos;
      std::string name = parse_ident();
      size_t v = resolve_var(name, at);
      uint32_t e = parse_exponent();
      return Polynomial::monomial_term(ring, ring->field()->one(),
                                       mono_var(v, static_cast<uint16_t>(e)));
    }
    error("expected variable or '('");
  }

  Polynomial parse_term() {
    skip_ws();
    Polynomial acc = Polynomial::constant(ring, ring->field()->one());
    bool have_factor = false;
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      int64_t v = parse_int();
      acc = Polynomial::constant(ring, ring->field()->from_int(v));
      have_factor = true;
      // after the leading integer a '*' is optional
      if (eat('*')) {
        acc = acc * parse_factor();
      } else if (at_ident() || peek('(')) {
        acc = acc * parse_factor();
      } else {
        return acc;
      }
    } else {
      acc = parse_factor();
      have_factor = true;
    }
    while (eat('*')) acc = acc * parse_factor();
    skip_ws();
    if (have_factor && (at_ident() || peek('('))) error("missing '*' between factors");
    return acc;
  }

  Polynomial parse_expr() {
    skip_ws();
    bool neg = false;
    if (eat('-')) neg = true;
    else eat('+');
    Polynomial acc = parse_term();
    if (neg) acc = -acc;
    for (;;) {
      skip_ws();
      if (eat('+')) {
        acc = acc + parse_term();
      } else if (eat('-')) {
        acc = acc - parse_term();
      } else {
        break;
      }
    }
    return acc;
  }
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, RingPtr ring) {
  Parser p{text, std::move(ring)};
  Polynomial r = p.parse_expr();
  p.skip_ws();
  if (p.pos != text.size()) p.error("unexpected trailing input");
  return r;
}

}  // namespace topdeg
