#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "qhopf/poly.hpp"

namespace qhopf {

/// Canonical text encoding, e.g. "(2+1i)*u[1,2]*u*[2,1] + 3*z".  Terms are
/// emitted largest-first in the monomial order with coefficients in lowest
/// terms, so equal polynomials print identically.
inline std::string to_string(const NCPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const Word& w = it->first;
    Scalar c = it->second;
    bool neg = c.is_real() && c.re() < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) out += '-';
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    if (w.empty()) {
      out += c.str();
    } else {
      out += c.str();
      out += '*';
      out += w.str();
    }
  }
  return out;
}

namespace detail {

class ExprParser {
 public:
  ExprParser(std::string_view text, Alphabet alphabet)
      : s_(text), alpha_(alphabet) {}

  NCPoly parse() {
    NCPoly p = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    int line = 1, col = 1;
    for (std::size_t k = 0; k < pos_ && k < s_.size(); ++k) {
      if (s_[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(msg, line, col);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  char raw_peek(std::size_t off = 0) const {
    return pos_ + off < s_.size() ? s_[pos_ + off] : '\0';
  }
  bool eat(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  static bool atom_start(char c) {
    return std::isdigit(static_cast<unsigned char>(c)) || c == '(' ||
           c == 'v' || c == 'u' || c == 'z' || c == 'a' || c == 'g';
  }

  // expr := ['-'] term (('+'|'-') term)*
  NCPoly expr() {
    bool neg = false;
    if (peek() == '-') {
      ++pos_;
      neg = true;
    } else {
      eat('+');
    }
    NCPoly acc = term();
    if (neg) acc *= Scalar(-1);
    for (;;) {
      char c = peek();
      if (c == '+' || c == '-') {
        ++pos_;
        NCPoly t = term();
        if (c == '-') t *= Scalar(-1);
        acc += t;
      } else {
        break;
      }
    }
    return acc;
  }

  // term := factor ('*' factor)*   -- a '*' is a product only when an atom
  // follows; otherwise it is the postfix involution.
  NCPoly term() {
    NCPoly acc = factor();
    while (peek() == '*' && atom_start(next_nonspace_after_star())) {
      ++pos_;  // consume '*'
      acc = acc * factor();
    }
    return acc;
  }

  char next_nonspace_after_star() const {
    std::size_t k = pos_ + 1;
    while (k < s_.size() && std::isspace(static_cast<unsigned char>(s_[k]))) ++k;
    return k < s_.size() ? s_[k] : '\0';
  }

  // factor := atom postfix*, postfix := "'" | unambiguous '*' | '^' uint
  NCPoly factor() {
    NCPoly p = atom();
    for (;;) {
      char c = peek();
      if (c == '\'') {
        ++pos_;
        p = p.adjoint();
      } else if (c == '*' && !atom_start(next_nonspace_after_star())) {
        ++pos_;
        p = p.adjoint();
      } else if (c == '^') {
        ++pos_;
        unsigned long e = parse_uint();
        if (e > 64) fail("exponent too large");
        NCPoly pw = NCPoly::one(alpha_);
        for (unsigned long k = 0; k < e; ++k) pw = pw * p;
        p = pw;
      } else {
        break;
      }
    }
    return p;
  }

  NCPoly atom() {
    char c = peek();
    if (c == '(') return parenthesized();
    if (std::isdigit(static_cast<unsigned char>(c)))
      return NCPoly::constant(alpha_, Scalar(parse_rational(), mpq_class(0)));
    if (c == 'v' || c == 'u' || c == 'z' || c == 'a' || c == 'g')
      return NCPoly::generator(alpha_, parse_gen());
    fail("expected scalar, generator or '('");
  }

  // '(' rational sign rational 'i' ')'  or  '(' expr ')'
  NCPoly parenthesized() {
    expect('(');
    std::size_t save = pos_;
    try {
      bool neg_re = false;
      if (peek() == '-') {
        ++pos_;
        neg_re = true;
      }
      mpq_class re = parse_rational();
      if (neg_re) re = -re;
      char sign = peek();
      if (sign != '+' && sign != '-') throw ParseError("", 0, 0);
      ++pos_;
      mpq_class im = parse_rational();
      if (sign == '-') im = -im;
      skip_ws();
      if (raw_peek() != 'i') throw ParseError("", 0, 0);
      ++pos_;
      expect(')');
      return NCPoly::constant(alpha_, Scalar(re, im));
    } catch (const ParseError&) {
      pos_ = save;
    }
    NCPoly p = expr();
    expect(')');
    return p;
  }

  unsigned long parse_uint() {
    skip_ws();
    if (!std::isdigit(static_cast<unsigned char>(raw_peek())))
      fail("expected integer");
    unsigned long v = 0;
    while (std::isdigit(static_cast<unsigned char>(raw_peek()))) {
      v = v * 10 + static_cast<unsigned long>(raw_peek() - '0');
      if (v > 1000000) fail("integer too large");
      ++pos_;
    }
    return v;
  }

  mpq_class parse_rational() {
    unsigned long num = parse_uint();
    if (raw_peek() == '/') {
      ++pos_;
      unsigned long den = parse_uint();
      if (den == 0) fail("zero denominator");
      mpq_class q(static_cast<long>(num), static_cast<long>(den));
      q.canonicalize();
      return q;
    }
    return {static_cast<long>(num)};
  }

  GenSym parse_gen() {
    std::size_t at = pos_;
    char name = s_[pos_++];
    Family fam;
    switch (name) {
      case 'v': fam = Family::v; break;
      case 'u': fam = Family::u; break;
      case 'z': fam = Family::z; break;
      case 'a': fam = Family::alpha; break;
      case 'g': fam = Family::gamma; break;
      default: fail("unknown generator name");
    }
    // star written between the name and the index brackets, as in u*[2,1]
    bool star = false;
    if (raw_peek() == '*' && raw_peek(1) == '[') {
      star = true;
      ++pos_;
    }
    int i = 0, j = 0;
    if (eat('[')) {
      if (!family_indexed(fam)) {
        pos_ = at;
        fail(std::string("generator '") + name + "' takes no indices");
      }
      i = static_cast<int>(parse_uint());
      j = i;
      if (eat(',')) j = static_cast<int>(parse_uint());
      expect(']');
    } else if (family_indexed(fam)) {
      pos_ = at;
      fail(std::string("generator '") + name + "' needs indices");
    }
    GenSym g = GenSym::make(fam, i, j, star);
    if (!alpha_.contains(g)) {
      pos_ = at;
      if (family_indexed(fam) && alpha_.has(fam))
        fail("generator index out of range 1.." + std::to_string(alpha_.n()));
      fail("unknown generator " + g.token() + " for alphabet " + alpha_.str());
    }
    return g;
  }

  std::string_view s_;
  Alphabet alpha_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parse the expression language into an element of the free *-algebra over
/// `alphabet`.  Unknown generators and out-of-range indices are rejected
/// with position info.
inline NCPoly parse_expr(std::string_view text, Alphabet alphabet) {
  return detail::ExprParser(text, alphabet).parse();
}

}  // namespace qhopf
