#include "dp5/parse.hpp"

#include <cctype>

namespace dp5 {

namespace {

class Parser {
 public:
  Parser(std::string_view s, const std::vector<std::string>& vars) : s_(s), vars_(vars) {}

  MPoly run() {
    skip();
    if (pos_ == s_.size()) fail("empty polynomial");
    MPoly p = expr();
    skip();
    if (pos_ != s_.size()) fail(std::string("unexpected '") + s_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InvalidInput("parse error at position " + std::to_string(pos_) + ": " + what);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  int n() const { return static_cast<int>(vars_.size()); }

  MPoly expr() {
    MPoly acc = term();
    while (true) {
      if (peek('+')) {
        ++pos_;
        acc = acc + term();
      } else if (peek('-')) {
        ++pos_;
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  MPoly term() {
    bool closed = false;
    MPoly acc = unary(closed);
    while (true) {
      if (peek('*')) {
        ++pos_;
        acc = acc * unary(closed);
      } else if (closed && peek('(')) {
        acc = acc * unary(closed);
      } else {
        return acc;
      }
    }
  }

  // `closed` reports whether the factor ended with a parenthesized group.
  MPoly unary(bool& closed) {
    if (peek('-')) {
      ++pos_;
      return -unary(closed);
    }
    if (peek('+')) {
      ++pos_;
      return unary(closed);
    }
    return power(closed);
  }

  MPoly power(bool& closed) {
    MPoly base = primary(closed);
    if (peek('^')) {
      ++pos_;
      skip();
      Integer e = integer();
      if (e > 1000) fail("exponent too large");
      base = base.pow(static_cast<int>(e.get_si()));
      closed = false;
    }
    return base;
  }

  Integer integer() {
    skip();
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return Integer(std::string(s_.substr(start, pos_ - start)));
  }

  MPoly primary(bool& closed) {
    skip();
    closed = false;
    if (pos_ == s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      MPoly inner = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      closed = true;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num = integer();
      Integer den = 1;
      size_t save = pos_;
      if (peek('/')) {
        ++pos_;
        skip();
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
          den = integer();
          if (den == 0) fail("zero denominator");
        } else {
          pos_ = save;
          fail("'/' is only allowed inside rational literals");
        }
      }
      Rational r(num, den);
      r.canonicalize();
      return MPoly::constant(n(), r);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      for (int i = 0; i < n(); ++i)
        if (vars_[static_cast<size_t>(i)] == name) return MPoly::var(n(), i);
      pos_ = start;
      fail("unknown variable '" + name + "'");
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view s_;
  const std::vector<std::string>& vars_;
  size_t pos_ = 0;
};

}  // namespace

MPoly parse_poly(std::string_view text, const std::vector<std::string>& vars) {
  if (vars.size() > static_cast<size_t>(kMaxVars)) throw InvalidInput("too many variables");
  return Parser(text, vars).run();
}

QPoly parse_univariate(std::string_view text, const std::string& var) {
  MPoly p = parse_poly(text, {var});
  std::vector<Rational> c(static_cast<size_t>(std::max(p.total_degree(), 0)) + 1);
  for (const auto& t : p.terms()) c[t.m[0]] = t.c;
  return QPoly(c);
}

std::string format_univariate(const QPoly& p, const std::string& var) {
  std::vector<Term> terms;
  for (int i = 0; i <= p.degree(); ++i) {
    Monomial m;
    m[0] = static_cast<std::uint16_t>(i);
    terms.push_back({m, p.coeff(i)});
  }
  return MPoly(1, terms).to_string({var});
}

}  // namespace dp5
