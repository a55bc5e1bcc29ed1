#include "dp5/rational.hpp"

#include <cctype>

namespace dp5 {

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto valid_int = [](const std::string& part, bool allow_sign) {
    if (part.empty()) return false;
    size_t i = 0;
    if (allow_sign && (part[0] == '-' || part[0] == '+')) i = 1;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false))
    throw InvalidInput("malformed rational literal '" + s + "'");
  if (num[0] == '+') num.erase(0, 1);
  Integer d(den);
  if (d == 0) throw InvalidInput("zero denominator in '" + s + "'");
  Rational r(Integer(num), d);
  r.canonicalize();
  return r;
}

bool is_square_rational(const Rational& r) {
  if (sgn(r) < 0) return false;
  return mpz_perfect_square_p(r.get_num_mpz_t()) != 0 &&
         mpz_perfect_square_p(r.get_den_mpz_t()) != 0;
}

Rational sqrt_rational(const Rational& r) {
  if (!is_square_rational(r)) throw InvalidInput("not a rational square: " + to_string(r));
  Integer n, d;
  mpz_sqrt(n.get_mpz_t(), r.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), r.get_den_mpz_t());
  return Rational(n, d);
}

namespace {

// Squarefree kernel of a positive integer by trial division; the remaining
// cofactor is handled by a perfect-square test (sufficient for the sizes
// that reach this routine: discriminants of small polynomials).
Integer squarefree_kernel(Integer n) {
  Integer result = 1;
  for (unsigned long p = 2; p < 100000; ++p) {
    Integer pp = Integer(p) * p;
    if (pp > n) break;
    unsigned count = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0) {
      n /= p;
      ++count;
    }
    if (count % 2 == 1) result *= p;
  }
  if (n > 1 && mpz_perfect_square_p(n.get_mpz_t()) == 0) result *= n;
  return result;
}

}  // namespace

Integer squarefree_class(const Rational& r) {
  if (sgn(r) == 0) return 0;
  // r = n/d ~ n*d modulo squares.
  Integer nd = abs(r.get_num()) * r.get_den();
  Integer k = squarefree_kernel(nd);
  return sgn(r) < 0 ? Integer(-k) : k;
}

Integer lcm_denominators_range(const Rational* begin, const Rational* end) {
  Integer l = 1;
  for (auto it = begin; it != end; ++it) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), it->get_den_mpz_t());
  return l;
}

}  // namespace dp5
