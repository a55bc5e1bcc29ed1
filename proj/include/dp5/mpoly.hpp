#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "dp5/matrix.hpp"
#include "dp5/numfield.hpp"
#include "dp5/rational.hpp"

namespace dp5 {

constexpr int kMaxVars = 8;

/// Exponent vector; unused trailing slots are zero.
struct Monomial {
  std::array<std::uint16_t, kMaxVars> e{};

  int degree() const {
    int d = 0;
    for (auto v : e) d += v;
    return d;
  }
  std::uint16_t operator[](int i) const { return e[static_cast<size_t>(i)]; }
  std::uint16_t& operator[](int i) { return e[static_cast<size_t>(i)]; }
  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (size_t i = 0; i < kMaxVars; ++i) m.e[i] = static_cast<std::uint16_t>(a.e[i] + b.e[i]);
    return m;
  }
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return a.e != b.e; }
  bool divides(const Monomial& b) const {
    for (size_t i = 0; i < kMaxVars; ++i)
      if (e[i] > b.e[i]) return false;
    return true;
  }
  /// b / a, precondition divides(b).
  Monomial quotient_of(const Monomial& b) const {
    Monomial m;
    for (size_t i = 0; i < kMaxVars; ++i) m.e[i] = static_cast<std::uint16_t>(b.e[i] - e[i]);
    return m;
  }
  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (size_t i = 0; i < kMaxVars; ++i) m.e[i] = std::max(a.e[i], b.e[i]);
    return m;
  }
};

/// Graded reverse lexicographic comparison: -1, 0, 1.
int grevlex_cmp(const Monomial& a, const Monomial& b);

/// All monomials of degree d in n variables, grevlex descending.
std::vector<Monomial> monomials_of_degree(int n, int d);

struct Term {
  Monomial m;
  Rational c;
};

/// Sparse polynomial over Q in a fixed number of variables; terms are kept
/// in grevlex-descending order without zero coefficients.
class MPoly {
 public:
  MPoly() = default;
  explicit MPoly(int nvars) : n_(nvars) {}
  MPoly(int nvars, std::vector<Term> terms);

  static MPoly constant(int nvars, const Rational& c);
  static MPoly var(int nvars, int i);
  static MPoly monomial(int nvars, const Monomial& m, const Rational& c = 1);

  int nvars() const { return n_; }
  const std::vector<Term>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  int total_degree() const;
  bool is_homogeneous() const;
  const Term& lead() const { return t_.front(); }
  Rational coeff(const Monomial& m) const;

  friend MPoly operator+(const MPoly& a, const MPoly& b);
  friend MPoly operator-(const MPoly& a, const MPoly& b);
  friend MPoly operator-(const MPoly& a);
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(const MPoly& a, const Rational& s);
  friend MPoly operator*(const Rational& s, const MPoly& a) { return a * s; }
  MPoly& operator+=(const MPoly& o) { return *this = *this + o; }
  MPoly& operator-=(const MPoly& o) { return *this = *this - o; }
  friend bool operator==(const MPoly& a, const MPoly& b);
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

  MPoly pow(int k) const;
  MPoly derivative(int i) const;
  /// Composition f(images[0], ..., images[n-1]); all images share one arity.
  MPoly substitute(const std::vector<MPoly>& images) const;
  /// Integer content-free representative with positive leading coefficient.
  MPoly primitive() const;
  /// Same polynomial viewed with a different number of variables (the
  /// variables that are dropped must not occur).
  MPoly with_nvars(int n) const;

  template <class G>
  G eval(const std::vector<G>& x) const {
    G acc(0);
    for (const auto& t : t_) {
      G v(t.c);
      for (int i = 0; i < n_; ++i)
        for (int k = 0; k < t.m[i]; ++k) v = v * x[static_cast<size_t>(i)];
      acc = acc + v;
    }
    return acc;
  }

  std::string to_string(const std::vector<std::string>& vars) const;

 private:
  int n_ = 0;
  std::vector<Term> t_;
};

/// Standard variable names.
std::vector<std::string> var_names(const std::string& prefix, int n);

/// Coefficient vector of a homogeneous form on a monomial list.
RatVector coefficients_on(const MPoly& f, const std::vector<Monomial>& basis);
MPoly form_from_coefficients(int nvars, const std::vector<Monomial>& basis, const RatVector& c);

/// Basis of degree-d forms in `arity` variables annihilated by the given
/// functionals (rows indexed by monomials_of_degree(arity, d)). The basis is
/// in reduced echelon form with respect to grevlex and content-normalized.
std::vector<MPoly> graded_piece_fit(const std::vector<RatVector>& conditions, int d, int arity);

/// Echelon basis of the Q-span of homogeneous forms of equal degree.
std::vector<MPoly> echelon_span(const std::vector<MPoly>& forms);
bool same_span(const std::vector<MPoly>& a, const std::vector<MPoly>& b);

/// Partial derivatives of the generators evaluated at a point.
template <class G>
Matrix<G> jacobian_at(const std::vector<MPoly>& gens, const std::vector<G>& p) {
  for (const auto& g : gens)
    if (!is_zero(g.eval(p))) throw InvalidInput("point not on surface");
  const int n = gens.empty() ? 0 : gens.front().nvars();
  Matrix<G> j(gens.size(), static_cast<size_t>(n));
  for (size_t r = 0; r < gens.size(); ++r)
    for (int c = 0; c < n; ++c) j(r, static_cast<size_t>(c)) = gens[r].derivative(c).eval(p);
  return j;
}

/// Point of projective space with rational or number-field coordinates,
/// normalized so that the first nonzero coordinate is 1.
struct ProjPoint {
  std::vector<NFElem> coords;
  FieldPtr field;  // null for a rational point

  static ProjPoint normalized(std::vector<NFElem> c);
  static ProjPoint rational(const RatVector& c);
  bool is_rational() const;
  RatVector rational_coords() const;
};

/// Projective linear subspace kept both as a spanning set and as defining
/// linear forms.
struct LinearSubspace {
  int ambient = 0;                 // number of homogeneous coordinates
  std::vector<RatVector> span;     // basis of the underlying vector space
  std::vector<RatVector> equations;

  static LinearSubspace from_span(int ambient, const std::vector<RatVector>& vecs);
  static LinearSubspace from_equations(int ambient, const std::vector<RatVector>& eqs);
  /// Projective dimension.
  int dimension() const { return static_cast<int>(span.size()) - 1; }
};

}  // namespace dp5
