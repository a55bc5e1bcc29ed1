#pragma once

#include <memory>
#include <mutex>
#include <vector>

#include "dp5/mpoly.hpp"
#include "dp5/numfield.hpp"

namespace dp5 {

enum class TermOrder {
  Grevlex,
  Lex,
  /// Block order eliminating variable 0 (then grevlex).
  Elim0,
};

int order_cmp(TermOrder o, const Monomial& a, const Monomial& b);

/// Reduced Groebner basis (monic, sorted by ascending leading monomial).
std::vector<MPoly> groebner_basis(const std::vector<MPoly>& gens, TermOrder order = TermOrder::Grevlex);

/// Remainder of f on division by a Groebner basis.
MPoly normal_form(const MPoly& f, const std::vector<MPoly>& gb, TermOrder order = TermOrder::Grevlex);

/// Leading monomial of f in the given order.
Monomial leading_monomial(const MPoly& f, TermOrder order);

/// Raised when a system expected to have finitely many solutions does not.
class PositiveDimensional : public Error {
 public:
  PositiveDimensional() : Error("unexpected positive-dimensional intersection") {}
};

class Ideal {
 public:
  Ideal() = default;
  Ideal(int nvars, std::vector<MPoly> gens);

  int nvars() const { return n_; }
  const std::vector<MPoly>& generators() const { return gens_; }
  /// Cached reduced grevlex basis, computed on first use.
  const std::vector<MPoly>& basis() const;

  bool contains(const MPoly& f) const;
  bool contains(const Ideal& j) const;
  bool is_unit() const;

  friend bool ideal_equal(const Ideal& a, const Ideal& b) { return a.contains(b) && b.contains(a); }

 private:
  int n_ = 0;
  std::vector<MPoly> gens_;
  struct Cache {
    std::once_flag once;
    std::vector<MPoly> gb;
  };
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_intersection(const Ideal& a, const Ideal& b);
/// I : J = { f | f J in I }.
Ideal ideal_quotient(const Ideal& i, const Ideal& j);
/// I : J^infinity.
Ideal saturate(const Ideal& i, const Ideal& j);
/// Ideal generated by all variables.
Ideal irrelevant_ideal(int nvars);

/// A Galois orbit of solutions: coordinates in Q[theta]/(minpoly), one
/// representative point, multiplicity of each point of the orbit.
struct Solution {
  std::vector<NFElem> point;
  FieldPtr field;  // null for rational points
  int multiplicity = 1;
  int orbit_size() const { return field ? field->degree() : 1; }
};

/// Affine solutions of a zero-dimensional ideal.
std::vector<Solution> zero_dim_solve(const Ideal& ideal);

/// Projective solutions of a homogeneous ideal with finitely many points;
/// each point is scaled so that its first nonzero coordinate is 1.
std::vector<Solution> zero_dim_solve_projective(const Ideal& ideal);

}  // namespace dp5
