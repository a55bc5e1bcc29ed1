#pragma once

#include <memory>
#include <string>
#include <vector>

#include "dp5/factor.hpp"
#include "dp5/upoly.hpp"

namespace dp5 {

/// Q[a]/(m) for a monic irreducible m.
class NumberField {
 public:
  /// Checks irreducibility unless `trusted` (the caller already knows it).
  explicit NumberField(QPoly modulus, bool trusted = false);

  const QPoly& modulus() const { return m_; }
  int degree() const { return m_.degree(); }

 private:
  QPoly m_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

FieldPtr make_field(const QPoly& modulus, bool trusted = false);

/// Element of a number field, stored as a reduced polynomial in the
/// generator. A null field stands for a plain rational (so that 0 and 1
/// can be written without naming the field).
class NFElem {
 public:
  NFElem() = default;
  NFElem(int v) : v_(QPoly::constant(Rational(v))) {}  // NOLINT
  NFElem(const Rational& v) : v_(QPoly::constant(v)) {}  // NOLINT
  NFElem(FieldPtr k, QPoly v);

  static NFElem generator(const FieldPtr& k);
  /// Coordinates (c_0..c_{n-1}) in the power basis.
  static NFElem from_coords(const FieldPtr& k, const std::vector<Rational>& c);

  const FieldPtr& field() const { return k_; }
  const QPoly& poly() const { return v_; }
  std::vector<Rational> coords() const;
  bool is_rational() const { return v_.degree() <= 0; }
  Rational rational_value() const;

  NFElem inverse() const;
  /// Nontrivial automorphism of a quadratic field.
  NFElem conjugate() const;
  Rational norm() const;
  Rational trace() const;

  friend NFElem operator+(const NFElem& a, const NFElem& b);
  friend NFElem operator-(const NFElem& a, const NFElem& b);
  friend NFElem operator-(const NFElem& a);
  friend NFElem operator*(const NFElem& a, const NFElem& b);
  friend NFElem operator/(const NFElem& a, const NFElem& b);
  NFElem& operator+=(const NFElem& o) { return *this = *this + o; }
  NFElem& operator-=(const NFElem& o) { return *this = *this - o; }
  NFElem& operator*=(const NFElem& o) { return *this = *this * o; }
  friend bool operator==(const NFElem& a, const NFElem& b) { return a.v_ == b.v_; }
  friend bool operator!=(const NFElem& a, const NFElem& b) { return !(a == b); }

 private:
  FieldPtr k_;
  QPoly v_;
};

inline bool is_zero(const NFElem& e) { return e.poly().is_zero(); }
std::string coeff_to_string(const NFElem& e);
std::string to_string(const NFElem& e, const std::string& gen = "a");

using KPoly = UPoly<NFElem>;

/// Coefficientwise embedding of a rational polynomial.
KPoly to_kpoly(const QPoly& p, const FieldPtr& k);
/// Image of a K-element under a Q-algebra map sending the generator to `image`.
NFElem embed(const NFElem& e, const NFElem& image);

/// Norm_{K/Q} of a K[y] polynomial: a rational polynomial of degree n*deg g.
QPoly norm_poly(const KPoly& g, const FieldPtr& k);

/// Complete factorization into monic irreducibles over K (Trager).
/// Throws InvalidInput on a non-squarefree argument.
std::vector<KPoly> factor_over_field(const KPoly& p, const FieldPtr& k);

/// Configured bound on absolute tower degree (env DP5_MAX_TOWER_DEGREE, default 120).
int max_tower_degree();

struct TowerStage {
  int relative_degree = 1;
  /// Absolute field after this stage; null for a final quadratic stage that
  /// is certified but not flattened.
  FieldPtr field;
};

struct SplittingTower {
  std::vector<TowerStage> stages;
  int total_degree = 1;
  /// True if the top field was only certified by the discriminant test.
  bool last_stage_relative = false;
};

SplittingTower splitting_tower(const QPoly& p, int max_degree = max_tower_degree());

/// Sound rejection: some prime among the first `count` good ones splits one
/// polynomial completely but not the other.
bool frobenius_reject(const QPoly& p, const QPoly& q, int count = 50);

bool same_splitting_field(const QPoly& p, const QPoly& q, int max_degree = max_tower_degree());

}  // namespace dp5
