#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "dp5/upoly.hpp"

namespace dp5 {

/// p = unit * prod factor_i^mult_i with monic irreducible factors.
struct Factorization {
  Rational unit;
  std::vector<std::pair<QPoly, int>> factors;

  QPoly product() const;
  /// Sorted degrees of the distinct irreducible factors (with repetition by multiplicity).
  std::vector<int> degree_pattern() const;
};

/// Complete factorization over Q into monic irreducibles, sorted by
/// (degree, coefficients) for deterministic output.
Factorization factor_rational(const QPoly& p);

/// Irreducible factors of a squarefree polynomial (monic), same order.
std::vector<QPoly> irreducible_factors(const QPoly& p);

bool is_irreducible(const QPoly& p);

/// Sylvester resultant: lc(p)^deg q * prod_{p(a)=0} q(a).
Rational resultant(const QPoly& p, const QPoly& q);

/// (-1)^{n(n-1)/2} resultant(p, p') / lc(p).
Rational discriminant(const QPoly& p);

/// Distinct rational roots, ascending.
std::vector<Rational> rational_roots(const QPoly& p);

/// gcd over Q computed with a primitive remainder sequence (monic result).
QPoly gcd_rational(const QPoly& a, const QPoly& b);

/// Fast sufficient squarefreeness test (one good prime), then exact fallback.
bool is_squarefree_rational(const QPoly& p);

namespace modp {

/// True iff p does not divide the leading coefficient or a denominator of f
/// and f mod p is squarefree.
bool is_good_prime(const QPoly& f, std::uint64_t p);

/// Degrees of the irreducible factors of f mod p (f squarefree mod p).
std::vector<int> factor_degrees(const QPoly& f, std::uint64_t p);

/// Number of distinct roots of f in F_p.
int count_roots(const QPoly& f, std::uint64_t p);

/// Primes >= start, in order.
std::uint64_t next_prime(std::uint64_t start);

}  // namespace modp

}  // namespace dp5
