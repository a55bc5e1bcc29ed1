#pragma once

#include <string>
#include <variant>
#include <vector>

#include "dp5/construct.hpp"
#include "dp5/parametrize.hpp"

namespace dp5 {

/// Galois data of a seed: the group of its splitting field as a subgroup
/// of S5 (by isomorphism type), how it acts on the ten lines, and the
/// parametric degree of the surface.
struct GaloisClass {
  std::string group_type;            // "1", "C2", ..., "C2xC2", "S3", ..., "H20", "A5", "S5"
  std::vector<int> factor_pattern;   // degrees of the rational factors, descending
  std::string embedding_invariant;   // extra data for the ambiguous types, else empty
  int orbit_count = 0;               // orbits on the ten lines
  int parametric_degree = 0;         // 3, 4 or 5

  int group_order() const;
};

/// Order of a group type name, 0 if unknown.
int group_order(const std::string& type);

GaloisClass galois_class(const QuinticSeed& seed);

/// Orbits of the Galois group on unordered pairs of roots.
int line_orbits(const QuinticSeed& seed);

/// 3 with a linear factor, 4 with a quadratic but no linear factor, 5 if irreducible.
int parametric_degree(const QuinticSeed& seed);

/// Monic degree-10 polynomial whose roots are x_i + x_j + c x_i x_j (i < j).
QPoly pair_resolvent(const QPoly& q, int c);

/// Degree-6 resolvent of a monic quintic whose roots are the squares of
/// (sum over a pentagon of x_i x_j) - (sum over the complementary pentagon).
/// A rational root (when squarefree) means the group lies in H20.
QPoly sextic_resolvent(const QPoly& q);

/// Seed of the five double base points of a quintic parametrization, read
/// off on the unique conic through them.
QuinticSeed recover_seed(const Parametrization& param);
/// Parametrizes first (at a point off the lines), then recovers the seed.
QuinticSeed recover_seed(const DP5Surface& surface);

using IsomInput = std::variant<QuinticSeed, DP5Surface>;

struct IsomorphismVerdict {
  enum class Status { Isomorphic, NotIsomorphic, Undecided };
  Status status = Status::Undecided;
  std::string reason;                 // case label
  std::vector<std::string> evidence;  // witnessing data, one item per line

  bool isomorphic() const { return status == Status::Isomorphic; }
};

IsomorphismVerdict decide_isomorphic(const IsomInput& a, const IsomInput& b);

}  // namespace dp5
