#pragma once

#include <optional>
#include <vector>

#include "dp5/groebner.hpp"
#include "dp5/mpoly.hpp"
#include "dp5/upoly.hpp"

namespace dp5 {

/// Monic squarefree quintic over Q.
struct QuinticSeed {
  QPoly poly;

  /// Validates degree, monicity and squarefreeness; throws InvalidInput.
  static QuinticSeed from(const QPoly& p);
};

/// Six quintic forms in t0, t1, t2 spanning the quintics singular at the
/// five points (x : x^2 : 1), Q(x) = 0.
struct QuinticSystem {
  std::vector<MPoly> forms;
  QPoly seed;
};

/// Anticanonical quintic Del Pezzo: five quadrics in x0..x5.
struct DP5Surface {
  std::vector<MPoly> quadrics;
  std::optional<QPoly> seed;  // provenance, when built from a seed

  /// Checks shape: five independent quadratic forms in six variables.
  void validate() const;
};

/// Ideal of the five points (x^2 : x : 1) in Q[s, t, u].
Ideal point_scheme_ideal(const QuinticSeed& seed);

/// Conditions F = dF/dt0 = dF/dt1 = 0 at (x, x^2, 1) modulo Q.
QuinticSystem adjoint_quintics(const QuinticSeed& seed);

/// Same space via the ideal route: square of the point ideal, saturated,
/// degree-5 piece (variables renamed s -> t1, t -> t0, u -> t2).
QuinticSystem adjoint_quintics_ideal_route(const QuinticSeed& seed);

/// Quadrics in x0..x5 vanishing on the image of six forms in t0..t2.
/// Throws InvalidInput("degenerate system") unless the space is 5-dimensional.
DP5Surface implicitize(const std::vector<MPoly>& forms);

DP5Surface construct_surface(const QuinticSeed& seed);

}  // namespace dp5
