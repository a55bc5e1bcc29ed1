#pragma once

#include <string>
#include <vector>

#include "dp5/construct.hpp"
#include "dp5/mpoly.hpp"

namespace dp5 {

/// Five linearly independent syzygies of linear forms among the quadrics.
struct SyzygyBasis {
  std::vector<std::vector<MPoly>> vectors;  // vectors[i][j] multiplies quadric j
  std::vector<MPoly> quadrics;
};

/// Point of the surface with rational or quadratic coordinates and the
/// values of the quadrics there (all zero).
struct SurfacePoint {
  ProjPoint point;
  std::vector<NFElem> certificate;

  bool is_rational() const { return point.is_rational(); }
  bool certified() const;
};

/// Values of the surface quadrics at a point.
std::vector<NFElem> surface_certificate(const DP5Surface& s, const ProjPoint& p);

struct BasePoint {
  std::vector<NFElem> point;  // in t0, t1, t2
  FieldPtr field;
  int orbit_size = 1;
  int multiplicity = 0;  // order of vanishing of the linear system
};

struct BasePointProfile {
  int degree = 0;
  std::vector<BasePoint> points;

  /// d^2 - sum m^2 = 5 and (d-1)(d-2)/2 - sum m(m-1)/2 = 1, counted over
  /// all geometric points.
  bool satisfies_numerics() const;
  /// Five geometric double points (the generic quintic case).
  bool five_double_points() const;
};

/// Birational map P^2 -> surface together with its inverse projection.
struct Parametrization {
  std::vector<MPoly> forms;       // six forms in t0, t1, t2
  std::vector<MPoly> projection;  // three linear forms in x0..x5
  RatVector center;               // the rational point whose tangent plane is projected from
  int degree = 0;
};

enum class InversionMethod { Interpolation, Symbolic };

struct ParamOptions {
  InversionMethod method = InversionMethod::Interpolation;
  /// Retry at other rational points until the result has degree 5 with five
  /// double base points.
  bool require_general = false;
};

/// Diagnostics from the quadratic descent.
struct DescentReport {
  int attempts = 0;
  std::vector<int> multiplicities;  // per geometric point of the accepted section
  bool line_in_surface = false;
};

SyzygyBasis linear_syzygies(const DP5Surface& surface);

/// Zero set of the fifth coordinates of the syzygies.
LinearSubspace special_subspace(const SyzygyBasis& syz);

/// Point of the surface over Q or a quadratic field.
SurfacePoint find_point(const DP5Surface& surface);

/// Rational point obtained from a quadratic one by intersecting the surface
/// with 3-planes spanned by conjugate tangent lines (at most 6 attempts).
SurfacePoint rationalize_point(const DP5Surface& surface, const SurfacePoint& q, DescentReport* report = nullptr);

/// Inverse of the projection from the tangent plane at a rational point.
Parametrization project_param(const DP5Surface& surface, const RatVector& p,
                              InversionMethod method = InversionMethod::Interpolation);

Parametrization parametrize_surface(const DP5Surface& surface, const ParamOptions& opts = {});

/// quadrics(forms) = 0 and projection(forms) = lambda * (t0, t1, t2), lambda != 0.
bool verify_parametrization(const DP5Surface& surface, const Parametrization& param);

BasePointProfile base_point_profile(const Parametrization& param);

/// Signed 4x4 sub-Pfaffians of a 5x5 skew matrix: entry i omits row and
/// column i and carries the sign (-1)^i, so that m times the vector is zero.
std::vector<MPoly> pfaffians(const std::vector<std::vector<MPoly>>& m);

}  // namespace dp5
