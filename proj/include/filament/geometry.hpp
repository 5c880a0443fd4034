#pragma once

#include <utility>

#include "filament/types.hpp"

namespace filament {

/// Point of the translating-arc solution at arc length s and time t:
/// (R cos(s/R), R sin(s/R), t/R).  Works for arcs and full circles alike.
Vector3d exact_arc_point(double radius, double s, double t);

/// Sample the exact arc on an interval grid.  The grid length must equal
/// params.length() to relative precision 1e-12.
Curve sample_exact_arc(const ArcParams& params, double t, const Grid& grid);

/// Sample the exact circle on a periodic grid of circumference 2*pi*radius.
Curve sample_exact_circle(double radius, double t, const Grid& grid);

/// Unit tangent field of the base arc/circle, (-sin(s/R), cos(s/R), 0).
VectorField sample_arc_tangent(double radius, const Grid& grid);

/// Finite-difference derivative of order 1..4 at 2nd-order accuracy:
/// central stencils in the interior, one-sided 2nd-order stencils at
/// interval endpoints, wraparound on periodic grids.
Matrix3Xd derivative(const Matrix3Xd& values, const Grid& grid, int order);
VectorField derivative(const VectorField& field, int order);
VectorField derivative(const Curve& curve, int order);

/// In-place variant reusing the caller's output buffer (resized as needed).
void derivative_into(const Matrix3Xd& values, const Grid& grid, int order, Matrix3Xd& out);

/// Reflection operator on a symmetric interval: (T y)(s) = (y1(-s), -y2(-s), y3(-s)).
/// The grid must be an interval with an odd node count; the middle node is s = 0.
/// Applying twice returns the input exactly.
VectorField reflect_T(const VectorField& field);
Matrix3Xd reflect_T(const Matrix3Xd& values, const Grid& grid);

struct ExtensionResult {
  Curve curve;           // on a symmetric interval of twice the original length
  double join_residual;  // smooth-join diagnostic at s = 0 (warning channel)
};

/// Extend a curve on [0, L] across the plane xi_2 = 0 to a T-symmetric curve
/// on (-L, L).  The original curve is recovered exactly on the right half.
/// A nonzero x2(0), or a tangent at s = 0 outside the xi_2-axis, leaves a
/// join discontinuity which is reported, not rejected.
ExtensionResult extend_by_reflection(const Curve& curve);

struct CanonicalRotation {
  Eigen::Matrix3d Q;  // proper rotation
  double theta;       // dihedral angle between the planes normal to a and e3, in (0, 2*pi)
  Vector3d b;         // Q a = (-sin(theta), cos(theta), 0)
};

/// Rotation reducing boundary data (a, e3) to the standard pair (b, e2):
/// Q e3 = e2, Q maps the intersection line of the two boundary planes to the
/// xi_3-axis, and theta is measured counter-clockwise about that axis.
/// Throws when a is (numerically) parallel to e3.
CanonicalRotation canonical_rotation(const Vector3d& a);

}  // namespace filament
