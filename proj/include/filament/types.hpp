#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

#include "filament/grid.hpp"

namespace filament {

using Eigen::Matrix3Xd;
using Eigen::Vector3d;

/// Sampled position vectors on a grid: one filament state at one time.
/// Column i of `points` is the position at node i.
struct Curve {
  Grid grid;
  Matrix3Xd points;

  Curve() = default;
  Curve(const Grid& g, Matrix3Xd p) : grid(g), points(std::move(p)) {
    if (points.cols() != grid.n_nodes)
      throw std::invalid_argument("Curve: points/grid size mismatch");
  }
  static Curve zero(const Grid& g) { return Curve(g, Matrix3Xd::Zero(3, g.n_nodes)); }
};

/// Sampled 3-vectors on a grid (tangents, derivatives, perturbations).
struct VectorField {
  Grid grid;
  Matrix3Xd vectors;

  VectorField() = default;
  VectorField(const Grid& g, Matrix3Xd v) : grid(g), vectors(std::move(v)) {
    if (vectors.cols() != grid.n_nodes)
      throw std::invalid_argument("VectorField: vectors/grid size mismatch");
  }
  static VectorField zero(const Grid& g) {
    return VectorField(g, Matrix3Xd::Zero(3, g.n_nodes));
  }
};

/// Circular-arc parameters: radius R, opening angle theta in (0, 2*pi).
/// The arc length is theta*R.
struct ArcParams {
  double radius = 1.0;
  double angle = M_PI / 2;

  ArcParams() = default;
  ArcParams(double R, double theta) : radius(R), angle(theta) {
    if (!(std::isfinite(R) && R > 0.0)) throw std::invalid_argument("ArcParams: radius must be positive");
    if (!(std::isfinite(theta) && theta > 0.0 && theta < 2 * M_PI))
      throw std::invalid_argument("ArcParams: angle must lie in (0, 2*pi)");
  }

  double length() const { return radius * angle; }

  /// Tangent of the base arc at s = 0 (the lower plane normal).
  Vector3d lower_tangent() const { return Vector3d(0, 1, 0); }
  /// Tangent of the base arc at s = length (the upper plane normal),
  /// (-sin(theta), cos(theta), 0).
  Vector3d upper_tangent() const { return Vector3d(-std::sin(angle), std::cos(angle), 0); }
};

}  // namespace filament
