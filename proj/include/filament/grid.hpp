#pragma once

#include <stdexcept>

namespace filament {

enum class GridKind { Interval, Periodic };

/// Uniform arc-length sampling of an interval [0, length] or of a torus of
/// circumference `length`.  Interval grids place node 0 at s = 0 and the last
/// node at s = length; periodic grids place node i at s = i*spacing with the
/// wrap s = length identified with s = 0.
struct Grid {
  GridKind kind = GridKind::Interval;
  double length = 0.0;
  int n_nodes = 0;

  static Grid interval(double length, int n_nodes) {
    validate(length, n_nodes);
    return Grid{GridKind::Interval, length, n_nodes};
  }

  static Grid periodic(double length, int n_nodes) {
    validate(length, n_nodes);
    return Grid{GridKind::Periodic, length, n_nodes};
  }

  double spacing() const {
    return kind == GridKind::Interval ? length / (n_nodes - 1) : length / n_nodes;
  }

  double node(int i) const { return i * spacing(); }

  bool is_interval() const { return kind == GridKind::Interval; }
  bool is_periodic() const { return kind == GridKind::Periodic; }

  /// Symmetric-interval convention: an interval grid with an odd node count
  /// whose middle node represents s = 0 of (-length/2, length/2).
  bool has_center_node() const { return is_interval() && n_nodes % 2 == 1; }
  int center_node() const { return (n_nodes - 1) / 2; }

  bool operator==(const Grid&) const = default;

 private:
  static void validate(double length, int n_nodes) {
    if (!(length > 0.0)) throw std::invalid_argument("Grid: length must be positive");
    if (n_nodes < 8) throw std::invalid_argument("Grid: need at least 8 nodes");
  }
};

}  // namespace filament
