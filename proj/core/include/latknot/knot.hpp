// Lattice knots: the tabulation encoding (stick-type sequence plus per-axis
// length columns), construction and validation of closed simple
// axis-parallel polygons, and the planar levels of a knot.
#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "latknot/lattice.hpp"

namespace latknot {

/// Axis and orientation of a stick; the same alphabet as unit steps.
using StickType = Direction;

/// Stick-type sequence paired with per-axis length columns. The n-th stick
/// along an axis takes its length from row n of that axis's column.
struct Tabulation {
  std::vector<StickType> types;
  std::array<std::vector<Coord>, 3> lengths;  // columns x, y, z
  LatticePoint origin{};

  std::vector<Coord>& column(Axis a) { return lengths[index_of(a)]; }
  const std::vector<Coord>& column(Axis a) const { return lengths[index_of(a)]; }
  /// Largest column size.
  std::size_t row_count() const;

  friend bool operator==(const Tabulation&, const Tabulation&) = default;
};

enum class KnotErrorKind {
  not_closed,
  self_intersection,
  length_mismatch,
  non_axis_parallel,
};

std::string to_string(KnotErrorKind kind);

class KnotError : public std::runtime_error {
 public:
  KnotError(KnotErrorKind kind, const std::string& message, std::optional<LatticePoint> point = std::nullopt,
            std::optional<std::pair<std::size_t, std::size_t>> sticks = std::nullopt)
      : std::runtime_error(message), kind_(kind), point_(point), sticks_(sticks) {}

  KnotErrorKind kind() const { return kind_; }
  /// Colliding lattice point for self_intersection.
  const std::optional<LatticePoint>& point() const { return point_; }
  /// Indices of the two sticks that share point(), in walk order.
  const std::optional<std::pair<std::size_t, std::size_t>>& sticks() const { return sticks_; }

 private:
  KnotErrorKind kind_;
  std::optional<LatticePoint> point_;
  std::optional<std::pair<std::size_t, std::size_t>> sticks_;
};

/// A maximal straight segment. `start` is the vertex index of its initial
/// critical vertex; it covers vertices start .. start+length (cyclically).
struct Stick {
  StickType type;
  Coord length = 0;
  std::size_t start = 0;

  friend bool operator==(const Stick&, const Stick&) = default;
};

/// A validated closed simple polygon in the cubic lattice.
///
/// Stored as the cyclic list of every integer point it visits (its vertex
/// set, in orientation order) plus the unit step leaving each vertex. Vertex
/// 0 is always a critical vertex, so sticks()[0] starts at vertex 0. Two
/// knots compare equal iff they visit the same points in the same order from
/// the same starting vertex.
class LatticeKnot {
 public:
  /// Walks `steps` from `start`. Throws KnotError (self_intersection,
  /// not_closed) when the walk revisits a point or fails to return. If
  /// `start` is not a critical vertex the stored cycle is rotated forward to
  /// the next one.
  static LatticeKnot from_steps(const LatticePoint& start, std::vector<Direction> steps);

  /// As above, with a caller-supplied stick label per step used in collision
  /// reports (e.g. the tabulation index of each stick).
  static LatticeKnot from_steps(const LatticePoint& start, std::vector<Direction> steps,
                                std::span<const std::size_t> step_labels);

  std::size_t edge_length() const { return vertices_.size(); }
  const std::vector<LatticePoint>& vertices() const { return vertices_; }
  const LatticePoint& vertex(std::size_t i) const { return vertices_[i % vertices_.size()]; }
  const std::vector<Direction>& steps() const { return steps_; }
  const std::vector<Stick>& sticks() const { return sticks_; }
  std::size_t stick_count() const { return sticks_.size(); }

  bool is_critical(std::size_t i) const;
  std::vector<std::size_t> critical_indices() const;
  /// Stick containing the unit step that leaves vertex `step`.
  std::size_t stick_of_step(std::size_t step) const { return stick_of_step_[step]; }
  /// Initial critical vertex of each stick, in order.
  std::vector<LatticePoint> corners() const;
  std::optional<std::size_t> find(const LatticePoint& p) const;
  bool contains(const LatticePoint& p) const { return index_.contains(p); }
  Box bounding_box() const;

  /// Tabulation read from the lexicographically least critical vertex,
  /// following the stored orientation; its origin is that vertex.
  Tabulation canonical_tabulation() const;

  /// Same point set traversed the other way, starting at the same vertex.
  LatticeKnot reversed() const;
  /// Image under p -> g(p) + offset.
  LatticeKnot transformed(const Isometry& g, const LatticePoint& offset = {}) const;

  friend bool operator==(const LatticeKnot& a, const LatticeKnot& b) { return a.vertices_ == b.vertices_; }

 private:
  LatticeKnot() = default;

  std::vector<LatticePoint> vertices_;
  std::vector<Direction> steps_;
  std::vector<Stick> sticks_;
  std::vector<std::uint32_t> stick_of_step_;
  std::unordered_map<LatticePoint, std::size_t, LatticePointHash> index_;
};

/// Throws KnotError(length_mismatch) unless every axis column has exactly as
/// many positive entries as the type sequence has sticks on that axis, all
/// before any zero padding.
void validate_tabulation(const Tabulation& tab);

/// Walks the tabulation from tab.origin. Throws KnotError.
LatticeKnot build_knot(const Tabulation& tab);
LatticeKnot build_knot(const Tabulation& tab, const LatticePoint& origin);

/// Closed polygon through the given cyclic corner list; consecutive points
/// must differ along exactly one axis. Unit steps are interpolated and
/// collinear consecutive segments merge. Throws KnotError (including
/// non_axis_parallel).
LatticeKnot knot_from_vertices(std::span<const LatticePoint> cycle);

/// Intersection of a knot with the plane {p : p[axis] == value}.
struct Level {
  Axis axis = Axis::x;
  Coord value = 0;
  /// Maximal runs (two or more vertices) of consecutive in-plane vertex
  /// indices, ordered by first index along the orientation.
  std::vector<std::vector<std::size_t>> arcs;
  /// In-plane vertices whose neighbours both leave the plane.
  std::vector<std::size_t> isolated_points;
  /// The whole knot lies in the plane; arcs then holds one cyclic arc.
  bool whole_knot = false;

  bool empty() const { return arcs.empty() && isolated_points.empty(); }
};

Level level(const LatticeKnot& knot, Axis axis, Coord value);

/// Running sums of the lengths of the sticks on `axis` in traversal order,
/// starting from the origin coordinate on that axis. With signed_sums the
/// stick sign is applied, so entry n is the level of the n-th such stick's
/// terminal vertex.
std::vector<Coord> partial_sums(const LatticeKnot& knot, Axis axis, bool signed_sums = true);
std::vector<Coord> partial_sums(const Tabulation& tab, Axis axis, bool signed_sums = true);

/// Vertex at arc distance edge_length/2 from v.
std::size_t antipodal_vertex(const LatticeKnot& knot, std::size_t v);

}  // namespace latknot
