// Exact vertex distortion: the maximum over vertex pairs of (shorter arc
// length along the knot) / (l1 distance), and the structural checks that
// accompany knots of distortion one.
#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "latknot/knot.hpp"
#include "latknot/rational.hpp"

namespace latknot {

struct VertexPair {
  std::size_t first = 0;
  std::size_t second = 0;
  friend auto operator<=>(const VertexPair&, const VertexPair&) = default;
};

struct DistortionReport {
  Rational value;
  /// Every pair (i < j) attaining value, ascending.
  std::vector<VertexPair> realizing_pairs;
  std::uint64_t pair_count_scanned = 0;
};

struct ScanOptions {
  /// Worker threads for the pair scan; 0 picks hardware_concurrency().
  unsigned threads = 1;
};

/// Shorter of the two arc lengths between vertices i and j.
/// Throws std::out_of_range on a bad index.
Coord knot_distance(const LatticeKnot& knot, std::size_t i, std::size_t j);

/// Scans all unordered vertex pairs. The result does not depend on the
/// number of threads.
DistortionReport vertex_distortion(const LatticeKnot& knot, ScanOptions options = {});

/// edge_length / 2.
Rational distortion_upper_bound(const LatticeKnot& knot);

/// knot_distance / l1_distance for one pair. Throws std::invalid_argument
/// when i == j.
Rational distortion_pair_value(const LatticeKnot& knot, std::size_t i, std::size_t j);

class PreconditionFailed : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct DistortionOneReport {
  std::size_t vertices_checked = 0;
  bool antipodal_arcs_staircase = true;
  bool vertices_are_box_corners = true;
  bool on_box_boundary = true;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

/// For a knot of distortion exactly one: both arcs from every vertex to its
/// antipode are staircase walks, and every vertex is a corner of the
/// bounding box. Throws PreconditionFailed when the distortion is not one.
DistortionOneReport check_distortion_one_structure(const LatticeKnot& knot);

}  // namespace latknot
