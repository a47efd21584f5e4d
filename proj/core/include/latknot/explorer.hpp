// Exhaustive enumeration of small lattice polygons up to lattice symmetry,
// classification of the distortion-one conformations, and a randomized
// move search for low-distortion conformations of a given knot.
#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <stdexcept>
#include <vector>

#include "latknot/distortion.hpp"
#include "latknot/knot.hpp"
#include "latknot/rational.hpp"

namespace latknot {

inline constexpr int kDefaultEnumerationCap = 16;

class EnumerationCapExceeded : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Lexicographically least step sequence over all starting vertices, both
/// orientations and the 48 lattice isometries. Steps compare by
/// Direction::index().
std::vector<Direction> canonical_steps(std::span<const Direction> steps);

/// The representative of knot's symmetry class, started at the origin.
LatticeKnot canonical_form(const LatticeKnot& knot);

/// Calls sink once per symmetry class of closed simple lattice polygons with
/// edge length 4 <= L <= max_edge_length, ordered by length and then by
/// canonical step sequence. Each knot is its own canonical_form.
/// Throws EnumerationCapExceeded when max_edge_length > cap, and
/// std::invalid_argument when max_edge_length is odd or below 4.
void enumerate_conformations(int max_edge_length, const std::function<void(const LatticeKnot&)>& sink,
                             int cap = kDefaultEnumerationCap);
std::vector<LatticeKnot> enumerate_conformations(int max_edge_length, int cap = kDefaultEnumerationCap);

/// Number of symmetry classes per edge length.
std::map<int, std::size_t> conformation_counts(int max_edge_length, int cap = kDefaultEnumerationCap);

struct DistortionOneConformation {
  LatticeKnot knot;
  DistortionOneReport structure;
};

/// Enumerated conformations with vertex distortion exactly 1, each paired
/// with its structure check.
std::vector<DistortionOneConformation> classify_distortion_one(int max_edge_length,
                                                               int cap = kDefaultEnumerationCap);

struct SearchOptions {
  std::size_t move_budget = 0;
  std::uint64_t seed = 1;
  /// Extensions beyond this edge length are rejected; 0 means twice the
  /// starting length plus 16.
  std::size_t max_edge_length = 0;
};

struct SearchResult {
  LatticeKnot best;
  Rational best_value;
  Rational initial_value;
  std::size_t moves_attempted = 0;
  std::size_t moves_applied = 0;
};

/// Random walk over unit reductions and leg extensions, tracking the lowest
/// vertex distortion seen. Deterministic for a given seed. The result is an
/// upper bound for the knot type, not its infimum.
SearchResult search_low_distortion(const LatticeKnot& knot, const SearchOptions& options);

}  // namespace latknot
