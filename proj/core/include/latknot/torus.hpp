// The T(p, p+1) torus-knot conformations: a 6p-stick tabulation with
// period-6 type sequence z+ x+ y+ z- x- y-, and exact checks of its closure,
// level structure, collinearity and coplanarity properties.
#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "latknot/knot.hpp"
#include "latknot/rational.hpp"

namespace latknot {

/// Throws std::invalid_argument for p < 2.
Tabulation generate_torus_tabulation(int p);

/// p if `tab` equals generate_torus_tabulation(p) up to its origin.
std::optional<int> detect_torus_parameter(const Tabulation& tab);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Directed length sums, indexed by Direction::index() (x+, x-, y+, y-, z+, z-).
struct ClosureSums {
  int p = 0;
  std::array<Coord, 6> directed{};
  Coord total = 0;
  Coord expected_axis_y_z = 0;  // p^2
  Coord expected_axis_x = 0;    // p^2/2 + 3p/2 - 1
  Coord expected_total = 0;     // 5p^2 + 3p - 2
  bool passed = false;
};

ClosureSums verify_closure_sums(int p);

struct PartialSumsCheck {
  int p = 0;
  std::array<std::vector<Coord>, 3> sums;  // x, y, z
  bool y_distinct = false;
  bool z_distinct = false;
  bool z_is_range = false;  // sorted z sums are 0 .. 2p-1
  bool y_is_range = false;  // sorted y sums are 1-p .. p
  /// Values occurring more than once among the x sums.
  std::vector<Coord> x_repeated_values;
  std::size_t x_count_of_two = 0;
  bool x_only_two_repeats = false;  // 2 is the only repeat, occurring p-1 times
  bool passed = false;
};

/// Defined for p >= 2; the x-sum repetition claim is only asserted (and
/// passed only reflects it) for p >= 3.
PartialSumsCheck verify_partial_sums(int p);

struct XLevelTwoCheck {
  int p = 0;
  std::size_t arc_count = 0;
  std::size_t isolated_points = 0;
  /// Stick types of each arc, in traversal order.
  std::vector<std::vector<StickType>> arc_shapes;
  /// First vertex of each arc in traversal order from the origin.
  std::vector<LatticePoint> initial_vertices;
  std::vector<Coord> y_stick_lengths;
  bool all_two_stick_arcs = false;
  bool y_lengths_are_p_minus_1 = false;
  /// initial_vertices[n-1] == (2, 1-n, 2p-n), the vertex obtained by
  /// unrolling the stick recursion from (2, 0, 2p-1).
  bool matches_recursion = false;
  /// initial_vertices[n-1] == (2, 1-n, 2p-2-n).
  bool matches_shifted_closed_form = false;
  bool passed = false;
};

/// Requires p >= 3 (throws std::invalid_argument otherwise).
XLevelTwoCheck verify_x_level_2(int p);

struct CollinearityCheck {
  int p = 0;
  std::vector<LatticePoint> z_plus_starts;
  bool z_plus_starts_match = false;  // (1-n, 1-n, n-1)
  /// Final three x+ initial points, final first.
  std::array<LatticePoint, 3> last_x_plus_starts{};
  bool last_x_plus_collinear = false;
  /// Rank of the span of endpoint differences per stick type, over all
  /// sticks of the type and over all but the final one.
  std::array<int, 6> rank_all{};
  std::array<int, 6> rank_without_final{};
  bool coplanar = false;
  bool passed = false;
};

/// Requires p >= 3.
CollinearityCheck verify_collinearity(int p);

std::size_t stick_count(const LatticeKnot& knot);

struct StructureReport {
  int p = 0;
  std::vector<CheckResult> checks;
  bool all_passed() const;
};

/// Builds T(p, p+1) and runs every structural check applicable to p.
StructureReport verify_torus_structure(int p);

/// Integer rank (0..3) of a set of vectors.
int integer_rank(const std::vector<LatticePoint>& vectors);

/// Closed forms evaluated at p: the lower-bound pair value for even p,
/// the odd-p value, and the value for the next pair inward.
struct TorusFormulas {
  Rational even_lower_bound;  // 9p^2/4 + 3p/2 - 1
  Rational odd_value;         // 11p^2/4 - p - 11/4
  Rational inner_pair;        // 11p^2/4 - 7p/2 - 5
};

TorusFormulas torus_distortion_formulas(int p);

}  // namespace latknot
