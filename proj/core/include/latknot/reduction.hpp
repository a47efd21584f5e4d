// Stick reduction moves. Shrinking stick s with the orientation slides its
// initial vertex forward, rigidly translating the one or two sticks before
// it; the nearest earlier stick on s's axis (the anchor, pointing the other
// way) shrinks by the same amount. Against the orientation the terminal
// vertex slides back and the following sticks move. Edge length drops by
// twice the amount.
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "latknot/knot.hpp"

namespace latknot {

enum class ReductionDirection { with_orientation, against_orientation };

std::string to_string(ReductionDirection d);
/// Accepts "with" / "against" (and the full enumerator names).
ReductionDirection parse_reduction_direction(std::string_view text);

struct ReductionMove {
  std::size_t stick_index = 0;
  ReductionDirection direction = ReductionDirection::with_orientation;
  Coord amount = 1;
};

enum class ReductionFailure {
  none,
  collision_detected,
  amount_too_large,
  degenerate_stick,
  no_anchor,
  invalid_move,
};

std::string to_string(ReductionFailure f);

struct ReductionOutcome {
  std::optional<LatticeKnot> knot;
  ReductionFailure failure = ReductionFailure::none;
  /// Slide amount at which the sweep first collided.
  Coord failed_at = 0;
  std::optional<LatticePoint> collision_point;
  std::optional<std::pair<std::size_t, std::size_t>> colliding_sticks;
  std::string message;

  bool ok() const { return failure == ReductionFailure::none; }
};

/// The stick that absorbs the move: for with_orientation the stick two or
/// three positions before the target, for against_orientation two or three
/// after, whichever is nearest on the target's axis. Present only if it
/// points opposite to the target.
std::optional<std::size_t> reduction_anchor(const LatticeKnot& knot, std::size_t stick, ReductionDirection dir);

/// Every intermediate slide 1..amount must keep the knot simple, so a
/// successful move is an isotopy. The target and the anchor must both stay
/// longer than `amount`.
ReductionOutcome apply_reduction(const LatticeKnot& knot, const ReductionMove& move);

/// Inverse move: lengthens the target and its anchor by `amount`.
ReductionOutcome extend_legs(const LatticeKnot& knot, const ReductionMove& move);

/// Largest amount for which apply_reduction succeeds (0 if none).
Coord max_reduction(const LatticeKnot& knot, std::size_t stick, ReductionDirection dir);

bool is_reducible(const LatticeKnot& knot, std::size_t stick, ReductionDirection dir);

struct ReducibleWitness {
  std::size_t stick = 0;
  ReductionDirection direction = ReductionDirection::with_orientation;
  Coord max_amount = 0;
};

struct IrreducibilityReport {
  bool irreducible = true;
  /// One entry per distinct move. Reducing s against the orientation is the
  /// same move as reducing its anchor with the orientation, so such pairs are
  /// listed once under with_orientation.
  std::vector<ReducibleWitness> witnesses;
};

IrreducibilityReport is_irreducible(const LatticeKnot& knot);

/// Sweep-plane diagnostic: true if the translate by one unit of a stick that
/// the move would carry hits a fixed point of the knot (a point at l1
/// distance exactly 1 from that stick inside its swept rectangle). When it
/// fires the move is blocked; when it does not, the move may still be.
/// False if the move has no anchor.
bool sweep_criterion_blocks(const LatticeKnot& knot, std::size_t stick, ReductionDirection dir);

}  // namespace latknot
