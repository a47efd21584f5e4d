#include "latknot/reduction.hpp"

#include <algorithm>
#include <unordered_set>

namespace latknot {

namespace {

bool with(ReductionDirection d) { return d == ReductionDirection::with_orientation; }

std::size_t wrap(std::ptrdiff_t i, std::size_t m) {
  const auto mm = static_cast<std::ptrdiff_t>(m);
  return static_cast<std::size_t>(((i % mm) + mm) % mm);
}

// Sticks strictly between target and anchor, walking away from the target.
std::vector<std::size_t> carried_sticks(std::size_t target, std::size_t anchor, ReductionDirection dir, std::size_t m) {
  std::vector<std::size_t> out;
  const std::ptrdiff_t step = with(dir) ? -1 : 1;
  for (auto k = wrap(static_cast<std::ptrdiff_t>(target) + step, m); k != anchor;
       k = wrap(static_cast<std::ptrdiff_t>(k) + step, m)) {
    out.push_back(k);
  }
  return out;
}

// Knot after sliding by `shift` (positive shrinks, negative extends).
// Throws KnotError on collision.
LatticeKnot slid_knot(const LatticeKnot& knot, std::size_t target, std::size_t anchor, ReductionDirection dir,
                      Coord shift) {
  const auto& sticks = knot.sticks();
  const std::size_t m = sticks.size();
  std::vector<LatticePoint> vec(m);
  for (std::size_t k = 0; k < m; ++k) vec[k] = sticks[k].length * sticks[k].type.unit();

  const LatticePoint u = sticks[target].type.unit();
  const LatticePoint t = with(dir) ? shift * u : -(shift * u);
  if (with(dir)) {
    vec[anchor] += t;
    vec[target] -= t;
  } else {
    vec[target] += t;
    vec[anchor] -= t;
  }
  // Corner 0 moves when it lies on the carried chain, i.e. strictly after the
  // anchor and up to the target (with), or after the target up to the anchor
  // (against).
  bool start_moves = false;
  {
    const std::size_t from = with(dir) ? anchor : target;
    const std::size_t to = with(dir) ? target : anchor;
    for (std::size_t k = wrap(static_cast<std::ptrdiff_t>(from) + 1, m);; k = wrap(static_cast<std::ptrdiff_t>(k) + 1, m)) {
      if (k == 0) start_moves = true;
      if (k == to) break;
    }
  }
  const LatticePoint start = knot.vertex(0) + (start_moves ? t : LatticePoint{});

  std::vector<Direction> steps;
  std::vector<std::size_t> labels;
  steps.reserve(knot.edge_length() + 2 * static_cast<std::size_t>(shift < 0 ? -shift : 0));
  for (std::size_t k = 0; k < m; ++k) {
    for (Axis a : kAxes) {
      if (vec[k][a] == 0) continue;
      const Direction d{a, vec[k][a] > 0 ? Sign::plus : Sign::minus};
      const auto len = static_cast<std::size_t>(vec[k][a] > 0 ? vec[k][a] : -vec[k][a]);
      steps.insert(steps.end(), len, d);
      labels.insert(labels.end(), len, k);
    }
  }
  return LatticeKnot::from_steps(start, std::move(steps), labels);
}

ReductionOutcome failure(ReductionFailure f, std::string message) {
  ReductionOutcome out;
  out.failure = f;
  out.message = std::move(message);
  return out;
}

// Shared driver: slides by 1, 2, ... |amount| in the requested sense.
ReductionOutcome run_move(const LatticeKnot& knot, const ReductionMove& move, bool shrink) {
  const auto& sticks = knot.sticks();
  if (move.stick_index >= sticks.size()) {
    return failure(ReductionFailure::invalid_move, "stick index " + std::to_string(move.stick_index) + " out of range");
  }
  if (move.amount <= 0) return failure(ReductionFailure::invalid_move, "amount must be positive");
  const auto anchor = reduction_anchor(knot, move.stick_index, move.direction);
  if (!anchor) {
    return failure(ReductionFailure::no_anchor, "stick " + std::to_string(move.stick_index) +
                                                    " has no opposite parallel stick within three positions " +
                                                    (with(move.direction) ? "before" : "after") + " it");
  }
  if (shrink) {
    const Coord limit = std::min(sticks[move.stick_index].length, sticks[*anchor].length);
    if (move.amount > limit) {
      return failure(ReductionFailure::amount_too_large,
                     "amount " + std::to_string(move.amount) + " exceeds the length " + std::to_string(limit) +
                         " of stick " + std::to_string(sticks[move.stick_index].length <= limit ? move.stick_index : *anchor));
    }
    if (move.amount == limit) {
      return failure(ReductionFailure::degenerate_stick,
                     "amount " + std::to_string(move.amount) + " would reduce stick " +
                         std::to_string(sticks[move.stick_index].length == limit ? move.stick_index : *anchor) +
                         " to length 0");
    }
  }
  ReductionOutcome out;
  for (Coord k = 1; k <= move.amount; ++k) {
    try {
      out.knot = slid_knot(knot, move.stick_index, *anchor, move.direction, shrink ? k : -k);
    } catch (const KnotError& e) {
      out.knot.reset();
      out.failure = ReductionFailure::collision_detected;
      out.failed_at = k;
      out.collision_point = e.point();
      out.colliding_sticks = e.sticks();
      out.message = "slide " + std::to_string(k) + ": " + e.what();
      return out;
    }
  }
  return out;
}

}  // namespace

std::string to_string(ReductionDirection d) { return with(d) ? "with" : "against"; }

ReductionDirection parse_reduction_direction(std::string_view text) {
  if (text == "with" || text == "with_orientation") return ReductionDirection::with_orientation;
  if (text == "against" || text == "against_orientation") return ReductionDirection::against_orientation;
  throw std::invalid_argument("unknown reduction direction '" + std::string(text) + "'");
}

std::string to_string(ReductionFailure f) {
  switch (f) {
    case ReductionFailure::none: return "None";
    case ReductionFailure::collision_detected: return "CollisionDetected";
    case ReductionFailure::amount_too_large: return "AmountTooLarge";
    case ReductionFailure::degenerate_stick: return "DegenerateStick";
    case ReductionFailure::no_anchor: return "NoAnchor";
    case ReductionFailure::invalid_move: return "InvalidMove";
  }
  return "Unknown";
}

std::optional<std::size_t> reduction_anchor(const LatticeKnot& knot, std::size_t stick, ReductionDirection dir) {
  const auto& sticks = knot.sticks();
  const std::size_t m = sticks.size();
  if (stick >= m || m < 4) return std::nullopt;
  const StickType target = sticks[stick].type;
  const std::ptrdiff_t step = with(dir) ? -1 : 1;
  for (std::ptrdiff_t offset : {2, 3}) {
    const std::size_t k = wrap(static_cast<std::ptrdiff_t>(stick) + step * offset, m);
    if (k == stick) return std::nullopt;
    if (sticks[k].type.axis != target.axis) continue;
    if (sticks[k].type == target.opposite()) return k;
    return std::nullopt;
  }
  return std::nullopt;
}

ReductionOutcome apply_reduction(const LatticeKnot& knot, const ReductionMove& move) {
  return run_move(knot, move, true);
}

ReductionOutcome extend_legs(const LatticeKnot& knot, const ReductionMove& move) {
  return run_move(knot, move, false);
}

Coord max_reduction(const LatticeKnot& knot, std::size_t stick, ReductionDirection dir) {
  const auto anchor = reduction_anchor(knot, stick, dir);
  if (!anchor) return 0;
  const Coord limit = std::min(knot.sticks()[stick].length, knot.sticks()[*anchor].length) - 1;
  Coord best = 0;
  for (Coord k = 1; k <= limit; ++k) {
    try {
      (void)slid_knot(knot, stick, *anchor, dir, k);
      best = k;
    } catch (const KnotError&) {
      break;
    }
  }
  return best;
}

bool is_reducible(const LatticeKnot& knot, std::size_t stick, ReductionDirection dir) {
  return max_reduction(knot, stick, dir) > 0;
}

IrreducibilityReport is_irreducible(const LatticeKnot& knot) {
  IrreducibilityReport report;
  std::vector<ReducibleWitness> with_moves;
  std::vector<ReducibleWitness> against_moves;
  for (std::size_t s = 0; s < knot.stick_count(); ++s) {
    for (auto dir : {ReductionDirection::with_orientation, ReductionDirection::against_orientation}) {
      const Coord amount = max_reduction(knot, s, dir);
      if (amount > 0) (with(dir) ? with_moves : against_moves).push_back({s, dir, amount});
    }
  }
  report.witnesses = with_moves;
  for (const auto& w : against_moves) {
    const auto anchor = reduction_anchor(knot, w.stick, w.direction);
    const bool covered = std::ranges::any_of(with_moves, [&](const ReducibleWitness& v) {
      return anchor && v.stick == *anchor &&
             reduction_anchor(knot, v.stick, ReductionDirection::with_orientation) == w.stick;
    });
    if (!covered) report.witnesses.push_back(w);
  }
  report.irreducible = report.witnesses.empty();
  return report;
}

bool sweep_criterion_blocks(const LatticeKnot& knot, std::size_t stick, ReductionDirection dir) {
  const auto anchor = reduction_anchor(knot, stick, dir);
  if (!anchor) return false;
  const auto& sticks = knot.sticks();
  const std::size_t m = sticks.size();
  const auto carried = carried_sticks(stick, *anchor, dir, m);

  std::unordered_set<std::size_t> moving;
  auto mark = [&](std::size_t s) {
    for (Coord k = 0; k <= sticks[s].length; ++k) moving.insert((sticks[s].start + static_cast<std::size_t>(k)) % knot.edge_length());
  };
  mark(stick);
  mark(*anchor);
  for (std::size_t s : carried) mark(s);

  const LatticePoint u = sticks[stick].type.unit();
  const LatticePoint shift = with(dir) ? u : -u;
  for (std::size_t s : carried) {
    for (Coord k = 0; k <= sticks[s].length; ++k) {
      const LatticePoint q = knot.vertex(sticks[s].start + static_cast<std::size_t>(k)) + shift;
      if (auto hit = knot.find(q); hit && !moving.contains(*hit)) return true;
    }
  }
  return false;
}

}  // namespace latknot
