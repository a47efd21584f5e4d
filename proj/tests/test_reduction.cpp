#include <gtest/gtest.h>

#include <set>

#include "generators.hpp"
#include "latknot/reduction.hpp"
#include "latknot/torus.hpp"

namespace latknot {
namespace {

using PointSet = std::set<LatticePoint>;

PointSet points(const LatticeKnot& k) { return {k.vertices().begin(), k.vertices().end()}; }

LatticeKnot rectangle(Coord w, Coord h) {
  return knot_from_vertices(std::vector<LatticePoint>{{0, 0, 0}, {w, 0, 0}, {w, h, 0}, {0, h, 0}});
}

// Independent model of a reduction: translate the carried corners and
// rebuild from the corner list, checking every intermediate slide.
std::optional<PointSet> simulate(const LatticeKnot& k, std::size_t target, ReductionDirection dir, Coord amount) {
  const auto anchor = reduction_anchor(k, target, dir);
  if (!anchor) return std::nullopt;
  const auto corners = k.corners();
  const std::size_t m = corners.size();
  const LatticePoint u = k.sticks()[target].type.unit();
  // Corners that move: c[a+1..i] (with) or c[i+1..a] (against), cyclically.
  std::vector<bool> moves(m, false);
  const bool with = dir == ReductionDirection::with_orientation;
  const std::size_t from = with ? (*anchor + 1) % m : (target + 1) % m;
  const std::size_t to = with ? target : *anchor;
  for (std::size_t c = from;; c = (c + 1) % m) {
    moves[c] = true;
    if (c == to) break;
  }
  std::optional<PointSet> result;
  for (Coord j = 1; j <= amount; ++j) {
    std::vector<LatticePoint> shifted = corners;
    for (std::size_t c = 0; c < m; ++c) {
      if (moves[c]) shifted[c] += (with ? j : -j) * u;
    }
    try {
      result = points(knot_from_vertices(shifted));
    } catch (const KnotError&) {
      return std::nullopt;
    }
  }
  return result;
}

TEST(Reduction, ShrinkRectangle) {
  const LatticeKnot r = rectangle(3, 1);
  ASSERT_EQ(r.sticks()[0].type, parse_direction("x+"));
  EXPECT_EQ(reduction_anchor(r, 0, ReductionDirection::with_orientation), 2U);
  const auto once = apply_reduction(r, {0, ReductionDirection::with_orientation, 1});
  ASSERT_TRUE(once.ok()) << once.message;
  EXPECT_EQ(once.knot->edge_length(), 6U);
  EXPECT_EQ(points(*once.knot), points(rectangle(2, 1).transformed(Isometry::all()[0], {1, 0, 0})));
  const auto twice = apply_reduction(r, {0, ReductionDirection::with_orientation, 2});
  ASSERT_TRUE(twice.ok());
  EXPECT_EQ(twice.knot->edge_length(), 4U);
}

TEST(Reduction, AmountLimits) {
  const LatticeKnot r = rectangle(3, 1);
  EXPECT_EQ(apply_reduction(r, {0, ReductionDirection::with_orientation, 3}).failure,
            ReductionFailure::degenerate_stick);
  EXPECT_EQ(apply_reduction(r, {0, ReductionDirection::with_orientation, 4}).failure,
            ReductionFailure::amount_too_large);
  EXPECT_EQ(apply_reduction(r, {1, ReductionDirection::with_orientation, 1}).failure,
            ReductionFailure::degenerate_stick);
  EXPECT_EQ(apply_reduction(r, {9, ReductionDirection::with_orientation, 1}).failure, ReductionFailure::invalid_move);
  EXPECT_EQ(apply_reduction(r, {0, ReductionDirection::with_orientation, 0}).failure, ReductionFailure::invalid_move);
}

TEST(Reduction, NoAnchorWhenTheNearestParallelStickPointsTheSameWay) {
  // L-shaped octagon: x+2 y+1 x-1 y+1 x-1 y-2.
  const LatticeKnot k = knot_from_vertices(
      std::vector<LatticePoint>{{0, 0, 0}, {2, 0, 0}, {2, 1, 0}, {1, 1, 0}, {1, 2, 0}, {0, 2, 0}});
  ASSERT_EQ(k.sticks()[1].type, parse_direction("y+"));
  EXPECT_FALSE(reduction_anchor(k, 1, ReductionDirection::against_orientation).has_value());
  EXPECT_EQ(apply_reduction(k, {1, ReductionDirection::against_orientation, 1}).failure, ReductionFailure::no_anchor);
  EXPECT_EQ(reduction_anchor(k, 1, ReductionDirection::with_orientation), 5U);
}

TEST(Reduction, CollisionReportsThePoint) {
  const LatticeKnot k = build_knot(generate_torus_tabulation(3));
  const auto out = apply_reduction(k, {0, ReductionDirection::with_orientation, 1});
  ASSERT_EQ(out.failure, ReductionFailure::collision_detected);
  EXPECT_EQ(out.failed_at, 1);
  ASSERT_TRUE(out.collision_point.has_value());
  EXPECT_EQ(*out.collision_point, (LatticePoint{0, 2, 1}));
  EXPECT_TRUE(k.contains(*out.collision_point));
  EXPECT_FALSE(simulate(k, 0, ReductionDirection::with_orientation, 1).has_value());
}

TEST(Reduction, AgreesWithCornerModel) {
  testing::Rng rng(31);
  std::size_t successes = 0;
  std::size_t failures = 0;
  std::vector<LatticeKnot> corpus;
  for (int trial = 0; trial < 60; ++trial) corpus.push_back(testing::random_knot(rng, 50));
  // Tightly packed knots where most moves collide.
  for (int p = 2; p <= 5; ++p) corpus.push_back(build_knot(generate_torus_tabulation(p)));
  for (std::size_t trial = 0; trial < corpus.size(); ++trial) {
    const LatticeKnot& k = corpus[trial];
    for (std::size_t s = 0; s < k.stick_count(); ++s) {
      for (auto dir : {ReductionDirection::with_orientation, ReductionDirection::against_orientation}) {
        const auto anchor = reduction_anchor(k, s, dir);
        if (!anchor) continue;
        const Coord limit = std::min(k.sticks()[s].length, k.sticks()[*anchor].length);
        for (Coord a = 1; a < limit; ++a) {
          const auto out = apply_reduction(k, {s, dir, a});
          const auto expected = simulate(k, s, dir, a);
          ASSERT_EQ(out.ok(), expected.has_value()) << "trial " << trial << " stick " << s;
          if (out.ok()) {
            EXPECT_EQ(points(*out.knot), *expected);
            EXPECT_EQ(out.knot->edge_length() + 2 * static_cast<std::size_t>(a), k.edge_length());
            ++successes;
          } else {
            ++failures;
          }
        }
      }
    }
  }
  EXPECT_GT(successes, 50U);
  EXPECT_GT(failures, 10U);
}

TEST(Reduction, ExtensionUndoesReduction) {
  testing::Rng rng(32);
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const LatticeKnot k = testing::random_knot(rng, 50);
    for (std::size_t s = 0; s < k.stick_count(); ++s) {
      for (auto dir : {ReductionDirection::with_orientation, ReductionDirection::against_orientation}) {
        const auto shrunk = apply_reduction(k, {s, dir, 1});
        if (!shrunk.ok()) continue;
        // No stick vanished, so stick s is still stick s.
        const auto grown = extend_legs(*shrunk.knot, {s, dir, 1});
        ASSERT_TRUE(grown.ok()) << grown.message;
        EXPECT_EQ(points(*grown.knot), points(k));
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 20);
}

TEST(Reduction, WitnessesAreDeduplicated) {
  const auto report = is_irreducible(rectangle(3, 1));
  EXPECT_FALSE(report.irreducible);
  ASSERT_EQ(report.witnesses.size(), 2U);
  EXPECT_EQ(report.witnesses[0].stick, 0U);
  EXPECT_EQ(report.witnesses[0].max_amount, 2);
  EXPECT_TRUE(is_irreducible(rectangle(1, 1)).irreducible);
}

TEST(Irreducibility, TorusFamilySmallP) {
  for (int p = 2; p <= 5; ++p) {
    const LatticeKnot k = build_knot(generate_torus_tabulation(p));
    EXPECT_TRUE(is_irreducible(k).irreducible) << p;
    // Exhaustively: no move of any admissible amount succeeds, in either
    // the library or the corner model.
    for (std::size_t s = 0; s < k.stick_count(); ++s) {
      for (auto dir : {ReductionDirection::with_orientation, ReductionDirection::against_orientation}) {
        const auto anchor = reduction_anchor(k, s, dir);
        if (!anchor) continue;
        const Coord limit = std::min(k.sticks()[s].length, k.sticks()[*anchor].length);
        for (Coord a = 1; a < limit; ++a) {
          EXPECT_FALSE(apply_reduction(k, {s, dir, a}).ok()) << p << ' ' << s;
          EXPECT_FALSE(simulate(k, s, dir, a).has_value()) << p << ' ' << s;
        }
      }
    }
  }
}

TEST(SweepCriterion, FiringImpliesTheMoveFails) {
  for (int p = 2; p <= 6; ++p) {
    const LatticeKnot k = build_knot(generate_torus_tabulation(p));
    int fired = 0;
    for (std::size_t s = 0; s < k.stick_count(); ++s) {
      for (auto dir : {ReductionDirection::with_orientation, ReductionDirection::against_orientation}) {
        if (!sweep_criterion_blocks(k, s, dir)) continue;
        ++fired;
        EXPECT_FALSE(apply_reduction(k, {s, dir, 1}).ok()) << p << ' ' << s;
      }
    }
    EXPECT_GT(fired, 0) << p;
  }
}

TEST(SweepCriterion, SilentOnAFreeMove) {
  EXPECT_FALSE(sweep_criterion_blocks(rectangle(3, 1), 0, ReductionDirection::with_orientation));
}

TEST(ReductionText, RoundTrip) {
  EXPECT_EQ(parse_reduction_direction("with"), ReductionDirection::with_orientation);
  EXPECT_EQ(parse_reduction_direction(to_string(ReductionDirection::against_orientation)),
            ReductionDirection::against_orientation);
  EXPECT_THROW(parse_reduction_direction("sideways"), std::invalid_argument);
  EXPECT_EQ(to_string(ReductionFailure::collision_detected), "CollisionDetected");
}

}  // namespace
}  // namespace latknot
