#include "latknot/explorer.hpp"

#include <algorithm>
#include <bit>
#include <random>

#include "latknot/reduction.hpp"

namespace latknot {

namespace {

using Seq = std::vector<std::uint8_t>;

Seq to_seq(std::span<const Direction> steps) {
  Seq s(steps.size());
  std::ranges::transform(steps, s.begin(), [](Direction d) { return static_cast<std::uint8_t>(d.index()); });
  return s;
}

std::vector<Direction> to_steps(const Seq& s) {
  std::vector<Direction> out(s.size());
  std::ranges::transform(s, out.begin(), [](std::uint8_t i) { return Direction::from_index(i); });
  return out;
}

// Visits every rotation of s and of its reversal, passing a contiguous
// doubled buffer view and the offset of the rotation inside it.
template <typename Fn>
bool for_each_rotation(const Seq& s, Fn&& fn) {
  const std::size_t n = s.size();
  Seq fwd(2 * n);
  Seq rev(2 * n);
  for (std::size_t k = 0; k < n; ++k) {
    fwd[k] = fwd[k + n] = s[k];
    rev[k] = rev[k + n] = static_cast<std::uint8_t>(s[n - 1 - k] ^ 1U);
  }
  for (const Seq* buf : {&fwd, &rev}) {
    for (std::size_t r = 0; r < n; ++r) {
      if (!fn(buf->data() + r)) return false;
    }
  }
  return true;
}

// Sign of g(t) - s over n symbols.
int compare_mapped(const std::uint8_t* t, const std::array<std::uint8_t, 6>& g, const std::uint8_t* s, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) {
    const std::uint8_t a = g[t[k]];
    if (a != s[k]) return a < s[k] ? -1 : 1;
  }
  return 0;
}

bool is_canonical(const Seq& s) {
  const auto& isos = Isometry::all();
  const std::size_t n = s.size();
  return for_each_rotation(s, [&](const std::uint8_t* t) {
    for (const auto& g : isos) {
      const auto& map = g.direction_table();
      if (map[t[0]] != s[0]) continue;
      if (compare_mapped(t, map, s.data(), n) < 0) return false;
    }
    return true;
  });
}

class PolygonEnumerator {
 public:
  PolygonEnumerator(int length, const std::function<void(const LatticeKnot&)>& sink)
      : length_(length), radius_(length / 2), side_(2 * radius_ + 1), sink_(sink) {
    occupied_.assign(static_cast<std::size_t>(side_ * side_ * side_), 0);
    steps_.assign(static_cast<std::size_t>(length), 0);
  }

  void run() {
    // A canonical sequence starts with x+ (index 0); isometries that move
    // x+ elsewhere already compare greater.
    std::uint64_t tied = 0;
    const auto& isos = Isometry::all();
    for (std::size_t g = 1; g < isos.size(); ++g) {
      if (isos[g].direction_table()[0] == 0) tied |= std::uint64_t{1} << g;
    }
    steps_[0] = 0;
    mark({0, 0, 0}, 1);
    mark({1, 0, 0}, 1);
    extend(1, {1, 0, 0}, tied);
  }

 private:
  std::size_t cell(const LatticePoint& p) const {
    return static_cast<std::size_t>(((p.x + radius_) * side_ + (p.y + radius_)) * side_ + (p.z + radius_));
  }
  void mark(const LatticePoint& p, std::uint8_t v) { occupied_[cell(p)] = v; }

  void extend(int depth, const LatticePoint& cur, std::uint64_t tied) {
    const auto& isos = Isometry::all();
    const LatticePoint origin{};
    const int remaining = length_ - depth - 1;
    for (std::uint8_t c = 0; c < 6; ++c) {
      if (c == (steps_[static_cast<std::size_t>(depth - 1)] ^ 1U)) continue;
      const LatticePoint next = cur + Direction::from_index(c).unit();
      if (l1_distance(next, origin) > remaining) continue;
      const bool closes = next == origin;
      if (!closes && occupied_[cell(next)]) continue;

      std::uint64_t still = tied;
      bool pruned = false;
      for (std::uint64_t bits = tied; bits != 0; bits &= bits - 1) {
        const auto g = static_cast<std::size_t>(std::countr_zero(bits));
        const std::uint8_t image = isos[g].direction_table()[c];
        if (image < c) {
          pruned = true;
          break;
        }
        if (image > c) still &= ~(std::uint64_t{1} << g);
      }
      if (pruned) continue;

      steps_[static_cast<std::size_t>(depth)] = c;
      if (closes) {
        if (depth + 1 == length_ && is_canonical(steps_)) {
          sink_(LatticeKnot::from_steps(origin, to_steps(steps_)));
        }
        continue;
      }
      mark(next, 1);
      extend(depth + 1, next, still);
      mark(next, 0);
    }
  }

  int length_;
  Coord radius_;
  Coord side_;
  const std::function<void(const LatticeKnot&)>& sink_;
  std::vector<std::uint8_t> occupied_;
  Seq steps_;
};

void check_bounds(int max_edge_length, int cap) {
  if (max_edge_length > cap) {
    throw EnumerationCapExceeded("enumeration length " + std::to_string(max_edge_length) + " exceeds the cap " +
                                 std::to_string(cap));
  }
  if (max_edge_length < 4 || max_edge_length % 2 != 0) {
    throw std::invalid_argument("enumeration length must be even and at least 4");
  }
}

}  // namespace

std::vector<Direction> canonical_steps(std::span<const Direction> steps) {
  const Seq s = to_seq(steps);
  const std::size_t n = s.size();
  Seq best;
  Seq candidate(n);
  const auto& isos = Isometry::all();
  for_each_rotation(s, [&](const std::uint8_t* t) {
    for (const auto& g : isos) {
      const auto& map = g.direction_table();
      if (map[t[0]] != 0) continue;
      if (!best.empty() && compare_mapped(t, map, best.data(), n) >= 0) continue;
      for (std::size_t k = 0; k < n; ++k) candidate[k] = map[t[k]];
      best = candidate;
    }
    return true;
  });
  return to_steps(best);
}

LatticeKnot canonical_form(const LatticeKnot& knot) {
  return LatticeKnot::from_steps({0, 0, 0}, canonical_steps(knot.steps()));
}

void enumerate_conformations(int max_edge_length, const std::function<void(const LatticeKnot&)>& sink, int cap) {
  check_bounds(max_edge_length, cap);
  for (int length = 4; length <= max_edge_length; length += 2) {
    PolygonEnumerator(length, sink).run();
  }
}

std::vector<LatticeKnot> enumerate_conformations(int max_edge_length, int cap) {
  std::vector<LatticeKnot> out;
  enumerate_conformations(max_edge_length, [&](const LatticeKnot& k) { out.push_back(k); }, cap);
  return out;
}

std::map<int, std::size_t> conformation_counts(int max_edge_length, int cap) {
  std::map<int, std::size_t> counts;
  for (int length = 4; length <= max_edge_length; length += 2) counts[length] = 0;
  enumerate_conformations(
      max_edge_length, [&](const LatticeKnot& k) { ++counts[static_cast<int>(k.edge_length())]; }, cap);
  return counts;
}

std::vector<DistortionOneConformation> classify_distortion_one(int max_edge_length, int cap) {
  std::vector<DistortionOneConformation> out;
  enumerate_conformations(
      max_edge_length,
      [&](const LatticeKnot& k) {
        if (vertex_distortion(k).value == Rational(1)) out.push_back({k, check_distortion_one_structure(k)});
      },
      cap);
  return out;
}

SearchResult search_low_distortion(const LatticeKnot& knot, const SearchOptions& options) {
  const std::size_t limit = options.max_edge_length != 0 ? options.max_edge_length : 2 * knot.edge_length() + 16;
  std::mt19937_64 rng(options.seed);
  auto pick = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };

  SearchResult result{knot, vertex_distortion(knot).value, {}, 0, 0};
  result.initial_value = result.best_value;
  LatticeKnot current = knot;
  Rational current_value = result.best_value;

  for (std::size_t it = 0; it < options.move_budget; ++it) {
    ++result.moves_attempted;
    const ReductionMove move{pick(current.stick_count()),
                             pick(2) == 0 ? ReductionDirection::with_orientation
                                          : ReductionDirection::against_orientation,
                             1};
    const bool shrink = pick(2) == 0;
    ReductionOutcome outcome = shrink ? apply_reduction(current, move) : extend_legs(current, move);
    if (!outcome.ok() || outcome.knot->edge_length() > limit) continue;

    const Rational value = vertex_distortion(*outcome.knot).value;
    // Always accept improvements and sideways moves; accept a worse
    // conformation one time in four to escape local minima.
    if (value <= current_value || pick(4) == 0) {
      current = std::move(*outcome.knot);
      current_value = value;
      ++result.moves_applied;
      if (current_value < result.best_value) {
        result.best = current;
        result.best_value = current_value;
      }
    }
  }
  return result;
}

}  // namespace latknot
