#include "latknot/distortion.hpp"

#include <algorithm>
#include <thread>

namespace latknot {

namespace {

struct ScanState {
  Coord best_arc = 0;
  Coord best_l1 = 1;
  std::vector<VertexPair> pairs;
  std::uint64_t scanned = 0;
};

// Rows i = first, first + stride, ... Row i pairs with every j > i.
void scan_rows(const std::vector<LatticePoint>& v, std::size_t first, std::size_t stride, ScanState& st) {
  const std::size_t n = v.size();
  const auto half = static_cast<Coord>(n / 2);
  for (std::size_t i = first; i + 1 < n; i += stride) {
    const LatticePoint a = v[i];
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto gap = static_cast<Coord>(j - i);
      const Coord arc = gap <= half ? gap : static_cast<Coord>(n) - gap;
      // arc / l1 <= arc, so pairs whose arc is below the current best
      // ratio cannot reach it.
      if (arc * st.best_l1 < st.best_arc) continue;
      const Coord l1 = l1_distance(a, v[j]);
      const Coord lhs = arc * st.best_l1;
      const Coord rhs = st.best_arc * l1;
      if (lhs > rhs) {
        st.best_arc = arc;
        st.best_l1 = l1;
        st.pairs.clear();
        st.pairs.push_back({i, j});
      } else if (lhs == rhs) {
        st.pairs.push_back({i, j});
      }
    }
    st.scanned += n - 1 - i;
  }
}

}  // namespace

Coord knot_distance(const LatticeKnot& knot, std::size_t i, std::size_t j) {
  const std::size_t n = knot.edge_length();
  if (i >= n || j >= n) throw std::out_of_range("knot_distance: vertex index out of range");
  const std::size_t gap = i > j ? i - j : j - i;
  return static_cast<Coord>(std::min(gap, n - gap));
}

DistortionReport vertex_distortion(const LatticeKnot& knot, ScanOptions options) {
  const auto& v = knot.vertices();
  unsigned threads = options.threads == 0 ? std::max(1U, std::thread::hardware_concurrency()) : options.threads;
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, v.size() / 64)));

  std::vector<ScanState> states(threads);
  if (threads == 1) {
    scan_rows(v, 0, 1, states[0]);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] { scan_rows(v, t, threads, states[t]); });
    }
  }

  ScanState merged;
  merged.best_arc = 0;
  merged.best_l1 = 1;
  for (auto& st : states) {
    merged.scanned += st.scanned;
    if (st.pairs.empty()) continue;
    const Coord lhs = st.best_arc * merged.best_l1;
    const Coord rhs = merged.best_arc * st.best_l1;
    if (lhs > rhs || merged.pairs.empty()) {
      merged.best_arc = st.best_arc;
      merged.best_l1 = st.best_l1;
      merged.pairs = std::move(st.pairs);
    } else if (lhs == rhs) {
      merged.pairs.insert(merged.pairs.end(), st.pairs.begin(), st.pairs.end());
    }
  }
  std::ranges::sort(merged.pairs);

  DistortionReport report;
  report.value = Rational(merged.best_arc, merged.best_l1);
  report.realizing_pairs = std::move(merged.pairs);
  report.pair_count_scanned = merged.scanned;
  return report;
}

Rational distortion_upper_bound(const LatticeKnot& knot) {
  return Rational(static_cast<Coord>(knot.edge_length()), Coord{2});
}

Rational distortion_pair_value(const LatticeKnot& knot, std::size_t i, std::size_t j) {
  if (i == j) throw std::invalid_argument("distortion_pair_value: the two vertices must differ");
  const Coord arc = knot_distance(knot, i, j);
  return Rational(arc, l1_distance(knot.vertex(i), knot.vertex(j)));
}

DistortionOneReport check_distortion_one_structure(const LatticeKnot& knot) {
  const DistortionReport dist = vertex_distortion(knot);
  if (dist.value != Rational(1)) {
    throw PreconditionFailed("check_distortion_one_structure: vertex distortion is " + dist.value.to_string() +
                             ", not 1");
  }
  DistortionOneReport report;
  const std::size_t n = knot.edge_length();
  const std::size_t half = n / 2;
  const Box box = knot.bounding_box();
  for (std::size_t v = 0; v < n; ++v) {
    ++report.vertices_checked;
    std::vector<LatticePoint> forward;
    std::vector<LatticePoint> backward;
    for (std::size_t k = 0; k <= half; ++k) {
      forward.push_back(knot.vertex(v + k));
      backward.push_back(knot.vertex(v + n - k));
    }
    if (!is_staircase(LatticePath(forward)) || !is_staircase(LatticePath(backward))) {
      report.antipodal_arcs_staircase = false;
      report.violations.push_back("an arc from vertex " + std::to_string(v) + " to its antipode is not a staircase");
    }
    if (!is_box_corner(knot.vertex(v), knot.vertices())) {
      report.vertices_are_box_corners = false;
      report.violations.push_back("vertex " + std::to_string(v) + " " + to_string(knot.vertex(v)) +
                                  " is not a bounding-box corner");
    }
    if (!box.on_boundary(knot.vertex(v))) {
      report.on_box_boundary = false;
      report.violations.push_back("vertex " + std::to_string(v) + " is interior to the bounding box");
    }
  }
  return report;
}

}  // namespace latknot
