#include "latknot/knot.hpp"

#include <algorithm>
#include <numeric>

namespace latknot {

std::string to_string(KnotErrorKind kind) {
  switch (kind) {
    case KnotErrorKind::not_closed: return "NotClosed";
    case KnotErrorKind::self_intersection: return "SelfIntersection";
    case KnotErrorKind::length_mismatch: return "LengthMismatch";
    case KnotErrorKind::non_axis_parallel: return "NonAxisParallel";
  }
  return "Unknown";
}

std::size_t Tabulation::row_count() const {
  return std::max({lengths[0].size(), lengths[1].size(), lengths[2].size()});
}

LatticeKnot LatticeKnot::from_steps(const LatticePoint& start, std::vector<Direction> steps) {
  std::vector<std::size_t> labels(steps.size());
  std::size_t run = 0;
  for (std::size_t k = 0; k < steps.size(); ++k) {
    if (k > 0 && steps[k] != steps[k - 1]) ++run;
    labels[k] = run;
  }
  return from_steps(start, std::move(steps), labels);
}

LatticeKnot LatticeKnot::from_steps(const LatticePoint& start, std::vector<Direction> steps,
                                    std::span<const std::size_t> step_labels) {
  const std::size_t n = steps.size();
  if (n == 0) throw KnotError(KnotErrorKind::not_closed, "empty step sequence");

  std::unordered_map<LatticePoint, std::size_t, LatticePointHash> seen;
  seen.reserve(2 * n);
  std::vector<LatticePoint> pts;
  pts.reserve(n);
  pts.push_back(start);
  seen.emplace(start, 0);

  LatticePoint cur = start;
  for (std::size_t k = 0; k < n; ++k) {
    cur += steps[k].unit();
    if (k + 1 == n) {
      if (cur == start) break;
      if (!seen.contains(cur)) {
        throw KnotError(KnotErrorKind::not_closed,
                        "walk ends at " + to_string(cur) + " instead of returning to " + to_string(start), cur);
      }
    }
    if (auto it = seen.find(cur); it != seen.end()) {
      const std::size_t j = it->second;
      const std::size_t first = j == 0 ? step_labels[0] : step_labels[j - 1];
      const std::size_t second = step_labels[k];
      throw KnotError(KnotErrorKind::self_intersection,
                      "self-intersection at " + to_string(cur) + " between sticks " + std::to_string(first) +
                          " and " + std::to_string(second),
                      cur, std::pair{first, second});
    }
    seen.emplace(cur, k + 1);
    pts.push_back(cur);
  }

  // Rotate so that vertex 0 is critical.
  std::size_t shift = 0;
  while (shift < n && steps[(shift + n - 1) % n] == steps[shift]) ++shift;
  std::rotate(pts.begin(), pts.begin() + static_cast<std::ptrdiff_t>(shift), pts.end());
  std::rotate(steps.begin(), steps.begin() + static_cast<std::ptrdiff_t>(shift), steps.end());

  LatticeKnot knot;
  knot.vertices_ = std::move(pts);
  knot.steps_ = std::move(steps);
  knot.stick_of_step_.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (k == 0 || knot.steps_[k] != knot.steps_[k - 1]) {
      knot.sticks_.push_back({knot.steps_[k], 0, k});
    }
    ++knot.sticks_.back().length;
    knot.stick_of_step_[k] = static_cast<std::uint32_t>(knot.sticks_.size() - 1);
  }
  knot.index_.reserve(2 * n);
  for (std::size_t i = 0; i < n; ++i) knot.index_.emplace(knot.vertices_[i], i);
  return knot;
}

bool LatticeKnot::is_critical(std::size_t i) const {
  const std::size_t n = steps_.size();
  i %= n;
  return steps_[(i + n - 1) % n] != steps_[i];
}

std::vector<std::size_t> LatticeKnot::critical_indices() const {
  std::vector<std::size_t> out;
  out.reserve(sticks_.size());
  for (const auto& s : sticks_) out.push_back(s.start);
  return out;
}

std::vector<LatticePoint> LatticeKnot::corners() const {
  std::vector<LatticePoint> out;
  out.reserve(sticks_.size());
  for (const auto& s : sticks_) out.push_back(vertices_[s.start]);
  return out;
}

std::optional<std::size_t> LatticeKnot::find(const LatticePoint& p) const {
  if (auto it = index_.find(p); it != index_.end()) return it->second;
  return std::nullopt;
}

Box LatticeKnot::bounding_box() const { return latknot::bounding_box(vertices_); }

Tabulation LatticeKnot::canonical_tabulation() const {
  std::size_t first = 0;
  for (std::size_t s = 1; s < sticks_.size(); ++s) {
    if (vertices_[sticks_[s].start] < vertices_[sticks_[first].start]) first = s;
  }
  Tabulation tab;
  tab.origin = vertices_[sticks_[first].start];
  for (std::size_t k = 0; k < sticks_.size(); ++k) {
    const Stick& s = sticks_[(first + k) % sticks_.size()];
    tab.types.push_back(s.type);
    tab.column(s.type.axis).push_back(s.length);
  }
  return tab;
}

LatticeKnot LatticeKnot::reversed() const {
  std::vector<Direction> rev(steps_.size());
  for (std::size_t k = 0; k < steps_.size(); ++k) rev[k] = steps_[steps_.size() - 1 - k].opposite();
  return from_steps(vertices_.front(), std::move(rev));
}

LatticeKnot LatticeKnot::transformed(const Isometry& g, const LatticePoint& offset) const {
  std::vector<Direction> mapped(steps_.size());
  std::ranges::transform(steps_, mapped.begin(), [&](Direction d) { return g.apply(d); });
  return from_steps(g.apply(vertices_.front()) + offset, std::move(mapped));
}

void validate_tabulation(const Tabulation& tab) {
  for (Axis a : kAxes) {
    const auto used = static_cast<std::size_t>(
        std::ranges::count_if(tab.types, [a](StickType t) { return t.axis == a; }));
    const auto& col = tab.column(a);
    const std::string name(1, axis_name(a));
    if (col.size() < used) {
      throw KnotError(KnotErrorKind::length_mismatch, name + "-column has " + std::to_string(col.size()) +
                                                          " rows but the type sequence has " +
                                                          std::to_string(used) + " " + name + "-sticks");
    }
    for (std::size_t r = 0; r < col.size(); ++r) {
      if (r < used && col[r] <= 0) {
        throw KnotError(KnotErrorKind::length_mismatch,
                        name + "-column row " + std::to_string(r + 1) + " must be a positive length");
      }
      if (r >= used && col[r] != 0) {
        throw KnotError(KnotErrorKind::length_mismatch,
                        name + "-column row " + std::to_string(r + 1) + " is never consumed by the type sequence");
      }
    }
  }
}

LatticeKnot build_knot(const Tabulation& tab) { return build_knot(tab, tab.origin); }

LatticeKnot build_knot(const Tabulation& tab, const LatticePoint& origin) {
  validate_tabulation(tab);
  std::vector<Direction> steps;
  std::vector<std::size_t> labels;
  std::array<std::size_t, 3> next_row{};
  for (std::size_t i = 0; i < tab.types.size(); ++i) {
    const StickType t = tab.types[i];
    const Coord len = tab.column(t.axis)[next_row[index_of(t.axis)]++];
    steps.insert(steps.end(), static_cast<std::size_t>(len), t);
    labels.insert(labels.end(), static_cast<std::size_t>(len), i);
  }
  return LatticeKnot::from_steps(origin, std::move(steps), labels);
}

LatticeKnot knot_from_vertices(std::span<const LatticePoint> cycle) {
  std::vector<Direction> steps;
  std::vector<std::size_t> labels;
  for (std::size_t k = 0; k < cycle.size(); ++k) {
    const LatticePoint& a = cycle[k];
    const LatticePoint& b = cycle[(k + 1) % cycle.size()];
    const LatticePoint d = b - a;
    const int moving = (d.x != 0) + (d.y != 0) + (d.z != 0);
    if (moving != 1) {
      throw KnotError(KnotErrorKind::non_axis_parallel,
                      "segment " + std::to_string(k) + " from " + to_string(a) + " to " + to_string(b) +
                          " is not parallel to a lattice axis",
                      b);
    }
    for (Axis ax : kAxes) {
      if (d[ax] == 0) continue;
      const Direction dir{ax, d[ax] > 0 ? Sign::plus : Sign::minus};
      const auto count = static_cast<std::size_t>(d[ax] > 0 ? d[ax] : -d[ax]);
      steps.insert(steps.end(), count, dir);
      labels.insert(labels.end(), count, k);
    }
  }
  if (cycle.empty()) throw KnotError(KnotErrorKind::not_closed, "empty vertex cycle");
  return LatticeKnot::from_steps(cycle.front(), std::move(steps), labels);
}

Level level(const LatticeKnot& knot, Axis axis, Coord value) {
  Level out;
  out.axis = axis;
  out.value = value;
  const std::size_t n = knot.edge_length();
  std::vector<bool> in(n);
  std::size_t count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    in[i] = knot.vertex(i)[axis] == value;
    count += in[i];
  }
  if (count == 0) return out;
  if (count == n) {
    out.whole_knot = true;
    out.arcs.emplace_back(n);
    std::iota(out.arcs.back().begin(), out.arcs.back().end(), std::size_t{0});
    return out;
  }
  std::size_t outside = 0;
  while (in[outside]) ++outside;
  std::vector<std::size_t> run;
  auto flush = [&] {
    if (run.size() == 1) out.isolated_points.push_back(run.front());
    if (run.size() >= 2) out.arcs.push_back(run);
    run.clear();
  };
  for (std::size_t k = 1; k <= n; ++k) {
    const std::size_t i = (outside + k) % n;
    if (in[i]) {
      run.push_back(i);
    } else {
      flush();
    }
  }
  flush();
  std::ranges::sort(out.arcs, {}, [](const auto& arc) { return arc.front(); });
  std::ranges::sort(out.isolated_points);
  return out;
}

std::vector<Coord> partial_sums(const LatticeKnot& knot, Axis axis, bool signed_sums) {
  std::vector<Coord> out;
  Coord acc = signed_sums ? knot.vertex(0)[axis] : 0;
  for (const auto& s : knot.sticks()) {
    if (s.type.axis != axis) continue;
    acc += signed_sums ? static_cast<Coord>(s.type.sign) * s.length : s.length;
    out.push_back(acc);
  }
  return out;
}

std::vector<Coord> partial_sums(const Tabulation& tab, Axis axis, bool signed_sums) {
  std::vector<Coord> out;
  Coord acc = signed_sums ? tab.origin[axis] : 0;
  std::size_t row = 0;
  for (StickType t : tab.types) {
    if (t.axis != axis) continue;
    const Coord len = tab.column(axis).at(row++);
    acc += signed_sums ? static_cast<Coord>(t.sign) * len : len;
    out.push_back(acc);
  }
  return out;
}

std::size_t antipodal_vertex(const LatticeKnot& knot, std::size_t v) {
  const std::size_t n = knot.edge_length();
  return (v + n / 2) % n;
}

}  // namespace latknot
