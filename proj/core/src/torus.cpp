#include "latknot/torus.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace latknot {

namespace {

constexpr std::array<StickType, 6> kPeriod{
    StickType{Axis::z, Sign::plus},  StickType{Axis::x, Sign::plus},  StickType{Axis::y, Sign::plus},
    StickType{Axis::z, Sign::minus}, StickType{Axis::x, Sign::minus}, StickType{Axis::y, Sign::minus}};

void require_p(int p, int minimum, const char* what) {
  if (p < minimum) {
    throw std::invalid_argument(std::string(what) + ": p must be at least " + std::to_string(minimum) +
                                ", got " + std::to_string(p));
  }
}

LatticePoint cross(const LatticePoint& a, const LatticePoint& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

Coord dot(const LatticePoint& a, const LatticePoint& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

std::string point_list(const std::vector<LatticePoint>& pts) {
  std::string s;
  for (const auto& p : pts) s += (s.empty() ? "" : " ") + to_string(p);
  return s;
}

template <typename T>
bool all_distinct(std::vector<T> v) {
  std::ranges::sort(v);
  return std::ranges::adjacent_find(v) == v.end();
}

template <typename T>
bool is_consecutive_range(std::vector<T> v, T lo, T hi) {
  std::ranges::sort(v);
  if (static_cast<T>(v.size()) != hi - lo + 1) return false;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != lo + static_cast<T>(i)) return false;
  }
  return true;
}

}  // namespace

Tabulation generate_torus_tabulation(int p) {
  require_p(p, 2, "generate_torus_tabulation");
  const Coord q = p;
  Tabulation tab;
  for (int k = 0; k < p; ++k) tab.types.insert(tab.types.end(), kPeriod.begin(), kPeriod.end());

  auto& x = tab.column(Axis::x);
  x.push_back(2);
  for (Coord k = 1; k <= q - 2; ++k) {
    x.push_back(k + 2);
    x.push_back(k + 2);
  }
  x.push_back(q + 1);
  x.push_back(q);
  x.push_back(1);

  auto& y = tab.column(Axis::y);
  auto& z = tab.column(Axis::z);
  for (Coord row = 1; row <= 2 * q; ++row) {
    if (row == 2 * q - 1) {
      y.push_back(2 * q - 1);
    } else if (row == 2 * q) {
      y.push_back(q);
    } else {
      y.push_back(row % 2 == 1 ? q - 1 : q);
    }
    z.push_back(row <= 2 * q - 1 ? 2 * q - row : q);
  }
  return tab;
}

std::optional<int> detect_torus_parameter(const Tabulation& tab) {
  if (tab.types.size() < 12 || tab.types.size() % 6 != 0) return std::nullopt;
  const int p = static_cast<int>(tab.types.size() / 6);
  Tabulation expected = generate_torus_tabulation(p);
  expected.origin = tab.origin;
  if (expected == tab) return p;
  return std::nullopt;
}

ClosureSums verify_closure_sums(int p) {
  require_p(p, 2, "verify_closure_sums");
  const Coord q = p;
  const Tabulation tab = generate_torus_tabulation(p);
  ClosureSums out;
  out.p = p;
  std::array<std::size_t, 3> row{};
  for (StickType t : tab.types) {
    const Coord len = tab.column(t.axis)[row[index_of(t.axis)]++];
    out.directed[t.index()] += len;
    out.total += len;
  }
  out.expected_axis_y_z = q * q;
  // p^2/2 + 3p/2 - 1 = (p^2 + 3p - 2) / 2, always an integer.
  out.expected_axis_x = (q * q + 3 * q - 2) / 2;
  out.expected_total = 5 * q * q + 3 * q - 2;
  const auto& d = out.directed;
  out.passed = d[0] == out.expected_axis_x && d[1] == out.expected_axis_x && d[2] == out.expected_axis_y_z &&
               d[3] == out.expected_axis_y_z && d[4] == out.expected_axis_y_z && d[5] == out.expected_axis_y_z &&
               out.total == out.expected_total;
  return out;
}

PartialSumsCheck verify_partial_sums(int p) {
  require_p(p, 2, "verify_partial_sums");
  const Coord q = p;
  const Tabulation tab = generate_torus_tabulation(p);
  PartialSumsCheck out;
  out.p = p;
  for (Axis a : kAxes) out.sums[index_of(a)] = partial_sums(tab, a);
  const auto& xs = out.sums[0];
  const auto& ys = out.sums[1];
  const auto& zs = out.sums[2];
  out.y_distinct = all_distinct(ys);
  out.z_distinct = all_distinct(zs);
  out.y_is_range = is_consecutive_range(ys, 1 - q, q);
  out.z_is_range = is_consecutive_range(zs, Coord{0}, 2 * q - 1);

  std::map<Coord, std::size_t> counts;
  for (Coord v : xs) ++counts[v];
  for (const auto& [v, c] : counts) {
    if (c > 1) out.x_repeated_values.push_back(v);
  }
  out.x_count_of_two = counts.contains(2) ? counts.at(2) : 0;
  out.x_only_two_repeats = out.x_repeated_values == std::vector<Coord>{2} &&
                           out.x_count_of_two == static_cast<std::size_t>(p - 1);
  out.passed = out.y_distinct && out.z_distinct && out.y_is_range && out.z_is_range &&
               (p < 3 || out.x_only_two_repeats);
  return out;
}

XLevelTwoCheck verify_x_level_2(int p) {
  require_p(p, 3, "verify_x_level_2");
  const Coord q = p;
  const LatticeKnot knot = build_knot(generate_torus_tabulation(p));
  const Level lv = level(knot, Axis::x, 2);
  XLevelTwoCheck out;
  out.p = p;
  out.arc_count = lv.arcs.size();
  out.isolated_points = lv.isolated_points.size();
  out.all_two_stick_arcs = true;
  out.y_lengths_are_p_minus_1 = true;
  out.matches_recursion = true;
  out.matches_shifted_closed_form = true;
  for (std::size_t a = 0; a < lv.arcs.size(); ++a) {
    const auto& arc = lv.arcs[a];
    std::vector<StickType> shape;
    Coord y_len = 0;
    for (std::size_t k = 0; k + 1 < arc.size(); ++k) {
      const Direction step = knot.steps()[arc[k]];
      if (shape.empty() || shape.back() != step) shape.push_back(step);
      if (step.axis == Axis::y) ++y_len;
    }
    const LatticePoint start = knot.vertex(arc.front());
    const auto n = static_cast<Coord>(a + 1);
    out.arc_shapes.push_back(shape);
    out.initial_vertices.push_back(start);
    out.y_stick_lengths.push_back(y_len);
    out.all_two_stick_arcs = out.all_two_stick_arcs && shape.size() == 2 && shape[0].axis == Axis::y &&
                             shape[1].axis == Axis::z;
    out.y_lengths_are_p_minus_1 = out.y_lengths_are_p_minus_1 && y_len == q - 1;
    out.matches_recursion = out.matches_recursion && start == LatticePoint{2, 1 - n, 2 * q - n};
    out.matches_shifted_closed_form =
        out.matches_shifted_closed_form && start == LatticePoint{2, 1 - n, 2 * q - 2 - n};
  }
  out.passed = out.arc_count == static_cast<std::size_t>(p - 1) && out.isolated_points == 0 &&
               out.all_two_stick_arcs && out.y_lengths_are_p_minus_1 && out.matches_recursion;
  return out;
}

int integer_rank(const std::vector<LatticePoint>& vectors) {
  const LatticePoint zero{};
  auto first = std::ranges::find_if(vectors, [&](const auto& v) { return v != zero; });
  if (first == vectors.end()) return 0;
  const LatticePoint a = *first;
  auto second = std::ranges::find_if(vectors, [&](const auto& v) { return cross(a, v) != zero; });
  if (second == vectors.end()) return 1;
  const LatticePoint normal = cross(a, *second);
  const bool planar = std::ranges::all_of(vectors, [&](const auto& v) { return dot(normal, v) == 0; });
  return planar ? 2 : 3;
}

CollinearityCheck verify_collinearity(int p) {
  require_p(p, 3, "verify_collinearity");
  const LatticeKnot knot = build_knot(generate_torus_tabulation(p));
  CollinearityCheck out;
  out.p = p;

  std::array<std::vector<const Stick*>, 6> by_type;
  for (const auto& s : knot.sticks()) by_type[s.type.index()].push_back(&s);

  const auto& zp = by_type[StickType{Axis::z, Sign::plus}.index()];
  out.z_plus_starts_match = zp.size() == static_cast<std::size_t>(p);
  for (std::size_t k = 0; k < zp.size(); ++k) {
    const LatticePoint v = knot.vertex(zp[k]->start);
    const auto n = static_cast<Coord>(k + 1);
    out.z_plus_starts.push_back(v);
    out.z_plus_starts_match = out.z_plus_starts_match && v == LatticePoint{1 - n, 1 - n, n - 1};
  }

  const auto& xp = by_type[StickType{Axis::x, Sign::plus}.index()];
  for (std::size_t k = 0; k < 3; ++k) out.last_x_plus_starts[k] = knot.vertex(xp[xp.size() - 1 - k]->start);
  out.last_x_plus_collinear = integer_rank({out.last_x_plus_starts[1] - out.last_x_plus_starts[0],
                                            out.last_x_plus_starts[2] - out.last_x_plus_starts[0]}) <= 1;

  auto rank_of = [&](const std::vector<const Stick*>& sticks, std::size_t count) {
    std::vector<LatticePoint> diffs;
    if (count == 0) return 0;
    const LatticePoint base = knot.vertex(sticks[0]->start);
    for (std::size_t k = 0; k < count; ++k) {
      diffs.push_back(knot.vertex(sticks[k]->start) - base);
      diffs.push_back(knot.vertex(sticks[k]->start + static_cast<std::size_t>(sticks[k]->length)) - base);
    }
    return integer_rank(diffs);
  };
  for (std::size_t t = 0; t < 6; ++t) {
    out.rank_all[t] = rank_of(by_type[t], by_type[t].size());
    out.rank_without_final[t] = rank_of(by_type[t], by_type[t].size() - 1);
  }
  // The final y+ stick leaves x-level 2 and the final z- stick closes the
  // knot; every other stick of each type lies in one plane.
  const std::size_t y_plus = StickType{Axis::y, Sign::plus}.index();
  const std::size_t z_minus = StickType{Axis::z, Sign::minus}.index();
  out.coplanar = true;
  for (std::size_t t = 0; t < 6; ++t) {
    const int r = (t == y_plus || t == z_minus) ? out.rank_without_final[t] : out.rank_all[t];
    out.coplanar = out.coplanar && r <= 2;
  }
  out.passed = out.z_plus_starts_match && out.last_x_plus_collinear && out.coplanar;
  return out;
}

std::size_t stick_count(const LatticeKnot& knot) { return knot.stick_count(); }

bool StructureReport::all_passed() const {
  return std::ranges::all_of(checks, [](const CheckResult& c) { return c.passed; });
}

StructureReport verify_torus_structure(int p) {
  require_p(p, 2, "verify_torus_structure");
  const Coord q = p;
  StructureReport report;
  report.p = p;
  auto add = [&](std::string name, bool passed, std::string detail = {}) {
    report.checks.push_back({std::move(name), passed, std::move(detail)});
  };

  std::optional<LatticeKnot> knot;
  try {
    knot = build_knot(generate_torus_tabulation(p));
    add("closed and simple", true);
  } catch (const KnotError& e) {
    add("closed and simple", false, e.what());
    return report;
  }

  add("stick count 6p", stick_count(*knot) == static_cast<std::size_t>(6 * p),
      std::to_string(stick_count(*knot)) + " sticks");
  std::array<std::size_t, 3> per_axis{};
  for (const auto& s : knot->sticks()) ++per_axis[index_of(s.type.axis)];
  add("2p sticks per axis", std::ranges::all_of(per_axis, [&](std::size_t c) { return c == 2 * std::size_t(p); }));
  add("edge length 5p^2+3p-2", static_cast<Coord>(knot->edge_length()) == 5 * q * q + 3 * q - 2,
      "length " + std::to_string(knot->edge_length()));

  const ClosureSums sums = verify_closure_sums(p);
  add("directed stick sums", sums.passed,
      "x+ " + std::to_string(sums.directed[0]) + ", x- " + std::to_string(sums.directed[1]) + ", y+ " +
          std::to_string(sums.directed[2]) + ", y- " + std::to_string(sums.directed[3]) + ", z+ " +
          std::to_string(sums.directed[4]) + ", z- " + std::to_string(sums.directed[5]));

  const PartialSumsCheck ps = verify_partial_sums(p);
  add("partial sums", ps.passed,
      std::string("y distinct ") + (ps.y_distinct ? "yes" : "no") + ", z distinct " + (ps.z_distinct ? "yes" : "no") +
          ", x-sum 2 occurs " + std::to_string(ps.x_count_of_two) + " times");

  // At most one arc per level, except x-level 2.
  const Box box = knot->bounding_box();
  bool levels_ok = true;
  std::string level_detail;
  for (Axis a : kAxes) {
    for (Coord v = box.min_corner[a]; v <= box.max_corner[a]; ++v) {
      const Level lv = level(*knot, a, v);
      const bool special = a == Axis::x && v == 2 && p >= 3;
      const std::size_t allowed = special ? std::size_t(p - 1) : 1;
      if ((special && lv.arcs.size() != allowed) || (!special && lv.arcs.size() > allowed)) {
        levels_ok = false;
        level_detail += std::string(1, axis_name(a)) + "-level " + std::to_string(v) + " has " +
                        std::to_string(lv.arcs.size()) + " arcs; ";
      }
    }
  }
  add("one arc per level except x-level 2", levels_ok, level_detail);

  if (p >= 3) {
    const XLevelTwoCheck x2 = verify_x_level_2(p);
    add("x-level 2 arcs", x2.passed,
        std::to_string(x2.arc_count) + " arcs starting at " + point_list(x2.initial_vertices));
    const CollinearityCheck col = verify_collinearity(p);
    add("z+ starts collinear", col.z_plus_starts_match, point_list(col.z_plus_starts));
    add("final three x+ starts collinear", col.last_x_plus_collinear,
        point_list({col.last_x_plus_starts.begin(), col.last_x_plus_starts.end()}));
    add("stick types coplanar", col.coplanar);
  }
  return report;
}

TorusFormulas torus_distortion_formulas(int p) {
  const Coord q = p;
  return {
      Rational(9 * q * q, Coord{4}) + Rational(3 * q, Coord{2}) - Rational(1),
      Rational(11 * q * q, Coord{4}) - Rational(q) - Rational(Coord{11}, Coord{4}),
      Rational(11 * q * q, Coord{4}) - Rational(7 * q, Coord{2}) - Rational(5),
  };
}

}  // namespace latknot
