#include "latknot/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace latknot {

char axis_name(Axis a) { return "xyz"[index_of(a)]; }

std::string to_string(const LatticePoint& p) {
  return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + "," + std::to_string(p.z) + ")";
}

std::string to_string(Direction d) {
  std::string s(1, axis_name(d.axis));
  s += d.sign == Sign::plus ? '+' : '-';
  return s;
}

Direction parse_direction(std::string_view text) {
  if (text.size() == 2 && text[0] >= 'x' && text[0] <= 'z' && (text[1] == '+' || text[1] == '-')) {
    return {static_cast<Axis>(text[0] - 'x'), text[1] == '+' ? Sign::plus : Sign::minus};
  }
  throw std::invalid_argument("unknown stick type '" + std::string(text) + "'");
}

bool unit_direction_between(const LatticePoint& a, const LatticePoint& b, Direction& out) {
  if (l1_distance(a, b) != 1) return false;
  for (Axis ax : kAxes) {
    const Coord d = b[ax] - a[ax];
    if (d != 0) {
      out = {ax, d > 0 ? Sign::plus : Sign::minus};
      return true;
    }
  }
  return false;
}

std::array<LatticePoint, 8> Box::corners() const {
  std::array<LatticePoint, 8> out;
  for (std::size_t i = 0; i < 8; ++i) {
    out[i] = {(i & 1) ? max_corner.x : min_corner.x, (i & 2) ? max_corner.y : min_corner.y,
              (i & 4) ? max_corner.z : min_corner.z};
  }
  return out;
}

bool Box::contains(const LatticePoint& p) const {
  return std::ranges::all_of(kAxes, [&](Axis a) { return min_corner[a] <= p[a] && p[a] <= max_corner[a]; });
}

bool Box::is_corner(const LatticePoint& p) const {
  return std::ranges::all_of(kAxes, [&](Axis a) { return p[a] == min_corner[a] || p[a] == max_corner[a]; });
}

bool Box::on_boundary(const LatticePoint& p) const {
  return contains(p) &&
         std::ranges::any_of(kAxes, [&](Axis a) { return p[a] == min_corner[a] || p[a] == max_corner[a]; });
}

Box bounding_box(std::span<const LatticePoint> points) {
  if (points.empty()) throw std::invalid_argument("bounding_box of an empty point set");
  Box box{points.front(), points.front()};
  for (const auto& p : points) {
    for (Axis a : kAxes) {
      box.min_corner[a] = std::min(box.min_corner[a], p[a]);
      box.max_corner[a] = std::max(box.max_corner[a], p[a]);
    }
  }
  return box;
}

bool is_box_corner(const LatticePoint& v, std::span<const LatticePoint> points) {
  if (std::ranges::find(points, v) == points.end()) {
    throw std::invalid_argument("is_box_corner: " + to_string(v) + " is not in the point set");
  }
  for (Axis a : kAxes) {
    bool lower = true;
    bool upper = true;
    for (const auto& p : points) {
      lower = lower && v[a] <= p[a];
      upper = upper && v[a] >= p[a];
    }
    if (!lower && !upper) return false;
  }
  return true;
}

LatticePath::LatticePath(std::vector<LatticePoint> points) : points_(std::move(points)) {
  if (points_.empty()) throw std::invalid_argument("LatticePath needs at least one point");
  for (std::size_t i = 1; i < points_.size(); ++i) {
    if (l1_distance(points_[i - 1], points_[i]) != 1) {
      throw std::invalid_argument("LatticePath: " + to_string(points_[i - 1]) + " -> " + to_string(points_[i]) +
                                  " is not a unit step");
    }
  }
}

bool is_staircase(const LatticePath& path) {
  const auto& pts = path.points();
  for (Axis a : kAxes) {
    bool up = false;
    bool down = false;
    for (std::size_t i = 1; i < pts.size(); ++i) {
      up = up || pts[i][a] > pts[i - 1][a];
      down = down || pts[i][a] < pts[i - 1][a];
    }
    if (up && down) return false;
  }
  return true;
}

BigInt staircase_count(const LatticePoint& a, const LatticePoint& b) {
  // Product of binomials C(dx+dy, dy) * C(dx+dy+dz, dz), built incrementally
  // so every intermediate division is exact.
  BigInt result = 1;
  Coord placed = 0;
  for (Axis ax : kAxes) {
    const Coord d = b[ax] > a[ax] ? b[ax] - a[ax] : a[ax] - b[ax];
    for (Coord k = 1; k <= d; ++k) {
      result *= placed + k;
      result /= k;
    }
    placed += d;
  }
  return result;
}

Isometry::Isometry(std::array<Axis, 3> source, std::array<Sign, 3> signs) : source_(source), signs_(signs) {
  std::array<bool, 3> seen{};
  for (Axis a : source_) seen[index_of(a)] = true;
  if (!seen[0] || !seen[1] || !seen[2]) throw std::invalid_argument("Isometry: source is not a permutation");
  for (std::size_t i = 0; i < 6; ++i) dir_map_[i] = static_cast<std::uint8_t>(apply(Direction::from_index(i)).index());
}

LatticePoint Isometry::apply(const LatticePoint& p) const {
  LatticePoint out;
  for (std::size_t k = 0; k < 3; ++k) out[kAxes[k]] = static_cast<Coord>(signs_[k]) * p[source_[k]];
  return out;
}

Direction Isometry::apply(Direction d) const {
  for (std::size_t k = 0; k < 3; ++k) {
    if (source_[k] == d.axis) {
      const bool flip = signs_[k] == Sign::minus;
      return {kAxes[k], flip ? d.opposite().sign : d.sign};
    }
  }
  return d;  // unreachable for a valid permutation
}

Isometry Isometry::inverse() const {
  std::array<Axis, 3> src{};
  std::array<Sign, 3> sg{};
  for (std::size_t k = 0; k < 3; ++k) {
    src[index_of(source_[k])] = kAxes[k];
    sg[index_of(source_[k])] = signs_[k];
  }
  return Isometry(src, sg);
}

bool Isometry::is_identity() const {
  return source_ == std::array{Axis::x, Axis::y, Axis::z} &&
         signs_ == std::array{Sign::plus, Sign::plus, Sign::plus};
}

const std::array<Isometry, 48>& Isometry::all() {
  static const std::array<Isometry, 48> table = [] {
    std::array<Isometry, 48> out;
    std::array<Axis, 3> perm{Axis::x, Axis::y, Axis::z};
    std::size_t n = 0;
    do {
      for (int mask = 0; mask < 8; ++mask) {
        std::array<Sign, 3> signs{};
        for (int k = 0; k < 3; ++k) signs[k] = (mask >> k) & 1 ? Sign::minus : Sign::plus;
        out[n++] = Isometry(perm, signs);
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
  }();
  return table;
}

}  // namespace latknot
