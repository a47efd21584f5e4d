// Integer geometry of the cubic lattice: points, the l1 metric, unit
// directions, staircase walks, bounding boxes and the 48 lattice isometries.
#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace latknot {

using Coord = std::int64_t;
using BigInt = boost::multiprecision::cpp_int;

enum class Axis : std::uint8_t { x = 0, y = 1, z = 2 };

inline constexpr std::array<Axis, 3> kAxes{Axis::x, Axis::y, Axis::z};

constexpr std::size_t index_of(Axis a) { return static_cast<std::size_t>(a); }
char axis_name(Axis a);

struct LatticePoint {
  Coord x = 0;
  Coord y = 0;
  Coord z = 0;

  constexpr Coord operator[](Axis a) const {
    switch (a) {
      case Axis::x: return x;
      case Axis::y: return y;
      default: return z;
    }
  }
  constexpr Coord& operator[](Axis a) {
    switch (a) {
      case Axis::x: return x;
      case Axis::y: return y;
      default: return z;
    }
  }

  friend constexpr auto operator<=>(const LatticePoint&, const LatticePoint&) = default;

  constexpr LatticePoint& operator+=(const LatticePoint& o) {
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }
  constexpr LatticePoint& operator-=(const LatticePoint& o) {
    x -= o.x;
    y -= o.y;
    z -= o.z;
    return *this;
  }
  friend constexpr LatticePoint operator+(LatticePoint a, const LatticePoint& b) { return a += b; }
  friend constexpr LatticePoint operator-(LatticePoint a, const LatticePoint& b) { return a -= b; }
  friend constexpr LatticePoint operator*(Coord k, const LatticePoint& a) {
    return {k * a.x, k * a.y, k * a.z};
  }
  constexpr LatticePoint operator-() const { return {-x, -y, -z}; }
};

std::string to_string(const LatticePoint& p);

struct LatticePointHash {
  std::size_t operator()(const LatticePoint& p) const noexcept {
    auto h = static_cast<std::uint64_t>(p.x) * 0x9E3779B97F4A7C15ULL;
    h ^= static_cast<std::uint64_t>(p.y) + 0x7F4A7C159E3779B9ULL + (h << 6) + (h >> 2);
    h ^= static_cast<std::uint64_t>(p.z) + 0x94D049BB133111EBULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

/// Sum of absolute coordinate differences.
constexpr Coord l1_distance(const LatticePoint& a, const LatticePoint& b) {
  auto abs = [](Coord v) { return v < 0 ? -v : v; };
  return abs(a.x - b.x) + abs(a.y - b.y) + abs(a.z - b.z);
}

enum class Sign : std::int8_t { minus = -1, plus = 1 };

/// One of the six unit steps x+, x-, y+, y-, z+, z-. Ordered x+ < x- < y+ <
/// y- < z+ < z- by index(); this order defines lexicographic step sequences.
struct Direction {
  Axis axis = Axis::x;
  Sign sign = Sign::plus;

  static constexpr Direction from_index(std::size_t i) {
    return {static_cast<Axis>(i / 2), (i % 2 == 0) ? Sign::plus : Sign::minus};
  }
  constexpr std::size_t index() const { return 2 * index_of(axis) + (sign == Sign::plus ? 0 : 1); }
  constexpr Direction opposite() const {
    return {axis, sign == Sign::plus ? Sign::minus : Sign::plus};
  }
  constexpr LatticePoint unit() const {
    LatticePoint p;
    p[axis] = static_cast<Coord>(sign);
    return p;
  }
  friend constexpr bool operator==(Direction, Direction) = default;
};

inline constexpr std::array<Direction, 6> kDirections{
    Direction::from_index(0), Direction::from_index(1), Direction::from_index(2),
    Direction::from_index(3), Direction::from_index(4), Direction::from_index(5)};

/// "x+", "y-", ...
std::string to_string(Direction d);
/// Inverse of to_string; throws std::invalid_argument.
Direction parse_direction(std::string_view text);

/// The unit direction from a to b if they are lattice neighbours.
bool unit_direction_between(const LatticePoint& a, const LatticePoint& b, Direction& out);

/// Axis-aligned box with min_corner <= max_corner componentwise.
struct Box {
  LatticePoint min_corner;
  LatticePoint max_corner;

  std::array<LatticePoint, 8> corners() const;
  bool contains(const LatticePoint& p) const;
  bool is_corner(const LatticePoint& p) const;
  bool on_boundary(const LatticePoint& p) const;
  Coord extent(Axis a) const { return max_corner[a] - min_corner[a]; }
  friend bool operator==(const Box&, const Box&) = default;
};

/// Componentwise min/max. Throws std::invalid_argument on empty input.
Box bounding_box(std::span<const LatticePoint> points);

/// True iff every coordinate of v is an upper or lower bound of that
/// coordinate over the set. Throws std::invalid_argument if v is not a member.
bool is_box_corner(const LatticePoint& v, std::span<const LatticePoint> points);

/// A nonempty sequence of lattice points joined by unit steps.
class LatticePath {
 public:
  /// Throws std::invalid_argument if empty or if two consecutive points are
  /// not at l1 distance 1.
  explicit LatticePath(std::vector<LatticePoint> points);

  const std::vector<LatticePoint>& points() const { return points_; }
  std::size_t length() const { return points_.size() - 1; }
  const LatticePoint& front() const { return points_.front(); }
  const LatticePoint& back() const { return points_.back(); }

 private:
  std::vector<LatticePoint> points_;
};

/// Each coordinate sequence along the path is monotone (the direction of
/// monotonicity chosen independently per axis). A one-point path qualifies.
bool is_staircase(const LatticePath& path);

/// Number of staircase walks from a to b: d1! / (|dx|! |dy|! |dz|!).
BigInt staircase_count(const LatticePoint& a, const LatticePoint& b);

/// A signed axis permutation: (g p)[k] = signs[k] * p[source[k]].
class Isometry {
 public:
  constexpr Isometry() = default;
  Isometry(std::array<Axis, 3> source, std::array<Sign, 3> signs);

  LatticePoint apply(const LatticePoint& p) const;
  Direction apply(Direction d) const;
  /// Image of each of the six direction indices, for hot loops.
  const std::array<std::uint8_t, 6>& direction_table() const { return dir_map_; }
  Isometry inverse() const;
  bool is_identity() const;

  /// All 48 isometries fixing the origin; element 0 is the identity.
  static const std::array<Isometry, 48>& all();

 private:
  std::array<Axis, 3> source_{Axis::x, Axis::y, Axis::z};
  std::array<Sign, 3> signs_{Sign::plus, Sign::plus, Sign::plus};
  std::array<std::uint8_t, 6> dir_map_{0, 1, 2, 3, 4, 5};
};

}  // namespace latknot
