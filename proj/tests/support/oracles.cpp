#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include <boost/multiprecision/cpp_int.hpp>

namespace latknot::testing {

Tabulation torus_table_oracle(int p) {
  const std::vector<std::string> period{"z+", "x+", "y+", "z-", "x-", "y-"};
  Tabulation tab;
  for (int k = 0; k < p; ++k) {
    for (const auto& t : period) tab.types.push_back(parse_direction(t));
  }
  const Coord P = p;
  for (Coord r = 1; r <= 2 * P; ++r) {
    Coord x;
    if (r == 1) {
      x = 2;
    } else if (r <= 2 * P - 3) {
      x = r / 2 + 2;
    } else if (r == 2 * P - 2) {
      x = P + 1;
    } else if (r == 2 * P - 1) {
      x = P;
    } else {
      x = 1;
    }
    tab.lengths[0].push_back(x);

    Coord y;
    if (r <= 2 * P - 2) {
      y = r % 2 == 1 ? P - 1 : P;
    } else {
      y = r == 2 * P - 1 ? 2 * P - 1 : P;
    }
    tab.lengths[1].push_back(y);

    tab.lengths[2].push_back(r <= 2 * P - 1 ? 2 * P - r : P);
  }
  return tab;
}

std::vector<LatticePoint> replay_vertices(const Tabulation& tab) {
  std::vector<LatticePoint> pts{tab.origin};
  std::array<std::size_t, 3> row{};
  for (const auto& t : tab.types) {
    const auto a = index_of(t.axis);
    for (Coord k = 0; k < tab.lengths[a][row[a]]; ++k) pts.push_back(pts.back() + t.unit());
    ++row[a];
  }
  pts.pop_back();  // back at the origin
  return pts;
}

Coord walk_distance(const LatticeKnot& knot, std::size_t i, std::size_t j) {
  const std::size_t n = knot.edge_length();
  Coord forward = 0;
  for (std::size_t k = i; k != j; k = (k + 1) % n) ++forward;
  Coord backward = 0;
  for (std::size_t k = i; k != j; k = (k + n - 1) % n) ++backward;
  return std::min(forward, backward);
}

Rational naive_distortion(const LatticeKnot& knot) {
  using boost::multiprecision::cpp_rational;
  cpp_rational best = 0;
  const auto& v = knot.vertices();
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (i == j) continue;
      best = std::max(best, cpp_rational(walk_distance(knot, i, j), l1_distance(v[i], v[j])));
    }
  }
  return Rational(BigInt(numerator(best)), BigInt(denominator(best)));
}

std::uint64_t brute_staircase_count(const LatticePoint& a, const LatticePoint& b) {
  const Coord budget = l1_distance(a, b);
  std::function<std::uint64_t(const LatticePoint&, Coord)> go = [&](const LatticePoint& p, Coord left) {
    if (left == 0) return std::uint64_t{p == b ? 1U : 0U};
    std::uint64_t total = 0;
    for (const auto& d : kDirections) {
      const LatticePoint q = p + d.unit();
      if (l1_distance(q, b) <= left - 1) total += go(q, left - 1);
    }
    return total;
  };
  return go(a, budget);
}

std::uint64_t rooted_polygon_count(int n) {
  std::set<LatticePoint> visited{LatticePoint{}};
  std::function<std::uint64_t(const LatticePoint&, int)> go = [&](const LatticePoint& p, int depth) {
    std::uint64_t total = 0;
    for (const auto& d : kDirections) {
      const LatticePoint q = p + d.unit();
      if (l1_distance(q, LatticePoint{}) > n - depth - 1) continue;
      if (q == LatticePoint{}) {
        if (depth + 1 == n) ++total;
        continue;
      }
      if (visited.contains(q)) continue;
      visited.insert(q);
      total += go(q, depth + 1);
      visited.erase(q);
    }
    return total;
  };
  return go(LatticePoint{}, 0);
}

std::size_t orbit_size(const LatticeKnot& knot) {
  std::set<std::vector<std::pair<LatticePoint, LatticePoint>>> images;
  const auto& v = knot.vertices();
  for (const auto& g : Isometry::all()) {
    std::vector<LatticePoint> img;
    for (const auto& p : v) img.push_back(g.apply(p));
    const LatticePoint low = *std::min_element(img.begin(), img.end());
    std::vector<std::pair<LatticePoint, LatticePoint>> edges;
    for (std::size_t i = 0; i < img.size(); ++i) {
      LatticePoint a = img[i] - low;
      LatticePoint b = img[(i + 1) % img.size()] - low;
      if (b < a) std::swap(a, b);
      edges.emplace_back(a, b);
    }
    std::sort(edges.begin(), edges.end());
    images.insert(std::move(edges));
  }
  return images.size();
}

}  // namespace latknot::testing
