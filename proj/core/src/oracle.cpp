#include "latknot/oracle.hpp"

#include <deque>
#include <map>
#include <set>

#include <boost/multiprecision/cpp_int.hpp>

namespace latknot {

namespace {

using Edge = std::pair<LatticePoint, LatticePoint>;

Edge make_edge(const LatticePoint& a, const LatticePoint& b) { return a < b ? Edge{a, b} : Edge{b, a}; }

// The knot as an abstract graph on its points: one edge per unit segment,
// adjacency recovered from the edge set alone.
std::vector<std::vector<std::size_t>> point_graph(const LatticeKnot& knot) {
  const auto& pts = knot.vertices();
  const std::size_t n = pts.size();
  std::set<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) edges.insert(make_edge(pts[i], pts[(i + 1) % n]));
  std::map<LatticePoint, std::size_t> id;
  for (std::size_t i = 0; i < n; ++i) id.emplace(pts[i], i);
  std::vector<std::vector<std::size_t>> adj(n);
  for (const auto& [a, b] : edges) {
    adj[id.at(a)].push_back(id.at(b));
    adj[id.at(b)].push_back(id.at(a));
  }
  return adj;
}

std::vector<Coord> bfs(const std::vector<std::vector<std::size_t>>& adj, std::size_t source) {
  std::vector<Coord> dist(adj.size(), -1);
  std::deque<std::size_t> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t v : adj[u]) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

}  // namespace

std::vector<Coord> bfs_distances(const LatticeKnot& knot, std::size_t source) {
  if (source >= knot.edge_length()) throw std::out_of_range("bfs_distances: source out of range");
  return bfs(point_graph(knot), source);
}

DistortionReport oracle_vertex_distortion(const LatticeKnot& knot) {
  using boost::multiprecision::cpp_rational;
  const auto& pts = knot.vertices();
  const std::size_t n = pts.size();
  DistortionReport report;
  cpp_rational best = 0;
  const auto adj = point_graph(knot);
  for (std::size_t i = 0; i < n; ++i) {
    const auto dist = bfs(adj, i);
    for (std::size_t j = i + 1; j < n; ++j) {
      ++report.pair_count_scanned;
      const cpp_rational r(dist[j], l1_distance(pts[i], pts[j]));
      if (r > best) {
        best = r;
        report.realizing_pairs.clear();
      }
      if (r == best) report.realizing_pairs.push_back({i, j});
    }
  }
  report.value = Rational(BigInt(numerator(best)), BigInt(denominator(best)));
  return report;
}

}  // namespace latknot
