#include <algorithm>
#include <limits>
#include <queue>

#include "rectdt/error.hpp"
#include "rectdt/spanner.hpp"

namespace rectdt {

namespace {

constexpr VertexId kNone = static_cast<VertexId>(-1);

std::vector<double> edge_lengths(const Triangulation& t) {
  std::vector<double> w;
  w.reserve(t.edges().size());
  for (const auto& [a, b] : t.edges()) w.push_back(euclidean(t.point(a), t.point(b)));
  return w;
}

}  // namespace

ShortestPaths::ShortestPaths(std::size_t n, std::span<const Edge> edges, std::span<const double> weights)
    : n_(n), dist_(n * n, std::numeric_limits<double>::infinity()), pred_(n * n, kNone) {
  std::vector<std::vector<std::pair<VertexId, double>>> adj(n);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    adj[edges[i][0]].emplace_back(edges[i][1], weights[i]);
    adj[edges[i][1]].emplace_back(edges[i][0], weights[i]);
  }
  using Item = std::pair<double, VertexId>;
  for (VertexId s = 0; s < n; ++s) {
    double* dist = dist_.data() + s * n;
    VertexId* pred = pred_.data() + s * n;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    dist[s] = 0.0;
    pq.emplace(0.0, s);
    while (!pq.empty()) {
      const auto [d, v] = pq.top();
      pq.pop();
      if (d > dist[v]) continue;
      for (const auto& [w, len] : adj[v]) {
        const double nd = d + len;
        if (nd < dist[w]) {
          dist[w] = nd;
          pred[w] = v;
          pq.emplace(nd, w);
        }
      }
    }
    for (VertexId v = 0; v < n; ++v) {
      if (dist[v] == std::numeric_limits<double>::infinity()) {
        throw InternalError("graph is disconnected: no path between " + std::to_string(s) + " and " +
                            std::to_string(v));
      }
    }
  }
  // Both directions sum the same edges in different orders; keep the lower
  // source's value so the table is exactly symmetric.
  for (VertexId a = 0; a < n; ++a)
    for (VertexId b = a + 1; b < n; ++b) dist_[b * n + a] = dist_[a * n + b];
}

ShortestPaths::ShortestPaths(const Triangulation& t)
    : ShortestPaths(t.size(), t.edges(), edge_lengths(t)) {}

std::vector<VertexId> ShortestPaths::path(VertexId a, VertexId b) const {
  if (a > b) {
    std::vector<VertexId> out = path(b, a);
    std::reverse(out.begin(), out.end());
    return out;
  }
  std::vector<VertexId> out{b};
  const VertexId* pred = pred_.data() + a * n_;
  for (VertexId v = b; v != a; v = pred[v]) out.push_back(pred[v]);
  std::reverse(out.begin(), out.end());
  return out;
}

ShortestPaths shortest_path_lengths(const Triangulation& t) { return ShortestPaths(t); }

}  // namespace rectdt
