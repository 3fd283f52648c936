#pragma once

// Simple undirected graphs with an eagerly computed all-pairs hop-distance
// matrix, Cartesian products, and the plain-text edge-list format.

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <istream>
#include <limits>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace drs {

using VertexId = std::uint32_t;
using Distance = std::uint16_t;
using Edge = std::pair<VertexId, VertexId>;

inline constexpr Distance kUnreachable = std::numeric_limits<Distance>::max();

/// Anything that can answer hop-distance queries over dense vertex ids.
/// `Graph` models it, and so do the closed-form oracles in families.hpp.
template <class M>
concept Metric = requires(const M& m, VertexId u, VertexId v) {
  { m.vertex_count() } -> std::convertible_to<std::size_t>;
  { m.distance(u, v) } -> std::convertible_to<int>;
};

/// Row-major |V| x |V| matrix of hop counts.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t n)
      : n_(n), cells_(n * n, kUnreachable) {}

  std::size_t size() const { return n_; }
  Distance operator()(VertexId u, VertexId v) const {
    return cells_[std::size_t{u} * n_ + v];
  }
  Distance& operator()(VertexId u, VertexId v) {
    return cells_[std::size_t{u} * n_ + v];
  }
  std::span<const Distance> row(VertexId u) const {
    return {cells_.data() + std::size_t{u} * n_, n_};
  }

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Distance> cells_;
};

namespace detail {

inline std::vector<std::vector<VertexId>> build_adjacency(
    std::size_t n, std::span<const Edge> edges) {
  std::vector<std::vector<VertexId>> adj(n);
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw std::invalid_argument("edge (" + std::to_string(u) + "," +
                                  std::to_string(v) +
                                  ") references a vertex outside [0," +
                                  std::to_string(n) + ")");
    }
    if (u == v) {
      throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    }
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& nbrs : adj) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
  }
  return adj;
}

inline void bfs_row(const std::vector<std::vector<VertexId>>& adj,
                    VertexId source, DistanceMatrix& dist,
                    std::vector<VertexId>& queue) {
  queue.clear();
  queue.push_back(source);
  dist(source, source) = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const VertexId u = queue[head];
    const Distance du = dist(source, u);
    for (VertexId w : adj[u]) {
      if (dist(source, w) == kUnreachable) {
        dist(source, w) = static_cast<Distance>(du + 1);
        queue.push_back(w);
      }
    }
  }
}

inline DistanceMatrix bfs_all_pairs(
    const std::vector<std::vector<VertexId>>& adj) {
  DistanceMatrix dist(adj.size());
  std::vector<VertexId> queue;
  queue.reserve(adj.size());
  for (VertexId s = 0; s < adj.size(); ++s) bfs_row(adj, s, dist, queue);
  return dist;
}

}  // namespace detail

/// Finite simple undirected graph. Immutable once built; the distance matrix
/// is filled at construction (BFS, or a trusted closed-form oracle).
class Graph {
 public:
  Graph() = default;

  static Graph from_edge_list(std::size_t n, std::span<const Edge> edges) {
    Graph g;
    g.adj_ = detail::build_adjacency(n, edges);
    g.dist_ = detail::bfs_all_pairs(g.adj_);
    return g;
  }
  static Graph from_edge_list(std::size_t n,
                              std::initializer_list<Edge> edges) {
    return from_edge_list(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  /// Builds from edges but takes distances from `oracle` instead of BFS.
  /// Used for structured families whose distances have a closed form.
  template <Metric M>
  static Graph with_oracle_distances(std::size_t n, std::span<const Edge> edges,
                                     const M& oracle) {
    Graph g;
    g.adj_ = detail::build_adjacency(n, edges);
    g.dist_ = DistanceMatrix(n);
    for (VertexId u = 0; u < n; ++u)
      for (VertexId v = 0; v < n; ++v)
        g.dist_(u, v) = static_cast<Distance>(oracle.distance(u, v));
    return g;
  }

  std::size_t vertex_count() const { return adj_.size(); }
  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (const auto& nbrs : adj_) twice += nbrs.size();
    return twice / 2;
  }
  std::span<const VertexId> neighbors(VertexId v) const { return adj_[v]; }
  bool adjacent(VertexId u, VertexId v) const {
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
  }

  Distance distance(VertexId u, VertexId v) const { return dist_(u, v); }
  const DistanceMatrix& distances() const { return dist_; }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (VertexId u = 0; u < adj_.size(); ++u)
      for (VertexId v : adj_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

 private:
  std::vector<std::vector<VertexId>> adj_;
  DistanceMatrix dist_;
};

/// Recomputes hop distances by BFS from every vertex. Unreachable pairs hold
/// `kUnreachable`.
inline DistanceMatrix all_pairs_distances(const Graph& g) {
  std::vector<std::vector<VertexId>> adj(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    auto nbrs = g.neighbors(v);
    adj[v].assign(nbrs.begin(), nbrs.end());
  }
  return detail::bfs_all_pairs(adj);
}

template <Metric M>
bool is_connected(const M& m) {
  for (VertexId v = 0; v < m.vertex_count(); ++v)
    if (static_cast<int>(m.distance(0, v)) == kUnreachable) return false;
  return true;
}

/// Throws unless every vertex is reachable. Every resolving-set query calls it.
template <Metric M>
void require_connected(const M& m) {
  if (!is_connected(m))
    throw std::invalid_argument("graph is disconnected");
}

/// G [] H with (a, b) -> a * |V(H)| + b.
inline Graph cartesian_product(const Graph& g, const Graph& h) {
  if (g.vertex_count() == 0 || h.vertex_count() == 0)
    throw std::invalid_argument("cartesian product of an empty graph");
  const std::size_t nh = h.vertex_count();
  auto id = [nh](VertexId a, VertexId b) {
    return static_cast<VertexId>(a * nh + b);
  };
  std::vector<Edge> edges;
  for (VertexId a = 0; a < g.vertex_count(); ++a) {
    for (auto [b1, b2] : h.edges()) edges.emplace_back(id(a, b1), id(a, b2));
  }
  for (auto [a1, a2] : g.edges()) {
    for (VertexId b = 0; b < nh; ++b) edges.emplace_back(id(a1, b), id(a2, b));
  }
  return Graph::from_edge_list(g.vertex_count() * nh, edges);
}

// Edge-list text format:
//   n m
//   u v      (m lines, 0-indexed; '#' starts a comment)

inline Graph read_edge_list(std::istream& in) {
  std::vector<long long> tokens;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) {
      std::size_t used = 0;
      long long value = 0;
      try {
        value = std::stoll(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size() || value < 0)
        throw std::invalid_argument("edge list: bad token '" + tok + "'");
      tokens.push_back(value);
    }
  }
  if (tokens.size() < 2) throw std::invalid_argument("edge list: missing header");
  const auto n = static_cast<std::size_t>(tokens[0]);
  const auto m = static_cast<std::size_t>(tokens[1]);
  if (tokens.size() != 2 + 2 * m)
    throw std::invalid_argument("edge list: expected " + std::to_string(m) +
                                " edges");
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    edges.emplace_back(static_cast<VertexId>(tokens[2 + 2 * i]),
                       static_cast<VertexId>(tokens[3 + 2 * i]));
  }
  return Graph::from_edge_list(n, edges);
}

inline Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return read_edge_list(in);
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
  const auto edges = g.edges();
  out << g.vertex_count() << ' ' << edges.size() << '\n';
  for (auto [u, v] : edges) out << u << ' ' << v << '\n';
}

}  // namespace drs
