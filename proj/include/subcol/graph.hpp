#pragma once

#include <span>
#include <utility>
#include <vector>

#include "subcol/common.hpp"

namespace subcol {

// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
// Immutable after construction as far as the query operations are concerned;
// all queries are safe to call concurrently.
struct Graph {
  int n = 0;
  std::vector<std::vector<Vertex>> adj;

  Graph() = default;
  explicit Graph(int n_) : n(n_), adj(static_cast<std::size_t>(n_)) {}

  static Graph from_edges(int n, std::span<const std::pair<Vertex, Vertex>> edges);

  void add_edge(Vertex u, Vertex v);
  bool has_edge(Vertex u, Vertex v) const;
  int degree(Vertex v) const { return static_cast<int>(adj[static_cast<std::size_t>(v)].size()); }
  int edge_count() const;
  std::vector<std::pair<Vertex, Vertex>> edges() const;  // u < v, lexicographic

  const std::vector<Vertex>& neighbours(Vertex v) const { return adj[static_cast<std::size_t>(v)]; }

  // Throws Errc::invalid_argument on asymmetry, loops, out-of-range
  // neighbours, or unsorted/duplicate adjacency entries.
  void validate() const;

  bool operator==(const Graph&) const = default;
};

// BFS distances from s; kInfinity marks unreachable vertices. The masked
// variant restricts the graph to vertices with alive[v] != 0.
std::vector<int> distances_from(const Graph& g, Vertex s);
std::vector<int> distances_from_masked(const Graph& g, Vertex s, const std::vector<char>& alive);

int distance(const Graph& g, Vertex u, Vertex v);

// Closed ball {u : dist(v,u) <= r}, sorted.
std::vector<Vertex> ball(const Graph& g, Vertex v, int r);

// Length of a shortest cycle; kInfinity for forests.
int girth(const Graph& g);

// Same vertex set, uv an edge iff 0 < dist_g(u,v) <= d.
Graph graph_power(const Graph& g, int d);

// True iff p realizes the distance between its endpoints. Throws
// Errc::not_a_path if p is not a simple path in g.
bool is_isometric_path(const Graph& g, std::span<const Vertex> p);
bool is_isometric_path_masked(const Graph& g, std::span<const Vertex> p, const std::vector<char>& alive);

struct Layering {
  std::vector<std::vector<Vertex>> layers;
  std::vector<int> assignment;  // vertex -> layer index

  // Throws unless layers partition V(g) and every edge stays within a layer
  // or joins consecutive layers.
  void validate(const Graph& g) const;
};

// L_i = vertices at distance i from root. Any other components are layered
// from their smallest vertex.
Layering bfs_layering(const Graph& g, Vertex root);

// Connected components, each sorted, ordered by smallest member.
std::vector<std::vector<Vertex>> components(const Graph& g);
std::vector<std::vector<Vertex>> components_masked(const Graph& g, const std::vector<char>& alive);

// Induced subgraph on verts, relabelled 0..k-1 in the given order; label[i]
// receives the original identifier of new vertex i.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> verts, std::vector<Vertex>* label = nullptr);

// Vertices in the reverse of a smallest-last elimination: every vertex has at
// most degeneracy(g) neighbours earlier in the returned sequence.
std::vector<Vertex> degeneracy_sequence(const Graph& g);

}  // namespace subcol
