#include "subcol/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <queue>

namespace subcol {

namespace {

void check_vertex(const Graph& g, Vertex v, const char* who) {
  if (v < 0 || v >= g.n) throw Error(Errc::invalid_argument, std::string(who) + ": vertex out of range");
}

}  // namespace

Graph Graph::from_edges(int n, std::span<const std::pair<Vertex, Vertex>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(*this, u, "add_edge");
  check_vertex(*this, v, "add_edge");
  if (u == v) throw Error(Errc::invalid_argument, "add_edge: loops are not allowed");
  auto insert_sorted = [](std::vector<Vertex>& list, Vertex x) {
    auto it = std::lower_bound(list.begin(), list.end(), x);
    if (it == list.end() || *it != x) list.insert(it, x);
  };
  insert_sorted(adj[static_cast<std::size_t>(u)], v);
  insert_sorted(adj[static_cast<std::size_t>(v)], u);
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u < 0 || u >= n || v < 0 || v >= n) return false;
  const auto& list = adj[static_cast<std::size_t>(u)];
  return std::binary_search(list.begin(), list.end(), v);
}

int Graph::edge_count() const {
  std::size_t total = 0;
  for (const auto& list : adj) total += list.size();
  return static_cast<int>(total / 2);
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v : adj[static_cast<std::size_t>(u)])
      if (u < v) out.emplace_back(u, v);
  return out;
}

void Graph::validate() const {
  if (static_cast<int>(adj.size()) != n) throw Error(Errc::invalid_argument, "graph: adjacency size mismatch");
  for (Vertex u = 0; u < n; ++u) {
    const auto& list = adj[static_cast<std::size_t>(u)];
    for (std::size_t i = 0; i < list.size(); ++i) {
      Vertex v = list[i];
      if (v < 0 || v >= n) throw Error(Errc::invalid_argument, "graph: neighbour out of range");
      if (v == u) throw Error(Errc::invalid_argument, "graph: loop");
      if (i > 0 && list[i - 1] >= v) throw Error(Errc::invalid_argument, "graph: adjacency not sorted/unique");
      if (!has_edge(v, u)) throw Error(Errc::invalid_argument, "graph: asymmetric adjacency");
    }
  }
}

std::vector<int> distances_from(const Graph& g, Vertex s) {
  std::vector<char> alive(static_cast<std::size_t>(g.n), 1);
  return distances_from_masked(g, s, alive);
}

std::vector<int> distances_from_masked(const Graph& g, Vertex s, const std::vector<char>& alive) {
  check_vertex(g, s, "distances_from");
  std::vector<int> dist(static_cast<std::size_t>(g.n), kInfinity);
  if (!alive[static_cast<std::size_t>(s)]) return dist;
  dist[static_cast<std::size_t>(s)] = 0;
  std::deque<Vertex> queue{s};
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex v : g.neighbours(u)) {
      if (!alive[static_cast<std::size_t>(v)]) continue;
      if (dist[static_cast<std::size_t>(v)] != kInfinity) continue;
      dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
      queue.push_back(v);
    }
  }
  return dist;
}

int distance(const Graph& g, Vertex u, Vertex v) {
  check_vertex(g, u, "distance");
  check_vertex(g, v, "distance");
  if (u == v) return 0;
  return distances_from(g, u)[static_cast<std::size_t>(v)];
}

std::vector<Vertex> ball(const Graph& g, Vertex v, int r) {
  check_vertex(g, v, "ball");
  if (r < 0) throw Error(Errc::invalid_argument, "ball: radius must be nonnegative");
  std::vector<int> dist = distances_from(g, v);
  std::vector<Vertex> out;
  for (Vertex u = 0; u < g.n; ++u)
    if (dist[static_cast<std::size_t>(u)] <= r) out.push_back(u);
  return out;
}

int girth(const Graph& g) {
  // BFS from every root; a non-tree edge (x,y) seen from the root on a
  // shortest cycle closes that cycle at length dist[x]+dist[y]+1.
  int best = kInfinity;
  std::vector<int> dist(static_cast<std::size_t>(g.n));
  std::vector<Vertex> parent(static_cast<std::size_t>(g.n));
  for (Vertex s = 0; s < g.n; ++s) {
    std::fill(dist.begin(), dist.end(), kInfinity);
    dist[static_cast<std::size_t>(s)] = 0;
    parent[static_cast<std::size_t>(s)] = -1;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      if (best != kInfinity && 2 * dist[static_cast<std::size_t>(u)] >= best) break;
      for (Vertex v : g.neighbours(u)) {
        if (dist[static_cast<std::size_t>(v)] == kInfinity) {
          dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
          parent[static_cast<std::size_t>(v)] = u;
          queue.push_back(v);
        } else if (v != parent[static_cast<std::size_t>(u)]) {
          int cycle = dist[static_cast<std::size_t>(u)] + dist[static_cast<std::size_t>(v)] + 1;
          best = std::min(best, cycle);
        }
      }
    }
  }
  return best;
}

Graph graph_power(const Graph& g, int d) {
  if (d < 1) throw Error(Errc::invalid_argument, "graph_power: d must be positive");
  if (d == 1) return g;
  Graph out(g.n);
  for (Vertex u = 0; u < g.n; ++u) {
    std::vector<int> dist = distances_from(g, u);
    auto& list = out.adj[static_cast<std::size_t>(u)];
    for (Vertex v = 0; v < g.n; ++v)
      if (v != u && dist[static_cast<std::size_t>(v)] <= d) list.push_back(v);
  }
  return out;
}

namespace {

void check_path(const Graph& g, std::span<const Vertex> p, const std::vector<char>& alive) {
  if (p.empty()) throw Error(Errc::not_a_path, "is_isometric_path: empty sequence");
  std::vector<char> seen(static_cast<std::size_t>(g.n), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    Vertex v = p[i];
    check_vertex(g, v, "is_isometric_path");
    if (!alive[static_cast<std::size_t>(v)])
      throw Error(Errc::not_a_path, "is_isometric_path: vertex outside the mask");
    if (seen[static_cast<std::size_t>(v)])
      throw Error(Errc::not_a_path, "is_isometric_path: repeated vertex");
    seen[static_cast<std::size_t>(v)] = 1;
    if (i > 0 && !g.has_edge(p[i - 1], v))
      throw Error(Errc::not_a_path, "is_isometric_path: consecutive vertices not adjacent");
  }
}

}  // namespace

bool is_isometric_path(const Graph& g, std::span<const Vertex> p) {
  std::vector<char> alive(static_cast<std::size_t>(g.n), 1);
  return is_isometric_path_masked(g, p, alive);
}

bool is_isometric_path_masked(const Graph& g, std::span<const Vertex> p, const std::vector<char>& alive) {
  check_path(g, p, alive);
  int len = static_cast<int>(p.size()) - 1;
  std::vector<int> dist = distances_from_masked(g, p.front(), alive);
  return dist[static_cast<std::size_t>(p.back())] == len;
}

void Layering::validate(const Graph& g) const {
  if (static_cast<int>(assignment.size()) != g.n)
    throw Error(Errc::invalid_argument, "layering: assignment size mismatch");
  std::vector<int> seen(static_cast<std::size_t>(g.n), -1);
  for (std::size_t i = 0; i < layers.size(); ++i) {
    for (Vertex v : layers[i]) {
      if (seen[static_cast<std::size_t>(v)] != -1)
        throw Error(Errc::invalid_argument, "layering: vertex in two layers");
      seen[static_cast<std::size_t>(v)] = static_cast<int>(i);
      if (assignment[static_cast<std::size_t>(v)] != static_cast<int>(i))
        throw Error(Errc::invalid_argument, "layering: assignment disagrees with layers");
    }
  }
  for (Vertex v = 0; v < g.n; ++v)
    if (seen[static_cast<std::size_t>(v)] == -1)
      throw Error(Errc::invalid_argument, "layering: vertex in no layer");
  for (auto [u, v] : g.edges())
    if (std::abs(assignment[static_cast<std::size_t>(u)] - assignment[static_cast<std::size_t>(v)]) > 1)
      throw Error(Errc::invalid_argument, "layering: edge spans non-adjacent layers");
}

Layering bfs_layering(const Graph& g, Vertex root) {
  check_vertex(g, root, "bfs_layering");
  Layering out;
  out.assignment.assign(static_cast<std::size_t>(g.n), -1);
  auto layer_component = [&](Vertex r) {
    std::vector<int> dist = distances_from(g, r);
    for (Vertex v = 0; v < g.n; ++v) {
      int dv = dist[static_cast<std::size_t>(v)];
      if (dv == kInfinity || out.assignment[static_cast<std::size_t>(v)] != -1) continue;
      if (static_cast<std::size_t>(dv) >= out.layers.size()) out.layers.resize(static_cast<std::size_t>(dv) + 1);
      out.layers[static_cast<std::size_t>(dv)].push_back(v);
      out.assignment[static_cast<std::size_t>(v)] = dv;
    }
  };
  layer_component(root);
  for (Vertex v = 0; v < g.n; ++v)
    if (out.assignment[static_cast<std::size_t>(v)] == -1) layer_component(v);
  for (auto& layer : out.layers) std::sort(layer.begin(), layer.end());
  return out;
}

std::vector<std::vector<Vertex>> components(const Graph& g) {
  std::vector<char> alive(static_cast<std::size_t>(g.n), 1);
  return components_masked(g, alive);
}

std::vector<std::vector<Vertex>> components_masked(const Graph& g, const std::vector<char>& alive) {
  std::vector<std::vector<Vertex>> out;
  std::vector<char> seen(static_cast<std::size_t>(g.n), 0);
  for (Vertex s = 0; s < g.n; ++s) {
    if (seen[static_cast<std::size_t>(s)] || !alive[static_cast<std::size_t>(s)]) continue;
    std::vector<Vertex> comp{s};
    seen[static_cast<std::size_t>(s)] = 1;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      for (Vertex v : g.neighbours(comp[head])) {
        if (seen[static_cast<std::size_t>(v)] || !alive[static_cast<std::size_t>(v)]) continue;
        seen[static_cast<std::size_t>(v)] = 1;
        comp.push_back(v);
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> verts, std::vector<Vertex>* label) {
  std::vector<int> index(static_cast<std::size_t>(g.n), -1);
  for (std::size_t i = 0; i < verts.size(); ++i) {
    check_vertex(g, verts[i], "induced_subgraph");
    if (index[static_cast<std::size_t>(verts[i])] != -1)
      throw Error(Errc::invalid_argument, "induced_subgraph: repeated vertex");
    index[static_cast<std::size_t>(verts[i])] = static_cast<int>(i);
  }
  Graph out(static_cast<int>(verts.size()));
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (Vertex v : g.neighbours(verts[i])) {
      int j = index[static_cast<std::size_t>(v)];
      if (j != -1) out.adj[i].push_back(j);
    }
  for (auto& list : out.adj) std::sort(list.begin(), list.end());
  if (label) label->assign(verts.begin(), verts.end());
  return out;
}

std::vector<Vertex> degeneracy_sequence(const Graph& g) {
  std::vector<int> deg(static_cast<std::size_t>(g.n));
  for (Vertex v = 0; v < g.n; ++v) deg[static_cast<std::size_t>(v)] = g.degree(v);
  std::vector<char> removed(static_cast<std::size_t>(g.n), 0);
  std::vector<Vertex> removal;
  removal.reserve(static_cast<std::size_t>(g.n));
  // Bucket queue keyed by current degree, LIFO within a bucket.
  int maxdeg = 0;
  for (int d : deg) maxdeg = std::max(maxdeg, d);
  std::vector<std::vector<Vertex>> bucket(static_cast<std::size_t>(maxdeg) + 1);
  for (Vertex v = 0; v < g.n; ++v) bucket[static_cast<std::size_t>(deg[static_cast<std::size_t>(v)])].push_back(v);
  for (int round = 0; round < g.n; ++round) {
    Vertex pick = -1;
    for (auto& b : bucket) {
      // stale entries are skipped lazily
      while (!b.empty() && (removed[static_cast<std::size_t>(b.back())] ||
                            deg[static_cast<std::size_t>(b.back())] != static_cast<int>(&b - bucket.data()))) {
        b.pop_back();
      }
      if (!b.empty()) {
        pick = b.back();
        b.pop_back();
        break;
      }
    }
    if (pick == -1) break;
    removed[static_cast<std::size_t>(pick)] = 1;
    removal.push_back(pick);
    for (Vertex v : g.neighbours(pick)) {
      if (removed[static_cast<std::size_t>(v)]) continue;
      int d = --deg[static_cast<std::size_t>(v)];
      bucket[static_cast<std::size_t>(d)].push_back(v);
    }
  }
  std::reverse(removal.begin(), removal.end());
  return removal;
}

}  // namespace subcol
