#include "subcol/generate.hpp"

#include <algorithm>
#include <array>
#include <unordered_map>

namespace subcol {

Family family_from_string(const std::string& name) {
  if (name == "path") return Family::path;
  if (name == "cycle") return Family::cycle;
  if (name == "grid") return Family::grid;
  if (name == "k-tree" || name == "random-k-tree") return Family::random_ktree;
  if (name == "plane-triangulation" || name == "random-plane-triangulation") return Family::plane_triangulation;
  if (name == "subdivided-triangulation") return Family::subdivided_triangulation;
  throw Error(Errc::invalid_argument, "unknown family: " + name);
}

std::string family_to_string(Family f) {
  switch (f) {
    case Family::path: return "path";
    case Family::cycle: return "cycle";
    case Family::grid: return "grid";
    case Family::random_ktree: return "random-k-tree";
    case Family::plane_triangulation: return "random-plane-triangulation";
    case Family::subdivided_triangulation: return "subdivided-triangulation";
  }
  return "?";
}

namespace {

Graph make_path(int n) {
  if (n < 1) throw Error(Errc::invalid_argument, "path: n must be positive");
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph make_cycle(int n) {
  if (n < 3) throw Error(Errc::invalid_argument, "cycle: n must be at least 3");
  Graph g = make_path(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph make_grid(int rows, int cols) {
  if (rows < 1 || cols < 1) throw Error(Errc::invalid_argument, "grid: rows and cols must be positive");
  Graph g(rows * cols);
  auto id = [cols](int r, int c) { return r * cols + c; };
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) g.add_edge(id(r, c), id(r, c + 1));
      if (r + 1 < rows) g.add_edge(id(r, c), id(r + 1, c));
    }
  return g;
}

GenerateResult make_ktree(int n, int k, Rng& rng) {
  if (k < 1 || n < k + 1) throw Error(Errc::invalid_argument, "k-tree: need n >= k+1 and k >= 1");
  KTreeConstruction c;
  c.base_clique.resize(static_cast<std::size_t>(k) + 1);
  for (int i = 0; i <= k; ++i) c.base_clique[static_cast<std::size_t>(i)] = i;
  std::vector<std::vector<Vertex>> cliques;
  for (int skip = 0; skip <= k; ++skip) {
    std::vector<Vertex> q;
    for (int i = 0; i <= k; ++i)
      if (i != skip) q.push_back(i);
    cliques.push_back(std::move(q));
  }
  for (Vertex v = k + 1; v < n; ++v) {
    const std::vector<Vertex> base = cliques[rng.below(cliques.size())];
    c.additions.push_back({v, base});
    for (std::size_t skip = 0; skip < base.size(); ++skip) {
      std::vector<Vertex> q;
      for (std::size_t i = 0; i < base.size(); ++i)
        if (i != skip) q.push_back(base[i]);
      q.push_back(v);
      cliques.push_back(std::move(q));
    }
  }
  GenerateResult out;
  out.graph = c.replay();
  out.construction = std::move(c);
  return out;
}

// Oriented triangle store for the insertion/flip builder. Each directed edge
// lies in exactly one oriented triangle (a,b,c) = the face traced a->b->c->a.
class TriangleMesh {
public:
  explicit TriangleMesh(int capacity) : n_(capacity) {}

  void add_triangle(Vertex a, Vertex b, Vertex c) {
    int id = static_cast<int>(tris_.size());
    tris_.push_back({a, b, c});
    index_edges(id);
  }

  int triangle_count() const { return static_cast<int>(tris_.size()); }
  const std::array<Vertex, 3>& triangle(int t) const { return tris_[static_cast<std::size_t>(t)]; }

  // Splits triangle t into three around the new vertex v.
  void insert_vertex(int t, Vertex v) {
    auto [a, b, c] = tris_[static_cast<std::size_t>(t)];
    remove_triangle(t);
    add_triangle(a, b, v);
    add_triangle(b, c, v);
    add_triangle(c, a, v);
  }

  // Flips the diagonal of the quadrilateral around edge {a,b}; returns false
  // if the flip would create a parallel edge.
  bool flip(Vertex a, Vertex b) {
    int t1 = face_of(a, b);
    int t2 = face_of(b, a);
    Vertex x = third(t1, a, b);
    Vertex y = third(t2, b, a);
    if (x == y || face_map_.count(key(x, y)) != 0) return false;
    if (t1 < t2) std::swap(t1, t2);  // remove the higher index first
    remove_triangle(t1);
    remove_triangle(t2);
    add_triangle(x, a, y);
    add_triangle(y, b, x);
    return true;
  }

  bool has_edge(Vertex a, Vertex b) const { return face_map_.count(key(a, b)) != 0; }

  std::vector<std::pair<Vertex, Vertex>> directed_edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(face_map_.size());
    for (const auto& [k, t] : face_map_) out.emplace_back(static_cast<Vertex>(k / n_), static_cast<Vertex>(k % n_));
    return out;
  }

  // Rotations via the corner rule: in triangle (a,b,c), b follows c around a.
  std::vector<std::vector<Vertex>> rotations(int n) const {
    std::vector<std::unordered_map<Vertex, Vertex>> follows(static_cast<std::size_t>(n));
    for (const auto& tri : tris_) {
      auto [a, b, c] = tri;
      follows[static_cast<std::size_t>(a)][c] = b;
      follows[static_cast<std::size_t>(b)][a] = c;
      follows[static_cast<std::size_t>(c)][b] = a;
    }
    std::vector<std::vector<Vertex>> rot(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) {
      auto& cycle = follows[static_cast<std::size_t>(v)];
      if (cycle.empty()) continue;
      Vertex start = cycle.begin()->first;
      Vertex cur = start;
      do {
        rot[static_cast<std::size_t>(v)].push_back(cur);
        cur = cycle.at(cur);
      } while (cur != start);
      if (rot[static_cast<std::size_t>(v)].size() != cycle.size())
        throw Error(Errc::internal, "triangulation builder: rotation is not a single cycle");
    }
    return rot;
  }

private:
  std::int64_t key(Vertex a, Vertex b) const { return static_cast<std::int64_t>(a) * n_ + b; }

  int face_of(Vertex a, Vertex b) const { return face_map_.at(key(a, b)); }

  Vertex third(int t, Vertex a, Vertex b) const {
    for (Vertex v : tris_[static_cast<std::size_t>(t)])
      if (v != a && v != b) return v;
    throw Error(Errc::internal, "triangulation builder: degenerate triangle");
  }

  void index_edges(int t) {
    auto [a, b, c] = tris_[static_cast<std::size_t>(t)];
    face_map_[key(a, b)] = t;
    face_map_[key(b, c)] = t;
    face_map_[key(c, a)] = t;
  }

  void remove_triangle(int t) {
    auto [a, b, c] = tris_[static_cast<std::size_t>(t)];
    face_map_.erase(key(a, b));
    face_map_.erase(key(b, c));
    face_map_.erase(key(c, a));
    int last = static_cast<int>(tris_.size()) - 1;
    if (t != last) {
      tris_[static_cast<std::size_t>(t)] = tris_[static_cast<std::size_t>(last)];
      index_edges(t);
    }
    tris_.pop_back();
  }

  int n_;
  std::vector<std::array<Vertex, 3>> tris_;
  std::unordered_map<std::int64_t, int> face_map_;
};

PlaneGraph make_plane_triangulation(int n, int flips, Rng& rng) {
  if (n < 3) throw Error(Errc::invalid_argument, "plane-triangulation: n must be at least 3");
  TriangleMesh mesh(n);
  mesh.add_triangle(0, 1, 2);
  mesh.add_triangle(0, 2, 1);
  for (Vertex v = 3; v < n; ++v) mesh.insert_vertex(rng.below_int(mesh.triangle_count()), v);
  if (n >= 4) {
    for (int attempt = 0; attempt < flips; ++attempt) {
      // draw a uniform directed edge; skip the outer-face marker (0,1)
      auto edges = mesh.directed_edges();
      std::sort(edges.begin(), edges.end());
      auto [a, b] = edges[rng.below(edges.size())];
      if ((a == 0 && b == 1) || (a == 1 && b == 0)) continue;
      mesh.flip(a, b);
    }
  }
  PlaneGraph pg;
  pg.graph = Graph(n);
  for (auto [a, b] : mesh.directed_edges())
    if (a < b) pg.graph.add_edge(a, b);
  pg.rotation = mesh.rotations(n);
  pg.outer = {0, 1};
  pg.validate();
  return pg;
}

}  // namespace

PlaneGraph subdivide(const PlaneGraph& pg, int s) {
  if (s < 0) throw Error(Errc::invalid_argument, "subdivide: s must be nonnegative");
  if (s == 0) return pg;
  const Graph& g = pg.graph;
  auto edges = g.edges();
  std::unordered_map<std::int64_t, int> first_of_edge;  // {u<v} -> first chain vertex (u side)
  auto key = [&](Vertex a, Vertex b) { return static_cast<std::int64_t>(std::min(a, b)) * g.n + std::max(a, b); };
  int total = g.n + static_cast<int>(edges.size()) * s;
  PlaneGraph out;
  out.graph = Graph(total);
  out.rotation.resize(static_cast<std::size_t>(total));
  int next_id = g.n;
  for (auto [u, v] : edges) {
    first_of_edge[key(u, v)] = next_id;
    Vertex prev = u;
    for (int i = 0; i < s; ++i) {
      Vertex mid = next_id++;
      out.graph.add_edge(prev, mid);
      out.rotation[static_cast<std::size_t>(mid)].push_back(prev);
      if (i > 0) out.rotation[static_cast<std::size_t>(prev)].push_back(mid);
      prev = mid;
    }
    out.graph.add_edge(prev, v);
    out.rotation[static_cast<std::size_t>(prev)].push_back(v);
  }
  auto chain_end = [&](Vertex from, Vertex to) {
    // first chain vertex when walking from `from` towards `to`
    int base = first_of_edge.at(key(from, to));
    return from < to ? base : base + s - 1;
  };
  for (Vertex v = 0; v < g.n; ++v)
    for (Vertex w : pg.rotation[static_cast<std::size_t>(v)])
      out.rotation[static_cast<std::size_t>(v)].push_back(chain_end(v, w));
  out.outer = {pg.outer.first, chain_end(pg.outer.first, pg.outer.second)};
  out.validate();
  return out;
}

GenerateResult generate(const GenerateParams& params, std::uint64_t seed) {
  Rng rng(seed);
  GenerateResult out;
  switch (params.family) {
    case Family::path:
      out.graph = make_path(params.n);
      break;
    case Family::cycle:
      out.graph = make_cycle(params.n);
      break;
    case Family::grid:
      out.graph = make_grid(params.rows, params.cols);
      break;
    case Family::random_ktree:
      out = make_ktree(params.n, params.k, rng);
      break;
    case Family::plane_triangulation: {
      PlaneGraph pg = make_plane_triangulation(params.n, params.flips, rng);
      out.graph = pg.graph;
      out.plane = std::move(pg);
      break;
    }
    case Family::subdivided_triangulation: {
      PlaneGraph pg = subdivide(make_plane_triangulation(params.n, params.flips, rng), params.s);
      out.graph = pg.graph;
      out.plane = std::move(pg);
      break;
    }
  }
  return out;
}

}  // namespace subcol
