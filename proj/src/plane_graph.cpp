#include "subcol/plane_graph.hpp"

#include <algorithm>
#include <deque>

namespace subcol {

void PlaneGraph::validate() const {
  graph.validate();
  if (static_cast<int>(rotation.size()) != graph.n)
    throw Error(Errc::invalid_argument, "plane graph: rotation size mismatch");
  for (Vertex v = 0; v < graph.n; ++v) {
    std::vector<Vertex> sorted = rotation[static_cast<std::size_t>(v)];
    std::sort(sorted.begin(), sorted.end());
    if (sorted != graph.neighbours(v))
      throw Error(Errc::invalid_argument, "plane graph: rotation is not a permutation of the neighbourhood");
  }
  if (graph.edge_count() > 0) {
    auto [u, v] = outer;
    if (u < 0 || u >= graph.n || !graph.has_edge(u, v))
      throw Error(Errc::invalid_argument, "plane graph: outer-face edge missing");
  }
}

FaceSet::FaceSet(const PlaneGraph& pg) : pg_(&pg) {
  int n = pg.graph.n;
  rot_pos_.resize(static_cast<std::size_t>(n));
  face_of_dir_.resize(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    const auto& rot = pg.rotation[static_cast<std::size_t>(v)];
    auto& pos = rot_pos_[static_cast<std::size_t>(v)];
    pos.reserve(rot.size());
    for (int i = 0; i < static_cast<int>(rot.size()); ++i) pos.emplace_back(rot[static_cast<std::size_t>(i)], i);
    std::sort(pos.begin(), pos.end());
    face_of_dir_[static_cast<std::size_t>(v)].assign(rot.size(), -1);
  }
  for (Vertex u = 0; u < n; ++u) {
    const auto& rot = pg.rotation[static_cast<std::size_t>(u)];
    for (int i = 0; i < static_cast<int>(rot.size()); ++i) {
      if (face_of_dir_[static_cast<std::size_t>(u)][static_cast<std::size_t>(i)] != -1) continue;
      int id = static_cast<int>(faces_.size());
      faces_.emplace_back();
      Vertex a = u;
      int ai = i;
      do {
        face_of_dir_[static_cast<std::size_t>(a)][static_cast<std::size_t>(ai)] = id;
        Vertex b = pg.rotation[static_cast<std::size_t>(a)][static_cast<std::size_t>(ai)];
        faces_.back().emplace_back(a, b);
        int j = rotation_position(b, a);
        int deg = static_cast<int>(pg.rotation[static_cast<std::size_t>(b)].size());
        ai = (j + 1) % deg;
        a = b;
      } while (!(a == u && ai == i));
    }
  }
  if (pg.graph.edge_count() > 0) outer_face_ = face_left_of(pg.outer.first, pg.outer.second);
}

int FaceSet::rotation_position(Vertex v, Vertex u) const {
  const auto& pos = rot_pos_[static_cast<std::size_t>(v)];
  auto it = std::lower_bound(pos.begin(), pos.end(), std::make_pair(u, -1));
  if (it == pos.end() || it->first != u)
    throw Error(Errc::invalid_argument, "face set: directed edge not in embedding");
  return it->second;
}

int FaceSet::face_left_of(Vertex u, Vertex v) const {
  return face_of_dir_[static_cast<std::size_t>(u)][static_cast<std::size_t>(rotation_position(u, v))];
}

std::vector<Vertex> FaceSet::face_vertices(int f) const {
  std::vector<Vertex> out;
  out.reserve(faces_[static_cast<std::size_t>(f)].size());
  for (auto [a, b] : faces_[static_cast<std::size_t>(f)]) out.push_back(a);
  return out;
}

int FaceSet::face_at(Vertex v) const {
  if (pg_->graph.degree(v) == 0)
    throw Error(Errc::invalid_argument, "face set: isolated vertex has no incident face");
  return face_of_dir_[static_cast<std::size_t>(v)][0];
}

bool euler_ok(const PlaneGraph& pg) { return euler_ok(pg, FaceSet(pg)); }

bool euler_ok(const PlaneGraph& pg, const FaceSet& fs) {
  int n = pg.graph.n;
  int m = pg.graph.edge_count();
  int c = static_cast<int>(components(pg.graph).size());
  return n - m + fs.face_count() == 1 + c;
}

bool is_triangulation(const PlaneGraph& pg, const FaceSet& fs) {
  if (pg.graph.n < 3) return false;
  if (static_cast<int>(components(pg.graph).size()) != 1) return false;
  if (!euler_ok(pg, fs)) return false;
  for (int f = 0; f < fs.face_count(); ++f) {
    const auto& edges = fs.face_edges(f);
    if (edges.size() != 3) return false;
    if (edges[0].first == edges[1].first || edges[0].first == edges[2].first ||
        edges[1].first == edges[2].first)
      return false;
  }
  return true;
}

std::vector<Vertex> enclosed_vertices(const PlaneGraph& pg, const FaceSet& fs, std::span<const Vertex> cycle) {
  const Graph& g = pg.graph;
  if (cycle.size() < 3) throw Error(Errc::invalid_argument, "enclosed_vertices: cycle too short");
  std::vector<char> on_cycle(static_cast<std::size_t>(g.n), 0);
  for (Vertex v : cycle) {
    if (v < 0 || v >= g.n || on_cycle[static_cast<std::size_t>(v)])
      throw Error(Errc::invalid_argument, "enclosed_vertices: not a simple cycle");
    on_cycle[static_cast<std::size_t>(v)] = 1;
  }
  auto encode = [&](Vertex a, Vertex b) {
    return static_cast<std::int64_t>(std::min(a, b)) * g.n + std::max(a, b);
  };
  std::vector<std::int64_t> cycle_edges;
  cycle_edges.reserve(cycle.size());
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    Vertex x = cycle[i];
    Vertex y = cycle[(i + 1) % cycle.size()];
    if (!g.has_edge(x, y)) throw Error(Errc::invalid_argument, "enclosed_vertices: cycle edge missing");
    cycle_edges.push_back(encode(x, y));
  }
  std::sort(cycle_edges.begin(), cycle_edges.end());
  auto edge_on_cycle = [&](Vertex a, Vertex b) {
    return std::binary_search(cycle_edges.begin(), cycle_edges.end(), encode(a, b));
  };

  // Flood the dual without crossing cycle edges; the region holding the
  // outer face is the exterior.
  std::vector<char> exterior(static_cast<std::size_t>(fs.face_count()), 0);
  std::deque<int> queue{fs.outer_face()};
  exterior[static_cast<std::size_t>(fs.outer_face())] = 1;
  while (!queue.empty()) {
    int f = queue.front();
    queue.pop_front();
    for (auto [a, b] : fs.face_edges(f)) {
      if (edge_on_cycle(a, b)) continue;
      int other = fs.face_left_of(b, a);
      if (!exterior[static_cast<std::size_t>(other)]) {
        exterior[static_cast<std::size_t>(other)] = 1;
        queue.push_back(other);
      }
    }
  }
  std::vector<Vertex> inside;
  for (Vertex v = 0; v < g.n; ++v) {
    if (on_cycle[static_cast<std::size_t>(v)] || g.degree(v) == 0) continue;
    if (!exterior[static_cast<std::size_t>(fs.face_at(v))]) inside.push_back(v);
  }
  return inside;
}

InducedRegions::InducedRegions(const PlaneGraph& pg, const FaceSet& fs, const std::vector<char>& used)
    : pg_(&pg), fs_(&fs), used_(&used) {
  int f = fs.face_count();
  std::vector<int> parent(static_cast<std::size_t>(f));
  for (int i = 0; i < f; ++i) parent[static_cast<std::size_t>(i)] = i;
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (int i = 0; i < f; ++i)
    for (auto [a, b] : fs.face_edges(i)) {
      if (used[static_cast<std::size_t>(a)] && used[static_cast<std::size_t>(b)]) continue;
      int ra = find(i);
      int rb = find(fs.face_left_of(b, a));
      if (ra != rb) parent[static_cast<std::size_t>(ra)] = rb;
    }
  region_.assign(static_cast<std::size_t>(f), -1);
  int next = 0;
  std::vector<int> label(static_cast<std::size_t>(f), -1);
  for (int i = 0; i < f; ++i) {
    int r = find(i);
    if (label[static_cast<std::size_t>(r)] == -1) label[static_cast<std::size_t>(r)] = next++;
    region_[static_cast<std::size_t>(i)] = label[static_cast<std::size_t>(r)];
  }
  seed_.assign(static_cast<std::size_t>(next), {-1, -1});
  for (Vertex a = 0; a < pg.graph.n; ++a) {
    if (!used[static_cast<std::size_t>(a)]) continue;
    for (Vertex b : pg.graph.neighbours(a)) {
      if (!used[static_cast<std::size_t>(b)]) continue;
      int r = region_[static_cast<std::size_t>(fs.face_left_of(a, b))];
      if (seed_[static_cast<std::size_t>(r)].first == -1) seed_[static_cast<std::size_t>(r)] = {a, b};
    }
  }
}

int InducedRegions::region_at(Vertex v) const {
  return region_[static_cast<std::size_t>(fs_->face_at(v))];
}

std::vector<std::pair<Vertex, Vertex>> InducedRegions::boundary(int region) const {
  auto [sa, sb] = seed_[static_cast<std::size_t>(region)];
  if (sa == -1) throw Error(Errc::internal, "regions: region has no induced boundary edge");
  const auto& rotation = pg_->rotation;
  const std::vector<char>& used = *used_;
  std::vector<std::pair<Vertex, Vertex>> cycle;
  Vertex a = sa, b = sb;
  std::size_t limit = 4 * static_cast<std::size_t>(pg_->graph.edge_count()) + 4;
  do {
    cycle.emplace_back(a, b);
    if (cycle.size() > limit) throw Error(Errc::internal, "regions: boundary walk did not close");
    // next induced edge: first used neighbour after a in rotation(b)
    const auto& rot = rotation[static_cast<std::size_t>(b)];
    int deg = static_cast<int>(rot.size());
    int i = fs_->rotation_position(b, a);
    Vertex c = -1;
    for (int step = 1; step <= deg; ++step) {
      Vertex cand = rot[static_cast<std::size_t>((i + step) % deg)];
      if (used[static_cast<std::size_t>(cand)]) {
        c = cand;
        break;
      }
    }
    if (c == -1) throw Error(Errc::internal, "regions: boundary walk stuck");
    a = b;
    b = c;
  } while (!(a == sa && b == sb));
  return cycle;
}

}  // namespace subcol
