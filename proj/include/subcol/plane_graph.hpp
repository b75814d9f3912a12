#pragma once

#include <span>
#include <utility>
#include <vector>

#include "subcol/graph.hpp"

namespace subcol {

// Combinatorial embedding: a graph, a cyclic neighbour order per vertex, and
// a directed edge identifying the unbounded face. Embeddings are inputs;
// nothing here tests planarity of an arbitrary graph.
struct PlaneGraph {
  Graph graph;
  std::vector<std::vector<Vertex>> rotation;
  std::pair<Vertex, Vertex> outer{-1, -1};

  // Throws unless rotation(v) is a permutation of adj(v) and the outer edge
  // exists.
  void validate() const;
};

// Faces as orbits of (u,v) -> (v, successor of u in rotation(v)).
class FaceSet {
public:
  explicit FaceSet(const PlaneGraph& pg);

  int face_count() const { return static_cast<int>(faces_.size()); }
  int outer_face() const { return outer_face_; }

  // Face to the left of the directed edge (u,v).
  int face_left_of(Vertex u, Vertex v) const;

  // Directed edges of face f in traversal order.
  const std::vector<std::pair<Vertex, Vertex>>& face_edges(int f) const {
    return faces_[static_cast<std::size_t>(f)];
  }

  // First vertices of the face's directed edges; repeats possible when the
  // boundary walk pinches at a cut vertex.
  std::vector<Vertex> face_vertices(int f) const;

  // Any face incident to v (v must have positive degree).
  int face_at(Vertex v) const;

  // Index of u within rotation(v).
  int rotation_position(Vertex v, Vertex u) const;

private:
  const PlaneGraph* pg_;
  std::vector<std::vector<std::pair<Vertex, Vertex>>> faces_;
  // per vertex: (neighbour, rotation index) sorted by neighbour, and the face
  // left of each outgoing directed edge, indexed like rotation
  std::vector<std::vector<std::pair<Vertex, int>>> rot_pos_;
  std::vector<std::vector<int>> face_of_dir_;
  int outer_face_ = -1;
};

// Euler check per connected component: n - m + f == 1 + c.
bool euler_ok(const PlaneGraph& pg);
bool euler_ok(const PlaneGraph& pg, const FaceSet& fs);

// Every face a triangle with three distinct vertices, connected, n >= 3.
bool is_triangulation(const PlaneGraph& pg, const FaceSet& fs);

// Vertices strictly enclosed by the given simple cycle (the side away from
// the outer face). Throws Errc::invalid_argument if `cycle` is not a simple
// cycle of the graph.
std::vector<Vertex> enclosed_vertices(const PlaneGraph& pg, const FaceSet& fs, std::span<const Vertex> cycle);

// Face structure of the subgraph induced by `used`, expressed through the
// ambient faces: faces merge across every edge with an endpoint outside
// `used`. Regions are the merged classes.
class InducedRegions {
public:
  InducedRegions(const PlaneGraph& pg, const FaceSet& fs, const std::vector<char>& used);

  int region_of_face(int f) const { return region_[static_cast<std::size_t>(f)]; }
  int region_at(Vertex v) const;

  // Directed boundary cycle of the region, region on the left; the walk is
  // the face traversal of the induced subgraph.
  std::vector<std::pair<Vertex, Vertex>> boundary(int region) const;

private:
  const PlaneGraph* pg_;
  const FaceSet* fs_;
  const std::vector<char>* used_;
  std::vector<int> region_;
  std::vector<std::pair<Vertex, Vertex>> seed_;  // one boundary edge per region, or {-1,-1}
};

}  // namespace subcol
