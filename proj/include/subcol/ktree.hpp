#pragma once

#include <vector>

#include "subcol/graph.hpp"

namespace subcol {

// Build recipe of a k-tree: a (k+1)-clique followed by vertices attached to
// existing k-cliques, in order.
struct KTreeConstruction {
  struct Addition {
    Vertex v;
    std::vector<Vertex> clique;  // size k, pairwise adjacent at addition time
  };

  std::vector<Vertex> base_clique;  // size k+1
  std::vector<Addition> additions;

  int k() const { return static_cast<int>(base_clique.size()) - 1; }
  int vertex_count() const { return static_cast<int>(base_clique.size() + additions.size()); }

  // Rebuilds the k-tree, checking every attachment clique as it goes.
  // Throws Errc::invalid_argument on any violation.
  Graph replay() const;
};

}  // namespace subcol
