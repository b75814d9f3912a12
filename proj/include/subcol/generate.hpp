#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "subcol/graph.hpp"
#include "subcol/ktree.hpp"
#include "subcol/plane_graph.hpp"

namespace subcol {

enum class Family {
  path,
  cycle,
  grid,
  random_ktree,
  plane_triangulation,
  subdivided_triangulation,
};

Family family_from_string(const std::string& name);
std::string family_to_string(Family f);

struct GenerateParams {
  Family family = Family::path;
  int n = 0;      // vertex count (base vertex count for subdivided)
  int k = 0;      // k-tree parameter
  int rows = 0;   // grid
  int cols = 0;   // grid
  int s = 0;      // subdivisions per edge
  int flips = 0;  // diagonal flip attempts after insertion
};

struct GenerateResult {
  Graph graph;
  std::optional<PlaneGraph> plane;
  std::optional<KTreeConstruction> construction;
};

// Deterministic under (params, seed). Throws Errc::invalid_argument on bad
// parameters.
GenerateResult generate(const GenerateParams& params, std::uint64_t seed);

// Every edge replaced by a path with s internal vertices; the embedding and
// the outer-face marker carry over. Multiplies girth by s+1.
PlaneGraph subdivide(const PlaneGraph& pg, int s);

}  // namespace subcol
