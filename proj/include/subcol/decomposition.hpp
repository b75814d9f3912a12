#pragma once

#include <optional>
#include <string>
#include <vector>

#include "subcol/graph.hpp"
#include "subcol/ordering.hpp"
#include "subcol/plane_graph.hpp"

namespace subcol {

// Ordered vertex-disjoint induced subgraphs covering V(G). P_i denotes the
// graph with all earlier parts removed; each part must be connected in its
// P_i, and path parts are stored in path order.
struct Decomposition {
  struct PartMeta {
    Vertex endpoint_a = -1;  // w^0 of a path part
    Vertex endpoint_b = -1;  // w^n
    std::optional<int> boss_h;
    std::optional<int> boss_j;
    Vertex root = -1;        // defaults to endpoint_b for path parts
    int path_bundle = 1;     // part is a union of at most this many isometric paths
  };

  std::vector<std::vector<Vertex>> parts;
  std::vector<PartMeta> meta;  // parallel to parts

  int part_count() const { return static_cast<int>(parts.size()); }
};

struct DecompositionReport {
  bool is_valid = false;                 // disjoint cover, parts connected in P_i
  bool is_isometric_path_decomp = false;
  bool is_neat = false;                  // every part i >= 1 touches 1..2 earlier parts
  std::optional<bool> is_reduction;      // only evaluated when an embedding is supplied
  int width = -1;
  std::vector<std::vector<int>> bosses;  // earlier parts adjacent to each part
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

// Candidate cap for re-checking the interior-minimisation rule; parts whose
// corner pair admits more shortest paths than this are skipped by that check
// (noted in the report).
inline constexpr std::uint64_t kReductionCandidateCap = 4096;

DecompositionReport verify_decomposition(const Graph& g, const Decomposition& h,
                                         const PlaneGraph* pg = nullptr);

// Quotient on parts; parts adjacent iff a cross edge exists. Requires a
// decomposition passing the is_valid checks.
Graph contract(const Graph& g, const Decomposition& h);

// Parts in order; within a path part, path-index order from endpoint_a.
VertexOrdering reduction_ordering(const Decomposition& h);

// Parts in order; within part i, strictly decreasing distance (in the part's
// induced subgraph) from its root, ties by identifier.
VertexOrdering decomposition_ordering(const Graph& g, const Decomposition& h);

}  // namespace subcol
