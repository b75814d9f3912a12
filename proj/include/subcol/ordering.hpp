#pragma once

#include <cstdint>
#include <vector>

#include "subcol/graph.hpp"
#include "subcol/ktree.hpp"

namespace subcol {

// Linear ordering of 0..n-1. position and order are mutually inverse.
struct VertexOrdering {
  std::vector<int> position;   // vertex -> rank, 0 = smallest
  std::vector<Vertex> order;   // rank -> vertex

  static VertexOrdering identity(int n);
  static VertexOrdering from_order(std::vector<Vertex> order);

  int n() const { return static_cast<int>(order.size()); }
  bool less(Vertex u, Vertex v) const {
    return position[static_cast<std::size_t>(u)] < position[static_cast<std::size_t>(v)];
  }

  void validate() const;  // throws unless a bijection pair
};

// Reach-set enumeration walks simple paths depth-first; budget, when given,
// is decremented per visited path prefix and Errc::budget_exceeded is thrown
// at zero.

// GReach_{k,l}[g,sigma,v]: vertices u reachable by a simple path of at most l
// edges whose endpoint u lies strictly below every other path vertex, with at
// most k prefix-minimum positions along the path. k or l may be kInfinity.
// Sorted; always contains v.
std::vector<Vertex> greach(const Graph& g, const VertexOrdering& sigma, Vertex v, int k, int l,
                           std::uint64_t* budget = nullptr);

// SubReach_k(g,sigma,y): vertices x joined to y by a path z_0..z_s (z_0 = x,
// z_s = y, s <= k) with x the strict sigma-minimum and z_i >= y for every
// ceil(k/2) <= i <= s. Sorted; always contains y.
std::vector<Vertex> subreach(const Graph& g, const VertexOrdering& sigma, Vertex y, int k,
                             std::uint64_t* budget = nullptr);

int gcol_of_ordering(const Graph& g, const VertexOrdering& sigma, int k, int l, int threads = 1);
int semiweak_of_ordering(const Graph& g, const VertexOrdering& sigma, int k, int threads = 1);

struct ExactGcol {
  int value = 0;
  VertexOrdering witness;
};

// Minimum of gcol over all n! orderings. Throws Errc::budget_exceeded when
// g.n > max_n.
ExactGcol exact_gcol(const Graph& g, int k, int l, int max_n = 8);

// Base clique in ascending identifier order, then vertices in addition order.
VertexOrdering simplicial_ordering(const KTreeConstruction& c);

// Ordering of an m-vertex path (vertices 0..m-1 in path order) attaining
// wcol_inf = ceil(log2(m+1)): middle vertex first, halves recursively after.
std::vector<Vertex> bisection_order(int m);

// Ordering of P_n behind the path bound: for k = 1 the natural order; for
// k >= 2 every k-th vertex (including index 0) first in index order, then
// each remaining run in bisection order.
VertexOrdering path_ordering(int n, int k);

// Reverse smallest-last ordering; greedy colouring along it uses at most
// degeneracy(g)+1 colours.
VertexOrdering degeneracy_ordering(const Graph& g);

}  // namespace subcol
