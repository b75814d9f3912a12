#include "subcol/ordering.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>

#include "subcol/parallel.hpp"

namespace subcol {

VertexOrdering VertexOrdering::identity(int n) {
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  return from_order(std::move(order));
}

VertexOrdering VertexOrdering::from_order(std::vector<Vertex> order) {
  VertexOrdering out;
  out.order = std::move(order);
  out.position.assign(out.order.size(), -1);
  for (std::size_t r = 0; r < out.order.size(); ++r) {
    Vertex v = out.order[r];
    if (v < 0 || static_cast<std::size_t>(v) >= out.order.size())
      throw Error(Errc::invalid_argument, "ordering: vertex out of range");
    if (out.position[static_cast<std::size_t>(v)] != -1)
      throw Error(Errc::invalid_argument, "ordering: repeated vertex");
    out.position[static_cast<std::size_t>(v)] = static_cast<int>(r);
  }
  return out;
}

void VertexOrdering::validate() const {
  if (position.size() != order.size()) throw Error(Errc::invalid_argument, "ordering: size mismatch");
  for (std::size_t r = 0; r < order.size(); ++r) {
    Vertex v = order[r];
    if (v < 0 || static_cast<std::size_t>(v) >= order.size() ||
        position[static_cast<std::size_t>(v)] != static_cast<int>(r))
      throw Error(Errc::invalid_argument, "ordering: position/order not inverse");
  }
}

namespace {

void spend(std::uint64_t* budget) {
  if (budget == nullptr) return;
  if (*budget == 0) throw Error(Errc::budget_exceeded, "reach enumeration budget exceeded");
  --*budget;
}

struct GreachWalk {
  const Graph& g;
  const VertexOrdering& sigma;
  int hop_cap;   // k
  int step_cap;  // l
  std::uint64_t* budget;
  std::vector<char> on_path;
  std::vector<char> in_set;

  GreachWalk(const Graph& g_, const VertexOrdering& sigma_, int k, int l, std::uint64_t* budget_)
      : g(g_), sigma(sigma_), hop_cap(k), step_cap(l), budget(budget_),
        on_path(static_cast<std::size_t>(g_.n), 0), in_set(static_cast<std::size_t>(g_.n), 0) {}

  // min_pos: sigma-rank of the smallest path vertex so far; hops: number of
  // prefix-minimum positions so far. Both are monotone along extensions, so
  // the hop cap prunes exactly.
  void walk(Vertex cur, int steps, int min_pos, int hops) {
    spend(budget);
    if (steps == step_cap) return;
    for (Vertex w : g.neighbours(cur)) {
      if (on_path[static_cast<std::size_t>(w)]) continue;
      int wpos = sigma.position[static_cast<std::size_t>(w)];
      bool new_min = wpos < min_pos;
      int nhops = hops + (new_min ? 1 : 0);
      if (nhops > hop_cap) continue;
      if (new_min) in_set[static_cast<std::size_t>(w)] = 1;
      on_path[static_cast<std::size_t>(w)] = 1;
      walk(w, steps + 1, new_min ? wpos : min_pos, nhops);
      on_path[static_cast<std::size_t>(w)] = 0;
    }
  }
};

}  // namespace

std::vector<Vertex> greach(const Graph& g, const VertexOrdering& sigma, Vertex v, int k, int l,
                           std::uint64_t* budget) {
  if (v < 0 || v >= g.n) throw Error(Errc::invalid_argument, "greach: vertex out of range");
  if (k < 1 || l < 1) throw Error(Errc::invalid_argument, "greach: k and l must be positive");
  int step_cap = (l == kInfinity || l > g.n - 1) ? std::max(g.n - 1, 0) : l;
  int hop_cap = (k == kInfinity || k > step_cap) ? step_cap : k;
  GreachWalk walk(g, sigma, hop_cap, step_cap, budget);
  walk.in_set[static_cast<std::size_t>(v)] = 1;
  walk.on_path[static_cast<std::size_t>(v)] = 1;
  walk.walk(v, 0, sigma.position[static_cast<std::size_t>(v)], 0);
  std::vector<Vertex> out;
  for (Vertex u = 0; u < g.n; ++u)
    if (walk.in_set[static_cast<std::size_t>(u)]) out.push_back(u);
  return out;
}

namespace {

struct SubreachWalk {
  const Graph& g;
  const VertexOrdering& sigma;
  int k;
  int ceil_half;  // ceil(k/2)
  int y_pos;
  std::uint64_t* budget;
  std::vector<char> on_path;
  std::vector<char> in_set;

  SubreachWalk(const Graph& g_, const VertexOrdering& sigma_, int k_, int y_pos_, std::uint64_t* budget_)
      : g(g_), sigma(sigma_), k(k_), ceil_half((k_ + 1) / 2), y_pos(y_pos_), budget(budget_),
        on_path(static_cast<std::size_t>(g_.n), 0), in_set(static_cast<std::size_t>(g_.n), 0) {}

  // Walks backwards from y: w_0 = y, w_t the current endpoint. In the
  // definition's indexing z_i = w_{s-i}, the constraint "z_i >= y for
  // ceil(k/2) <= i <= s" caps the final length at j_bad + ceil(k/2) - 1,
  // where j_bad is the first position (from y) holding a vertex below y.
  void walk(Vertex cur, int t, int min_pos, int j_bad) {
    spend(budget);
    int cap = (j_bad == kInfinity) ? k : std::min(k, j_bad + ceil_half - 1);
    if (t >= cap) return;
    for (Vertex w : g.neighbours(cur)) {
      if (on_path[static_cast<std::size_t>(w)]) continue;
      int wpos = sigma.position[static_cast<std::size_t>(w)];
      int nj_bad = j_bad;
      if (wpos < y_pos && nj_bad == kInfinity) nj_bad = t + 1;
      int ncap = (nj_bad == kInfinity) ? k : std::min(k, nj_bad + ceil_half - 1);
      if (t + 1 > ncap) continue;
      if (wpos < min_pos) in_set[static_cast<std::size_t>(w)] = 1;
      on_path[static_cast<std::size_t>(w)] = 1;
      walk(w, t + 1, std::min(min_pos, wpos), nj_bad);
      on_path[static_cast<std::size_t>(w)] = 0;
    }
  }
};

}  // namespace

std::vector<Vertex> subreach(const Graph& g, const VertexOrdering& sigma, Vertex y, int k,
                             std::uint64_t* budget) {
  if (y < 0 || y >= g.n) throw Error(Errc::invalid_argument, "subreach: vertex out of range");
  if (k < 1) throw Error(Errc::invalid_argument, "subreach: k must be positive");
  SubreachWalk walk(g, sigma, k, sigma.position[static_cast<std::size_t>(y)], budget);
  walk.in_set[static_cast<std::size_t>(y)] = 1;
  walk.on_path[static_cast<std::size_t>(y)] = 1;
  walk.walk(y, 0, sigma.position[static_cast<std::size_t>(y)], kInfinity);
  std::vector<Vertex> out;
  for (Vertex u = 0; u < g.n; ++u)
    if (walk.in_set[static_cast<std::size_t>(u)]) out.push_back(u);
  return out;
}

int gcol_of_ordering(const Graph& g, const VertexOrdering& sigma, int k, int l, int threads) {
  std::vector<int> sizes(static_cast<std::size_t>(g.n), 0);
  parallel_for(g.n, threads, [&](int v) {
    sizes[static_cast<std::size_t>(v)] = static_cast<int>(greach(g, sigma, v, k, l).size());
  });
  int best = 0;
  for (int s : sizes) best = std::max(best, s);
  return best;
}

int semiweak_of_ordering(const Graph& g, const VertexOrdering& sigma, int k, int threads) {
  std::vector<int> sizes(static_cast<std::size_t>(g.n), 0);
  parallel_for(g.n, threads, [&](int y) {
    sizes[static_cast<std::size_t>(y)] = static_cast<int>(subreach(g, sigma, y, k).size());
  });
  int best = 0;
  for (int s : sizes) best = std::max(best, s);
  return best;
}

ExactGcol exact_gcol(const Graph& g, int k, int l, int max_n) {
  if (g.n > max_n) throw Error(Errc::budget_exceeded, "exact_gcol: graph too large");
  std::vector<Vertex> perm(static_cast<std::size_t>(g.n));
  std::iota(perm.begin(), perm.end(), 0);
  ExactGcol best;
  best.value = kInfinity;
  do {
    VertexOrdering sigma = VertexOrdering::from_order(perm);
    int value = gcol_of_ordering(g, sigma, k, l);
    if (value < best.value) {
      best.value = value;
      best.witness = std::move(sigma);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (g.n == 0) {
    best.value = 0;
    best.witness = VertexOrdering::identity(0);
  }
  return best;
}

Graph KTreeConstruction::replay() const {
  int k_val = k();
  if (k_val < 0) throw Error(Errc::invalid_argument, "k-tree: empty base clique");
  int n = vertex_count();
  std::vector<char> present(static_cast<std::size_t>(n), 0);
  Graph g(n);
  for (Vertex v : base_clique) {
    if (v < 0 || v >= n) throw Error(Errc::invalid_argument, "k-tree: vertex out of range");
    if (present[static_cast<std::size_t>(v)]) throw Error(Errc::invalid_argument, "k-tree: repeated base vertex");
    present[static_cast<std::size_t>(v)] = 1;
  }
  for (std::size_t i = 0; i < base_clique.size(); ++i)
    for (std::size_t j = i + 1; j < base_clique.size(); ++j) g.add_edge(base_clique[i], base_clique[j]);
  for (const auto& add : additions) {
    if (static_cast<int>(add.clique.size()) != k_val)
      throw Error(Errc::invalid_argument, "k-tree: attachment clique has wrong size");
    if (add.v < 0 || add.v >= n || present[static_cast<std::size_t>(add.v)])
      throw Error(Errc::invalid_argument, "k-tree: bad new vertex");
    for (std::size_t i = 0; i < add.clique.size(); ++i) {
      if (!present[static_cast<std::size_t>(add.clique[i])])
        throw Error(Errc::invalid_argument, "k-tree: attachment vertex not yet added");
      for (std::size_t j = i + 1; j < add.clique.size(); ++j)
        if (!g.has_edge(add.clique[i], add.clique[j]))
          throw Error(Errc::invalid_argument, "k-tree: attachment set is not a clique");
    }
    present[static_cast<std::size_t>(add.v)] = 1;
    for (Vertex u : add.clique) g.add_edge(add.v, u);
  }
  for (char p : present)
    if (!p) throw Error(Errc::invalid_argument, "k-tree: vertex identifiers not dense");
  return g;
}

VertexOrdering simplicial_ordering(const KTreeConstruction& c) {
  c.replay();  // validates
  std::vector<Vertex> order(c.base_clique.begin(), c.base_clique.end());
  std::sort(order.begin(), order.end());
  for (const auto& add : c.additions) order.push_back(add.v);
  return VertexOrdering::from_order(std::move(order));
}

namespace {

void bisect(int lo, int hi, std::vector<Vertex>& out) {
  if (lo > hi) return;
  int mid = lo + (hi - lo) / 2;
  out.push_back(mid);
  bisect(lo, mid - 1, out);
  bisect(mid + 1, hi, out);
}

}  // namespace

std::vector<Vertex> bisection_order(int m) {
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(std::max(m, 0)));
  bisect(0, m - 1, out);
  return out;
}

VertexOrdering path_ordering(int n, int k) {
  if (n < 1 || k < 1) throw Error(Errc::invalid_argument, "path_ordering: n and k must be positive");
  if (k == 1) return VertexOrdering::identity(n);
  std::vector<Vertex> order;
  order.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; i += k) order.push_back(i);
  for (int run_start = 0; run_start < n;) {
    if (run_start % k == 0) {
      ++run_start;
      continue;
    }
    int run_end = run_start;
    while (run_end + 1 < n && (run_end + 1) % k != 0) ++run_end;
    for (Vertex v : bisection_order(run_end - run_start + 1)) order.push_back(run_start + v);
    run_start = run_end + 1;
  }
  return VertexOrdering::from_order(std::move(order));
}

VertexOrdering degeneracy_ordering(const Graph& g) {
  return VertexOrdering::from_order(degeneracy_sequence(g));
}

}  // namespace subcol
