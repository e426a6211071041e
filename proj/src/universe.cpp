#include "ornalat/universe.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "ornalat/error.hpp"

namespace ornalat {

namespace {

void check_size(int n) {
  if (n < 0 || n > kMaxGroundSize)
    throw PreconditionError("vertex count " + std::to_string(n) +
                            " outside [0, 64]");
}

void check_edge(int n, const Edge& e) {
  auto [u, v] = e;
  if (u < 0 || v < 0 || u >= n || v >= n)
    throw PreconditionError("edge (" + std::to_string(u) + ", " +
                            std::to_string(v) + ") out of range");
  if (u == v)
    throw PreconditionError("self-loop at vertex " + std::to_string(u));
}

}  // namespace

Digraph::Digraph(int n) {
  check_size(n);
  out_.assign(n, SubsetMask{});
}

Digraph::Digraph(int n, std::span<const Edge> edges) : Digraph(n) {
  for (const Edge& e : edges) {
    check_edge(n, e);
    out_[e.first] = out_[e.first].with(e.second);
  }
}

Digraph Digraph::from_adjacency(std::vector<SubsetMask> out) {
  int n = static_cast<int>(out.size());
  check_size(n);
  for (int v = 0; v < n; ++v) {
    if (!out[v].fits(n) || out[v].contains(v))
      throw PreconditionError("bad adjacency row for vertex " +
                              std::to_string(v));
  }
  Digraph d;
  d.out_ = std::move(out);
  return d;
}

SubsetMask Digraph::in(int v) const {
  SubsetMask result;
  for (int u = 0; u < size(); ++u)
    if (out_[u].contains(v)) result = result.with(u);
  return result;
}

std::size_t Digraph::edge_count() const {
  std::size_t total = 0;
  for (SubsetMask m : out_) total += m.count();
  return total;
}

std::vector<Edge> Digraph::edges() const {
  std::vector<Edge> result;
  for (int u = 0; u < size(); ++u)
    for (int v : out_[u]) result.emplace_back(u, v);
  return result;
}

Digraph Digraph::opposite() const {
  Digraph d(size());
  for (int u = 0; u < size(); ++u)
    for (int v : out_[u]) d.out_[v] = d.out_[v].with(u);
  return d;
}

Digraph Digraph::relabeled(std::span<const int> perm) const {
  Digraph d(size());
  for (int u = 0; u < size(); ++u)
    for (int v : out_[u]) d.out_[perm[u]] = d.out_[perm[u]].with(perm[v]);
  return d;
}

Digraph Digraph::path(int n) {
  Digraph d(n);
  for (int i = 0; i + 1 < n; ++i) d.out_[i] = SubsetMask::singleton(i + 1);
  return d;
}

Digraph Digraph::cycle(int n) {
  if (n < 2) throw PreconditionError("cycle needs at least 2 vertices");
  Digraph d(n);
  for (int i = 0; i < n; ++i)
    d.out_[i] = SubsetMask::singleton((i + 1) % n);
  return d;
}

Digraph Digraph::complete_dag(int n) {
  Digraph d(n);
  for (int i = 0; i < n; ++i)
    d.out_[i] = SubsetMask::full(n) - SubsetMask::full(i + 1);
  return d;
}

Graph::Graph(int n) {
  check_size(n);
  adj_.assign(n, SubsetMask{});
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (const Edge& e : edges) {
    check_edge(n, e);
    adj_[e.first] = adj_[e.first].with(e.second);
    adj_[e.second] = adj_[e.second].with(e.first);
  }
}

std::size_t Graph::edge_count() const {
  std::size_t total = 0;
  for (SubsetMask m : adj_) total += m.count();
  return total / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> result;
  for (int u = 0; u < size(); ++u)
    for (int v : adj_[u])
      if (u < v) result.emplace_back(u, v);
  return result;
}

Graph Graph::path(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

Graph Graph::cycle(int n) {
  if (n < 3) throw PreconditionError("undirected cycle needs 3 vertices");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e);
}

Graph Graph::complete(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.adj_[i] = SubsetMask::full(n).without(i);
  return g;
}

Graph Graph::underlying(const Digraph& d) {
  auto e = d.edges();
  return Graph(d.size(), e);
}

SubsetMask reachable_from(const Digraph& d, int source, SubsetMask within) {
  if (source < 0 || source >= d.size() || !within.contains(source))
    throw PreconditionError("source " + std::to_string(source) +
                            " not in the allowed vertex set");
  SubsetMask seen = SubsetMask::singleton(source);
  SubsetMask frontier = seen;
  while (!frontier.empty()) {
    SubsetMask next;
    for (int v : frontier) next |= d.out(v);
    frontier = (next & within) - seen;
    seen |= frontier;
  }
  return seen;
}

SubsetMask component_of(const Graph& g, int source, SubsetMask within) {
  if (source < 0 || source >= g.size() || !within.contains(source))
    throw PreconditionError("source " + std::to_string(source) +
                            " not in the allowed vertex set");
  SubsetMask seen = SubsetMask::singleton(source);
  SubsetMask frontier = seen;
  while (!frontier.empty()) {
    SubsetMask next;
    for (int v : frontier) next |= g.neighbors(v);
    frontier = (next & within) - seen;
    seen |= frontier;
  }
  return seen;
}

Digraph transitive_closure(const Digraph& d) {
  const int n = d.size();
  const SubsetMask all = SubsetMask::full(n);
  std::vector<SubsetMask> out(n);
  for (int v = 0; v < n; ++v) {
    // Vertices at the end of a nonempty path: successors' reach.
    SubsetMask reach;
    for (int w : d.out(v)) reach |= reachable_from(d, w, all);
    out[v] = reach.without(v);
  }
  return Digraph::from_adjacency(std::move(out));
}

bool is_acyclic(const Digraph& d) {
  const SubsetMask all = SubsetMask::full(d.size());
  for (int v = 0; v < d.size(); ++v)
    for (int w : d.out(v))
      if (reachable_from(d, w, all).contains(v)) return false;
  return true;
}

bool is_directed_tree(const Digraph& d) {
  const int n = d.size();
  if (n == 0) return false;
  for (int u = 0; u < n; ++u)
    for (int v : d.out(u))
      if (d.has_edge(v, u)) return false;
  if (d.edge_count() != static_cast<std::size_t>(n - 1)) return false;
  Graph g = Graph::underlying(d);
  return component_of(g, 0, SubsetMask::full(n)) == SubsetMask::full(n);
}

std::uint64_t canonical_code(const Digraph& d) {
  const int n = d.size();
  if (n > 8) throw PreconditionError("canonical_code supports n <= 8");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  const auto edges = d.edges();
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t code = 0;
    for (auto [u, v] : edges) code |= std::uint64_t{1} << (perm[u] * n + perm[v]);
    best = std::min(best, code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace ornalat
