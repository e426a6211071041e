#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <utility>
#include <vector>

namespace ornalat {

/// Largest supported ground set. Every subset fits in one machine word.
inline constexpr int kMaxGroundSize = 64;

/**
 * A subset of the ground set {0, ..., n-1}, n <= 64, stored as one word.
 *
 * Ordering compares the underlying words numerically. Because S ⊆ T implies
 * bits(S) <= bits(T), lexicographic order on arrays of masks is a linear
 * extension of componentwise inclusion.
 */
class SubsetMask {
 public:
  using word_type = std::uint64_t;

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = int;

    constexpr iterator() = default;
    constexpr explicit iterator(word_type rest) : rest_(rest) {}

    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    word_type rest_ = 0;
  };

  constexpr SubsetMask() = default;
  constexpr explicit SubsetMask(word_type bits) : bits_(bits) {}

  static constexpr SubsetMask singleton(int i) {
    return SubsetMask(word_type{1} << i);
  }
  /// {0, ..., n-1}
  static constexpr SubsetMask full(int n) {
    return n >= 64 ? SubsetMask(~word_type{0})
                   : SubsetMask((word_type{1} << n) - 1);
  }
  static constexpr SubsetMask of(std::initializer_list<int> members) {
    SubsetMask m;
    for (int i : members) m = m.with(i);
    return m;
  }
  static SubsetMask of(std::span<const int> members) {
    SubsetMask m;
    for (int i : members) m = m.with(i);
    return m;
  }

  constexpr word_type bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int count() const { return std::popcount(bits_); }
  constexpr bool contains(int i) const { return (bits_ >> i) & 1U; }
  constexpr bool is_subset_of(SubsetMask other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool intersects(SubsetMask other) const {
    return (bits_ & other.bits_) != 0;
  }
  /// Smallest member; undefined on the empty mask.
  constexpr int min() const { return std::countr_zero(bits_); }
  /// Largest member; undefined on the empty mask.
  constexpr int max() const { return 63 - std::countl_zero(bits_); }
  /// True when every member is below n.
  constexpr bool fits(int n) const { return is_subset_of(full(n)); }

  constexpr SubsetMask with(int i) const {
    return SubsetMask(bits_ | (word_type{1} << i));
  }
  constexpr SubsetMask without(int i) const {
    return SubsetMask(bits_ & ~(word_type{1} << i));
  }

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }
  std::vector<int> members() const { return {begin(), end()}; }

  constexpr SubsetMask operator|(SubsetMask o) const {
    return SubsetMask(bits_ | o.bits_);
  }
  constexpr SubsetMask operator&(SubsetMask o) const {
    return SubsetMask(bits_ & o.bits_);
  }
  /// Set difference.
  constexpr SubsetMask operator-(SubsetMask o) const {
    return SubsetMask(bits_ & ~o.bits_);
  }
  constexpr SubsetMask& operator|=(SubsetMask o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr SubsetMask& operator&=(SubsetMask o) {
    bits_ &= o.bits_;
    return *this;
  }

  constexpr auto operator<=>(const SubsetMask&) const = default;

 private:
  word_type bits_ = 0;
};

using Edge = std::pair<int, int>;

/// Directed graph on {0, ..., n-1} without self-loops. Immutable.
class Digraph {
 public:
  Digraph() = default;
  /// Edgeless digraph on n vertices.
  explicit Digraph(int n);
  /// Throws PreconditionError on self-loops or out-of-range endpoints.
  Digraph(int n, std::span<const Edge> edges);
  Digraph(int n, std::initializer_list<Edge> edges)
      : Digraph(n, std::span<const Edge>(edges.begin(), edges.size())) {}
  /// Adjacency given directly as out-neighbour masks.
  static Digraph from_adjacency(std::vector<SubsetMask> out);

  int size() const { return static_cast<int>(out_.size()); }
  SubsetMask out(int v) const { return out_[v]; }
  SubsetMask in(int v) const;
  bool has_edge(int u, int v) const { return out_[u].contains(v); }
  std::size_t edge_count() const;
  std::vector<Edge> edges() const;

  /// Same vertices, every edge reversed.
  Digraph opposite() const;
  /// Image under the vertex relabelling v -> perm[v].
  Digraph relabeled(std::span<const int> perm) const;

  /// 0 -> 1 -> ... -> n-1
  static Digraph path(int n);
  /// 0 -> 1 -> ... -> n-1 -> 0
  static Digraph cycle(int n);
  /// i -> j for every i < j.
  static Digraph complete_dag(int n);

  bool operator==(const Digraph&) const = default;

 private:
  std::vector<SubsetMask> out_;
};

/// Simple undirected graph on {0, ..., n-1}. Immutable.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  /// Throws PreconditionError on self-loops or out-of-range endpoints.
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  int size() const { return static_cast<int>(adj_.size()); }
  SubsetMask neighbors(int v) const { return adj_[v]; }
  bool has_edge(int u, int v) const { return adj_[u].contains(v); }
  std::size_t edge_count() const;
  std::vector<Edge> edges() const;

  static Graph path(int n);
  static Graph cycle(int n);
  static Graph complete(int n);
  /// Underlying undirected graph of a digraph.
  static Graph underlying(const Digraph& d);

  bool operator==(const Graph&) const = default;

 private:
  std::vector<SubsetMask> adj_;
};

/**
 * Vertices u ∈ within reachable from source by a directed path whose
 * vertices all lie in within. Always contains source.
 *
 * Throws PreconditionError if source ∉ within.
 */
SubsetMask reachable_from(const Digraph& d, int source, SubsetMask within);

/// Connected component of source in the subgraph of g induced by within.
SubsetMask component_of(const Graph& g, int source, SubsetMask within);

/// Edge (u, v), u != v, iff a nonempty directed path u -> v exists.
Digraph transitive_closure(const Digraph& d);

bool is_acyclic(const Digraph& d);

/// Underlying undirected graph is a tree: connected, n-1 edges, and no
/// antiparallel edge pairs.
bool is_directed_tree(const Digraph& d);

/// Isomorphism-invariant code: minimum adjacency encoding over all vertex
/// relabellings. Only comparable between digraphs of equal size. Brute
/// force, so requires n <= 8.
std::uint64_t canonical_code(const Digraph& d);

}  // namespace ornalat
