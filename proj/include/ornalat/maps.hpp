#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ornalat/building.hpp"
#include "ornalat/error.hpp"
#include "ornalat/lattice.hpp"
#include "ornalat/ornament.hpp"
#include "ornalat/poset.hpp"
#include "ornalat/universe.hpp"

namespace ornalat {

class NotATree : public Error {
 public:
  using Error::Error;
};

class NotASubBuildingSet : public Error {
 public:
  NotASubBuildingSet(std::string what, int point, SubsetMask set)
      : Error(std::move(what)), point_(point), set_(set) {}
  int point() const noexcept { return point_; }
  SubsetMask set() const noexcept { return set_; }

 private:
  int point_;
  SubsetMask set_;
};

/**
 * The order-reversing bijection O(B(D)) -> O(B(D^op)) of a directed tree D.
 *
 * For each u, collect the vertices v with a path v -> u in D and u not in
 * rho(v), add u, and keep the largest u-connected set of D^op inside.
 */
class TreeDual {
 public:
  /// Throws NotATree unless the underlying graph of d is a tree.
  explicit TreeDual(const Digraph& d);

  const Digraph& digraph() const { return d_; }
  const PointedBuildingSet& source() const { return source_; }
  const PointedBuildingSet& target() const { return target_; }

  /// rho must be an ornamentation of source(); the result is one of target().
  Ornamentation apply(const Ornamentation& rho) const;

 private:
  Digraph d_;
  PointedBuildingSet source_;
  PointedBuildingSet target_;
  std::vector<SubsetMask> reaches_;  // reaches_[u] = {v : path v -> u}
};

Ornamentation tree_dual(const Digraph& d, const Ornamentation& rho);

/// All directed trees on n vertices up to isomorphism, n <= 8.
std::vector<Digraph> directed_trees(int n);

/// Acyclic digraphs on n vertices up to isomorphism, n <= 6.
std::vector<Digraph> acyclic_digraphs(int n);

/// First DAG D (by vertex count, then edge mask) with D isomorphic to D^op
/// whose lattice is not anti-isomorphic to the lattice of D^op.
std::optional<Digraph> find_duality_failure(int max_n,
                                            const EnumerateOptions& opts = {});

/// For a cover rho < sigma in O(B(D)), D acyclic: the vertices (u, v) with
/// sigma(u) = rho(u) | rho(v), when that pair is unique.
std::optional<std::pair<int, int>> dag_cover_pair(const Digraph& d,
                                                  const Ornamentation& rho,
                                                  const Ornamentation& sigma);

/// Coordinatewise largest member of small.fiber(i) inside rho(i). The two
/// building sets share a ground set and small is fiberwise inside big;
/// throws NotASubBuildingSet otherwise.
Ornamentation projection(const PointedBuildingSet& small,
                         const PointedBuildingSet& big,
                         const Ornamentation& rho);

/// A total order on [n]; perm()[k] is the k-th smallest element.
class TotalOrder {
 public:
  TotalOrder() = default;
  /// Throws PreconditionError unless perm is a permutation of 0..n-1.
  explicit TotalOrder(std::vector<int> perm);

  static TotalOrder identity(int n);
  static TotalOrder reversed(int n);

  int size() const { return static_cast<int>(perm_.size()); }
  std::span<const int> perm() const { return perm_; }
  int position(int x) const { return pos_[x]; }
  bool precedes(int a, int b) const { return pos_[a] < pos_[b]; }

  bool operator==(const TotalOrder& o) const { return perm_ == o.perm_; }

 private:
  std::vector<int> perm_;
  std::vector<int> pos_;
};

/// Pairs (i, j) with i < j and j before i; row(i) holds the j's.
class InversionSet {
 public:
  InversionSet() = default;
  explicit InversionSet(int n) : rows_(n) {}
  explicit InversionSet(const TotalOrder& t);

  int size() const { return static_cast<int>(rows_.size()); }
  SubsetMask row(int i) const { return rows_[i]; }
  bool contains(int i, int j) const { return rows_[i].contains(j); }
  /// Requires i < j.
  void insert(int i, int j);
  std::size_t count() const;
  bool is_subset_of(const InversionSet& o) const;
  bool transitively_closed() const;
  /// The complement inside {(i, j) : i < j} is transitively closed.
  bool transitively_coclosed() const;

  bool operator==(const InversionSet&) const = default;

 private:
  std::vector<SubsetMask> rows_;
};

/// The total order with the given inversion set. Throws PreconditionError if
/// s is not both transitively closed and coclosed.
TotalOrder order_from_inversions(const InversionSet& s);

/// A witness a < b < c ordered c, a, b.
struct Pattern312 {
  int a, b, c;
};

class Not312Avoiding : public Error {
 public:
  explicit Not312Avoiding(Pattern312 w);
  Pattern312 witness() const noexcept { return w_; }

 private:
  Pattern312 w_;
};

std::optional<Pattern312> find_312(const TotalOrder& t);

/// Inverse of order_to_orn on left_segment(n).
TotalOrder orn_to_order(const Ornamentation& rho);

/// rho(a) = {a} together with every b > a placed before a. Throws
/// Not312Avoiding.
Ornamentation order_to_orn(const TotalOrder& t);

/// Join in the weak order: transitive closure of the union of inversion sets.
TotalOrder weak_join(std::span<const TotalOrder> orders);

/// All n! orders of [n] in lexicographic order of perm, with the weak order.
std::vector<TotalOrder> all_orders(int n);
FinitePoset weak_order_poset(std::span<const TotalOrder> orders);

struct Weak312Report {
  std::size_t avoiding_orders = 0;
  std::size_t ornamentations = 0;
  bool bijective = false;
  bool order_preserving = false;
  bool holds() const { return bijective && order_preserving; }
};

/// Compares 312-avoiding orders of [n] under inversion inclusion with
/// O(left_segment(n)) through order_to_orn.
Weak312Report weak312_iso_check(int n);

}  // namespace ornalat
