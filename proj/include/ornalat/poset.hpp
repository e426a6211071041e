#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace ornalat {

/// elements[lo] is covered by elements[hi].
struct Cover {
  std::size_t lo = 0;
  std::size_t hi = 0;

  auto operator<=>(const Cover&) const = default;
};

/**
 * A finite poset on indices 0..m-1 with its full order matrix and Hasse
 * diagram. Built once from a comparison callback; immutable afterwards.
 *
 * Memory is m^2 bits for each of the down- and up-set tables.
 */
class FinitePoset {
 public:
  using ElementSet = boost::dynamic_bitset<std::uint64_t>;

  FinitePoset() = default;

  /// Calls leq(a, b) for every ordered pair. Throws PreconditionError if the
  /// relation is not reflexive or not antisymmetric.
  static FinitePoset from_relation(
      std::size_t m, const std::function<bool(std::size_t, std::size_t)>& leq);

  std::size_t size() const { return down_.size(); }
  bool leq(std::size_t a, std::size_t b) const { return down_[b][a]; }
  const ElementSet& down_set(std::size_t a) const { return down_[a]; }
  const ElementSet& up_set(std::size_t a) const { return up_[a]; }

  /// Sorted by (lo, hi).
  std::span<const Cover> covers() const { return covers_; }
  std::span<const std::size_t> upper_covers(std::size_t a) const {
    return upper_[a];
  }
  std::span<const std::size_t> lower_covers(std::size_t a) const {
    return lower_[a];
  }
  bool is_cover(std::size_t lo, std::size_t hi) const;

  /// Indices sorted so that a < b in the order implies a comes first.
  std::span<const std::size_t> linear_extension() const { return linear_; }

  /// Least upper bound inside this poset, if one exists.
  std::optional<std::size_t> join(std::size_t a, std::size_t b) const;
  /// Greatest lower bound inside this poset, if one exists.
  std::optional<std::size_t> meet(std::size_t a, std::size_t b) const;
  std::optional<std::size_t> bottom() const;
  std::optional<std::size_t> top() const;

  /// Same elements, reversed order.
  FinitePoset dual() const;

 private:
  void finish();

  std::vector<ElementSet> down_;
  std::vector<ElementSet> up_;
  std::vector<Cover> covers_;
  std::vector<std::vector<std::size_t>> upper_;
  std::vector<std::vector<std::size_t>> lower_;
  std::vector<std::size_t> linear_;
};

}  // namespace ornalat
