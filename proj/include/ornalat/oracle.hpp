#pragma once

// Brute-force reference computations for tests and the acceptance runner.
// Nothing here uses the library: inputs and outputs are plain integers, and
// every answer comes from exhaustive search over a naive encoding.

#include <cstdint>
#include <vector>

namespace ornalat::oracle {

using Mask = std::uint64_t;

/// Catalan numbers from the convolution recurrence.
std::uint64_t catalan(int n);

/// Permutations of [n] with no a < b < c placed c, a, b.
std::uint64_t count_312_avoiding(int n);

/// Transitive relations on [n] containing the diagonal (finite topologies).
std::uint64_t count_transitive_relations(int n);

/// Transitive relations contained in {(i, j) : i < j}.
std::uint64_t count_natural_partial_orders(int n);

/// Associative tables with i * j in {i, j}.
std::uint64_t count_associative_quasitrivial(int n);

/// fibers[v] = subsets S containing v in which every vertex is reachable
/// from v inside S. out[u] is the out-neighbour mask of u.
std::vector<std::vector<Mask>> digraph_fibers(int n, const std::vector<Mask>& out);

/// Every choice of one set per fiber that is transitively closed, in
/// lexicographic order.
std::vector<std::vector<Mask>> all_ornamentations(
    const std::vector<std::vector<Mask>>& fibers);

/// Least permutation in the weak order above all of perms; perms[k][p] is
/// the p-th smallest element.
std::vector<int> weak_order_lub(int n, const std::vector<std::vector<int>>& perms);

/// Index of the least upper bound of family[a] and family[b] under
/// componentwise inclusion, or -1.
long least_upper_bound(const std::vector<std::vector<Mask>>& family, std::size_t a,
                       std::size_t b);
long greatest_lower_bound(const std::vector<std::vector<Mask>>& family,
                          std::size_t a, std::size_t b);

}  // namespace ornalat::oracle
