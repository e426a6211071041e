#include <doctest.h>

#include <random>

#include "ornalat/error.hpp"
#include "ornalat/universe.hpp"
#include "support.hpp"

using namespace ornalat;

TEST_CASE("subset mask basics") {
  SubsetMask s = SubsetMask::of({0, 2, 5});
  CHECK(s.count() == 3);
  CHECK(s.min() == 0);
  CHECK(s.max() == 5);
  CHECK(s.members() == std::vector<int>{0, 2, 5});
  CHECK(s.contains(2));
  CHECK_FALSE(s.contains(1));
  CHECK(SubsetMask::of({2}).is_subset_of(s));
  CHECK((s - SubsetMask::of({2})) == SubsetMask::of({0, 5}));
  CHECK(SubsetMask::full(64).count() == 64);
  CHECK(SubsetMask::full(3) == SubsetMask::of({0, 1, 2}));
  CHECK(s.fits(6));
  CHECK_FALSE(s.fits(5));
}

TEST_CASE("mask order extends inclusion") {
  for (std::uint64_t a = 0; a < 64; ++a)
    for (std::uint64_t b = 0; b < 64; ++b)
      if (SubsetMask(a).is_subset_of(SubsetMask(b))) CHECK(SubsetMask(a) <= SubsetMask(b));
}

TEST_CASE("digraph construction rejects loops and bad endpoints") {
  CHECK_THROWS_AS(Digraph(3, {{1, 1}}), PreconditionError);
  CHECK_THROWS_AS(Digraph(3, {{0, 3}}), PreconditionError);
  CHECK_THROWS_AS(Graph(2, {{0, 0}}), PreconditionError);
  Digraph d(3, {{0, 1}, {0, 1}});
  CHECK(d.edge_count() == 1);
}

TEST_CASE("reachable_from examples") {
  Digraph p = Digraph::path(3);
  CHECK(reachable_from(p, 0, SubsetMask::full(3)) == SubsetMask::full(3));
  CHECK(reachable_from(p, 0, SubsetMask::of({0, 2})) == SubsetMask::of({0}));
  Digraph c = Digraph::cycle(4);
  CHECK(reachable_from(c, 2, SubsetMask::full(4)) == SubsetMask::full(4));
  CHECK_THROWS_AS(reachable_from(p, 1, SubsetMask::of({0, 2})), PreconditionError);
}

TEST_CASE("transitive_closure examples") {
  Digraph d(3, {{0, 1}, {1, 2}});
  CHECK(transitive_closure(d) == Digraph(3, {{0, 1}, {1, 2}, {0, 2}}));
  CHECK(transitive_closure(Digraph(3)) == Digraph(3));
  Digraph full = transitive_closure(Digraph::cycle(3));
  CHECK(full.edge_count() == 6);
  for (int v = 0; v < 3; ++v) CHECK_FALSE(full.has_edge(v, v));
}

TEST_CASE("reachability properties on random digraphs") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 8;
    Digraph d = test_support::random_digraph(rng, n, 0.3);
    Digraph tc = transitive_closure(d);
    CHECK(transitive_closure(tc) == tc);
    std::uniform_int_distribution<std::uint64_t> pick(0, SubsetMask::full(n).bits());
    for (int s = 0; s < n; ++s) {
      CHECK(reachable_from(d, s, SubsetMask::full(n)) == tc.out(s).with(s));
      SubsetMask w1 = SubsetMask(pick(rng)).with(s);
      SubsetMask w2 = w1 | SubsetMask(pick(rng));
      CHECK(reachable_from(d, s, w1).is_subset_of(reachable_from(d, s, w2)));
      CHECK(reachable_from(d, s, w1).is_subset_of(w1));
    }
  }
}

TEST_CASE("acyclicity and tree detection") {
  CHECK(is_acyclic(Digraph::path(5)));
  CHECK(is_acyclic(Digraph::complete_dag(5)));
  CHECK_FALSE(is_acyclic(Digraph::cycle(3)));
  CHECK(is_directed_tree(Digraph::path(4)));
  CHECK(is_directed_tree(Digraph(4, {{1, 0}, {2, 0}, {3, 0}})));
  CHECK(is_directed_tree(Digraph(1)));
  CHECK_FALSE(is_directed_tree(Digraph::cycle(3)));
  CHECK_FALSE(is_directed_tree(Digraph::complete_dag(3)));
  CHECK_FALSE(is_directed_tree(Digraph(3, {{0, 1}})));
  CHECK_FALSE(is_directed_tree(Digraph(2, {{0, 1}, {1, 0}})));
}

TEST_CASE("canonical code is a relabelling invariant") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + trial % 5;
    Digraph d = test_support::random_digraph(rng, n, 0.4);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(canonical_code(d) == canonical_code(d.relabeled(perm)));
  }
  CHECK(canonical_code(Digraph::path(3)) == canonical_code(Digraph::path(3).opposite()));
  CHECK(canonical_code(Digraph(3, {{0, 1}, {0, 2}})) != canonical_code(Digraph(3, {{1, 0}, {2, 0}})));
}

TEST_CASE("graph factories") {
  CHECK(Graph::complete(4).edge_count() == 6);
  CHECK(Graph::cycle(5).edge_count() == 5);
  CHECK(Graph::path(5).edge_count() == 4);
  CHECK(Graph::underlying(Digraph::cycle(2)).edge_count() == 1);
  CHECK(component_of(Graph::path(4), 0, SubsetMask::of({0, 1, 3})) == SubsetMask::of({0, 1}));
}
