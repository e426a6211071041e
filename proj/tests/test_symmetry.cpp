#include <doctest.h>

#include <algorithm>

#include "ornalat/symmetry.hpp"
#include "support.hpp"

using namespace ornalat;

namespace {

long binom2(long n) { return n * (n - 1) / 2; }

ArcTorsionClass arcs(std::vector<std::pair<int, int>> a) { return {std::move(a)}; }

}  // namespace

TEST_CASE("group closure and preservation") {
  GroupAction rot = cycle_rotation(3, 2);
  CHECK(rot.elements().size() == 3);
  CHECK(rot.elements().front() == Permutation{0, 1, 2, 3, 4, 5});
  CHECK(rot.preserves(digraphical(Digraph::cycle(6))));
  GroupAction s4(4, {{1, 0, 2, 3}, {1, 2, 3, 0}});
  CHECK(s4.elements().size() == 24);
  CHECK(s4.preserves(graphical(Graph::complete(4))));
  CHECK_THROWS_AS(GroupAction(3, {{0, 0, 1}}), ActionError);
  try {
    GroupAction(3, {{0, 1}});
    FAIL("expected ActionError");
  } catch (const ActionError& e) {
    CHECK(e.generator() < 0);
  }
  GroupAction swap(2, {{1, 0}});
  CHECK_FALSE(swap.preserves(left_segment(2)));
  try {
    swap.check_preserves(left_segment(2));
    FAIL("expected ActionError");
  } catch (const ActionError& e) {
    CHECK(e.generator() == 0);
    CHECK(left_segment(2).contains(e.witness()));
  }
  CHECK(apply({2, 0, 1}, SubsetMask::of({0, 1})) == SubsetMask::of({2, 0}));
}

TEST_CASE("invariant elements") {
  auto lat = enumerate(left_segment(4));
  GroupAction trivial(4, {});
  auto all = invariant_elements(trivial, lat);
  CHECK(all.elements.size() == lat.size());
  CHECK(all.closed_under_meet_join);

  GroupAction swap(2, {{1, 0}});
  CHECK_THROWS_AS(invariant_elements(swap, enumerate(left_segment(2))), ActionError);

  // fixes() agrees with the full group condition.
  for (int m : {2, 3}) {
    GroupAction rot = cycle_rotation(m, 2);
    auto full = enumerate(digraphical(Digraph::cycle(2 * m)));
    auto inv = invariant_elements(rot, full);
    CHECK(inv.closed_under_meet_join);
    std::size_t count = 0;
    for (const Ornamentation& r : full.elements()) {
      bool fixed = true;
      for (const Permutation& g : rot.elements())
        for (int i = 0; i < r.size(); ++i) fixed = fixed && r[g[i]] == apply(g, r[i]);
      CHECK(rot.fixes(r) == fixed);
      count += fixed;
    }
    CHECK(count == inv.elements.size());
  }
}

TEST_CASE("invariant elements are closed under the ambient operations") {
  for (int n = 2; n <= 3; ++n) {
    auto lat = csym_atam(n);
    const auto& b = lat.building();
    for (const Ornamentation& x : lat.elements())
      for (const Ornamentation& y : lat.elements()) {
        CHECK(lat.index_of(join(b, x, y)).has_value());
        CHECK(lat.index_of(meet(b, x, y)).has_value());
      }
  }
}

TEST_CASE("signed cycle layout") {
  Digraph d = signed_cycle(2);
  CHECK(d == Digraph::cycle(4));
  CHECK(signed_label(2, 0) == 1);
  CHECK(signed_label(2, 1) == 2);
  CHECK(signed_label(2, 2) == -1);
  CHECK(signed_label(2, 3) == -2);
  // i -> i+1, n -> -1, -i -> -(i+1), -n -> 1.
  CHECK(d.has_edge(0, 1));
  CHECK(d.has_edge(1, 2));
  CHECK(d.has_edge(2, 3));
  CHECK(d.has_edge(3, 0));
  CHECK(sign_action(2).generators().front() == Permutation{2, 3, 0, 1});
}

TEST_CASE("signed ornamentations") {
  auto l2 = csym_atam(2);
  CHECK(l2.size() == 6);
  CHECK(longest_chain(l2.order()) == 4);
  auto l3 = csym_atam(3);
  CHECK(l3.size() == 20);
  CHECK(longest_chain(l3.order()) == 7);
  CHECK(is_semidistributive(l2.order()).holds());
  CHECK_THROWS_AS(csym_atam(1), PreconditionError);
}

TEST_CASE("rotation-invariant lattices for different multiples agree") {
  auto l = rotation_invariant_lattice(2, 2);
  auto m = rotation_invariant_lattice(3, 2);
  REQUIRE(l.size() == m.size());
  std::vector<std::size_t> map;
  for (const Ornamentation& r : l.elements()) {
    auto idx = m.index_of(rotated_cycle_map(2, 2, 3, r));
    REQUIRE(idx.has_value());
    map.push_back(*idx);
  }
  CHECK(test_support::is_order_map(l.order(), m.order(), map, false));
  CHECK(iso_check(l.order(), m.order(), false).isomorphic());
  for (const Ornamentation& r : m.elements())
    CHECK(rotated_cycle_map(2, 2, 3, rotated_cycle_map(2, 3, 2, r)) == r);
}

TEST_CASE("affine chain lengths") {
  for (int n = 2; n <= 4; ++n)
    CHECK(longest_chain(enumerate(digraphical(Digraph::cycle(n))).order()) ==
          static_cast<std::size_t>(binom2(n + 1)));
}

TEST_CASE("arc torsion classes") {
  CHECK(is_arc_torsion_class(2, arcs({})));
  CHECK(is_arc_torsion_class(2, arcs({{1, 2}})));
  CHECK_FALSE(is_arc_torsion_class(2, arcs({{1, 3}})));          // missing (1,2)
  CHECK_FALSE(is_arc_torsion_class(2, arcs({{1, 2}, {2, 3}})));  // missing (1,3)
  CHECK_FALSE(is_arc_torsion_class(2, arcs({{1, 4}})));          // too long
  CHECK_FALSE(is_arc_torsion_class(2, arcs({{1, 3}, {1, 2}})));  // unsorted
  CHECK(arcs({{1, 2}}).is_subset_of(arcs({{1, 2}, {1, 3}})));
  CHECK_FALSE(arcs({{2, 3}}).is_subset_of(arcs({{1, 2}})));
}

TEST_CASE("cyclic Tamari sizes and the literal reading") {
  auto c2 = cyclic_tamari(2);
  CHECK(c2.elements.size() == 6);
  CHECK(c2.elements.front().arcs.empty());
  CHECK(cyclic_tamari(3).elements.size() == 20);
  auto lit = cyclic_tamari(2, CompositionRule::Literal);
  CHECK(lit.elements.size() == 7);
  CHECK_FALSE(iso_check(lit.order, csym_atam(2).order(), false).isomorphic());
  CHECK(cyclic_tamari(3, CompositionRule::Literal).elements.size() == 28);
  CHECK_THROWS_AS(cyclic_tamari(1), PreconditionError);
}

TEST_CASE("signed ornamentations match cyclic Tamari arc sets") {
  for (int n = 2; n <= 3; ++n) {
    CAPTURE(n);
    auto lat = csym_atam(n);
    auto ct = cyclic_tamari(n);
    REQUIRE(lat.size() == ct.elements.size());
    CHECK(csym_to_ctam(n, lat.element(0)).arcs.empty());
    auto top = csym_to_ctam(n, lat.element(lat.size() - 1));
    CHECK(top.arcs.size() == static_cast<std::size_t>(n * n));
    std::vector<std::size_t> map;
    for (const Ornamentation& r : lat.elements()) {
      auto d = csym_to_ctam(n, r);
      CHECK(is_arc_torsion_class(n, d));
      auto it = std::lower_bound(ct.elements.begin(), ct.elements.end(), d);
      REQUIRE(it != ct.elements.end());
      REQUIRE(*it == d);
      map.push_back(static_cast<std::size_t>(it - ct.elements.begin()));
    }
    CHECK(test_support::is_order_map(lat.order(), ct.order, map, false));
    CHECK(iso_check(lat.order(), ct.order, false).isomorphic());
  }
}

TEST_CASE("chain statistic") {
  for (int n = 2; n <= 3; ++n) {
    CAPTURE(n);
    auto lat = csym_atam(n);
    const long lo = chain_statistic(n, lat.element(0));
    const long hi = chain_statistic(n, lat.element(lat.size() - 1));
    CHECK(lo == n);
    CHECK(hi == n * (n + 1) - binom2(n));
    CHECK(hi - lo + 1 == binom2(n + 1) + 1);
    for (const Cover& c : lat.covers())
      CHECK(chain_statistic(n, lat.element(c.lo)) < chain_statistic(n, lat.element(c.hi)));
  }
  auto lat = csym_atam(2);
  CHECK(cycle_size(2, lat.element(0), 0) == 1);
  CHECK(cycle_size(2, lat.element(lat.size() - 1), 0) == 3);
}
