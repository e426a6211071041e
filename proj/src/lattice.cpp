#include "ornalat/lattice.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <numeric>
#include <thread>
#include <tuple>

namespace ornalat {

OrnLattice::OrnLattice(PointedBuildingSet building,
                       std::vector<Ornamentation> elements)
    : building_(std::move(building)), elements_(std::move(elements)) {
  for (const Ornamentation& r : elements_)
    if (r.size() != building_.size())
      throw PreconditionError("element size differs from ground size");
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()),
                  elements_.end());
  order_ = FinitePoset::from_relation(
      elements_.size(), [this](std::size_t a, std::size_t b) {
        return ornalat::leq(elements_[a], elements_[b]);
      });
}

std::optional<std::size_t> OrnLattice::index_of(const Ornamentation& r) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), r);
  if (it == elements_.end() || *it != r) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

namespace {

class Backtracker {
 public:
  Backtracker(const PointedBuildingSet& b, std::span<const int> order,
              std::atomic<std::size_t>& found, std::size_t cap)
      : b_(b), order_(order), found_(found), cap_(cap), values_(b.size()) {}

  void run_from(std::size_t depth) {
    if (depth == order_.size()) {
      if (!is_ornamentation(b_, values_))
        throw Error("enumeration produced an invalid ornamentation");
      std::size_t count = ++found_;
      if (count > cap_) throw CapExceeded(count - 1);
      out_.push_back(Ornamentation::unchecked(values_));
      return;
    }
    const int c = order_[depth];
    for (SubsetMask s : b_.fiber(c)) {
      if (!consistent(c, s)) continue;
      assign(c, s);
      run_from(depth + 1);
      unassign(c);
    }
  }

  bool consistent(int c, SubsetMask s) const {
    for (int j : assigned_) {
      if (s.contains(j) && !values_[j].is_subset_of(s)) return false;
      if (values_[j].contains(c) && !s.is_subset_of(values_[j])) return false;
    }
    return true;
  }
  void assign(int c, SubsetMask s) {
    values_[c] = s;
    assigned_ = assigned_.with(c);
  }
  void unassign(int c) { assigned_ = assigned_.without(c); }

  std::vector<Ornamentation>& results() { return out_; }

 private:
  const PointedBuildingSet& b_;
  std::span<const int> order_;
  std::atomic<std::size_t>& found_;
  std::size_t cap_;
  std::vector<SubsetMask> values_;
  SubsetMask assigned_;
  std::vector<Ornamentation> out_;
};

}  // namespace

std::vector<Ornamentation> enumerate_ornamentations(
    const PointedBuildingSet& b, const EnumerateOptions& opts) {
  if (opts.cap == 0) throw PreconditionError("cap must be positive");
  const int n = b.size();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
    return b.fiber(x).size() > b.fiber(y).size();
  });

  std::atomic<std::size_t> found{0};
  const int first = order.front();
  const auto roots = b.fiber(first);
  std::atomic<std::size_t> next_root{0};
  std::vector<std::vector<Ornamentation>> partial(roots.size());
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    try {
      for (std::size_t r = next_root++; r < roots.size(); r = next_root++) {
        Backtracker bt(b, order, found, opts.cap);
        bt.assign(first, roots[r]);
        bt.run_from(1);
        partial[r] = std::move(bt.results());
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next_root = roots.size();
    }
  };

  const unsigned threads = std::max(1U, opts.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<Ornamentation> all;
  for (auto& p : partial)
    std::move(p.begin(), p.end(), std::back_inserter(all));
  std::sort(all.begin(), all.end());
  return all;
}

OrnLattice enumerate(const PointedBuildingSet& b, const EnumerateOptions& opts) {
  return OrnLattice(b, enumerate_ornamentations(b, opts));
}

std::vector<CoverViolation> cover_violations(const OrnLattice& lat) {
  const PointedBuildingSet& b = lat.building();
  std::vector<CoverViolation> violations;
  for (const Cover& c : lat.covers()) {
    const Ornamentation& rho = lat.element(c.lo);
    const Ornamentation& sigma = lat.element(c.hi);
    std::vector<int> changed;
    for (int i = 0; i < b.size(); ++i)
      if (rho[i] != sigma[i]) changed.push_back(i);
    if (changed.size() != 1) {
      violations.push_back({c, changed, false});
      continue;
    }
    const int i = changed.front();
    bool union_form = false;
    for (SubsetMask s : b.fiber(i)) {
      SubsetMask u;
      for (int j : s) u |= rho[j];
      if (u == sigma[i]) {
        union_form = true;
        break;
      }
    }
    bool fiber_cover = true;
    for (SubsetMask t : b.fiber(i)) {
      if (t != rho[i] && t != sigma[i] && rho[i].is_subset_of(t) &&
          t.is_subset_of(sigma[i])) {
        fiber_cover = false;
        break;
      }
    }
    if (!union_form && !fiber_cover) violations.push_back({c, changed, true});
  }
  return violations;
}

std::vector<CoverViolation> covers_acyclic(const OrnLattice& lat) {
  if (!is_acyclic(lat.building()))
    throw PreconditionError("building set is not acyclic");
  return cover_violations(lat);
}

SemidistributivityResult is_semidistributive(const FinitePoset& lat) {
  using ElementSet = FinitePoset::ElementSet;
  SemidistributivityResult result;
  auto count_extremal = [](const ElementSet& diff, auto&& cone) {
    int extremal = 0;
    for (std::size_t z = diff.find_first(); z != ElementSet::npos;
         z = diff.find_next(z)) {
      if ((cone(z) & diff).count() == 1 && ++extremal > 1) break;
    }
    return extremal;
  };
  for (const Cover& c : lat.covers()) {
    if (result.join_semidistributive) {
      ElementSet diff = lat.down_set(c.hi) - lat.down_set(c.lo);
      if (count_extremal(diff, [&](std::size_t z) -> const ElementSet& {
            return lat.down_set(z);
          }) != 1) {
        result.join_semidistributive = false;
        result.join_witness = c;
      }
    }
    if (result.meet_semidistributive) {
      ElementSet diff = lat.up_set(c.lo) - lat.up_set(c.hi);
      if (count_extremal(diff, [&](std::size_t z) -> const ElementSet& {
            return lat.up_set(z);
          }) != 1) {
        result.meet_semidistributive = false;
        result.meet_witness = c;
      }
    }
    if (!result.join_semidistributive && !result.meet_semidistributive) break;
  }
  return result;
}

std::vector<std::size_t> join_irreducibles(const FinitePoset& lat) {
  std::vector<std::size_t> result;
  for (std::size_t x = 0; x < lat.size(); ++x)
    if (lat.lower_covers(x).size() == 1) result.push_back(x);
  return result;
}

std::vector<PointedSet> fiber_join_irreducibles(const PointedBuildingSet& b) {
  std::vector<PointedSet> result;
  for (int i = 0; i < b.size(); ++i) {
    for (SubsetMask s : b.fiber(i)) {
      if (s == SubsetMask::singleton(i)) continue;
      SubsetMask below;
      for (SubsetMask t : b.fiber(i))
        if (t != s && t.is_subset_of(s)) below |= t;
      if (below != s) result.push_back({s, i});
    }
  }
  return result;
}

bool fiber_is_atomic(const PointedBuildingSet& b, int i) {
  const SubsetMask bottom = SubsetMask::singleton(i);
  std::vector<SubsetMask> atoms;
  for (SubsetMask t : b.fiber(i)) {
    if (t == bottom) continue;
    bool minimal = true;
    for (SubsetMask u : b.fiber(i))
      if (u != bottom && u != t && u.is_subset_of(t)) minimal = false;
    if (minimal) atoms.push_back(t);
  }
  for (SubsetMask s : b.fiber(i)) {
    SubsetMask generated = bottom;
    for (SubsetMask a : atoms)
      if (a.is_subset_of(s)) generated |= a;
    if (generated != s) return false;
  }
  return true;
}

bool is_atomic(const FinitePoset& lat) {
  auto bottom = lat.bottom();
  if (!bottom) throw PreconditionError("poset has no least element");
  auto atoms = lat.upper_covers(*bottom);
  for (std::size_t x = 0; x < lat.size(); ++x) {
    std::size_t acc = *bottom;
    for (std::size_t a : atoms) {
      if (!lat.leq(a, x)) continue;
      auto j = lat.join(acc, a);
      if (!j) throw PreconditionError("poset is not a lattice");
      acc = *j;
    }
    if (acc != x) return false;
  }
  return true;
}

std::size_t longest_chain(const FinitePoset& lat) {
  if (lat.size() == 0) return 0;
  std::vector<std::size_t> len(lat.size(), 1);
  std::size_t best = 1;
  for (std::size_t y : lat.linear_extension()) {
    for (std::size_t x : lat.lower_covers(y)) len[y] = std::max(len[y], len[x] + 1);
    best = std::max(best, len[y]);
  }
  return best;
}

namespace {

// Longest chain from a minimal element up to each vertex, in elements.
std::vector<std::size_t> ranks(const FinitePoset& p) {
  std::vector<std::size_t> r(p.size(), 0);
  for (std::size_t y : p.linear_extension())
    for (std::size_t x : p.lower_covers(y)) r[y] = std::max(r[y], r[x] + 1);
  return r;
}

using Signature = std::tuple<std::size_t, std::vector<std::size_t>,
                             std::vector<std::size_t>>;

// Refines both posets' vertex colours together so colour ids are shared.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> joint_colours(
    const FinitePoset& a, const FinitePoset& b) {
  auto initial = [](const FinitePoset& p) {
    const FinitePoset dual = p.dual();
    auto up = ranks(p);
    auto down = ranks(dual);
    std::vector<std::vector<std::size_t>> keys(p.size());
    for (std::size_t v = 0; v < p.size(); ++v)
      keys[v] = {up[v], down[v], p.upper_covers(v).size(),
                 p.lower_covers(v).size(), p.down_set(v).count(),
                 p.up_set(v).count()};
    return keys;
  };
  auto ka = initial(a);
  auto kb = initial(b);
  std::map<std::vector<std::size_t>, std::size_t> ids;
  for (auto& k : ka) ids.emplace(k, 0);
  for (auto& k : kb) ids.emplace(k, 0);
  std::size_t next = 0;
  for (auto& [k, id] : ids) id = next++;
  std::vector<std::size_t> ca(a.size()), cb(b.size());
  for (std::size_t v = 0; v < a.size(); ++v) ca[v] = ids[ka[v]];
  for (std::size_t v = 0; v < b.size(); ++v) cb[v] = ids[kb[v]];

  std::size_t classes = ids.size();
  for (;;) {
    auto signature = [](const FinitePoset& p, const std::vector<std::size_t>& c,
                        std::size_t v) {
      std::vector<std::size_t> up, down;
      for (std::size_t w : p.upper_covers(v)) up.push_back(c[w]);
      for (std::size_t w : p.lower_covers(v)) down.push_back(c[w]);
      std::sort(up.begin(), up.end());
      std::sort(down.begin(), down.end());
      return Signature{c[v], std::move(up), std::move(down)};
    };
    std::vector<Signature> sa, sb;
    for (std::size_t v = 0; v < a.size(); ++v) sa.push_back(signature(a, ca, v));
    for (std::size_t v = 0; v < b.size(); ++v) sb.push_back(signature(b, cb, v));
    std::map<Signature, std::size_t> refined;
    for (auto& s : sa) refined.emplace(s, 0);
    for (auto& s : sb) refined.emplace(s, 0);
    std::size_t id = 0;
    for (auto& [s, v] : refined) v = id++;
    for (std::size_t v = 0; v < a.size(); ++v) ca[v] = refined[sa[v]];
    for (std::size_t v = 0; v < b.size(); ++v) cb[v] = refined[sb[v]];
    if (refined.size() == classes) break;
    classes = refined.size();
  }
  return {ca, cb};
}

bool sorted_has(std::span<const std::size_t> v, std::size_t x) {
  return std::binary_search(v.begin(), v.end(), x);
}

class IsoSearch {
 public:
  static constexpr std::size_t kUnmapped = static_cast<std::size_t>(-1);

  IsoSearch(const FinitePoset& a, const FinitePoset& b,
            std::vector<std::size_t> ca, std::vector<std::size_t> cb)
      : a_(a), b_(b), ca_(std::move(ca)), cb_(std::move(cb)),
        forward_(a.size(), kUnmapped), backward_(b.size(), kUnmapped) {
    std::size_t colours = 0;
    for (std::size_t c : cb_) colours = std::max(colours, c + 1);
    for (std::size_t c : ca_) colours = std::max(colours, c + 1);
    by_colour_.resize(colours);
    for (std::size_t v = 0; v < b_.size(); ++v) by_colour_[cb_[v]].push_back(v);
    build_order();
  }

  bool solve() { return extend(0); }
  std::vector<std::size_t> mapping() const { return forward_; }

 private:
  void build_order() {
    // Breadth-first over the cover graph, seeded at the rarest colour.
    std::vector<std::size_t> class_size(by_colour_.size(), 0);
    for (std::size_t c : ca_) ++class_size[c];
    std::vector<std::size_t> seeds(a_.size());
    std::iota(seeds.begin(), seeds.end(), std::size_t{0});
    std::stable_sort(seeds.begin(), seeds.end(), [&](std::size_t x, std::size_t y) {
      return class_size[ca_[x]] < class_size[ca_[y]];
    });
    std::vector<char> queued(a_.size(), 0);
    for (std::size_t s : seeds) {
      if (queued[s]) continue;
      std::size_t head = order_.size();
      order_.push_back(s);
      queued[s] = 1;
      while (head < order_.size()) {
        std::size_t v = order_[head++];
        for (auto list : {a_.upper_covers(v), a_.lower_covers(v)})
          for (std::size_t w : list)
            if (!queued[w]) {
              queued[w] = 1;
              order_.push_back(w);
            }
      }
    }
  }

  bool compatible(std::size_t x, std::size_t y) const {
    for (std::size_t w : a_.upper_covers(x))
      if (forward_[w] != kUnmapped && !sorted_has(b_.upper_covers(y), forward_[w]))
        return false;
    for (std::size_t w : a_.lower_covers(x))
      if (forward_[w] != kUnmapped && !sorted_has(b_.lower_covers(y), forward_[w]))
        return false;
    for (std::size_t w : b_.upper_covers(y))
      if (backward_[w] != kUnmapped && !sorted_has(a_.upper_covers(x), backward_[w]))
        return false;
    for (std::size_t w : b_.lower_covers(y))
      if (backward_[w] != kUnmapped && !sorted_has(a_.lower_covers(x), backward_[w]))
        return false;
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const std::size_t x = order_[depth];
    std::span<const std::size_t> candidates = by_colour_[ca_[x]];
    for (std::size_t w : a_.lower_covers(x))
      if (forward_[w] != kUnmapped) {
        candidates = b_.upper_covers(forward_[w]);
        break;
      }
    if (candidates.data() == by_colour_[ca_[x]].data())
      for (std::size_t w : a_.upper_covers(x))
        if (forward_[w] != kUnmapped) {
          candidates = b_.lower_covers(forward_[w]);
          break;
        }
    for (std::size_t y : candidates) {
      if (backward_[y] != kUnmapped || cb_[y] != ca_[x] || !compatible(x, y))
        continue;
      forward_[x] = y;
      backward_[y] = x;
      if (extend(depth + 1)) return true;
      forward_[x] = kUnmapped;
      backward_[y] = kUnmapped;
    }
    return false;
  }

  const FinitePoset& a_;
  const FinitePoset& b_;
  std::vector<std::size_t> ca_, cb_;
  std::vector<std::vector<std::size_t>> by_colour_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> forward_, backward_;
};

}  // namespace

IsoResult iso_check(const FinitePoset& a, const FinitePoset& b_in, bool anti) {
  using Outcome = IsoResult::Outcome;
  IsoResult result;
  if (a.size() != b_in.size()) {
    result.outcome = Outcome::SizeMismatch;
    return result;
  }
  if (a.covers().size() != b_in.covers().size()) {
    result.outcome = Outcome::CoverCountMismatch;
    return result;
  }
  const FinitePoset b = anti ? b_in.dual() : b_in;
  auto [ca, cb] = joint_colours(a, b);
  auto sa = ca, sb = cb;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) {
    result.outcome = Outcome::InvariantMismatch;
    return result;
  }
  IsoSearch search(a, b, std::move(ca), std::move(cb));
  if (search.solve()) {
    result.outcome = Outcome::Isomorphic;
    result.mapping = search.mapping();
  } else {
    result.outcome = Outcome::NoBijection;
  }
  return result;
}

}  // namespace ornalat
