#include "ornalat/poset.hpp"

#include <algorithm>
#include <numeric>

#include "ornalat/error.hpp"

namespace ornalat {

FinitePoset FinitePoset::from_relation(
    std::size_t m, const std::function<bool(std::size_t, std::size_t)>& leq) {
  FinitePoset p;
  p.down_.assign(m, ElementSet(m));
  for (std::size_t y = 0; y < m; ++y) {
    if (!leq(y, y)) throw PreconditionError("relation is not reflexive");
    for (std::size_t x = 0; x < m; ++x)
      if (leq(x, y)) p.down_[y].set(x);
  }
  for (std::size_t y = 0; y < m; ++y)
    for (std::size_t x = p.down_[y].find_first(); x != ElementSet::npos;
         x = p.down_[y].find_next(x))
      if (x != y && p.down_[x][y])
        throw PreconditionError("relation is not antisymmetric");
  p.finish();
  return p;
}

void FinitePoset::finish() {
  const std::size_t m = down_.size();
  up_.assign(m, ElementSet(m));
  for (std::size_t y = 0; y < m; ++y)
    for (std::size_t x = down_[y].find_first(); x != ElementSet::npos;
         x = down_[y].find_next(x))
      up_[x].set(y);

  // x < y implies |down(x)| < |down(y)|.
  linear_.resize(m);
  std::iota(linear_.begin(), linear_.end(), std::size_t{0});
  std::stable_sort(linear_.begin(), linear_.end(),
                   [&](std::size_t a, std::size_t b) {
                     return down_[a].count() < down_[b].count();
                   });
  std::vector<std::size_t> pos(m);
  for (std::size_t k = 0; k < m; ++k) pos[linear_[k]] = k;

  // Lower covers of y are the maximal elements of down(y) - {y}. Scanning
  // candidates from the top of the linear extension, an element is maximal
  // exactly when no previously accepted cover lies above it.
  covers_.clear();
  upper_.assign(m, {});
  lower_.assign(m, {});
  ElementSet shadow(m);
  std::vector<std::size_t> candidates;
  for (std::size_t y = 0; y < m; ++y) {
    candidates.clear();
    for (std::size_t x = down_[y].find_first(); x != ElementSet::npos;
         x = down_[y].find_next(x))
      if (x != y) candidates.push_back(x);
    std::sort(candidates.begin(), candidates.end(),
              [&](std::size_t a, std::size_t b) { return pos[a] > pos[b]; });
    shadow.reset();
    for (std::size_t x : candidates) {
      if (shadow[x]) continue;
      covers_.push_back({x, y});
      shadow |= down_[x];
    }
  }
  std::sort(covers_.begin(), covers_.end());
  for (const Cover& c : covers_) {
    upper_[c.lo].push_back(c.hi);
    lower_[c.hi].push_back(c.lo);
  }
  for (auto& v : upper_) std::sort(v.begin(), v.end());
  for (auto& v : lower_) std::sort(v.begin(), v.end());
}

bool FinitePoset::is_cover(std::size_t lo, std::size_t hi) const {
  return std::binary_search(upper_[lo].begin(), upper_[lo].end(), hi);
}

std::optional<std::size_t> FinitePoset::join(std::size_t a,
                                             std::size_t b) const {
  ElementSet common = up_[a] & up_[b];
  if (common.none()) return std::nullopt;
  std::size_t best = common.find_first();
  for (std::size_t z = common.find_next(best); z != ElementSet::npos;
       z = common.find_next(z))
    if (down_[z].count() < down_[best].count()) best = z;
  if (!common.is_subset_of(up_[best])) return std::nullopt;
  return best;
}

std::optional<std::size_t> FinitePoset::meet(std::size_t a,
                                             std::size_t b) const {
  ElementSet common = down_[a] & down_[b];
  if (common.none()) return std::nullopt;
  std::size_t best = common.find_first();
  for (std::size_t z = common.find_next(best); z != ElementSet::npos;
       z = common.find_next(z))
    if (up_[z].count() < up_[best].count()) best = z;
  if (!common.is_subset_of(down_[best])) return std::nullopt;
  return best;
}

std::optional<std::size_t> FinitePoset::bottom() const {
  for (std::size_t x = 0; x < size(); ++x)
    if (up_[x].count() == size()) return x;
  return std::nullopt;
}

std::optional<std::size_t> FinitePoset::top() const {
  for (std::size_t x = 0; x < size(); ++x)
    if (down_[x].count() == size()) return x;
  return std::nullopt;
}

FinitePoset FinitePoset::dual() const {
  FinitePoset p;
  p.down_ = up_;
  p.finish();
  return p;
}

}  // namespace ornalat
