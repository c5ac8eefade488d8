#pragma once

// Littlewood-Richardson coefficients by LR-tableau enumeration.
//
// An LR tableau of shape ν/λ and content μ is built by adding, for
// k = 1, 2, ..., a horizontal strip of cells labelled k. Rows stay weakly
// increasing and columns strictly increasing by construction; the reverse
// reading word is a lattice word iff for every row r and k ≥ 2
//
//   #{k in rows 0..r} ≤ #{k-1 in rows 0..r-1}.
//
// The same enumeration serves the product (content fixed, outer shape free)
// and skew (outer shape fixed, content free).

#include <limits>
#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "charhopf/partition.hpp"

namespace charhopf {

using LRTerms = std::vector<std::pair<Partition, long long>>;

namespace detail {

class StripEnumerator {
 public:
  static constexpr int unbounded = std::numeric_limits<int>::max();

  // bound: outer shape limit per row (empty = unbounded).
  explicit StripEnumerator(std::vector<int> bound) : bound_(std::move(bound)) {}

  // Calls fn(new_shape, per_row_counts) for each admissible strip labelled
  // k with exactly `cells` cells (cells < 0: any positive number).
  template <class Fn>
  void for_each_strip(const std::vector<int>& shape, const std::vector<int>& prev_counts, bool lattice,
                      int cells, Fn&& fn) const {
    std::vector<int> next = shape;
    std::vector<int> counts;
    const std::size_t max_rows = shape.size() + 1;
    next.resize(max_rows, 0);
    counts.assign(max_rows, 0);
    rec(shape, prev_counts, lattice, cells, 0, 0, 0, 0, next, counts, fn);
  }

 private:
  int row_bound(std::size_t r) const {
    if (bound_.empty()) return unbounded;
    return r < bound_.size() ? bound_[r] : 0;
  }

  template <class Fn>
  void rec(const std::vector<int>& shape, const std::vector<int>& prev, bool lattice, int cells, std::size_t r,
           int added, int cum_k, int cum_prev, std::vector<int>& next, std::vector<int>& counts, Fn& fn) const {
    const std::size_t nrows = next.size();
    if (r == nrows) {
      if (cells < 0 ? added == 0 : added != cells) return;
      std::vector<int> shaped = next;
      std::vector<int> cnt = counts;
      while (!shaped.empty() && shaped.back() == 0) shaped.pop_back();
      fn(shaped, cnt);
      return;
    }
    const int cur = r < shape.size() ? shape[r] : 0;
    int upper = r == 0 ? unbounded : (r - 1 < shape.size() ? shape[r - 1] : 0);
    upper = std::min(upper, row_bound(r));
    if (cells >= 0) upper = std::min<long long>(upper, (long long)cur + (cells - added));
    if (upper < cur) upper = cur;
    // Lattice: cumulative count of label k through row r may not exceed the
    // cumulative count of label k-1 through row r-1.
    const int prev_through_before = cum_prev;
    const int prev_here = r < prev.size() ? prev[r] : 0;
    for (int len = cur; len <= upper; ++len) {
      const int add = len - cur;
      if (lattice && cum_k + add > prev_through_before) break;
      next[r] = len;
      counts[r] = add;
      rec(shape, prev, lattice, cells, r + 1, added + add, cum_k + add, cum_prev + prev_here, next, counts, fn);
    }
    next[r] = cur;
    counts[r] = 0;
  }

  std::vector<int> bound_;
};

template <class Key>
class LRCache {
 public:
  template <class Compute>
  const LRTerms& get(const Key& key, Compute&& compute) {
    {
      std::lock_guard lock(mu_);
      auto it = map_.find(key);
      if (it != map_.end()) return it->second;
    }
    LRTerms value = compute();
    std::lock_guard lock(mu_);
    return map_.try_emplace(key, std::move(value)).first->second;
  }

 private:
  std::mutex mu_;
  std::map<Key, LRTerms> map_;
};

inline void product_rec(const StripEnumerator& en, const Partition& content, std::size_t k,
                        const std::vector<int>& shape, const std::vector<int>& prev,
                        std::map<Partition, long long, GradedOrder>& acc) {
  if (k == content.length()) {
    ++acc[Partition(shape)];
    return;
  }
  en.for_each_strip(shape, prev, k > 0, content[k], [&](const std::vector<int>& next, const std::vector<int>& counts) {
    product_rec(en, content, k + 1, next, counts, acc);
  });
}

inline void skew_rec(const StripEnumerator& en, const Partition& outer, std::vector<int>& content,
                     const std::vector<int>& shape, const std::vector<int>& prev,
                     std::map<Partition, long long, GradedOrder>& acc) {
  if (Partition(shape) == outer) {
    ++acc[Partition(content)];
    return;
  }
  const bool lattice = !content.empty();
  en.for_each_strip(shape, prev, lattice, -1, [&](const std::vector<int>& next, const std::vector<int>& counts) {
    int n = 0;
    for (int c : counts) n += c;
    content.push_back(n);
    skew_rec(en, outer, content, next, counts, acc);
    content.pop_back();
  });
}

inline LRTerms to_terms(const std::map<Partition, long long, GradedOrder>& acc) {
  return LRTerms(acc.begin(), acc.end());
}

}  // namespace detail

/// s_λ · s_μ = Σ_ν c^ν_{λμ} s_ν, enumerated with μ as the tableau content.
inline const LRTerms& lr_product(const Partition& lambda, const Partition& mu) {
  static detail::LRCache<std::pair<Partition, Partition>> cache;
  return cache.get({lambda, mu}, [&] {
    std::map<Partition, long long, GradedOrder> acc;
    detail::StripEnumerator en({});
    detail::product_rec(en, mu, 0, lambda.parts(), {}, acc);
    return detail::to_terms(acc);
  });
}

/// s_ν / s_λ = Σ_α c^ν_{λα} s_α; empty unless λ ⊆ ν.
inline const LRTerms& lr_skew(const Partition& nu, const Partition& lambda) {
  static detail::LRCache<std::pair<Partition, Partition>> cache;
  return cache.get({nu, lambda}, [&] {
    std::map<Partition, long long, GradedOrder> acc;
    if (contains(nu, lambda)) {
      detail::StripEnumerator en(nu.parts());
      std::vector<int> content;
      detail::skew_rec(en, nu, content, lambda.parts(), {}, acc);
    }
    return detail::to_terms(acc);
  });
}

/// A single coefficient c^ν_{λμ}.
inline long long lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (nu.weight() != lambda.weight() + mu.weight()) return 0;
  for (const auto& [alpha, c] : lr_skew(nu, lambda))
    if (alpha == mu) return c;
  return 0;
}

}  // namespace charhopf
