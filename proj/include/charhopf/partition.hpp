#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace charhopf {

/// An integer partition, stored as its weakly decreasing positive parts.
///
/// Trailing zeros are stripped on construction, so the empty sequence is the
/// unique representative of the zero partition.
class Partition {
 public:
  Partition() = default;

  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 0) throw std::invalid_argument("partition has a negative part");
      if (i > 0 && parts_[i] > parts_[i - 1])
        throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }

  const std::vector<int>& parts() const noexcept { return parts_; }
  std::size_t length() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }

  int weight() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

  // Row i of the diagram; zero past the last part.
  int operator[](std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

  auto begin() const noexcept { return parts_.begin(); }
  auto end() const noexcept { return parts_.end(); }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

inline int weight(const Partition& p) noexcept { return p.weight(); }

/// Transpose of the Young diagram.
inline Partition conjugate(const Partition& p) {
  std::vector<int> cols(p.empty() ? 0 : p[0], 0);
  for (int row : p)
    for (int j = 0; j < row; ++j) ++cols[j];
  return Partition(std::move(cols));
}

/// True iff the diagram of `inner` fits inside the diagram of `outer`.
inline bool contains(const Partition& outer, const Partition& inner) noexcept {
  if (inner.length() > outer.length()) return false;
  for (std::size_t i = 0; i < inner.length(); ++i)
    if (inner[i] > outer[i]) return false;
  return true;
}

/// Basis order used for every sorted output: by weight, then
/// reverse-lexicographically within a weight, so (2) precedes (1,1).
struct GradedOrder {
  bool operator()(const Partition& a, const Partition& b) const noexcept {
    const int wa = a.weight(), wb = b.weight();
    if (wa != wb) return wa < wb;
    return b < a;
  }
};

namespace detail {

inline void partitions_rec(int remaining, int max_part, std::vector<int>& cur,
                           std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions_rec(remaining - part, part, cur, out);
    cur.pop_back();
  }
}

}  // namespace detail

/// All partitions of n in reverse-lexicographic order, e.g. n=3 gives
/// (3), (2,1), (1,1,1).
inline std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: negative weight");
  std::vector<Partition> out;
  std::vector<int> cur;
  detail::partitions_rec(n, n, cur, out);
  return out;
}

/// All partitions of weight at most n, in GradedOrder.
inline std::vector<Partition> partitions_up_to(int n) {
  std::vector<Partition> out;
  for (int k = 0; k <= n; ++k) {
    auto level = partitions_of(k);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

/// Bracketed text form, e.g. "[2,1]"; the zero partition is "[]".
inline std::string to_string(const Partition& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.length(); ++i) {
    if (i) s += ',';
    s += std::to_string(p[i]);
  }
  return s + "]";
}

/// Multiplicities m_i of each part size i (index 0 unused).
inline std::vector<int> multiplicities(const Partition& p) {
  std::vector<int> m(p.empty() ? 1 : p[0] + 1, 0);
  for (int part : p) ++m[part];
  return m;
}

/// Union of the multisets of parts.
inline Partition join(const Partition& a, const Partition& b) {
  std::vector<int> parts(a.begin(), a.end());
  parts.insert(parts.end(), b.begin(), b.end());
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

/// Every part multiplied by k.
inline Partition scale(const Partition& p, int k) {
  std::vector<int> parts(p.begin(), p.end());
  for (auto& x : parts) x *= k;
  return Partition(std::move(parts));
}

}  // namespace charhopf
