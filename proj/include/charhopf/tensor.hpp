#pragma once

#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "charhopf/symfunc.hpp"

namespace charhopf {

/// Whether a tensor slot lives in Λ or in its dual Λ*. Primal slots are
/// acted on by multiplication, dual slots by skewing.
enum class Orientation { primal, dual };

inline const char* to_string(Orientation o) { return o == Orientation::primal ? "primal" : "dual"; }

using SlotKey = std::vector<Partition>;

struct SlotKeyOrder {
  bool operator()(const SlotKey& a, const SlotKey& b) const noexcept {
    GradedOrder less;
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
      if (less(a[i], b[i])) return true;
      if (less(b[i], a[i])) return false;
    }
    return a.size() < b.size();
  }
};

/// A finite integer combination of pure tensors s_λ1 ⊗ ... ⊗ s_λk, each
/// slot carrying an orientation.
class TensorSF {
 public:
  using Terms = std::map<SlotKey, Integer, SlotKeyOrder>;

  explicit TensorSF(std::size_t rank = 2) : orientation_(rank, Orientation::primal) {
    if (rank == 0) throw std::invalid_argument("TensorSF rank must be at least 1");
  }

  explicit TensorSF(std::vector<Orientation> orientation) : orientation_(std::move(orientation)) {
    if (orientation_.empty()) throw std::invalid_argument("TensorSF rank must be at least 1");
  }

  std::size_t rank() const noexcept { return orientation_.size(); }
  const std::vector<Orientation>& orientation() const noexcept { return orientation_; }
  Orientation orientation(std::size_t slot) const { return orientation_.at(slot); }
  void set_orientation(std::size_t slot, Orientation o) { orientation_.at(slot) = o; }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  Integer coeff(const SlotKey& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  void add(const SlotKey& key, const Integer& c) {
    if (key.size() != rank()) throw std::invalid_argument("TensorSF: key rank mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// Keeps a term iff every slot degree is at most max_degree.
  TensorSF truncate(int max_degree) const {
    TensorSF out(orientation_);
    for (const auto& [key, c] : terms_) {
      bool keep = true;
      for (const auto& p : key) keep = keep && p.weight() <= max_degree;
      if (keep) out.terms_.emplace(key, c);
    }
    return out;
  }

  /// Keeps a term iff the sum of its slot degrees is at most max_total.
  TensorSF truncate_total(int max_total) const {
    TensorSF out(orientation_);
    for (const auto& [key, c] : terms_) {
      int total = 0;
      for (const auto& p : key) total += p.weight();
      if (total <= max_total) out.terms_.emplace(key, c);
    }
    return out;
  }

  TensorSF& operator+=(const TensorSF& o) {
    check_compatible(o);
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  TensorSF& operator-=(const TensorSF& o) {
    check_compatible(o);
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }
  TensorSF& operator*=(const Integer& k) {
    if (k == 0) terms_.clear();
    for (auto& [key, c] : terms_) c *= k;
    return *this;
  }

  friend TensorSF operator+(TensorSF a, const TensorSF& b) { return a += b; }
  friend TensorSF operator-(TensorSF a, const TensorSF& b) { return a -= b; }
  friend TensorSF operator*(TensorSF a, const Integer& k) { return a *= k; }

  friend bool operator==(const TensorSF&, const TensorSF&) = default;

 private:
  void check_compatible(const TensorSF& o) const {
    if (o.orientation_ != orientation_)
      throw std::invalid_argument("TensorSF: rank or orientation mismatch");
  }

  std::vector<Orientation> orientation_;
  Terms terms_;
};

/// f1 ⊗ f2 ⊗ ... as a TensorSF with all-primal slots.
inline TensorSF tensor(const std::vector<SymFunc>& factors) {
  TensorSF out(factors.size());
  SlotKey key(factors.size());
  auto rec = [&](auto&& self, std::size_t slot, const Integer& c) -> void {
    if (slot == factors.size()) {
      out.add(key, c);
      return;
    }
    for (const auto& [p, k] : factors[slot].terms()) {
      key[slot] = p;
      self(self, slot + 1, c * k);
    }
  };
  rec(rec, 0, Integer(1));
  return out;
}

inline TensorSF tensor(const SymFunc& a, const SymFunc& b) { return tensor(std::vector<SymFunc>{a, b}); }

/// Embeds a SymFunc as a rank-1 tensor.
inline TensorSF as_tensor(const SymFunc& f) { return tensor(std::vector<SymFunc>{f}); }

/// Inverse of as_tensor; the tensor must have rank 1.
inline SymFunc as_symfunc(const TensorSF& t) {
  if (t.rank() != 1) throw std::invalid_argument("as_symfunc: tensor rank is not 1");
  SymFunc f;
  for (const auto& [key, c] : t.terms()) f.add(key[0], c);
  return f;
}

/// Total degree of the highest term; -1 for zero.
inline int total_degree(const TensorSF& t) {
  int best = -1;
  for (const auto& [key, c] : t.terms()) {
    int total = 0;
    for (const auto& p : key) total += p.weight();
    best = std::max(best, total);
  }
  return best;
}

}  // namespace charhopf
