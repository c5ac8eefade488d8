#pragma once

#include <map>
#include <utility>

#include "charhopf/integer.hpp"
#include "charhopf/partition.hpp"

namespace charhopf {

/// A finite integer combination of Schur functions s_λ.
///
/// Terms are kept in GradedOrder and zero coefficients are never stored, so
/// two SymFuncs compare equal iff they are the same element of the ring.
class SymFunc {
 public:
  using Terms = std::map<Partition, Integer, GradedOrder>;

  SymFunc() = default;

  /// The scalar c·s_().
  explicit SymFunc(const Integer& c) { add(Partition{}, c); }

  static SymFunc schur(Partition p, const Integer& c = 1) {
    SymFunc f;
    f.add(std::move(p), c);
    return f;
  }

  static SymFunc one() { return schur(Partition{}); }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  Integer coeff(const Partition& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  void add(const Partition& p, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(p, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// Largest weight present; -1 for the zero function.
  int degree() const noexcept { return terms_.empty() ? -1 : terms_.rbegin()->first.weight(); }

  /// Terms of weight exactly n.
  SymFunc grade(int n) const {
    SymFunc out;
    for (const auto& [p, c] : terms_)
      if (p.weight() == n) out.terms_.emplace(p, c);
    return out;
  }

  /// Drops every term of weight above max_degree.
  SymFunc truncate(int max_degree) const {
    SymFunc out;
    for (const auto& [p, c] : terms_) {
      if (p.weight() > max_degree) break;
      out.terms_.emplace(p, c);
    }
    return out;
  }

  SymFunc& operator+=(const SymFunc& o) {
    for (const auto& [p, c] : o.terms_) add(p, c);
    return *this;
  }
  SymFunc& operator-=(const SymFunc& o) {
    for (const auto& [p, c] : o.terms_) add(p, -c);
    return *this;
  }
  SymFunc& operator*=(const Integer& k) {
    if (k == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [p, c] : terms_) c *= k;
    return *this;
  }

  friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
  friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
  friend SymFunc operator-(SymFunc a) { return a *= Integer(-1); }
  friend SymFunc operator*(SymFunc a, const Integer& k) { return a *= k; }
  friend SymFunc operator*(const Integer& k, SymFunc a) { return a *= k; }

  friend bool operator==(const SymFunc&, const SymFunc&) = default;

 private:
  Terms terms_;
};

inline SymFunc s(std::initializer_list<int> parts) { return SymFunc::schur(Partition(parts)); }

}  // namespace charhopf
