#pragma once

// Monomial expansion of Schur functions via semistandard tableaux. Used as
// an independent oracle for the LR and plethysm machinery; it shares no code
// with either.

#include <map>
#include <mutex>
#include <vector>

#include "charhopf/symfunc.hpp"

namespace charhopf {

/// Sparse polynomial: exponent vector -> coefficient.
class Polynomial {
 public:
  using Exponents = std::vector<int>;
  using Terms = std::map<Exponents, Integer>;

  explicit Polynomial(int nvars = 0) : nvars_(nvars) {}

  int nvars() const noexcept { return nvars_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  static Polynomial constant(int nvars, const Integer& c) {
    Polynomial p(nvars);
    p.add(Exponents(nvars, 0), c);
    return p;
  }

  Integer coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  void add(const Exponents& e, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& o) {
    for (const auto& [e, c] : o.terms_) add(e, c);
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out(a.nvars_);
    Exponents e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
        out.add(e, ca * cb);
      }
    return out;
  }

  friend Polynomial operator*(Polynomial a, const Integer& k) {
    for (auto& [e, c] : a.terms_) c *= k;
    if (k == 0) a.terms_.clear();
    return a;
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  int nvars_;
  Terms terms_;
};

namespace detail {

inline void ssyt_rec(const Partition& shape, int nvars, std::size_t row, int col, std::vector<std::vector<int>>& fill,
                     std::vector<int>& exps, Polynomial& out) {
  if (row == shape.length()) {
    out.add(exps, 1);
    return;
  }
  if (col == shape[row]) {
    ssyt_rec(shape, nvars, row + 1, 0, fill, exps, out);
    return;
  }
  int lo = 1;
  if (col > 0) lo = std::max(lo, fill[row][col - 1]);
  if (row > 0) lo = std::max(lo, fill[row - 1][col] + 1);
  for (int v = lo; v <= nvars; ++v) {
    fill[row][col] = v;
    ++exps[v - 1];
    ssyt_rec(shape, nvars, row, col + 1, fill, exps, out);
    --exps[v - 1];
  }
}

}  // namespace detail

/// s_λ(x_1..x_n) as the sum over semistandard tableaux of x^T.
inline Polynomial schur_polynomial(const Partition& lambda, int nvars) {
  static std::mutex mu;
  static std::map<std::pair<Partition, int>, Polynomial> cache;
  {
    std::lock_guard lock(mu);
    auto it = cache.find({lambda, nvars});
    if (it != cache.end()) return it->second;
  }
  Polynomial out(nvars);
  std::vector<std::vector<int>> fill;
  for (int row : lambda) fill.emplace_back(row, 0);
  std::vector<int> exps(nvars, 0);
  detail::ssyt_rec(lambda, nvars, 0, 0, fill, exps, out);
  std::lock_guard lock(mu);
  cache.emplace(std::pair{lambda, nvars}, out);
  return out;
}

/// Specialisation of f to n variables.
inline Polynomial monomial_oracle(const SymFunc& f, int nvars) {
  Polynomial out(nvars);
  for (const auto& [p, c] : f.terms()) out += schur_polynomial(p, nvars) * c;
  return out;
}

}  // namespace charhopf
