#pragma once

// Plethysm f[g] computed in the power-sum basis.
//
// The Schur/power-sum transition uses symmetric group characters:
//   s_λ = Σ_μ χ^λ(μ) / z_μ · p_μ,    p_μ = Σ_λ χ^λ(μ) s_λ,
// with χ^λ(μ) from the Murnaghan-Nakayama rule. Exact rationals never leave
// this header.

#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "charhopf/schur_ring.hpp"

namespace charhopf {

/// Combination of power-sum products p_μ = p_{μ1} p_{μ2} ... with rational
/// coefficients.
class PowerSumFunc {
 public:
  using Terms = std::map<Partition, Rational, GradedOrder>;

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  static PowerSumFunc p(Partition mu, const Rational& c = 1) {
    PowerSumFunc out;
    out.add(std::move(mu), c);
    return out;
  }

  void add(const Partition& mu, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(mu, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Rational coeff(const Partition& mu) const {
    auto it = terms_.find(mu);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  PowerSumFunc& operator+=(const PowerSumFunc& o) {
    for (const auto& [mu, c] : o.terms_) add(mu, c);
    return *this;
  }

  friend PowerSumFunc operator*(const PowerSumFunc& a, const PowerSumFunc& b) {
    PowerSumFunc out;
    for (const auto& [mu, c] : a.terms_)
      for (const auto& [nu, d] : b.terms_) out.add(join(mu, nu), c * d);
    return out;
  }

  friend bool operator==(const PowerSumFunc&, const PowerSumFunc&) = default;

 private:
  Terms terms_;
};

namespace detail {

// Beta-set (first-column hook lengths) of λ padded to `len` parts.
inline std::vector<int> beta_set(const Partition& lambda, std::size_t len) {
  std::vector<int> beta(len);
  for (std::size_t i = 0; i < len; ++i) beta[i] = lambda[i] + static_cast<int>(len - 1 - i);
  return beta;
}

inline Partition from_beta_set(std::vector<int> beta) {
  std::sort(beta.begin(), beta.end(), std::greater<>());
  const std::size_t len = beta.size();
  std::vector<int> parts(len);
  for (std::size_t i = 0; i < len; ++i) parts[i] = beta[i] - static_cast<int>(len - 1 - i);
  return Partition(std::move(parts));
}

}  // namespace detail

/// Irreducible character χ^λ at the class of cycle type μ.
inline long long mn_character(const Partition& lambda, const Partition& mu) {
  if (lambda.weight() != mu.weight())
    throw std::invalid_argument("mn_character: |" + to_string(lambda) + "| != |" + to_string(mu) + "|");
  if (mu.empty()) return 1;

  static std::mutex mtx;
  static std::map<std::pair<Partition, Partition>, long long> cache;
  {
    std::lock_guard lock(mtx);
    auto it = cache.find({lambda, mu});
    if (it != cache.end()) return it->second;
  }

  // Remove a rim hook of length r = μ_1: move a bead from b to b − r on the
  // abacus; the sign is (−1)^(beads strictly between).
  const int r = mu[0];
  const Partition rest(std::vector<int>(mu.begin() + 1, mu.end()));
  const auto beta = detail::beta_set(lambda, lambda.length());
  const std::set<int> beads(beta.begin(), beta.end());
  long long total = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    const int b = beta[i];
    const int target = b - r;
    if (target < 0 || beads.count(target)) continue;
    int between = 0;
    for (int x : beta)
      if (x > target && x < b) ++between;
    auto moved = beta;
    moved[i] = target;
    const long long sign = (between % 2) ? -1 : 1;
    total += sign * mn_character(detail::from_beta_set(moved), rest);
  }

  std::lock_guard lock(mtx);
  cache.emplace(std::pair{lambda, mu}, total);
  return total;
}

/// Centralizer order z_μ = Π i^{m_i} m_i!.
inline Integer z_factor(const Partition& mu) {
  Integer z = 1;
  const auto m = multiplicities(mu);
  for (std::size_t i = 1; i < m.size(); ++i)
    for (int k = 1; k <= m[i]; ++k) z *= Integer(static_cast<long long>(i) * k);
  return z;
}

inline PowerSumFunc to_powersum(const SymFunc& f) {
  PowerSumFunc out;
  for (const auto& [lambda, c] : f.terms())
    for (const auto& mu : partitions_of(lambda.weight()))
      out.add(mu, Rational(c * mn_character(lambda, mu)) / Rational(z_factor(mu)));
  return out;
}

/// Inverse transition. Throws std::domain_error naming the offending
/// partition if a Schur coefficient is not an integer.
inline SymFunc from_powersum(const PowerSumFunc& q) {
  std::map<Partition, Rational, GradedOrder> acc;
  for (const auto& [mu, c] : q.terms())
    for (const auto& lambda : partitions_of(mu.weight())) {
      const long long chi = mn_character(lambda, mu);
      if (chi != 0) acc[lambda] += c * chi;
    }
  SymFunc out;
  for (const auto& [lambda, c] : acc) {
    if (boost::multiprecision::denominator(c) != 1)
      throw std::domain_error("from_powersum: non-integral coefficient " + c.str() + " at s" + to_string(lambda));
    out.add(lambda, boost::multiprecision::numerator(c));
  }
  return out;
}

/// p_n[g]: every p_k in g becomes p_{nk}; rational coefficients unchanged.
inline PowerSumFunc powersum_plethysm(int n, const PowerSumFunc& g) {
  PowerSumFunc out;
  for (const auto& [mu, c] : g.terms()) out.add(scale(mu, n), c);
  return out;
}

/// f[g] for Schur-basis f and g.
inline SymFunc plethysm(const SymFunc& f, const SymFunc& g) {
  if (f.is_zero()) return {};
  const PowerSumFunc fp = to_powersum(f);
  const PowerSumFunc gp = to_powersum(g);

  std::map<int, PowerSumFunc> pn_of_g;
  auto pn = [&](int n) -> const PowerSumFunc& {
    auto it = pn_of_g.find(n);
    if (it == pn_of_g.end()) it = pn_of_g.emplace(n, powersum_plethysm(n, gp)).first;
    return it->second;
  };

  PowerSumFunc result;
  for (const auto& [mu, c] : fp.terms()) {
    PowerSumFunc term = PowerSumFunc::p(Partition{}, c);
    for (int part : mu) term = term * pn(part);
    result += term;
  }
  return from_powersum(result);
}

/// s_λ[s_μ], memoized.
inline const SymFunc& schur_plethysm(const Partition& lambda, const Partition& mu) {
  static std::mutex mtx;
  static std::map<std::pair<Partition, Partition>, SymFunc> cache;
  {
    std::lock_guard lock(mtx);
    auto it = cache.find({lambda, mu});
    if (it != cache.end()) return it->second;
  }
  SymFunc value = plethysm(SymFunc::schur(lambda), SymFunc::schur(mu));
  std::lock_guard lock(mtx);
  return cache.try_emplace(std::pair{lambda, mu}, std::move(value)).first->second;
}

}  // namespace charhopf
