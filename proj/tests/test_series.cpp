#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>

#include "charhopf/monomial.hpp"
#include "charhopf/series.hpp"
#include "oracles/oracles.hpp"

using namespace charhopf;

namespace {

const std::vector<Partition> kPis{{2}, {1, 1}, {3}, {2, 1}};

bool all_rows_even(const Partition& p) {
  for (int r : p)
    if (r % 2) return false;
  return true;
}

// Frobenius coordinates a_i = λ_i − i, b_i = λ'_i − i.
std::pair<std::vector<int>, std::vector<int>> frobenius(const Partition& p) {
  const Partition c = conjugate(p);
  std::vector<int> a, b;
  for (std::size_t i = 0; i < p.length() && p[i] > static_cast<int>(i); ++i) {
    a.push_back(p[i] - static_cast<int>(i) - 1);
    b.push_back(c[i] - static_cast<int>(i) - 1);
  }
  return {a, b};
}

bool arm_exceeds_leg_by_one(const Partition& p) {
  auto [a, b] = frobenius(p);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i] + 1) return false;
  return true;
}

SymFunc sum_where(int degree, bool (*pred)(const Partition&), bool conj, bool signed_half) {
  SymFunc out;
  for (const auto& p : partitions_up_to(degree)) {
    if (!pred(p)) continue;
    const Partition q = conj ? conjugate(p) : p;
    out.add(q, signed_half && (p.weight() / 2) % 2 ? -1 : 1);
  }
  return out;
}

// Π_{i≤j} (1 − x_i x_j)^{sign}, to total degree d, in n variables.
Polynomial quadratic_product(int nvars, int d, bool inverse) {
  Polynomial acc = Polynomial::constant(nvars, 1);
  for (int i = 0; i < nvars; ++i)
    for (int j = i; j < nvars; ++j) {
      const Polynomial q = oracle::variable(nvars, i) * oracle::variable(nvars, j);
      Polynomial factor = Polynomial::constant(nvars, 1);
      if (inverse) {
        Polynomial power = Polynomial::constant(nvars, 1);
        for (int k = 1; 2 * k <= d; ++k) {
          power = power * q;
          factor += power;
        }
      } else {
        factor += q * Integer(-1);
      }
      acc = oracle::truncate(acc * factor, d);
    }
  return acc;
}

}  // namespace

TEST(Series, Examples) {
  EXPECT_EQ(series({2}, SeriesKind::M, 4).value, s({}) + s({2}) + s({4}) + s({2, 2}));
  EXPECT_EQ(series({1, 1}, SeriesKind::L, 2).value, s({}) - s({1, 1}));
  EXPECT_EQ(series({2}, SeriesKind::L, 2).value, s({}) - s({2}));
  EXPECT_EQ(series({2, 1}, SeriesKind::M, 3).value, s({}) + s({2, 1}));
  EXPECT_EQ(series({2}, SeriesKind::M, 0).value, s({}));
  EXPECT_THROW(series({}, SeriesKind::M, 4), std::invalid_argument);
  EXPECT_THROW(series({2}, SeriesKind::M, -1), std::invalid_argument);
}

TEST(Series, QuadraticSeriesAgainstProductFormula) {
  const int n = 4, d = 4;
  EXPECT_EQ(monomial_oracle(series({2}, SeriesKind::L, d).value, n), quadratic_product(n, d, false));
  EXPECT_EQ(monomial_oracle(series({2}, SeriesKind::M, d).value, n), quadratic_product(n, d, true));
}

TEST(Series, GradeStructureAndSigns) {
  for (const auto& pi : kPis)
    for (auto kind : {SeriesKind::M, SeriesKind::L}) {
      const SymFunc& v = series(pi, kind, 8).value;
      EXPECT_EQ(v.grade(0), s({}));
      for (const auto& [p, c] : v.terms()) {
        ASSERT_EQ(p.weight() % pi.weight(), 0) << to_string(p);
        const int n = p.weight() / pi.weight();
        const int sign = kind == SeriesKind::L && n % 2 ? -1 : 1;
        EXPECT_GT(c * sign, 0) << to_string(pi) << " " << to_string(p);
      }
    }
}

TEST(Series, TruncationIsConsistent) {
  for (const auto& pi : kPis)
    for (int d = 0; d <= 6; ++d)
      EXPECT_EQ(series(pi, SeriesKind::M, d).value, series(pi, SeriesKind::M, 8).value.truncate(d));
}

TEST(Series, MTimesLIsOne) {
  for (const auto& pi : kPis)
    for (int d = 0; d <= 6; ++d)
      EXPECT_EQ(outer_product(series(pi, SeriesKind::M, d).value, series(pi, SeriesKind::L, d).value, d), s({}))
          << to_string(pi) << " D=" << d;
}

TEST(Series, ClassicalCharacterisations) {
  const int d = 8;
  // D: even rows; B: even columns.
  EXPECT_EQ(series({2}, SeriesKind::M, d).value, sum_where(d, all_rows_even, false, false));
  EXPECT_EQ(series({1, 1}, SeriesKind::M, d).value, sum_where(d, all_rows_even, true, false));
  // C: Frobenius arm = leg + 1 with sign (−1)^{|γ|/2}; A: the conjugates.
  EXPECT_EQ(series({2}, SeriesKind::L, d).value, sum_where(d, arm_exceeds_leg_by_one, false, true));
  EXPECT_EQ(series({1, 1}, SeriesKind::L, d).value, sum_where(d, arm_exceeds_leg_by_one, true, true));
}

TEST(Branching, Examples) {
  EXPECT_EQ(branch_to_subgroup(s({2}), {2}, 2), s({2}) + s({}));
  EXPECT_EQ(branch_to_subgroup(s({1}), {2}, 2), s({1}));
  EXPECT_EQ(branch_to_subgroup(s({}), {3}, 4), s({}));
  EXPECT_EQ(branch_to_group(s({2}) + s({}), {2}, 2), s({2}));
  EXPECT_EQ(branch_to_group(s({1}), {2}, 2), s({1}));
  EXPECT_EQ(branch_to_group(s({}), {2, 1}, 3), s({}));
}

TEST(Branching, RoundTrip) {
  for (const auto& pi : kPis)
    for (int d = 0; d <= 6; ++d)
      for (const auto& lambda : partitions_up_to(d)) {
        const SymFunc f = SymFunc::schur(lambda);
        EXPECT_EQ(branch_to_group(branch_to_subgroup(f, pi, d), pi, d), f);
        EXPECT_EQ(branch_to_subgroup(branch_to_group(f, pi, d), pi, d), f);
      }
}

TEST(Series, DiskCache) {
  const auto dir = std::filesystem::temp_directory_path() / "charhopf_series_cache_test";
  std::filesystem::remove_all(dir);
  ::setenv("CHARHOPF_CACHE_DIR", dir.c_str(), 1);
  const SymFunc fresh = detail::series_value({3}, SeriesKind::L, 6);
  const auto file = detail::series_cache_file(dir, {3}, SeriesKind::L, 6);
  ASSERT_TRUE(std::filesystem::exists(file));
  EXPECT_EQ(detail::series_value({3}, SeriesKind::L, 6), fresh);
  {
    std::ofstream(file) << "not json";
  }
  EXPECT_EQ(detail::series_value({3}, SeriesKind::L, 6), fresh);
  ::unsetenv("CHARHOPF_CACHE_DIR");
  EXPECT_EQ(fresh, detail::compute_series({3}, SeriesKind::L, 6));
  std::filesystem::remove_all(dir);
}
