#include <gtest/gtest.h>

#include "charhopf/monomial.hpp"
#include "charhopf/schur_ring.hpp"
#include "oracles/oracles.hpp"

using namespace charhopf;

namespace {

TensorSF pure(std::initializer_list<std::pair<std::pair<Partition, Partition>, int>> terms) {
  TensorSF t(2);
  for (const auto& [k, c] : terms) t.add({k.first, k.second}, c);
  return t;
}

Polynomial mono(int nvars, std::vector<int> e, int c = 1) {
  Polynomial p(nvars);
  p.add(e, c);
  return p;
}

}  // namespace

TEST(OuterProduct, Examples) {
  EXPECT_EQ(s({1}) * s({1}), s({2}) + s({1, 1}));
  EXPECT_EQ(s({}) * (s({2}) + s({1, 1})), s({2}) + s({1, 1}));
  EXPECT_EQ(s({2}) * s({1, 1}), s({3, 1}) + s({2, 1, 1}));
  EXPECT_EQ(s({2, 1}) * s({2, 1}), s({4, 2}) + s({4, 1, 1}) + s({3, 3}) + 2 * s({3, 2, 1}) + s({3, 1, 1, 1}) +
                                       s({2, 2, 2}) + s({2, 2, 1, 1}));
  EXPECT_TRUE((SymFunc{} * s({2})).is_zero());
}

TEST(OuterProduct, ExamplesAgainstMonomialOracle) {
  EXPECT_EQ(monomial_oracle(s({1}) * s({1}), 4), monomial_oracle(s({1}), 4) * monomial_oracle(s({1}), 4));
  EXPECT_EQ(monomial_oracle(s({2}) * s({1, 1}), 4), monomial_oracle(s({2}), 4) * monomial_oracle(s({1, 1}), 4));
}

TEST(OuterProduct, MatchesMonomialOracleSmall) {
  for (const auto& a : partitions_up_to(3))
    for (const auto& b : partitions_up_to(3)) {
      const SymFunc fa = SymFunc::schur(a), fb = SymFunc::schur(b);
      EXPECT_EQ(monomial_oracle(fa * fb, 6), monomial_oracle(fa, 6) * monomial_oracle(fb, 6))
          << to_string(a) << " " << to_string(b);
    }
}

TEST(OuterProduct, CommutativeAndAssociative) {
  const auto basis = partitions_up_to(4);
  for (const auto& a : basis)
    for (const auto& b : basis) {
      const SymFunc fa = SymFunc::schur(a), fb = SymFunc::schur(b);
      EXPECT_EQ(fa * fb, fb * fa);
    }
  for (const auto& a : basis)
    for (const auto& b : basis)
      for (const auto& c : basis) {
        const SymFunc fa = SymFunc::schur(a), fb = SymFunc::schur(b), fc = SymFunc::schur(c);
        ASSERT_EQ((fa * fb) * fc, fa * (fb * fc)) << to_string(a) << to_string(b) << to_string(c);
      }
}

TEST(OuterProduct, TruncatedProductIsExactBelowBound) {
  const SymFunc f = s({}) + s({1}) + s({2}) + s({1, 1}) + 3 * s({2, 1});
  for (int d = 0; d <= 6; ++d) EXPECT_EQ(outer_product(f, f, d), (f * f).truncate(d));
}

TEST(LittlewoodRichardson, Symmetries) {
  for (int n = 0; n <= 8; ++n)
    for (const auto& nu : partitions_of(n))
      for (const auto& lambda : partitions_up_to(n))
        for (const auto& mu : partitions_of(n - lambda.weight())) {
          const long long c = lr_coefficient(lambda, mu, nu);
          ASSERT_GE(c, 0);
          ASSERT_EQ(c, lr_coefficient(mu, lambda, nu));
          ASSERT_EQ(c, lr_coefficient(conjugate(lambda), conjugate(mu), conjugate(nu)));
          if (!contains(nu, lambda) || !contains(nu, mu)) ASSERT_EQ(c, 0);
        }
  EXPECT_EQ(lr_coefficient({2, 1}, {2, 1}, {3, 2, 1}), 2);
  EXPECT_EQ(lr_coefficient({1}, {1}, {3}), 0);
}

TEST(LittlewoodRichardson, ProductAndSkewAgree) {
  for (const auto& lambda : partitions_up_to(4))
    for (const auto& mu : partitions_up_to(4))
      for (const auto& [nu, c] : lr_product(lambda, mu)) EXPECT_EQ(lr_coefficient(lambda, mu, nu), c);
}

TEST(Coproduct, Examples) {
  EXPECT_EQ(coproduct(s({2})), pure({{{{2}, {}}, 1}, {{{1}, {1}}, 1}, {{{}, {2}}, 1}}));
  EXPECT_EQ(coproduct(s({3})), pure({{{{3}, {}}, 1}, {{{}, {3}}, 1}, {{{1}, {2}}, 1}, {{{2}, {1}}, 1}}));
  EXPECT_EQ(coproduct(s({})), pure({{{{}, {}}, 1}}));
  EXPECT_TRUE(coproduct(SymFunc{}).is_zero());
}

TEST(Coproduct, CutCoproduct) {
  EXPECT_EQ(cut_coproduct(s({2})), pure({{{{1}, {1}}, 1}}));
  using Pairs = std::vector<std::pair<Partition, Partition>>;
  EXPECT_EQ(cut_coproduct_pairs({2}), (Pairs{{{1}, {1}}}));
  EXPECT_EQ(cut_coproduct_pairs({3}), (Pairs{{{1}, {2}}, {{2}, {1}}}));
  EXPECT_TRUE(cut_coproduct_pairs({1}).empty());
  // Repetition follows the LR multiplicity.
  const auto pairs = cut_coproduct_pairs({3, 2, 1});
  EXPECT_EQ(std::count(pairs.begin(), pairs.end(), std::pair<Partition, Partition>{{2, 1}, {2, 1}}), 2);
}

TEST(Coproduct, DualToProduct) {
  for (int n = 0; n <= 6; ++n)
    for (const auto& f : partitions_of(n))
      for (int k = 0; k <= n; ++k)
        for (const auto& g : partitions_of(k))
          for (const auto& h : partitions_of(n - k)) {
            const SymFunc sf = SymFunc::schur(f), sg = SymFunc::schur(g), sh = SymFunc::schur(h);
            ASSERT_EQ(schur_hall(coproduct(sf), tensor(sg, sh)), schur_hall(sf, sg * sh));
          }
}

TEST(Coproduct, IsAlgebraMorphism) {
  for (const auto& a : partitions_up_to(3))
    for (const auto& b : partitions_up_to(3)) {
      const SymFunc fa = SymFunc::schur(a), fb = SymFunc::schur(b);
      EXPECT_EQ(coproduct(fa * fb), componentwise_product(coproduct(fa), coproduct(fb)));
    }
}

TEST(Coproduct, CounitAxiom) {
  for (const auto& p : partitions_up_to(6)) {
    const SymFunc f = SymFunc::schur(p);
    EXPECT_EQ(counit_slot(coproduct(f), 0), as_tensor(f));
    EXPECT_EQ(counit_slot(coproduct(f), 1), as_tensor(f));
  }
}

TEST(Skew, Examples) {
  EXPECT_EQ(skew(s({2, 1}), s({1})), s({2}) + s({1, 1}));
  EXPECT_EQ(skew(s({3, 1}) + s({2}), s({})), s({3, 1}) + s({2}));
  EXPECT_TRUE(skew(s({1}), s({2})).is_zero());
  EXPECT_TRUE(skew(s({2, 2}), s({3})).is_zero());
}

TEST(Skew, AdjointOfMultiplication) {
  for (int n = 0; n <= 5; ++n)
    for (const auto& mu : partitions_of(n))
      for (const auto& lambda : partitions_up_to(n)) {
        const SymFunc quotient = skew(SymFunc::schur(mu), SymFunc::schur(lambda));
        for (const auto& alpha : partitions_of(n - lambda.weight()))
          ASSERT_EQ(quotient.coeff(alpha), schur_hall(SymFunc::schur(lambda) * SymFunc::schur(alpha), SymFunc::schur(mu)));
      }
}

TEST(Antipode, Examples) {
  EXPECT_EQ(antipode(s({2, 1})), -s({2, 1}));
  EXPECT_EQ(antipode(s({})), s({}));
  EXPECT_EQ(antipode(s({3})), -s({1, 1, 1}));
}

TEST(Antipode, ConvolutionInverseAndInvolution) {
  for (const auto& p : partitions_up_to(6)) {
    const SymFunc f = SymFunc::schur(p);
    const SymFunc eps(counit(f));
    EXPECT_EQ(multiply_slots(antipode_slot(coproduct(f), 0)), eps) << to_string(p);
    EXPECT_EQ(multiply_slots(antipode_slot(coproduct(f), 1)), eps) << to_string(p);
    EXPECT_EQ(antipode(antipode(f)), f);
  }
}

TEST(Antipode, IsAlgebraMorphism) {
  for (const auto& a : partitions_up_to(3))
    for (const auto& b : partitions_up_to(3)) {
      const SymFunc fa = SymFunc::schur(a), fb = SymFunc::schur(b);
      EXPECT_EQ(antipode(fa * fb), antipode(fa) * antipode(fb));
    }
}

TEST(Counit, Examples) {
  EXPECT_EQ(counit(s({})), 1);
  EXPECT_EQ(counit(s({2})), 0);
  EXPECT_EQ(counit(3 * s({}) - 2 * s({1, 1})), 3);
}

TEST(SchurHall, Examples) {
  EXPECT_EQ(schur_hall(s({2}), s({2})), 1);
  EXPECT_EQ(schur_hall(s({2}), s({1, 1})), 0);
  EXPECT_EQ(schur_hall(s({1}) * s({1}), s({2})), 1);
  EXPECT_EQ(schur_hall(SymFunc{}, s({2})), 0);
}

TEST(Kernels, Cauchy) {
  EXPECT_EQ(cauchy_kernel(0), pure({{{{}, {}}, 1}}));
  EXPECT_EQ(cauchy_kernel(1), pure({{{{}, {}}, 1}, {{{1}, {1}}, 1}}));
  EXPECT_EQ(cauchy_kernel(2),
            pure({{{{}, {}}, 1}, {{{1}, {1}}, 1}, {{{2}, {2}}, 1}, {{{1, 1}, {1, 1}}, 1}}));
}

TEST(Kernels, CauchyBinet) {
  EXPECT_EQ(cauchy_binet_kernel(0), pure({{{{}, {}}, 1}}));
  EXPECT_EQ(cauchy_binet_kernel(1), pure({{{{}, {}}, 1}, {{{1}, {1}}, -1}}));
  EXPECT_EQ(cauchy_binet_kernel(2),
            pure({{{{}, {}}, 1}, {{{1}, {1}}, -1}, {{{2}, {1, 1}}, 1}, {{{1, 1}, {2}}, 1}}));
}

TEST(Kernels, CauchyTimesCauchyBinetIsOne) {
  // Componentwise, the kernels are inverse to each other once the second is
  // read with its slots swapped through the antipode.
  const TensorSF c = cauchy_kernel(5);
  const TensorSF cb = map_slot(cauchy_kernel(5), 0, [](const SymFunc& f) { return antipode(f); });
  EXPECT_EQ(componentwise_product(c, cb, 5), tensor(s({}), s({})));
}

TEST(MonomialOracle, Examples) {
  // s_{2,1}(x1,x2,x3) = Σ_{i≠j} x_i² x_j + 2 x1 x2 x3.
  Polynomial expected(3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      std::vector<int> e(3, 0);
      e[i] = 2;
      e[j] = 1;
      expected.add(e, 1);
    }
  expected.add({1, 1, 1}, 2);
  EXPECT_EQ(monomial_oracle(s({2, 1}), 3), expected);
  EXPECT_EQ(monomial_oracle(s({}), 5), Polynomial::constant(5, 1));
  EXPECT_EQ(monomial_oracle(s({1, 1}), 2), mono(2, {1, 1}));
  EXPECT_TRUE(monomial_oracle(s({1, 1, 1}), 2).is_zero());
}

TEST(MonomialOracle, AgreesWithAlphabetEnumeration) {
  for (const auto& p : partitions_up_to(4))
    EXPECT_EQ(monomial_oracle(SymFunc::schur(p), 4), oracle::schur_on_alphabet(p, oracle::variables(4), 4));
}

TEST(TensorSF, SlotTruncationAndOrientation) {
  TensorSF t(2);
  t.add({{2}, {1}}, 1);
  t.add({{3}, {}}, 2);
  EXPECT_EQ(t.truncate(2).size(), 1u);
  EXPECT_EQ(t.truncate_total(3).size(), 2u);
  TensorSF u(std::vector<Orientation>{Orientation::primal, Orientation::dual});
  EXPECT_THROW(t += u, std::invalid_argument);
  EXPECT_THROW(t.add({{1}}, 1), std::invalid_argument);
}
