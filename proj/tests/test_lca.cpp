#include <gtest/gtest.h>

#include "oracle.hpp"
#include "tauh/errors.hpp"
#include "tauh/lca.hpp"
#include "tauh/random.hpp"

using namespace tauh;

namespace {

const Complex I{0, 1};

KFunction from_values(const FiniteLcaGroup& K, Domain d, std::vector<Complex> v) {
  return KFunction(K, d, std::move(v));
}

}  // namespace

TEST(GroupAdd, CyclicArithmetic) {
  const auto Z4 = FiniteLcaGroup::cyclic(4);
  EXPECT_EQ(group_add(Z4, Z4.element({3}), Z4.element({2})), Z4.element({1}));
  for (const auto& k : Z4.elements()) EXPECT_EQ(group_add(Z4, Z4.zero(), k), k);
}

TEST(GroupAdd, Componentwise) {
  const FiniteLcaGroup K({2, 3});
  EXPECT_EQ(group_add(K, K.element({1, 2}), K.element({1, 2})), K.element({0, 1}));
}

TEST(GroupAdd, RejectsForeignElements) {
  const FiniteLcaGroup K({2, 3});
  EXPECT_THROW(group_add(K, GroupElement{{1}}, K.zero()), StructuralError);
  EXPECT_THROW(group_add(K, GroupElement{{2, 0}}, K.zero()), StructuralError);
}

TEST(FiniteLcaGroup, RejectsBadDivisorsAndCap) {
  EXPECT_THROW(FiniteLcaGroup({0}), DomainError);
  EXPECT_THROW(FiniteLcaGroup({-3}), DomainError);
  EXPECT_THROW(FiniteLcaGroup({1000, 1000, 2}), CapacityError);
  EXPECT_NO_THROW(FiniteLcaGroup({1000, 1000}));
  EXPECT_EQ(FiniteLcaGroup({}).order(), 1);
}

TEST(FiniteLcaGroup, EnumerationIsMixedRadix) {
  const FiniteLcaGroup K({2, 3});
  const auto els = K.elements();
  ASSERT_EQ(els.size(), 6u);
  EXPECT_EQ(els[1], K.element({0, 1}));
  EXPECT_EQ(els[3], K.element({1, 0}));
  for (std::size_t i = 0; i < els.size(); ++i) EXPECT_EQ(K.index_of(els[i]), i);
  EXPECT_EQ(K.exponent(), 6);
}

TEST(CharEval, SpecValues) {
  const auto Z4 = FiniteLcaGroup::cyclic(4);
  EXPECT_EQ(char_eval(Z4, Character{Z4.element({1})}, Z4.element({1})), I);
  EXPECT_EQ(char_eval(Z4, Character{Z4.element({2})}, Z4.element({3})), Complex(-1, 0));
  const FiniteLcaGroup K({3, 5, 4});
  for (const auto& k : K.elements()) {
    EXPECT_EQ(char_eval(K, Character{K.zero()}, k), Complex(1, 0));
  }
}

TEST(CharEval, MatchesOracleAndIsHomomorphism) {
  // |K| = 60 <= 64: exhaustive over all (omega, k, s).
  const FiniteLcaGroup K({3, 5, 4});
  const auto n = oracle::divisors(K);
  const auto els = K.elements();
  for (const auto& w : els) {
    const Character omega{w};
    for (const auto& k : els) {
      const Complex v = char_eval(K, omega, k);
      EXPECT_NEAR(std::abs(v), 1.0, 1e-15);
      EXPECT_LT(std::abs(v - oracle::character(n, w.coords, k.coords)), 1e-14);
      for (const auto& s : els) {
        EXPECT_LT(std::abs(char_eval(K, omega, K.add(k, s)) - v * char_eval(K, omega, s)),
                  1e-14);
      }
    }
  }
}

TEST(FourierK, SpecExamplesZ4) {
  const auto Z4 = FiniteLcaGroup::cyclic(4);
  const auto delta0 = fourier_K(from_values(Z4, Domain::group, {1, 0, 0, 0}));
  EXPECT_EQ(delta0.domain, Domain::dual);
  for (const auto& z : delta0.values) EXPECT_LT(std::abs(z - 1.0), 1e-15);

  const auto ones = fourier_K(from_values(Z4, Domain::group, {1, 1, 1, 1}));
  const std::vector<Complex> want_ones{4, 0, 0, 0};
  EXPECT_LT(oracle::sup_diff(ones.values, want_ones), 1e-15);

  const auto omega1 = fourier_K(from_values(Z4, Domain::group, {1, I, -1.0, -I}));
  const std::vector<Complex> want_omega1{0, 4, 0, 0};
  EXPECT_LT(oracle::sup_diff(omega1.values, want_omega1), 1e-15);
}

TEST(InverseFourierK, SpecExamplesZ4) {
  const auto Z4 = FiniteLcaGroup::cyclic(4);
  const auto a = inverse_fourier_K(from_values(Z4, Domain::dual, {1, 1, 1, 1}));
  EXPECT_EQ(a.domain, Domain::group);
  const std::vector<Complex> delta0{1, 0, 0, 0};
  EXPECT_LT(oracle::sup_diff(a.values, delta0), 1e-15);
  const auto b = inverse_fourier_K(from_values(Z4, Domain::dual, {4, 0, 0, 0}));
  const std::vector<Complex> ones{1, 1, 1, 1};
  EXPECT_LT(oracle::sup_diff(b.values, ones), 1e-15);
}

TEST(FourierK, DomainTagsAreEnforced) {
  const auto Z4 = FiniteLcaGroup::cyclic(4);
  EXPECT_THROW(fourier_K(KFunction(Z4, Domain::dual)), StructuralError);
  EXPECT_THROW(inverse_fourier_K(KFunction(Z4, Domain::group)), StructuralError);
  EXPECT_THROW(KFunction(Z4, Domain::group, {1, 2}), StructuralError);
}

TEST(FourierK, MatchesBruteForceOnMixedGroups) {
  Rng rng(11);
  for (const std::vector<std::int64_t>& d :
       {std::vector<std::int64_t>{2, 3}, {6}, {4, 8}, {3, 5, 4}, {16}, {2, 2, 2, 3}, {7, 9}}) {
    const FiniteLcaGroup K(d);
    const auto v = random_kfunction(K, Domain::group, rng);
    EXPECT_LT(oracle::sup_diff(fourier_K(v).values, oracle::dft(d, v.values)), 1e-12)
        << K.describe();
    const auto phi = random_kfunction(K, Domain::dual, rng);
    EXPECT_LT(oracle::sup_diff(inverse_fourier_K(phi).values, oracle::idft(d, phi.values)),
              1e-13)
        << K.describe();
  }
}

TEST(FourierK, RoundTripAndUnitarity) {
  Rng rng(5);
  for (const std::vector<std::int64_t>& d :
       {std::vector<std::int64_t>{2, 3}, {64}, {5, 25}, {8, 3, 3}}) {
    const FiniteLcaGroup K(d);
    for (int t = 0; t < 20; ++t) {
      const auto v = random_kfunction(K, Domain::group, rng);
      const auto hat = fourier_K(v);
      EXPECT_LT(oracle::sup_diff(inverse_fourier_K(hat).values, v.values), 1e-12);
      const double lhs = inner_K(v, v, Measure::haar_K).real();
      const double rhs = inner_K(hat, hat, Measure::plancherel_Khat).real();
      EXPECT_LT(std::abs(lhs - rhs) / lhs, 1e-10);
    }
  }
}

TEST(InnerK, SpecValuesAndMeasureChecks) {
  const auto Z4 = FiniteLcaGroup::cyclic(4);
  const auto d0 = from_values(Z4, Domain::group, {1, 0, 0, 0});
  EXPECT_EQ(inner_K(d0, d0, Measure::haar_K), Complex(1, 0));
  const auto one = from_values(Z4, Domain::dual, {1, 1, 1, 1});
  EXPECT_EQ(inner_K(one, one, Measure::plancherel_Khat), Complex(1, 0));
  EXPECT_THROW(inner_K(d0, d0, Measure::plancherel_Khat), StructuralError);
  EXPECT_THROW(inner_K(d0, one, Measure::haar_K), StructuralError);
}

TEST(InnerK, ParsevalOnZ6) {
  // sum_k f(k) conj(g(k)) = (1/|K|) sum_w f^(w) conj(g^(w)), each side summed directly.
  const auto Z6 = FiniteLcaGroup::cyclic(6);
  Rng rng(3);
  for (int t = 0; t < 10; ++t) {
    const auto f = random_kfunction(Z6, Domain::group, rng);
    const auto phi = random_kfunction(Z6, Domain::dual, rng);
    KFunction g(Z6, Domain::group, oracle::idft({6}, phi.values));
    const Complex lhs = inner_K(f, g, Measure::haar_K);
    const Complex rhs = inner_K(fourier_K(f), phi, Measure::plancherel_Khat);
    EXPECT_LT(std::abs(lhs - rhs), 1e-12);
  }
}

TEST(Characters, AreOrthogonal) {
  const FiniteLcaGroup K({4, 6});
  const auto els = K.elements();
  for (const auto& i : els) {
    KFunction wi(K, Domain::group);
    for (const auto& k : els) wi[k] = char_eval(K, Character{i}, k);
    for (const auto& j : els) {
      KFunction wj(K, Domain::group);
      for (const auto& k : els) wj[k] = char_eval(K, Character{j}, k);
      const Complex ip = inner_K(wi, wj, Measure::haar_K);
      const double want = i == j ? static_cast<double>(K.order()) : 0.0;
      EXPECT_LT(std::abs(ip - want), 1e-12);
    }
  }
}
