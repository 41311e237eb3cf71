#include <gtest/gtest.h>

#include "oracle.hpp"
#include "tauh/catalog.hpp"
#include "tauh/errors.hpp"
#include "tauh/random.hpp"

using namespace tauh;

namespace {

GTauHatElement hat_at(const TauSystem& sys, std::size_t i) {
  const auto e = element_at(sys, i);
  return {e.h, Character{e.k}};
}

}  // namespace

TEST(FiniteAffine, SizesAndDegenerateCase) {
  const auto a5 = finite_affine(5);
  EXPECT_EQ(a5.system.order(), 20);
  EXPECT_EQ(a5.name, "affine:5");
  const auto a2 = finite_affine(2);
  EXPECT_EQ(a2.system.h_count(), 1u);
  EXPECT_EQ(a2.system.order(), 2);
  EXPECT_EQ(finite_affine(12).system.h_count(), 4u);
  EXPECT_THROW(finite_affine(1), DomainError);
}

TEST(FiniteAffine, GroupAxiomsExhaustive) {
  const auto sys = finite_affine(5).system;
  const auto n = static_cast<std::size_t>(sys.order());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t l = 0; l < n; ++l) {
        ASSERT_EQ(oracle::multiply(sys, oracle::multiply(sys, i, j), l),
                  oracle::multiply(sys, i, oracle::multiply(sys, j, l)));
      }
    }
  }
}

TEST(FiniteAffine, OmegaActionZ4) {
  const auto sys = finite_affine(4).system;
  const auto& K = sys.K();
  EXPECT_EQ(omega_action(sys, *sys.find_label("3"), Character{K.element({1})}),
            Character{K.element({3})});
}

TEST(FiniteHeisenberg, DualLawExampleN5) {
  const auto entry = finite_heisenberg(5);
  const auto& K = entry.system.K();
  const GTauHatElement x{1, Character{K.element({2, 3})}};
  const GTauHatElement y{2, Character{K.element({4, 1})}};
  const GTauHatElement want{3, Character{K.element({0, 4})}};
  EXPECT_EQ(entry.dual_law_oracle(x, y), want);
  EXPECT_EQ(multiply_dual(entry.system, x, y), want);
  const GTauHatElement e{0, Character{K.zero()}};
  for (std::size_t i = 0; i < static_cast<std::size_t>(entry.system.order()); i += 7) {
    EXPECT_EQ(entry.dual_law_oracle(e, hat_at(entry.system, i)), hat_at(entry.system, i));
    EXPECT_EQ(entry.dual_law_oracle(hat_at(entry.system, i), e), hat_at(entry.system, i));
  }
}

TEST(Catalog, OracleAgreesWithConstructedDualLaw) {
  for (const char* name : {"heisenberg:3", "affine:5", "affine:9", "motion:3", "motion:4"}) {
    const auto entry = catalog_lookup(name);
    const auto& sys = entry->system;
    const auto n = static_cast<std::size_t>(sys.order());
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        ASSERT_EQ(multiply_dual(sys, hat_at(sys, i), hat_at(sys, j)),
                  entry->dual_law_oracle(hat_at(sys, i), hat_at(sys, j)))
            << name;
      }
    }
  }
}

TEST(Catalog, OracleRandomPairsLargerN) {
  Rng rng(17);
  for (const char* name : {"heisenberg:11", "affine:101", "motion:13"}) {
    const auto entry = catalog_lookup(name);
    const auto& sys = entry->system;
    const auto n = static_cast<std::size_t>(sys.order());
    for (int t = 0; t < 10000; ++t) {
      const auto x = hat_at(sys, rng.index(n)), y = hat_at(sys, rng.index(n));
      ASSERT_EQ(multiply_dual(sys, x, y), entry->dual_law_oracle(x, y)) << name;
    }
  }
}

TEST(FiniteMotion, RotationAndAxioms) {
  const auto sys = finite_motion(4).system;
  EXPECT_EQ(sys.order(), 64);
  const auto& K = sys.K();
  const auto J = *sys.find_label("J");
  EXPECT_EQ(apply(sys.tau(J), K.element({1, 0})), K.element({0, 1}));
  const auto n = static_cast<std::size_t>(sys.order());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t l = 0; l < n; ++l) {
        ASSERT_EQ(oracle::multiply(sys, oracle::multiply(sys, i, j), l),
                  oracle::multiply(sys, i, oracle::multiply(sys, j, l)));
      }
    }
  }
}

TEST(FiniteMotion, IdentityActsTriviallyAndJFourIsIdentity) {
  const auto sys = finite_motion(5).system;
  const auto& K = sys.K();
  const auto J = *sys.find_label("J");
  std::size_t j4 = sys.h_identity();
  for (int i = 0; i < 4; ++i) j4 = sys.h_multiply(j4, J);
  EXPECT_EQ(j4, sys.h_identity());
  Automorphism hat4 = Automorphism::identity(K);
  for (int i = 0; i < 4; ++i) hat4 = compose(hat4, sys.tau_hat(J));
  for (const auto& w : K.elements()) {
    EXPECT_EQ(omega_action(sys, sys.h_identity(), Character{w}), Character{w});
    EXPECT_EQ(apply(hat4, w), w);
  }
}

TEST(FiniteMotion, NTwoKeepsFourLabels) {
  // J^2 acts as the identity on Z_2^2, so the group law comes from the
  // explicit Z4 table, not from composing matrices.
  const auto sys = finite_motion(2).system;
  EXPECT_EQ(sys.h_count(), 4u);
  EXPECT_TRUE(sys.tau(*sys.find_label("J2")).is_identity());
}

TEST(CatalogLookup, Parsing) {
  EXPECT_FALSE(catalog_lookup("nonsense").has_value());
  EXPECT_FALSE(catalog_lookup("foo:3").has_value());
  EXPECT_THROW(catalog_lookup("affine:x"), DomainError);
  EXPECT_THROW(catalog_lookup("heisenberg:"), DomainError);
  EXPECT_THROW(catalog_lookup("motion:1"), DomainError);
  EXPECT_EQ(catalog_lookup("motion:3")->name, "motion:3");
  EXPECT_EQ(catalog_families().size(), 4u);
}
