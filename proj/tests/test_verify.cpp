#include <gtest/gtest.h>

#include "tauh/catalog.hpp"
#include "tauh/verify.hpp"

using namespace tauh;

namespace {

double max_residual(const std::vector<CheckResult>& results) {
  double m = 0;
  for (const auto& r : results) m = std::max(m, r.residual);
  return m;
}

}  // namespace

TEST(VerifyFinite, AllSuitesPassOnCatalog) {
  for (const char* name : {"affine:4", "affine:5", "affine:7", "heisenberg:3", "motion:4"}) {
    const auto entry = catalog_lookup(name);
    VerifyOptions opts;
    opts.seed = 7;
    const auto results = verify_finite(entry->system, opts, &entry->dual_law_oracle);
    EXPECT_TRUE(all_passed(results)) << name;
    EXPECT_LT(max_residual(results), 1e-10) << name;
    EXPECT_TRUE(std::is_sorted(results.begin(), results.end(),
                               [](const auto& a, const auto& b) { return a.name < b.name; }));
  }
}

TEST(VerifyFinite, SuiteSelectionAndVacuousRun) {
  const auto sys = catalog_lookup("affine:5")->system;
  VerifyOptions opts;
  opts.suite = "parseval";
  const auto results = verify_finite(sys, opts);
  ASSERT_EQ(results.size(), 4u);
  for (const auto& r : results) EXPECT_EQ(r.name.rfind("parseval.", 0), 0u);
  opts.trials = 0;
  EXPECT_TRUE(verify_finite(sys, opts).empty());
  EXPECT_TRUE(is_known_suite("inversion"));
  EXPECT_FALSE(is_known_suite("everything"));
}

TEST(VerifyFinite, Deterministic) {
  const auto sys = catalog_lookup("motion:3")->system;
  VerifyOptions opts;
  opts.seed = 99;
  const auto a = verify_finite(sys, opts);
  const auto b = verify_finite(sys, opts);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].name, b[i].name);
    EXPECT_EQ(a[i].residual, b[i].residual);
  }
}

TEST(VerifyFinite, NegativeToleranceFailsNumericChecksOnly) {
  const auto sys = catalog_lookup("affine:5")->system;
  VerifyOptions opts;
  opts.suite = "group";
  opts.tol = -1.0;
  for (const auto& r : verify_finite(sys, opts)) {
    if (r.name == "group.pushforward") {
      EXPECT_FALSE(r.passed);
    } else {
      EXPECT_TRUE(r.passed) << r.name;
    }
  }
}

TEST(VerifyFinite, SuppliedDeltaMustBeTrivialOnFiniteH) {
  // delta(s)^2 = delta(e) = 1 forces delta(s) = 1.
  const auto Z3 = FiniteLcaGroup::cyclic(3);
  EXPECT_ANY_THROW(TauSystem({Z3, {"e", "s"},
                              {Automorphism::identity(Z3), Automorphism::scalar(Z3, 2)},
                              std::nullopt, std::vector<double>{1.0, 2.0}}));
}

TEST(VerifyContinuum, DualityAndGroupSuites) {
  VerifyOptions opts;
  opts.suite = "duality";
  const auto results = verify_continuum(affine::AffineGrid::desk_default(), opts);
  ASSERT_EQ(results.size(), 1u);
  EXPECT_EQ(results[0].cases, 10000);
  EXPECT_TRUE(results[0].passed);
  opts.suite = "group";
  EXPECT_TRUE(all_passed(verify_continuum(affine::AffineGrid::desk_default(), opts)));
}
