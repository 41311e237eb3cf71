#include "tauh/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "tauh/random.hpp"
#include "tauh/tau_fourier.hpp"

namespace tauh {

namespace {

constexpr double kUnitaryTol = 1e-10;
constexpr double kInversionTol = 1e-12;
constexpr double kPushforwardTol = 1e-12;
constexpr double kContinuumPushforwardTol = 1e-6;
constexpr double kAptfTol = 1e-4;
constexpr double kApetfTol = 1e-3;
constexpr double kRefinementRatio = 0.5;
constexpr double kQuadratureTol = 1e-10;
constexpr double kReconstructionTol = 1e-10;
constexpr double kHaarInvarianceTol = 1e-6;

// Exhaustive enumeration stops being attempted past this many cases.
constexpr double kExhaustiveBudget = 1e7;

class Collector {
 public:
  Collector(const VerifyOptions& opts) : opts_(opts) {}

  bool wants(const char* suite) const {
    return opts_.suite == "all" || opts_.suite == suite;
  }

  void numeric(std::string name, double residual, double tol, std::int64_t cases) {
    const double t = opts_.tol.value_or(tol);
    push({std::move(name), residual, t, residual <= t, cases});
  }
  void fixed(std::string name, double residual, double tol, std::int64_t cases) {
    push({std::move(name), residual, tol, residual <= tol, cases});
  }
  void count(std::string name, std::int64_t failures, std::int64_t cases) {
    push({std::move(name), static_cast<double>(failures), 0.0, failures == 0, cases});
  }

  std::vector<CheckResult> take() {
    std::sort(results_.begin(), results_.end(),
              [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
    return std::move(results_);
  }

 private:
  void push(CheckResult r) {
    if (!std::isfinite(r.residual)) r.passed = false;
    results_.push_back(std::move(r));
  }

  const VerifyOptions& opts_;
  std::vector<CheckResult> results_;
};

double relative(double a, double b) {
  return std::abs(a - b) / std::max(std::abs(b), 1e-300);
}

double sup_diff(std::span<const Complex> a, std::span<const Complex> b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

// Runs `body(i, j, ...)` over all index tuples when the total is within
// budget, else over `samples` random tuples. Returns the number of cases.
std::int64_t for_pairs(std::size_t n, std::int64_t samples, Rng& rng,
                       const std::function<void(std::size_t, std::size_t)>& body) {
  if (static_cast<double>(n) * n <= kExhaustiveBudget) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) body(i, j);
    }
    return static_cast<std::int64_t>(n * n);
  }
  for (std::int64_t s = 0; s < samples; ++s) body(rng.index(n), rng.index(n));
  return samples;
}

std::int64_t for_triples(
    std::size_t n, std::int64_t samples, Rng& rng,
    const std::function<void(std::size_t, std::size_t, std::size_t)>& body) {
  const double total = static_cast<double>(n) * n * n;
  if (total <= kExhaustiveBudget) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t l = 0; l < n; ++l) body(i, j, l);
      }
    }
    return static_cast<std::int64_t>(total);
  }
  for (std::int64_t s = 0; s < samples; ++s) {
    body(rng.index(n), rng.index(n), rng.index(n));
  }
  return samples;
}

GTauHatElement hat_at(const TauSystem& sys, std::size_t index) {
  const GTauElement e = element_at(sys, index);
  return {e.h, Character{e.k}};
}

void group_suite(const TauSystem& sys, const VerifyOptions& opts, Rng rng,
                 Collector& out) {
  const auto n = static_cast<std::size_t>(sys.order());
  const std::int64_t samples = std::max<std::int64_t>(1000, opts.trials);
  const GTauElement e = identity_element(sys);

  std::int64_t fails = 0;
  std::int64_t cases = for_triples(n, samples, rng, [&](auto i, auto j, auto l) {
    const auto x = element_at(sys, i), y = element_at(sys, j), z = element_at(sys, l);
    if (!(multiply(sys, multiply(sys, x, y), z) == multiply(sys, x, multiply(sys, y, z)))) {
      ++fails;
    }
  });
  out.count("group.associativity", fails, cases);

  fails = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto x = element_at(sys, i);
    const auto xi = invert(sys, x);
    if (!(multiply(sys, x, e) == x) || !(multiply(sys, e, x) == x) ||
        !(multiply(sys, x, xi) == e) || !(multiply(sys, xi, x) == e)) {
      ++fails;
    }
  }
  out.count("group.identity_inverse", fails, static_cast<std::int64_t>(n));

  fails = 0;
  cases = for_triples(n, samples, rng, [&](auto i, auto j, auto l) {
    const auto x = hat_at(sys, i), y = hat_at(sys, j), z = hat_at(sys, l);
    if (!(multiply_dual(sys, multiply_dual(sys, x, y), z) ==
          multiply_dual(sys, x, multiply_dual(sys, y, z)))) {
      ++fails;
    }
  });
  out.count("group.dual_associativity", fails, cases);

  fails = 0;
  const GTauHatElement ehat{sys.h_identity(), Character{sys.K().zero()}};
  for (std::size_t i = 0; i < n; ++i) {
    const auto x = hat_at(sys, i);
    const auto xi = invert_dual(sys, x);
    if (!(multiply_dual(sys, x, ehat) == x) || !(multiply_dual(sys, x, xi) == ehat) ||
        !(multiply_dual(sys, xi, x) == ehat)) {
      ++fails;
    }
  }
  out.count("group.dual_identity_inverse", fails, static_cast<std::int64_t>(n));

  // d(omega_h) = delta(h) d(omega) tested on random positive g.
  double worst = 0.0;
  std::int64_t pf_cases = 0;
  for (std::int64_t t = 0; t < opts.trials; ++t) {
    KFunction g(sys.K(), Domain::dual);
    for (auto& z : g.values) z = 1.0 + rng.uniform();
    for (std::size_t h = 0; h < sys.h_count(); ++h) {
      const auto [lhs, rhs] = pushforward_check(sys, h, g);
      worst = std::max(worst, relative(lhs, rhs));
      ++pf_cases;
    }
  }
  out.numeric("group.pushforward", worst, kPushforwardTol, pf_cases);
}

void duality_suite(const TauSystem& sys, const VerifyOptions& opts, Rng rng,
                   const DualLaw* oracle, Collector& out) {
  const auto n = static_cast<std::size_t>(sys.order());
  const std::int64_t samples = std::max<std::int64_t>(1000, opts.trials);
  const FiniteLcaGroup& K = sys.K();

  const TauSystem twice = tau_dual(tau_dual(sys));
  std::int64_t fails = 0;
  for (std::size_t h = 0; h < sys.h_count(); ++h) {
    if (!(twice.tau(h) == sys.tau(h)) || !(twice.delta(h) == sys.delta(h)) ||
        twice.label(h) != sys.label(h)) {
      ++fails;
    }
  }
  if (twice.cayley() != sys.cayley()) ++fails;
  out.count("duality.double_dual_data", fails,
            static_cast<std::int64_t>(sys.h_count()) + 1);

  fails = 0;
  std::int64_t cases = for_pairs(n, samples, rng, [&](auto i, auto j) {
    const auto x = element_at(sys, i), y = element_at(sys, j);
    const auto lhs = double_dual_theta(sys, multiply(sys, x, y));
    const auto rhs = multiply(twice, double_dual_theta(sys, x), double_dual_theta(sys, y));
    if (!(lhs == rhs)) ++fails;
  });
  out.count("duality.theta_homomorphism", fails, cases);

  // omega(tau_h(k)) = omega_{h^-1}(k).
  double worst = 0.0;
  const auto kn = static_cast<std::size_t>(K.order());
  const double total = static_cast<double>(sys.h_count()) * kn * kn;
  auto bpon = [&](std::size_t h, std::size_t ki, std::size_t wi) {
    const GroupElement k = K.element_at(ki);
    const Character w{K.element_at(wi)};
    const Complex lhs = char_eval(K, w, apply(sys.tau(h), k));
    const Complex rhs = char_eval(K, omega_action(sys, sys.h_inverse(h), w), k);
    worst = std::max(worst, std::abs(lhs - rhs));
  };
  if (total <= kExhaustiveBudget) {
    for (std::size_t h = 0; h < sys.h_count(); ++h) {
      for (std::size_t ki = 0; ki < kn; ++ki) {
        for (std::size_t wi = 0; wi < kn; ++wi) bpon(h, ki, wi);
      }
    }
    cases = static_cast<std::int64_t>(total);
  } else {
    for (std::int64_t s = 0; s < samples; ++s) {
      bpon(rng.index(sys.h_count()), rng.index(kn), rng.index(kn));
    }
    cases = samples;
  }
  out.numeric("duality.character_action", worst, kInversionTol, cases);

  if (oracle != nullptr) {
    fails = 0;
    cases = for_pairs(n, samples, rng, [&](auto i, auto j) {
      const auto x = hat_at(sys, i), y = hat_at(sys, j);
      if (!(multiply_dual(sys, x, y) == (*oracle)(x, y))) ++fails;
    });
    out.count("duality.dual_law_oracle", fails, cases);
  }
}

void plancherel_suite(const TauSystem& sys, const VerifyOptions& opts, Rng rng,
                      Collector& out) {
  double plain = 0.0, gen = 0.0;
  for (std::int64_t t = 0; t < opts.trials; ++t) {
    const GroupFunction f = random_function(sys, Side::primal, rng);
    const double norm = l2_norm_squared(f);
    plain = std::max(plain, relative(l2_norm_squared(tau_fourier(f).function), norm));
    gen = std::max(gen, relative(l2_norm_squared(gen_tau_fourier(f).function), norm));
  }
  out.numeric("plancherel.tau_fourier", plain, kUnitaryTol, opts.trials);
  out.numeric("plancherel.gen_tau_fourier", gen, kUnitaryTol, opts.trials);
}

void parseval_suite(const TauSystem& sys, const VerifyOptions& opts, Rng rng,
                    Collector& out) {
  for (auto id : {ParsevalIdentity::P01, ParsevalIdentity::P02, ParsevalIdentity::PP1,
                  ParsevalIdentity::PP2}) {
    Rng local = rng.split(to_string(id));
    double worst = 0.0;
    for (std::int64_t t = 0; t < opts.trials; ++t) {
      const GroupFunction f = random_function(sys, Side::primal, local);
      const GroupFunction psi = random_function(sys, Side::dual, local);
      const ParsevalSides s = parseval_sides(f, psi, id);
      worst = std::max(worst, std::abs(s.lhs - s.rhs) / std::max(1.0, std::abs(s.rhs)));
    }
    out.numeric(std::string("parseval.") + to_string(id), worst, kUnitaryTol, opts.trials);
  }
}

void inversion_suite(const TauSystem& sys, const VerifyOptions& opts, Rng rng,
                     Collector& out) {
  double plain = 0.0, gen = 0.0, pre = 0.0, gpre = 0.0;
  for (std::int64_t t = 0; t < opts.trials; ++t) {
    const GroupFunction f = random_function(sys, Side::primal, rng);
    plain = std::max(plain, sup_diff(tau_fourier_inverse(tau_fourier(f).function).values(),
                                     f.values()));
    gen = std::max(gen, sup_diff(gen_tau_fourier_inverse(gen_tau_fourier(f).function).values(),
                                 f.values()));
    const GroupFunction phi = random_function(sys, Side::dual, rng);
    pre = std::max(pre, sup_diff(tau_fourier(plain_preimage(phi)).function.values(),
                                 phi.values()));
    gpre = std::max(gpre, sup_diff(gen_tau_fourier(generalized_preimage(phi)).function.values(),
                                   phi.values()));
  }
  out.numeric("inversion.tau_fourier", plain, kInversionTol, opts.trials);
  out.numeric("inversion.gen_tau_fourier", gen, kInversionTol, opts.trials);
  out.numeric("inversion.plain_preimage", pre, kUnitaryTol, opts.trials);
  out.numeric("inversion.generalized_preimage", gpre, kUnitaryTol, opts.trials);
}

double gaussian(double x) { return std::exp(-M_PI * x * x); }

}  // namespace

bool is_known_suite(const std::string& suite) {
  for (const char* s : {"all", "group", "duality", "plancherel", "parseval", "inversion"}) {
    if (suite == s) return true;
  }
  return false;
}

std::vector<CheckResult> verify_finite(const TauSystem& sys,
                                       const VerifyOptions& opts,
                                       const DualLaw* oracle) {
  Collector out(opts);
  if (opts.trials <= 0) return {};
  const Rng root(opts.seed);
  if (out.wants("group")) group_suite(sys, opts, root.split("group"), out);
  if (out.wants("duality")) duality_suite(sys, opts, root.split("duality"), oracle, out);
  if (out.wants("plancherel")) plancherel_suite(sys, opts, root.split("plancherel"), out);
  if (out.wants("parseval")) parseval_suite(sys, opts, root.split("parseval"), out);
  if (out.wants("inversion")) inversion_suite(sys, opts, root.split("inversion"), out);
  return out.take();
}

std::vector<CheckResult> verify_continuum(const affine::AffineGrid& grid,
                                          const VerifyOptions& opts) {
  using namespace affine;
  Collector out(opts);
  if (opts.trials <= 0) return {};
  grid.validate();
  const Rng root(opts.seed);
  const double target = kGaussianPlancherelTarget;

  if (out.wants("group")) {
    double worst = 0.0;
    for (const auto& [lhs, rhs] : continuum_pushforward(grid, gaussian)) {
      worst = std::max(worst, relative(lhs, rhs));
    }
    out.numeric("group.pushforward", worst, kContinuumPushforwardTol,
                static_cast<std::int64_t>(grid.a.count));

    Rng rng = root.split("group");
    worst = 0.0;
    const auto phi = [](double a, double w) {
      return std::exp(-8.0 * (a - 1.5) * (a - 1.5)) * gaussian(w);
    };
    const UniformAxis a_axis{0.1, 6.0, 1200};
    const UniformAxis w_axis{-24.0, 24.0, 2400};
    const std::int64_t n = std::min<std::int64_t>(opts.trials, 10);
    for (std::int64_t t = 0; t < n; ++t) {
      const AffinePoint g0{1.0 + 0.25 * rng.uniform(), 2.0 * rng.uniform()};
      worst = std::max(worst, dual_haar_invariance_residual(g0, phi, a_axis, w_axis));
    }
    out.numeric("group.dual_haar_invariance", worst, kHaarInvarianceTol, n);
  }

  if (out.wants("duality")) {
    Rng rng = root.split("duality");
    const std::int64_t pairs = 100 * opts.trials;
    std::int64_t fails = 0;
    for (std::int64_t t = 0; t < pairs; ++t) {
      const AffinePoint p{std::exp(3.0 * rng.uniform()), 10.0 * rng.uniform()};
      const AffinePoint q{std::exp(3.0 * rng.uniform()), 10.0 * rng.uniform()};
      if (!(affine_dual_multiply(p, q) == affine_dual_multiply_constructed(p, q))) ++fails;
    }
    out.count("duality.dual_law_constructed", fails, pairs);
  }

  if (out.wants("plancherel") || out.wants("parseval") || out.wants("inversion")) {
    const SampledAffineFunction f = gaussian_test_function(grid);
    const SampledAffineFunction F = affine_tau_fourier(f);
    const SampledAffineFunction G = affine_gen_tau_fourier(f);

    if (out.wants("plancherel")) {
      const double primal = relative(primal_norm_squared(f), target);
      const double aptf = relative(dual_norm_squared(F), target);
      const double apetf = relative(dual_norm_squared(G), target);
      out.numeric("plancherel.primal_norm", primal, kAptfTol, 1);
      out.numeric("plancherel.tau_fourier", aptf, kAptfTol, 1);
      out.numeric("plancherel.gen_tau_fourier", apetf, kApetfTol, 1);

      const AffineGrid fine = grid.refined();
      const SampledAffineFunction ff = gaussian_test_function(fine);
      const double aptf_fine = relative(dual_norm_squared(affine_tau_fourier(ff)), target);
      const double apetf_fine =
          relative(dual_norm_squared(affine_gen_tau_fourier(ff)), target);
      out.fixed("plancherel.refinement.tau_fourier", aptf_fine / aptf, kRefinementRatio, 2);
      out.fixed("plancherel.refinement.gen_tau_fourier", apetf_fine / apetf,
                kRefinementRatio, 2);
    }
    if (out.wants("parseval")) {
      const QuadrupleIntegral q1 = quadruple_integral(f, Variant::plain);
      const QuadrupleIntegral q2 = quadruple_integral(f, Variant::generalized);
      out.numeric("parseval.quadruple.plain", q1.residual / q1.rhs, kQuadratureTol, 1);
      out.numeric("parseval.quadruple.generalized", q2.residual / q2.rhs, kQuadratureTol, 1);
    }
    if (out.wants("inversion")) {
      double sup = 0.0;
      for (const auto& z : f.values) sup = std::max(sup, std::abs(z));
      const auto r1 = affine_reconstruct(F, Variant::plain);
      const auto r2 = affine_reconstruct(G, Variant::generalized);
      out.numeric("inversion.tau_fourier", sup_diff(r1.values, f.values) / sup,
                  kReconstructionTol, 1);
      out.numeric("inversion.gen_tau_fourier", sup_diff(r2.values, f.values) / sup,
                  kReconstructionTol, 1);
    }
  }
  return out.take();
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.passed; });
}

}  // namespace tauh
