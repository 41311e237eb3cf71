// Acceptance suite: one PASS/FAIL line per criterion; exits 0 iff all pass.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "tauh/affine.hpp"
#include "tauh/catalog.hpp"
#include "tauh/random.hpp"
#include "tauh/tau_fourier.hpp"

using namespace tauh;

namespace {

const std::vector<std::string> kCorpus = {"affine:4", "affine:5", "affine:7", "heisenberg:3",
                                          "motion:4"};
constexpr std::uint64_t kSeed = 20240601;

int failures = 0;

void report(int id, const char* title, bool ok, const std::string& detail) {
  std::printf("[%s] criterion %d %s: %s\n", ok ? "PASS" : "FAIL", id, title, detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string fmt(const char* f, double a, double b = 0, double c = 0, double d = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c, d);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Weighted L2 norms summed here rather than through the library helpers.
double primal_norm(const GroupFunction& f) {
  const TauSystem& sys = f.system();
  double s = 0;
  for (std::size_t h = 0; h < sys.h_count(); ++h) {
    for (auto z : f.row(h)) s += sys.delta(h).value() * std::norm(z);
  }
  return s;
}
double dual_norm(const GroupFunction& F) {
  const TauSystem& sys = F.system();
  const double k = static_cast<double>(sys.K().order());
  double s = 0;
  for (std::size_t h = 0; h < sys.h_count(); ++h) {
    for (auto z : F.row(h)) s += std::norm(z) / (sys.delta(h).value() * k);
  }
  return s;
}

double sup_diff(std::span<const Complex> a, std::span<const Complex> b) {
  double m = 0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

void plancherel(int id, const char* title,
                const std::function<TransformResult(const GroupFunction&)>& transform) {
  const auto t0 = std::chrono::steady_clock::now();
  double worst = 0;
  for (const auto& name : kCorpus) {
    const TauSystem sys = catalog_lookup(name)->system;
    Rng rng = Rng(kSeed).split(name + title);
    for (int t = 0; t < 100; ++t) {
      const GroupFunction f = random_function(sys, Side::primal, rng);
      const double rhs = primal_norm(f);
      const double lhs = dual_norm(transform(f).function);
      worst = std::max(worst, std::abs(lhs - rhs) / rhs);
    }
  }
  const double secs = seconds_since(t0);
  report(id, title, worst < 1e-10 && secs < 5.0,
         fmt("max |LHS-RHS|/RHS = %.3e (< 1e-10) over 5 x 100 functions, %.2f s (< 5 s)", worst,
             secs));
}

void inversion() {
  double plain = 0, gen = 0;
  for (const auto& name : kCorpus) {
    const TauSystem sys = catalog_lookup(name)->system;
    Rng rng = Rng(kSeed).split(name + "inversion");
    for (int t = 0; t < 100; ++t) {
      const GroupFunction f = random_function(sys, Side::primal, rng);
      plain = std::max(plain, sup_diff(tau_fourier_inverse(tau_fourier(f).function).values(),
                                       f.values()));
      gen = std::max(gen, sup_diff(gen_tau_fourier_inverse(gen_tau_fourier(f).function).values(),
                                   f.values()));
    }
  }
  report(3, "inversion round trip", plain < 1e-12 && gen < 1e-12,
         fmt("sup error F_tau %.3e, F_tau^# %.3e (< 1e-12)", plain, gen));
}

void parseval() {
  double worst[4] = {0, 0, 0, 0};
  const ParsevalIdentity ids[4] = {ParsevalIdentity::P01, ParsevalIdentity::P02,
                                   ParsevalIdentity::PP1, ParsevalIdentity::PP2};
  for (const auto& name : kCorpus) {
    const TauSystem sys = catalog_lookup(name)->system;
    Rng rng = Rng(kSeed).split(name + "parseval");
    for (int t = 0; t < 100; ++t) {
      const GroupFunction f = random_function(sys, Side::primal, rng);
      const GroupFunction psi = random_function(sys, Side::dual, rng);
      for (int i = 0; i < 4; ++i) worst[i] = std::max(worst[i], parseval_residual(f, psi, ids[i]));
    }
  }
  const bool ok = worst[0] < 1e-10 && worst[1] < 1e-10 && worst[2] < 1e-10 && worst[3] < 1e-10;
  report(4, "Parseval identities", ok,
         fmt("max residual P01 %.2e, P02 %.2e, PP1 %.2e, PP2 %.2e (< 1e-10)", worst[0], worst[1],
             worst[2], worst[3]));
}

void duality() {
  std::int64_t pairs = 0, bad = 0;
  for (const char* name : {"affine:5", "heisenberg:3"}) {
    const TauSystem sys = catalog_lookup(name)->system;
    const TauSystem twice = tau_dual(tau_dual(sys));
    const auto n = static_cast<std::size_t>(sys.order());
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const auto x = element_at(sys, i), y = element_at(sys, j);
        const auto lhs = double_dual_theta(sys, multiply(sys, x, y));
        const auto rhs = multiply(twice, double_dual_theta(sys, x), double_dual_theta(sys, y));
        bad += !(lhs == rhs);
        ++pairs;
      }
    }
  }
  std::int64_t points = 0, bpon_bad = 0;
  for (const char* name : {"affine:4", "motion:4"}) {
    const TauSystem sys = catalog_lookup(name)->system;
    const FiniteLcaGroup& K = sys.K();
    for (std::size_t h = 0; h < sys.h_count(); ++h) {
      for (const auto& k : K.elements()) {
        for (const auto& w : K.elements()) {
          const Character omega{w};
          // tau_h(k)^(omega) against tau^^_h(k^)(omega) = k^(omega_{h^-1}).
          const Complex lhs = evaluation_character(K, apply(sys.tau(h), k), omega);
          const Complex rhs =
              evaluation_character(K, k, omega_action(sys, sys.h_inverse(h), omega));
          bpon_bad += !(lhs == rhs);
          ++points;
        }
      }
    }
  }
  report(5, "duality", bad == 0 && bpon_bad == 0,
         fmt("Theta homomorphism %.0f failures / %.0f pairs; pointwise identity %.0f failures / %.0f "
             "points",
             static_cast<double>(bad), static_cast<double>(pairs), static_cast<double>(bpon_bad),
             static_cast<double>(points)));
}

void pushforward() {
  std::int64_t bad = 0, cases = 0;
  for (const auto& name : kCorpus) {
    const TauSystem sys = catalog_lookup(name)->system;
    Rng rng = Rng(kSeed).split(name + "pushforward");
    // Integer values keep every floating sum exact, so equality is literal.
    KFunction g(sys.K(), Domain::dual);
    for (auto& z : g.values) z = static_cast<double>(rng.index(1000));
    for (std::size_t h = 0; h < sys.h_count(); ++h) {
      const auto [lhs, rhs] = pushforward_check(sys, h, g);
      bad += !(lhs == rhs);
      ++cases;
    }
  }
  double worst = 0;
  const auto rows = affine::continuum_pushforward(affine::AffineGrid::desk_default(),
                                                  [](double w) { return std::exp(-M_PI * w * w); });
  for (const auto& [lhs, rhs] : rows) worst = std::max(worst, std::abs(lhs - rhs) / rhs);
  report(6, "measure pushforward", bad == 0 && worst < 1e-6 && rows.size() == 64,
         fmt("finite: %.0f mismatches / %.0f (h, entry) cases; continuum: max rel err %.3e "
             "(< 1e-6) at %.0f a-nodes",
             static_cast<double>(bad), static_cast<double>(cases), worst,
             static_cast<double>(rows.size())));
}

void dual_laws() {
  const auto entry = catalog_lookup("heisenberg:3");
  const TauSystem& sys = entry->system;
  const auto n = static_cast<std::size_t>(sys.order());
  std::int64_t bad = 0, pairs = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto a = element_at(sys, i), b = element_at(sys, j);
      const GTauHatElement x{a.h, Character{a.k}}, y{b.h, Character{b.k}};
      bad += !(multiply_dual(sys, x, y) == entry->dual_law_oracle(x, y));
      ++pairs;
    }
  }
  Rng rng = Rng(kSeed).split("continuum-dual-law");
  std::int64_t cbad = 0;
  for (int t = 0; t < 10000; ++t) {
    const affine::AffinePoint p{std::exp(4 * rng.uniform()), 100 * rng.uniform()};
    const affine::AffinePoint q{std::exp(4 * rng.uniform()), 100 * rng.uniform()};
    cbad += !(affine::affine_dual_multiply_constructed(p, q) == affine::affine_dual_multiply(p, q));
  }
  report(7, "dual-law oracles", bad == 0 && cbad == 0 && pairs == 729,
         fmt("heisenberg:3 %.0f mismatches / %.0f pairs; affine continuum %.0f mismatches / 10000 "
             "random pairs (bitwise)",
             static_cast<double>(bad), static_cast<double>(pairs), static_cast<double>(cbad)));
}

struct ContinuumResiduals {
  double aptf = 0;   // worst of both sides against the closed form
  double apetf = 0;
};

ContinuumResiduals continuum_residuals(const affine::AffineGrid& grid) {
  const double target = affine::kGaussianPlancherelTarget;
  const auto f = affine::gaussian_test_function(grid);
  const double rhs = std::abs(affine::primal_norm_squared(f) - target) / target;
  const double lhs1 =
      std::abs(affine::dual_norm_squared(affine::affine_tau_fourier(f)) - target) / target;
  const double lhs2 =
      std::abs(affine::dual_norm_squared(affine::affine_gen_tau_fourier(f)) - target) / target;
  return {std::max(lhs1, rhs), std::max(lhs2, rhs)};
}

void continuum_target() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto grid = affine::AffineGrid::desk_default();
  const auto coarse = continuum_residuals(grid);
  const auto fine = continuum_residuals(grid.refined());
  const double secs = seconds_since(t0);
  const double r1 = coarse.aptf / fine.aptf, r2 = coarse.apetf / fine.apetf;
  const bool ok = coarse.aptf < 1e-4 && coarse.apetf < 1e-3 && r1 >= 2 && r2 >= 2 && secs < 30;
  char buf[320];
  std::snprintf(buf, sizeof buf,
                "target 1/(2 sqrt 2); APTF rel err %.3e (< 1e-4), APETF rel err %.3e (< 1e-3); "
                "refinement gain %.2fx / %.2fx (>= 2x); %.1f s (< 30 s)",
                coarse.aptf, coarse.apetf, r1, r2, secs);
  report(8, "continuum Plancherel target", ok, buf);
}

void surjectivity() {
  double plain = 0, gen = 0;
  for (const auto& name : kCorpus) {
    const TauSystem sys = catalog_lookup(name)->system;
    Rng rng = Rng(kSeed).split(name + "surjectivity");
    for (int t = 0; t < 20; ++t) {
      const GroupFunction phi = random_function(sys, Side::dual, rng);
      plain = std::max(plain, sup_diff(tau_fourier(plain_preimage(phi)).function.values(),
                                       phi.values()));
      gen = std::max(gen, sup_diff(gen_tau_fourier(generalized_preimage(phi)).function.values(),
                                   phi.values()));
    }
  }
  report(9, "surjectivity witnesses", plain < 1e-10 && gen < 1e-10,
         fmt("sup error F_tau %.3e, F_tau^# %.3e (< 1e-10) over 5 x 20 functions", plain, gen));
}

}  // namespace

int main() {
  plancherel(1, "Plancherel (F_tau)", [](const GroupFunction& f) { return tau_fourier(f); });
  plancherel(2, "generalized Plancherel (F_tau^#)",
             [](const GroupFunction& f) { return gen_tau_fourier(f); });
  inversion();
  parseval();
  duality();
  pushforward();
  dual_laws();
  continuum_target();
  surjectivity();
  std::printf("%d of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
