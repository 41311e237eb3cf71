// tauh: build tau-systems, run transforms and invariant suites from the shell.
//
// Exit codes: 0 pass, 1 invariant failure, 2 input error, 3 contract misuse.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "tauh/errors.hpp"
#include "tauh/serialize.hpp"
#include "tauh/tau_fourier.hpp"
#include "tauh/verify.hpp"

namespace {

using tauh::io::Json;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInput = 2;
constexpr int kContract = 3;

std::int64_t max_order_from_env() {
  const char* raw = std::getenv("TAUH_MAX_ORDER");
  if (raw == nullptr || *raw == '\0') return tauh::kDefaultMaxOrder;
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(raw, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != std::string(raw).size() || v < 1) {
    throw tauh::io::InputError("TAUH_MAX_ORDER must be a positive integer");
  }
  return v;
}

void emit(const Json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << tauh::io::dump(j) << '\n';
  } else {
    tauh::io::write_file(out_path, j);
  }
}

Json report_json(const std::string& spec, const tauh::VerifyOptions& opts,
                 const std::vector<tauh::CheckResult>& results) {
  Json j;
  j["schema_version"] = tauh::io::kSchemaVersion;
  j["spec"] = spec;
  j["suite"] = opts.suite;
  j["trials"] = opts.trials;
  j["seed"] = opts.seed;
  Json checks = Json::array();
  double worst = 0.0;
  for (const auto& r : results) {
    Json c;
    c["name"] = r.name;
    c["residual"] = r.residual;
    c["tolerance"] = r.tolerance;
    c["passed"] = r.passed;
    c["cases"] = r.cases;
    checks.push_back(std::move(c));
    worst = std::max(worst, r.residual);
  }
  j["checks"] = std::move(checks);
  j["max_residual"] = worst;
  j["passed"] = tauh::all_passed(results);
  return j;
}

int cmd_dual(const std::string& spec_name, const std::string& out_path) {
  const auto spec = tauh::io::load_group_spec(spec_name, max_order_from_env());
  tauh::VerifyOptions axioms;
  axioms.suite = "group";
  axioms.trials = 1;

  if (spec.continuum) {
    tauh::VerifyOptions opts;
    opts.suite = "duality";
    const auto results = tauh::verify_continuum(*spec.continuum, opts);
    Json j = tauh::io::grid_spec_to_json(*spec.continuum);
    emit(j, out_path);
    for (const auto& r : results) {
      std::cerr << r.name << ": " << (r.passed ? "OK" : "FAILED") << " (" << r.cases
                << " pairs)\n";
    }
    std::cerr << "dual law: (a, w)(a', w') = (a a', w + w'/a)\n";
    return tauh::all_passed(results) ? kPass : kFail;
  }

  const tauh::TauSystem& sys = *spec.finite;
  const tauh::TauSystem dual = tauh::tau_dual(sys);
  emit(tauh::io::group_spec_to_json(dual), out_path);

  bool ok = true;
  const auto results = tauh::verify_finite(dual, axioms);
  std::int64_t cases = 0;
  for (const auto& r : results) {
    if (r.name.rfind("group.dual", 0) == 0 || r.name == "group.pushforward") continue;
    cases += r.cases;
    if (!r.passed) {
      ok = false;
      std::cerr << r.name << ": FAILED, residual " << r.residual << '\n';
    }
  }
  std::cerr << "tau-dual of " << spec.name << ": |H| = " << dual.h_count()
            << ", |K^| = " << dual.K().order() << "; group axioms "
            << (ok ? "OK" : "FAILED") << " (" << cases << " cases)\n";

  if (spec.catalog) {
    tauh::VerifyOptions opts;
    opts.suite = "duality";
    opts.trials = 1;
    for (const auto& r :
         tauh::verify_finite(sys, opts, &spec.catalog->dual_law_oracle)) {
      if (r.name != "duality.dual_law_oracle") continue;
      std::cerr << "dual law vs closed form: " << (r.passed ? "OK" : "FAILED") << " ("
                << r.cases << " pairs, " << r.residual << " mismatches)\n";
      ok = ok && r.passed;
    }
  }
  return ok ? kPass : kFail;
}

int cmd_transform(const std::string& spec_name, const std::string& fn_path,
                  const std::string& variant, bool inverse,
                  const std::string& out_path) {
  const auto spec = tauh::io::load_group_spec(spec_name, max_order_from_env());
  const Json input = tauh::io::parse_file(fn_path);
  const bool generalized = variant == "generalized";

  if (spec.continuum) {
    namespace af = tauh::affine;
    const auto f = tauh::io::affine_function_from_json(input, *spec.continuum);
    af::SampledAffineFunction g =
        inverse ? af::affine_reconstruct(
                      f, generalized ? af::Variant::generalized : af::Variant::plain)
        : generalized ? af::affine_gen_tau_fourier(f)
                      : af::affine_tau_fourier(f);
    for (const auto& w : af::truncation_warnings(f)) std::cerr << "warning: " << w << '\n';
    const auto norm = [](const af::SampledAffineFunction& s) {
      return s.domain == af::AffineDomain::space ? af::primal_norm_squared(s)
                                                 : af::dual_norm_squared(s);
    };
    std::cerr.precision(17);
    std::cerr << "input L2 norm^2:  " << norm(f) << '\n'
              << "output L2 norm^2: " << norm(g) << '\n';
    emit(tauh::io::affine_function_to_json(g), out_path);
    return kPass;
  }

  const auto f = tauh::io::function_from_json(input, *spec.finite);
  const tauh::GroupFunction g =
      inverse ? (generalized ? tauh::gen_tau_fourier_inverse(f)
                             : tauh::tau_fourier_inverse(f))
              : (generalized ? tauh::gen_tau_fourier(f) : tauh::tau_fourier(f)).function;
  std::cerr.precision(17);
  std::cerr << "input L2 norm^2 (" << tauh::to_string(f.side())
            << "):  " << tauh::l2_norm_squared(f) << '\n'
            << "output L2 norm^2 (" << tauh::to_string(g.side())
            << "): " << tauh::l2_norm_squared(g) << '\n';
  emit(tauh::io::function_to_json(g), out_path);
  return kPass;
}

int cmd_verify(const std::string& spec_name, const tauh::VerifyOptions& opts) {
  if (!tauh::is_known_suite(opts.suite)) {
    throw tauh::io::InputError("unknown suite: " + opts.suite);
  }
  if (opts.trials < 0) throw tauh::io::InputError("--trials must be >= 0");
  const auto spec = tauh::io::load_group_spec(spec_name, max_order_from_env());
  const auto results =
      spec.continuum
          ? tauh::verify_continuum(*spec.continuum, opts)
          : tauh::verify_finite(*spec.finite, opts,
                                spec.catalog ? &spec.catalog->dual_law_oracle : nullptr);
  std::cout << tauh::io::dump(report_json(spec_name, opts, results)) << '\n';
  std::cerr.precision(17);
  for (const auto& r : results) {
    if (!r.passed) {
      std::cerr << "FAILED " << r.name << ": residual " << r.residual << " > tolerance "
                << r.tolerance << '\n';
    }
  }
  return tauh::all_passed(results) ? kPass : kFail;
}

int cmd_catalog(const std::string& name) {
  if (name.empty()) {
    for (const auto& f : tauh::catalog_families()) {
      std::cout << f.prefix << "\t" << f.description << '\n';
    }
    return kPass;
  }
  const auto spec = tauh::io::load_group_spec(name, max_order_from_env());
  if (spec.continuum) {
    std::cout << tauh::io::dump(tauh::io::grid_spec_to_json(*spec.continuum)) << '\n';
  } else {
    std::cout << tauh::io::dump(tauh::io::group_spec_to_json(*spec.finite)) << '\n';
    if (spec.catalog) std::cerr << spec.catalog->notes << '\n';
  }
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tauh: tau-Fourier analysis on semi-direct products"};
  app.require_subcommand(1);

  std::string spec_name, fn_path, out_path, variant = "plain", catalog_name;
  bool inverse = false;
  tauh::VerifyOptions vopts;
  double tol = 0.0;

  auto* dual = app.add_subcommand("dual", "write the tau-dual group spec");
  dual->add_option("spec", spec_name, "catalog name or group spec file")->required();
  dual->add_option("-o,--output", out_path, "output file (default stdout)");

  auto* transform = app.add_subcommand("transform", "apply F_tau or F_tau^#");
  transform->add_option("spec", spec_name, "catalog name or group spec file")->required();
  transform->add_option("function", fn_path, "function file")->required();
  transform->add_option("--variant", variant, "plain | generalized")
      ->check(CLI::IsMember({"plain", "generalized"}));
  transform->add_flag("--inverse", inverse, "apply the inverse transform");
  transform->add_option("-o,--output", out_path, "output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "run invariant suites");
  verify->add_option("spec", spec_name, "catalog name or group spec file")->required();
  verify->add_option("--suite", vopts.suite,
                     "all | group | duality | plancherel | parseval | inversion");
  verify->add_option("--trials", vopts.trials, "random cases per check");
  verify->add_option("--seed", vopts.seed, "PRNG seed");
  auto* tol_opt = verify->add_option("--tol", tol, "override numeric tolerances");

  auto* catalog = app.add_subcommand("catalog", "list catalog families or print an entry");
  catalog->add_option("name", catalog_name, "entry such as affine:5");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kInput;
  }

  try {
    if (*dual) return cmd_dual(spec_name, out_path);
    if (*transform) return cmd_transform(spec_name, fn_path, variant, inverse, out_path);
    if (*verify) {
      if (*tol_opt) vopts.tol = tol;
      return cmd_verify(spec_name, vopts);
    }
    return cmd_catalog(catalog_name);
  } catch (const tauh::ContractError& e) {
    std::cerr << "tauh: contract error: " << e.what() << '\n';
    return kContract;
  } catch (const std::exception& e) {
    std::cerr << "tauh: " << e.what() << '\n';
    return kInput;
  }
}
