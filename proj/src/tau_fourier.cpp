#include "tauh/tau_fourier.hpp"

#include <cmath>

#include "tauh/errors.hpp"

namespace tauh {

namespace {

void require_side(const GroupFunction& f, Side side, const char* op) {
  if (f.side() != side) {
    throw ContractError(std::string(op) + ": expected a " + to_string(side) +
                        "-side function, got " + to_string(f.side()));
  }
}

}  // namespace

TransformResult tau_fourier(const GroupFunction& f) {
  require_side(f, Side::primal, "tau_fourier");
  const TauSystem& sys = f.system();
  GroupFunction out(sys, Side::dual,
                    std::vector<Complex>(f.values().begin(), f.values().end()));
  for (std::size_t h = 0; h < sys.h_count(); ++h) {
    auto row = out.row(h);
    dft_forward(sys.K(), row);
    const double d = sys.delta(h).value();
    for (auto& z : row) z *= d;
  }
  return {std::move(out), std::sqrt(l2_norm_squared(f))};
}

GroupFunction tau_fourier_inverse(const GroupFunction& F) {
  require_side(F, Side::dual, "tau_fourier_inverse");
  const TauSystem& sys = F.system();
  GroupFunction out(sys, Side::primal,
                    std::vector<Complex>(F.values().begin(), F.values().end()));
  for (std::size_t h = 0; h < sys.h_count(); ++h) {
    auto row = out.row(h);
    dft_inverse(sys.K(), row);
    const double d_inv = 1.0 / sys.delta(h).value();
    for (auto& z : row) z *= d_inv;
  }
  return out;
}

TransformResult gen_tau_fourier(const GroupFunction& f) {
  require_side(f, Side::primal, "gen_tau_fourier");
  const TauSystem& sys = f.system();
  GroupFunction out(sys, Side::dual);
  std::vector<Complex> spectrum(f.row_size());
  for (std::size_t h = 0; h < sys.h_count(); ++h) {
    const auto src = f.row(h);
    std::copy(src.begin(), src.end(), spectrum.begin());
    dft_forward(sys.K(), spectrum);
    const double scale = sys.delta(h).pow(1.5);
    const auto perm = sys.omega_permutation(h);
    auto row = out.row(h);
    for (std::size_t w = 0; w < row.size(); ++w) row[w] = scale * spectrum[perm[w]];
  }
  return {std::move(out), std::sqrt(l2_norm_squared(f))};
}

GroupFunction gen_tau_fourier_inverse(const GroupFunction& F) {
  require_side(F, Side::dual, "gen_tau_fourier_inverse");
  const TauSystem& sys = F.system();
  GroupFunction out(sys, Side::primal);
  std::vector<Complex> spectrum(F.row_size());
  for (std::size_t h = 0; h < sys.h_count(); ++h) {
    // sum_w F(h,w) w_h(k) = sum_eta F(h, eta_{h^-1}) eta(k), and
    // eta_{h^-1} = w exactly when eta = w_h.
    const auto src = F.row(h);
    const auto perm = sys.omega_permutation(h);
    for (std::size_t w = 0; w < src.size(); ++w) spectrum[perm[w]] = src[w];
    dft_inverse(sys.K(), spectrum);
    const double scale = sys.delta(h).pow(-0.5);
    auto row = out.row(h);
    for (std::size_t k = 0; k < row.size(); ++k) row[k] = scale * spectrum[k];
  }
  return out;
}

GroupFunction synthesize_g(const GroupFunction& psi, Synthesis variant) {
  require_side(psi, Side::dual, "synthesize_g");
  const TauSystem& sys = psi.system();
  GroupFunction g(sys, Side::primal);
  std::vector<Complex> spectrum(psi.row_size());
  for (std::size_t h = 0; h < sys.h_count(); ++h) {
    const auto src = psi.row(h);
    if (variant == Synthesis::plain) {
      std::copy(src.begin(), src.end(), spectrum.begin());
    } else {
      const auto perm = sys.omega_permutation(h);
      for (std::size_t w = 0; w < src.size(); ++w) spectrum[perm[w]] = src[w];
    }
    dft_inverse(sys.K(), spectrum);
    auto row = g.row(h);
    std::copy(spectrum.begin(), spectrum.end(), row.begin());
  }
  return g;
}

const char* to_string(ParsevalIdentity id) {
  switch (id) {
    case ParsevalIdentity::P01: return "P01";
    case ParsevalIdentity::P02: return "P02";
    case ParsevalIdentity::PP1: return "PP1";
    case ParsevalIdentity::PP2: return "PP2";
  }
  return "?";
}

ParsevalSides parseval_sides(const GroupFunction& f, const GroupFunction& psi,
                             ParsevalIdentity identity) {
  require_side(f, Side::primal, "parseval_residual");
  require_side(psi, Side::dual, "parseval_residual");
  const TauSystem& sys = f.system();
  if (f.values().size() != psi.values().size() || !(sys.K() == psi.system().K())) {
    throw StructuralError("parseval_residual: f and Psi on different systems");
  }

  const bool generalized =
      identity == ParsevalIdentity::PP1 || identity == ParsevalIdentity::PP2;
  const GroupFunction g =
      synthesize_g(psi, generalized ? Synthesis::twisted : Synthesis::plain);
  const GroupFunction transformed =
      generalized ? gen_tau_fourier(f).function : tau_fourier(f).function;

  // Extra factor inside the G_tau integral and the G_tau^ integral.
  auto primal_factor = [&](double d) {
    switch (identity) {
      case ParsevalIdentity::P01: return 1.0 / d;
      case ParsevalIdentity::PP1: return 1.0 / std::sqrt(d);
      default: return 1.0;
    }
  };
  auto dual_factor = [&](double d) {
    switch (identity) {
      case ParsevalIdentity::P02: return d;
      case ParsevalIdentity::PP2: return std::sqrt(d);
      default: return 1.0;
    }
  };

  ParsevalSides sides{};
  for (std::size_t h = 0; h < sys.h_count(); ++h) {
    const double d = sys.delta(h).value();
    Complex lhs_row{};
    const auto fr = f.row(h);
    const auto gr = g.row(h);
    for (std::size_t k = 0; k < fr.size(); ++k) lhs_row += fr[k] * std::conj(gr[k]);
    sides.lhs += primal_factor(d) * f.weight(h) * lhs_row;

    Complex rhs_row{};
    const auto tr = transformed.row(h);
    const auto pr = psi.row(h);
    for (std::size_t w = 0; w < tr.size(); ++w) rhs_row += tr[w] * std::conj(pr[w]);
    sides.rhs += dual_factor(d) * psi.weight(h) * rhs_row;
  }
  return sides;
}

double parseval_residual(const GroupFunction& f, const GroupFunction& psi,
                         ParsevalIdentity identity) {
  const ParsevalSides sides = parseval_sides(f, psi, identity);
  return std::abs(sides.lhs - sides.rhs);
}

GroupFunction plain_preimage(const GroupFunction& phi) {
  require_side(phi, Side::dual, "plain_preimage");
  const TauSystem& sys = phi.system();
  GroupFunction f(sys, Side::primal);
  for (std::size_t h = 0; h < sys.h_count(); ++h) {
    const auto src = phi.row(h);
    KFunction v = inverse_fourier_K(
        KFunction(sys.K(), Domain::dual, std::vector<Complex>(src.begin(), src.end())));
    const double d_inv = 1.0 / sys.delta(h).value();
    auto row = f.row(h);
    for (std::size_t k = 0; k < row.size(); ++k) row[k] = d_inv * v.values[k];
  }
  return f;
}

GroupFunction generalized_preimage(const GroupFunction& phi) {
  require_side(phi, Side::dual, "generalized_preimage");
  const TauSystem& sys = phi.system();
  const FiniteLcaGroup& K = sys.K();
  GroupFunction f(sys, Side::primal);
  for (std::size_t h = 0; h < sys.h_count(); ++h) {
    const auto src = phi.row(h);
    KFunction v = inverse_fourier_K(
        KFunction(K, Domain::dual, std::vector<Complex>(src.begin(), src.end())));
    const Automorphism& tau_inv = sys.tau(sys.h_inverse(h));
    const double scale = sys.delta(h).pow(-0.5);
    auto row = f.row(h);
    for (std::size_t k = 0; k < row.size(); ++k) {
      row[k] = scale * v[apply(tau_inv, K.element_at(k))];
    }
  }
  return f;
}

}  // namespace tauh
