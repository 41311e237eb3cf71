#pragma once

// tau-Fourier transform F_tau and the generalized transform F_tau^#, their
// inverses, the functions g of the Parseval identities, and the preimage
// constructions used to witness surjectivity.
//
//   F_tau(f)(h, w)   = delta(h)       F_K(f_h)(w)
//   F_tau^#(f)(h, w) = delta(h)^(3/2) F_K(f_h)(w_h)
//
// Integrals over K^ use the Plancherel weight 1/|K|; delta factors are
// applied exactly where the formulas put them, never folded into a measure.

#include "tauh/semidirect.hpp"

namespace tauh {

struct TransformResult {
  GroupFunction function;  // side == dual
  double source_norm = 0;  // L2 norm of the input under the primal weight
};

TransformResult tau_fourier(const GroupFunction& f);
GroupFunction tau_fourier_inverse(const GroupFunction& F);

TransformResult gen_tau_fourier(const GroupFunction& f);
GroupFunction gen_tau_fourier_inverse(const GroupFunction& F);

enum class Synthesis { plain, twisted };

// plain:   g(h,k) = (1/|K|) sum_w Psi(h,w) w(k)
// twisted: g(h,k) = (1/|K|) sum_w Psi(h,w) w_h(k)
GroupFunction synthesize_g(const GroupFunction& psi, Synthesis variant);

enum class ParsevalIdentity { P01, P02, PP1, PP2 };
const char* to_string(ParsevalIdentity id);

struct ParsevalSides {
  Complex lhs;  // integral over G_tau
  Complex rhs;  // integral over G_tau^
};

// Each side is summed on its own: the left side from f and g = synthesize_g
// (Psi), the right side from the forward transform of f and Psi.
ParsevalSides parseval_sides(const GroupFunction& f, const GroupFunction& psi,
                             ParsevalIdentity identity);
double parseval_residual(const GroupFunction& f, const GroupFunction& psi,
                         ParsevalIdentity identity);

// f(h,k) = delta(h)^-1 v^h(k) with F_K(v^h) = phi_h; F_tau maps it to phi.
GroupFunction plain_preimage(const GroupFunction& phi);
// f(h,k) = delta(h)^(-1/2) v^h(tau_{h^-1}(k)); F_tau^# maps it to phi.
GroupFunction generalized_preimage(const GroupFunction& phi);

}  // namespace tauh
