#pragma once

// Quadrature realization of the affine group (0, inf) x|_tau R with
// tau_a(b) = a b, delta(a) = 1/a, primal Haar a^-2 da db and dual Haar
// da dw. All integrals use the trapezoid rule on uniform grids.

#include <complex>
#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "tauh/lca.hpp"

namespace tauh::affine {

struct UniformAxis {
  double min = 0;
  double max = 0;
  std::size_t count = 0;

  double step() const;
  double node(std::size_t i) const;
  double weight(std::size_t i) const;  // trapezoid weight
  // Same interval, half the step.
  UniformAxis refined() const;
};

struct AffineGrid {
  UniformAxis a;
  UniformAxis b;
  UniformAxis omega;

  // a in [1,2] (64 nodes), b and omega in [-8,8] (1024 nodes each).
  static AffineGrid desk_default();
  // a_min > 0, counts >= 2, positive steps. Throws DomainError.
  void validate() const;
  AffineGrid refined() const;
};

enum class AffineDomain { space, frequency };  // (a,b) or (a,omega)

// Decay threshold (relative to the sup norm) expected at the b / omega edges.
inline constexpr double kTruncationThreshold = 1e-8;

struct SampledAffineFunction {
  AffineGrid grid;
  AffineDomain domain = AffineDomain::space;
  std::vector<Complex> values;  // row-major: a index, then b (or omega) index
  std::vector<std::string> warnings;

  SampledAffineFunction(AffineGrid g, AffineDomain d);
  SampledAffineFunction(AffineGrid g, AffineDomain d, std::vector<Complex> v);

  std::size_t row_size() const;
  Complex& at(std::size_t ia, std::size_t j) { return values[ia * row_size() + j]; }
  Complex at(std::size_t ia, std::size_t j) const {
    return values[ia * row_size() + j];
  }
};

SampledAffineFunction sample(const AffineGrid& grid, AffineDomain domain,
                             const std::function<Complex(double, double)>& fn);

// 1_[1,2](a) exp(-pi b^2); both Plancherel sides equal 1/(2 sqrt 2) for it
// when the a-axis is [1,2].
SampledAffineFunction gaussian_test_function(const AffineGrid& grid);
inline constexpr double kGaussianPlancherelTarget = 0.35355339059327373;

// Returns a warning if |f| at the outer b / omega nodes exceeds the
// truncation threshold.
std::vector<std::string> truncation_warnings(const SampledAffineFunction& f);

// F_tau(f)(a,w) = a^-1 int f(a,b) exp(-2 pi i w b) db.
SampledAffineFunction affine_tau_fourier(const SampledAffineFunction& f);
// F_tau^#(f)(a,w) = a^(-3/2) int f(a,b) exp(-2 pi i w b / a) db.
SampledAffineFunction affine_gen_tau_fourier(const SampledAffineFunction& f);

enum class Variant { plain, generalized };

// plain:       f(a,b) = a     int F(a,w) exp(2 pi i w b) dw
// generalized: f(a,b) = a^1/2 int F(a,w) exp(2 pi i w b / a) dw
SampledAffineFunction affine_reconstruct(const SampledAffineFunction& F,
                                         Variant variant);

// int int |f(a,b)|^2 / a^2 da db.
double primal_norm_squared(const SampledAffineFunction& f);
// int int |F(a,w)|^2 da dw.
double dual_norm_squared(const SampledAffineFunction& F);

struct QuadrupleIntegral {
  double lhs = 0;       // the four-fold integral
  double rhs = 0;       // int int |f|^2 / a^2 da db
  double residual = 0;  // |lhs - rhs|
};

// The inner (b, beta) double integral is expanded as |int f e^{...} db|^2
// with the raw Fourier integral, weighted a^-2 (plain) or a^-3
// (generalized) and integrated over (a, w).
QuadrupleIntegral quadruple_integral(const SampledAffineFunction& f,
                                     Variant variant);
double quadruple_integral_residual(const SampledAffineFunction& f,
                                   Variant variant);

struct AffinePoint {
  double a = 1;
  double x = 0;  // b on G_tau, omega on G_tau^
  friend bool operator==(const AffinePoint&, const AffinePoint&) = default;
};

// (a,b)(a',b') = (a a', b + a b').
AffinePoint affine_multiply(AffinePoint p, AffinePoint q);
// Closed-form dual law (a,w)(a',w') = (a a', w + w'/a).
AffinePoint affine_dual_multiply(AffinePoint p, AffinePoint q);
// Dual law assembled from tau^_a = dual of the linear map b -> a b.
AffinePoint affine_dual_multiply_constructed(AffinePoint p, AffinePoint q);

double affine_delta(double a);
// delta(a) Delta_H Delta_K with both factors unimodular.
double affine_modular_function(AffinePoint p);

// For each a-node: (int g(w/a) dw, a int g(w) dw) over the omega axis.
std::vector<std::pair<double, double>> continuum_pushforward(
    const AffineGrid& grid, const std::function<double(double)>& g);

// |int int phi(g0 (a,w)) da dw - int int phi(a,w) da dw| / |int int phi|,
// integrated on `a_axis` x `omega_axis`.
double dual_haar_invariance_residual(
    AffinePoint g0, const std::function<double(double, double)>& phi,
    const UniformAxis& a_axis, const UniformAxis& omega_axis);

}  // namespace tauh::affine
