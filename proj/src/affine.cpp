#include "tauh/affine.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <thread>

#include "tauh/automorphism.hpp"
#include "tauh/errors.hpp"

namespace tauh::affine {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
// Phasor recurrence is re-anchored with an exact polar() this often.
constexpr std::size_t kReanchor = 64;

template <typename Fn>
void parallel_rows(std::size_t rows, Fn&& fn) {
  const std::size_t workers =
      std::min<std::size_t>(rows, std::max(1u, std::thread::hardware_concurrency()));
  if (workers <= 1) {
    for (std::size_t r = 0; r < rows; ++r) fn(r);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t r = w; r < rows; r += workers) fn(r);
    });
  }
}

// sum_m weight_m v_m exp(sign * 2 pi i t x_m) over a uniform axis.
Complex integrate_exponential(const Complex* v, const UniformAxis& axis,
                              double t, double sign) {
  const double dx = axis.step();
  const Complex ratio = std::polar(1.0, sign * kTwoPi * t * dx);
  Complex acc{};
  Complex phasor;
  for (std::size_t m = 0; m < axis.count; ++m) {
    if (m % kReanchor == 0) {
      phasor = std::polar(1.0, sign * kTwoPi * t * axis.node(m));
    }
    acc += axis.weight(m) * v[m] * phasor;
    phasor *= ratio;
  }
  return acc;
}

void require_domain(const SampledAffineFunction& f, AffineDomain d,
                    const char* op) {
  if (f.domain != d) {
    throw ContractError(std::string(op) + ": expected a function on " +
                        (d == AffineDomain::space ? "(a,b)" : "(a,omega)"));
  }
  f.grid.validate();
  if (f.values.size() != f.grid.a.count * f.row_size()) {
    throw StructuralError(std::string(op) + ": grid mismatch");
  }
}

}  // namespace

double UniformAxis::step() const {
  return (max - min) / static_cast<double>(count - 1);
}

double UniformAxis::node(std::size_t i) const {
  if (i + 1 == count) return max;
  return min + static_cast<double>(i) * step();
}

double UniformAxis::weight(std::size_t i) const {
  const double h = step();
  return (i == 0 || i + 1 == count) ? 0.5 * h : h;
}

UniformAxis UniformAxis::refined() const { return {min, max, 2 * count - 1}; }

AffineGrid AffineGrid::desk_default() {
  return {{1.0, 2.0, 64}, {-8.0, 8.0, 1024}, {-8.0, 8.0, 1024}};
}

void AffineGrid::validate() const {
  if (!(a.min > 0.0)) throw DomainError("AffineGrid: a_min must be positive");
  for (const UniformAxis* axis : {&a, &b, &omega}) {
    if (axis->count < 2) throw DomainError("AffineGrid: need at least 2 nodes");
    if (!(axis->max > axis->min)) throw DomainError("AffineGrid: empty interval");
  }
}

AffineGrid AffineGrid::refined() const {
  return {a.refined(), b.refined(), omega.refined()};
}

SampledAffineFunction::SampledAffineFunction(AffineGrid g, AffineDomain d)
    : grid(g), domain(d) {
  grid.validate();
  values.assign(grid.a.count * row_size(), Complex{});
}

SampledAffineFunction::SampledAffineFunction(AffineGrid g, AffineDomain d,
                                             std::vector<Complex> v)
    : grid(g), domain(d), values(std::move(v)) {
  grid.validate();
  if (values.size() != grid.a.count * row_size()) {
    throw StructuralError("SampledAffineFunction: grid mismatch");
  }
}

std::size_t SampledAffineFunction::row_size() const {
  return domain == AffineDomain::space ? grid.b.count : grid.omega.count;
}

SampledAffineFunction sample(const AffineGrid& grid, AffineDomain domain,
                             const std::function<Complex(double, double)>& fn) {
  SampledAffineFunction f(grid, domain);
  const UniformAxis& inner = domain == AffineDomain::space ? grid.b : grid.omega;
  for (std::size_t i = 0; i < grid.a.count; ++i) {
    for (std::size_t j = 0; j < inner.count; ++j) {
      f.at(i, j) = fn(grid.a.node(i), inner.node(j));
    }
  }
  return f;
}

SampledAffineFunction gaussian_test_function(const AffineGrid& grid) {
  return sample(grid, AffineDomain::space, [](double a, double b) {
    const bool inside = a >= 1.0 && a <= 2.0;
    return Complex(inside ? std::exp(-std::numbers::pi * b * b) : 0.0, 0.0);
  });
}

std::vector<std::string> truncation_warnings(const SampledAffineFunction& f) {
  double sup = 0.0;
  for (const auto& z : f.values) sup = std::max(sup, std::abs(z));
  if (sup == 0.0) return {};
  double edge = 0.0;
  const std::size_t n = f.row_size();
  for (std::size_t i = 0; i < f.grid.a.count; ++i) {
    edge = std::max({edge, std::abs(f.at(i, 0)), std::abs(f.at(i, n - 1))});
  }
  if (edge <= kTruncationThreshold * sup) return {};
  std::ostringstream os;
  os << "truncation: |f| reaches " << edge / sup << " of its maximum at the "
     << (f.domain == AffineDomain::space ? "b" : "omega")
     << " grid boundary (threshold " << kTruncationThreshold << ")";
  return {os.str()};
}

SampledAffineFunction affine_tau_fourier(const SampledAffineFunction& f) {
  require_domain(f, AffineDomain::space, "affine_tau_fourier");
  SampledAffineFunction out(f.grid, AffineDomain::frequency);
  parallel_rows(f.grid.a.count, [&](std::size_t i) {
    const double a = f.grid.a.node(i);
    const Complex* row = &f.values[i * f.row_size()];
    for (std::size_t j = 0; j < f.grid.omega.count; ++j) {
      out.at(i, j) =
          integrate_exponential(row, f.grid.b, f.grid.omega.node(j), -1.0) / a;
    }
  });
  out.warnings = truncation_warnings(f);
  for (auto& w : truncation_warnings(out)) out.warnings.push_back(std::move(w));
  return out;
}

SampledAffineFunction affine_gen_tau_fourier(const SampledAffineFunction& f) {
  require_domain(f, AffineDomain::space, "affine_gen_tau_fourier");
  SampledAffineFunction out(f.grid, AffineDomain::frequency);
  parallel_rows(f.grid.a.count, [&](std::size_t i) {
    const double a = f.grid.a.node(i);
    const double scale = std::pow(a, -1.5);
    const Complex* row = &f.values[i * f.row_size()];
    for (std::size_t j = 0; j < f.grid.omega.count; ++j) {
      out.at(i, j) =
          scale * integrate_exponential(row, f.grid.b, f.grid.omega.node(j) / a, -1.0);
    }
  });
  out.warnings = truncation_warnings(f);
  for (auto& w : truncation_warnings(out)) out.warnings.push_back(std::move(w));
  return out;
}

SampledAffineFunction affine_reconstruct(const SampledAffineFunction& F,
                                         Variant variant) {
  require_domain(F, AffineDomain::frequency, "affine_reconstruct");
  SampledAffineFunction out(F.grid, AffineDomain::space);
  parallel_rows(F.grid.a.count, [&](std::size_t i) {
    const double a = F.grid.a.node(i);
    const Complex* row = &F.values[i * F.row_size()];
    for (std::size_t m = 0; m < F.grid.b.count; ++m) {
      const double b = F.grid.b.node(m);
      out.at(i, m) =
          variant == Variant::plain
              ? a * integrate_exponential(row, F.grid.omega, b, +1.0)
              : std::sqrt(a) * integrate_exponential(row, F.grid.omega, b / a, +1.0);
    }
  });
  out.warnings = truncation_warnings(F);
  return out;
}

double primal_norm_squared(const SampledAffineFunction& f) {
  require_domain(f, AffineDomain::space, "primal_norm_squared");
  double total = 0.0;
  for (std::size_t i = 0; i < f.grid.a.count; ++i) {
    const double a = f.grid.a.node(i);
    double row = 0.0;
    for (std::size_t j = 0; j < f.grid.b.count; ++j) {
      row += f.grid.b.weight(j) * std::norm(f.at(i, j));
    }
    total += f.grid.a.weight(i) * row / (a * a);
  }
  return total;
}

double dual_norm_squared(const SampledAffineFunction& F) {
  require_domain(F, AffineDomain::frequency, "dual_norm_squared");
  double total = 0.0;
  for (std::size_t i = 0; i < F.grid.a.count; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < F.grid.omega.count; ++j) {
      row += F.grid.omega.weight(j) * std::norm(F.at(i, j));
    }
    total += F.grid.a.weight(i) * row;
  }
  return total;
}

QuadrupleIntegral quadruple_integral(const SampledAffineFunction& f,
                                     Variant variant) {
  require_domain(f, AffineDomain::space, "quadruple_integral");
  const AffineGrid& grid = f.grid;
  std::vector<double> row_totals(grid.a.count, 0.0);
  parallel_rows(grid.a.count, [&](std::size_t i) {
    const double a = grid.a.node(i);
    const Complex* row = &f.values[i * f.row_size()];
    double acc = 0.0;
    for (std::size_t j = 0; j < grid.omega.count; ++j) {
      const double w = grid.omega.node(j);
      const double freq = variant == Variant::plain ? w : w / a;
      acc += grid.omega.weight(j) *
             std::norm(integrate_exponential(row, grid.b, freq, -1.0));
    }
    const double power = variant == Variant::plain ? a * a : a * a * a;
    row_totals[i] = grid.a.weight(i) * acc / power;
  });
  QuadrupleIntegral q;
  for (double t : row_totals) q.lhs += t;
  q.rhs = primal_norm_squared(f);
  q.residual = std::abs(q.lhs - q.rhs);
  return q;
}

double quadruple_integral_residual(const SampledAffineFunction& f,
                                   Variant variant) {
  return quadruple_integral(f, variant).residual;
}

AffinePoint affine_multiply(AffinePoint p, AffinePoint q) {
  if (!(p.a > 0.0) || !(q.a > 0.0)) throw DomainError("affine: a must be > 0");
  return {p.a * q.a, p.x + p.a * q.x};
}

AffinePoint affine_dual_multiply(AffinePoint p, AffinePoint q) {
  if (!(p.a > 0.0) || !(q.a > 0.0)) throw DomainError("affine: a must be > 0");
  return {p.a * q.a, p.x + q.x / p.a};
}

AffinePoint affine_dual_multiply_constructed(AffinePoint p, AffinePoint q) {
  if (!(p.a > 0.0) || !(q.a > 0.0)) throw DomainError("affine: a must be > 0");
  const LinearContinuumMap tau_a = LinearContinuumMap::scaling(p.a);
  return {p.a * q.a, p.x + tau_a.apply_dual({q.x})[0]};
}

double affine_delta(double a) {
  if (!(a > 0.0)) throw DomainError("affine: a must be > 0");
  return delta(LinearContinuumMap::scaling(a)).value();
}

double affine_modular_function(AffinePoint p) { return affine_delta(p.a); }

std::vector<std::pair<double, double>> continuum_pushforward(
    const AffineGrid& grid, const std::function<double(double)>& g) {
  grid.validate();
  double base = 0.0;
  for (std::size_t j = 0; j < grid.omega.count; ++j) {
    base += grid.omega.weight(j) * g(grid.omega.node(j));
  }
  std::vector<std::pair<double, double>> out;
  out.reserve(grid.a.count);
  for (std::size_t i = 0; i < grid.a.count; ++i) {
    const double a = grid.a.node(i);
    double lhs = 0.0;
    for (std::size_t j = 0; j < grid.omega.count; ++j) {
      lhs += grid.omega.weight(j) * g(grid.omega.node(j) / a);
    }
    out.emplace_back(lhs, a * base);
  }
  return out;
}

double dual_haar_invariance_residual(
    AffinePoint g0, const std::function<double(double, double)>& phi,
    const UniformAxis& a_axis, const UniformAxis& omega_axis) {
  double moved = 0.0;
  double base = 0.0;
  for (std::size_t i = 0; i < a_axis.count; ++i) {
    for (std::size_t j = 0; j < omega_axis.count; ++j) {
      const AffinePoint p{a_axis.node(i), omega_axis.node(j)};
      const AffinePoint q = affine_dual_multiply(g0, p);
      const double w = a_axis.weight(i) * omega_axis.weight(j);
      moved += w * phi(q.a, q.x);
      base += w * phi(p.a, p.x);
    }
  }
  return std::abs(moved - base) / std::abs(base);
}

}  // namespace tauh::affine
