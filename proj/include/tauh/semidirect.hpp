#pragma once

// The semi-direct product G_tau = H x|_tau K for a finite H given
// extensionally (labels, Cayley table, tau_h, delta(h)), its tau-dual group
// H x|_tau^ K^, the double dual and the duality map Theta.

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tauh/automorphism.hpp"
#include "tauh/lca.hpp"

namespace tauh {

using CayleyTable = std::vector<std::vector<std::size_t>>;

struct TauSystemSpec {
  FiniteLcaGroup K;
  std::vector<std::string> labels;
  std::vector<Automorphism> automorphisms;
  // Optional abstract group law on labels; derived from composition of the
  // automorphisms when absent (which then must be pairwise distinct).
  std::optional<CayleyTable> cayley;
  // Optional delta table; defaults to 1 for every label.
  std::optional<std::vector<double>> delta;
};

class TauSystem {
 public:
  // Validates the group law on H, that tau is a homomorphism into Aut(K),
  // that delta is a positive homomorphism, and |H| * |K| <= max_order.
  // Throws InvalidSystem / StructuralError / CapacityError.
  explicit TauSystem(TauSystemSpec spec,
                     std::int64_t max_order = kDefaultMaxOrder);

  const FiniteLcaGroup& K() const;
  std::size_t h_count() const;
  std::int64_t order() const;  // |H| * |K|
  bool is_dual() const;

  const std::string& label(std::size_t h) const;
  std::optional<std::size_t> find_label(const std::string& label) const;
  std::size_t h_identity() const;
  std::size_t h_multiply(std::size_t h, std::size_t t) const;
  std::size_t h_inverse(std::size_t h) const;
  const CayleyTable& cayley() const;

  const Automorphism& tau(std::size_t h) const;
  // tau^_h = dual_automorphism(tau_h), the action omega -> omega_h.
  const Automorphism& tau_hat(std::size_t h) const;
  DeltaValue delta(std::size_t h) const;

  // Index permutation of K^: perm[index(omega)] = index(omega_h).
  std::span<const std::size_t> omega_permutation(std::size_t h) const;

  void check_label(std::size_t h) const;

 private:
  struct Data;
  std::shared_ptr<const Data> data_;
  friend TauSystem tau_dual(const TauSystem& sys);
  TauSystem() = default;
};

struct GTauElement {
  std::size_t h = 0;
  GroupElement k;
  friend bool operator==(const GTauElement&, const GTauElement&) = default;
};

struct GTauHatElement {
  std::size_t h = 0;
  Character omega;
  friend bool operator==(const GTauHatElement&, const GTauHatElement&) = default;
};

GTauElement identity_element(const TauSystem& sys);
GTauElement element_at(const TauSystem& sys, std::size_t index);
std::size_t index_of(const TauSystem& sys, const GTauElement& x);

// (h, k) (h', k') = (h h', k + tau_h(k')).
GTauElement multiply(const TauSystem& sys, const GTauElement& x,
                     const GTauElement& y);
// (h, k)^-1 = (h^-1, tau_{h^-1}(-k)).
GTauElement invert(const TauSystem& sys, const GTauElement& x);

// omega_h = omega o tau_{h^-1}.
Character omega_action(const TauSystem& sys, std::size_t h,
                       const Character& omega);

// (H, K^, tau^) with delta^(h) = delta(h)^-1. Applying it twice returns a
// system equal in data to the original.
TauSystem tau_dual(const TauSystem& sys);

// Group law of G_tau^: (h, omega)(t, eta) = (h t, omega + eta_h).
GTauHatElement multiply_dual(const TauSystem& sys, const GTauHatElement& x,
                             const GTauHatElement& y);
GTauHatElement invert_dual(const TauSystem& sys, const GTauHatElement& x);

// Theta(h, k) = (h, k^). K^^ is identified with K by k^(omega) = omega(k),
// so the result is read in tau_dual(tau_dual(sys)).
GTauElement double_dual_theta(const TauSystem& sys, const GTauElement& x);

// Evaluation character k^ on K^: k^(omega) = omega(k).
Complex evaluation_character(const FiniteLcaGroup& K, const GroupElement& k,
                             const Character& omega);

// Both sides of d(omega_h) = delta(h) d(omega) tested against g:
//   lhs = (1/|K|) sum_omega g(omega_h),  rhs = delta(h) (1/|K|) sum_omega g(omega).
std::pair<double, double> pushforward_check(const TauSystem& sys, std::size_t h,
                                            const KFunction& g);

// delta(h) Delta_H(h) Delta_K(k); finite H and K are unimodular.
double modular_function(const TauSystem& sys, const GTauElement& x);

enum class Side { primal, dual };
const char* to_string(Side side);

// Dense |H| x |K| table on G_tau (primal) or G_tau^ (dual). Row h is the
// slice f_h. Haar weight per entry: delta(h) on the primal side,
// delta(h)^-1 / |K| on the dual side.
class GroupFunction {
 public:
  GroupFunction(TauSystem sys, Side side);
  GroupFunction(TauSystem sys, Side side, std::vector<Complex> values);

  const TauSystem& system() const { return system_; }
  Side side() const { return side_; }
  std::size_t row_size() const;

  std::span<const Complex> row(std::size_t h) const;
  std::span<Complex> row(std::size_t h);
  std::span<const Complex> values() const { return values_; }
  std::span<Complex> values() { return values_; }

  Complex& at(std::size_t h, std::size_t k_index);
  Complex at(std::size_t h, std::size_t k_index) const;

  double weight(std::size_t h) const;

 private:
  TauSystem system_;
  Side side_;
  std::vector<Complex> values_;
};

// sum_{h,k} weight(h) |f(h,k)|^2.
double l2_norm_squared(const GroupFunction& f);
// sum_{h,k} weight(h) f conj(g); same system and side required.
Complex inner(const GroupFunction& f, const GroupFunction& g);

}  // namespace tauh
