#pragma once

// Finite abelian groups K = Z_{n_1} x ... x Z_{n_d}, their characters and the
// classical Fourier transform F_K.
//
// Conventions:
//   * Haar measure on K is counting measure.
//   * Plancherel measure on K^ is (1/|K|) * counting measure, which makes
//     F_K unitary.
//   * K^ is identified with K through the pairing
//       omega_j(k) = exp(2 pi i sum_i j_i k_i / n_i),
//     so the same FiniteLcaGroup object describes both; KFunction carries a
//     Domain tag so that K-functions and K^-functions are not mixed up.
//   * Elements are enumerated in mixed radix with the last coordinate
//     varying fastest.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace tauh {

using Complex = std::complex<double>;

inline constexpr std::int64_t kDefaultMaxOrder = 1'000'000;

struct GroupElement {
  std::vector<std::int64_t> coords;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

// Character omega_j, addressed by its index j in the self-dual picture.
struct Character {
  GroupElement index;

  friend bool operator==(const Character&, const Character&) = default;
};

class FiniteLcaGroup {
 public:
  // Divisors must be >= 1. An empty list is the trivial group.
  explicit FiniteLcaGroup(std::vector<std::int64_t> divisors,
                          std::int64_t max_order = kDefaultMaxOrder);

  static FiniteLcaGroup cyclic(std::int64_t n);

  std::span<const std::int64_t> divisors() const;
  std::size_t rank() const;
  std::int64_t order() const;
  // lcm of the divisors; every character value is an exponent()-th root of 1.
  std::int64_t exponent() const;

  // Builds an element, reducing every coordinate into [0, n_i).
  GroupElement element(std::vector<std::int64_t> coords) const;
  GroupElement zero() const;
  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement negate(const GroupElement& a) const;
  GroupElement subtract(const GroupElement& a, const GroupElement& b) const;

  std::size_t index_of(const GroupElement& k) const;
  GroupElement element_at(std::size_t index) const;
  std::vector<GroupElement> elements() const;

  // Throws StructuralError unless k has the right rank and reduced coords.
  void check_member(const GroupElement& k) const;
  bool contains(const GroupElement& k) const;

  // Phase numerator p of <j, k> = exp(2 pi i p / exponent()).
  std::int64_t pairing(const GroupElement& j, const GroupElement& k) const;
  // exp(2 pi i p / exponent()); quarter turns are exact.
  Complex root_of_unity(std::int64_t p) const;

  std::string describe() const;

  friend bool operator==(const FiniteLcaGroup& a, const FiniteLcaGroup& b);

 private:
  struct Data;
  std::shared_ptr<const Data> data_;
};

// [OP] group_add
GroupElement group_add(const FiniteLcaGroup& group, const GroupElement& a,
                       const GroupElement& b);

// [OP] char_eval: exp(2 pi i sum_i omega_i k_i / n_i).
Complex char_eval(const FiniteLcaGroup& group, const Character& omega,
                  const GroupElement& k);

enum class Domain { group, dual };
enum class Measure { haar_K, plancherel_Khat };

const char* to_string(Domain d);

struct KFunction {
  FiniteLcaGroup group;
  Domain domain = Domain::group;
  std::vector<Complex> values;

  // Zero function.
  KFunction(FiniteLcaGroup g, Domain d);
  // Throws StructuralError on length mismatch or non-finite entries.
  KFunction(FiniteLcaGroup g, Domain d, std::vector<Complex> v);

  Complex& operator[](const GroupElement& k);
  const Complex& operator[](const GroupElement& k) const;
};

// v^(omega) = sum_k v(k) conj(omega(k)).
KFunction fourier_K(const KFunction& v);
// phi_check(k) = (1/|K|) sum_omega phi(omega) omega(k).
KFunction inverse_fourier_K(const KFunction& phi);
// sum u conj(v), weighted 1 (haar_K) or 1/|K| (plancherel_Khat). The measure
// must match the domain tag of the arguments.
Complex inner_K(const KFunction& u, const KFunction& v, Measure measure);

// In-place kernels on a dense table laid out like FiniteLcaGroup::elements().
// Separable over the cyclic factors; power-of-two factors use radix-2.
void dft_forward(const FiniteLcaGroup& group, std::span<Complex> values);
void dft_inverse(const FiniteLcaGroup& group, std::span<Complex> values);

}  // namespace tauh
