#pragma once

// Automorphisms of K = prod Z_{n_i} as integer matrices acting by
// k -> M k (row i reduced mod n_i), together with composition, inversion,
// the modular weight delta and the dual automorphism alpha^ = (. o alpha^-1)
// on K^.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "tauh/lca.hpp"

namespace tauh {

// Square integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t dim);
  IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);
  static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);
  static IntMatrix identity(std::size_t dim);

  std::size_t dim() const { return dim_; }
  std::int64_t& operator()(std::size_t i, std::size_t j) {
    return entries_[i * dim_ + j];
  }
  std::int64_t operator()(std::size_t i, std::size_t j) const {
    return entries_[i * dim_ + j];
  }
  std::vector<std::vector<std::int64_t>> rows() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<std::int64_t> entries_;
};

// Positive Radon-Nikodym factor with dk = delta * d(tau(k)).
class DeltaValue {
 public:
  explicit DeltaValue(double value);
  double value() const { return value_; }
  DeltaValue inverse() const { return DeltaValue(1.0 / value_); }
  double pow(double exponent) const;
  friend DeltaValue operator*(DeltaValue a, DeltaValue b) {
    return DeltaValue(a.value_ * b.value_);
  }
  friend bool operator==(const DeltaValue&, const DeltaValue&) = default;

 private:
  double value_;
};

// Every coordinate set up to this order is checked for bijectivity by
// enumerating images; larger groups use the per-prime determinant test.
inline constexpr std::int64_t kExhaustiveBijectionLimit = 10'000;

class Automorphism {
 public:
  // Reduces row i mod n_i, then checks M[i][j] * n_j == 0 mod n_i and
  // bijectivity. Throws InvalidAutomorphism otherwise.
  Automorphism(FiniteLcaGroup group, IntMatrix matrix);

  static Automorphism identity(const FiniteLcaGroup& group);
  static Automorphism scalar(const FiniteLcaGroup& group, std::int64_t c);

  const FiniteLcaGroup& group() const { return group_; }
  const IntMatrix& matrix() const { return matrix_; }
  bool is_identity() const;

  friend bool operator==(const Automorphism& a, const Automorphism& b) {
    return a.group_ == b.group_ && a.matrix_ == b.matrix_;
  }

 private:
  struct Unchecked {};
  Automorphism(FiniteLcaGroup group, IntMatrix matrix, Unchecked);

  FiniteLcaGroup group_;
  IntMatrix matrix_;

  friend Automorphism compose(const Automorphism&, const Automorphism&);
  friend Automorphism invert(const Automorphism&);
  friend Automorphism dual_automorphism(const Automorphism&);
};

// Row-reduced copy of `matrix`; throws InvalidAutomorphism if the matrix
// does not respect the relations n_j e_j = 0.
IntMatrix normalize_endomorphism(const FiniteLcaGroup& group,
                                 const IntMatrix& matrix);
bool is_bijective_exhaustive(const FiniteLcaGroup& group,
                             const IntMatrix& normalized);
// For each prime p | |K|: the induced map on K_p / p K_p is invertible over F_p.
bool is_bijective_algebraic(const FiniteLcaGroup& group,
                            const IntMatrix& normalized);

GroupElement apply(const Automorphism& alpha, const GroupElement& k);
// (alpha o beta)(k) = alpha(beta(k)).
Automorphism compose(const Automorphism& alpha, const Automorphism& beta);
Automorphism invert(const Automorphism& alpha);
// Counting measure is preserved by any bijection: always 1.
DeltaValue delta(const Automorphism& alpha);
// Matrix of omega -> omega o alpha^-1 on character indices:
//   D[l][i] = N[i][l] * n_l / n_i  (mod n_l),  N = matrix of alpha^-1,
// which is the plain transpose of N when all divisors agree.
Automorphism dual_automorphism(const Automorphism& alpha);

// Image index table over K.elements(); validation fallback only.
std::vector<std::size_t> permutation_table(const Automorphism& alpha);

// Invertible real linear map on a continuum factor R^d.
class LinearContinuumMap {
 public:
  LinearContinuumMap(std::size_t dim, std::vector<double> row_major);
  static LinearContinuumMap scaling(double a);

  std::size_t dim() const { return dim_; }
  double determinant() const;
  std::vector<double> apply(const std::vector<double>& x) const;
  // omega o M^-1 in the frequency coordinates: solves M^T y = omega.
  std::vector<double> apply_dual(const std::vector<double>& omega) const;

 private:
  std::size_t dim_;
  std::vector<double> m_;
};

// |det M|^-1, the change of variables d(Mx) = |det M| dx.
DeltaValue delta(const LinearContinuumMap& map);

}  // namespace tauh
