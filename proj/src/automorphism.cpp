#include "tauh/automorphism.hpp"

#include <cmath>
#include <numeric>
#include <optional>
#include <string>

#include "tauh/errors.hpp"

namespace tauh {

namespace {

std::int64_t reduce(std::int64_t x, std::int64_t n) {
  std::int64_t r = x % n;
  return r < 0 ? r + n : r;
}

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t n) {
  const __int128 prod = static_cast<__int128>(a) * b;
  auto r = static_cast<std::int64_t>(prod % n);
  return r < 0 ? r + n : r;
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t n) {
  if (n == 1) return 0;
  std::int64_t old_r = reduce(a, n), r = n, old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    old_r -= q * r;
    std::swap(old_r, r);
    old_s -= q * s;
    std::swap(old_s, s);
  }
  if (old_r != 1) throw InvalidAutomorphism("inverse_mod: not a unit");
  return reduce(old_s, n);
}

std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> primes;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      primes.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) primes.push_back(n);
  return primes;
}

// The p-primary part of K in local coordinates: K_p = prod_a Z_{q_a} with
// q_a = p^{e_a}, where Z_{q_a} sits inside Z_{n_{i_a}} as the multiples of
// m_a = n_{i_a} / q_a.
struct PrimaryPart {
  std::int64_t p = 0;
  std::vector<std::size_t> coords;  // i_a
  std::vector<std::int64_t> q;
  std::vector<std::int64_t> m;
};

PrimaryPart primary_part(const FiniteLcaGroup& group, std::int64_t p) {
  PrimaryPart part;
  part.p = p;
  const auto divisors = group.divisors();
  for (std::size_t i = 0; i < divisors.size(); ++i) {
    std::int64_t q = 1;
    std::int64_t n = divisors[i];
    while (n % p == 0) {
      n /= p;
      q *= p;
    }
    if (q > 1) {
      part.coords.push_back(i);
      part.q.push_back(q);
      part.m.push_back(n);
    }
  }
  return part;
}

using Local = std::vector<std::vector<std::int64_t>>;

// Restriction of M to K_p in local coordinates.
Local restrict_to(const PrimaryPart& part, const FiniteLcaGroup& group,
                  const IntMatrix& m) {
  const auto divisors = group.divisors();
  const std::size_t r = part.coords.size();
  Local a(r, std::vector<std::int64_t>(r, 0));
  for (std::size_t x = 0; x < r; ++x) {
    const std::int64_t n = divisors[part.coords[x]];
    for (std::size_t y = 0; y < r; ++y) {
      const std::int64_t image =
          mulmod(m(part.coords[x], part.coords[y]), part.m[y], n);
      // image lies in the p-part of Z_n, i.e. is a multiple of m_x.
      a[x][y] = reduce(image / part.m[x], part.q[x]);
    }
  }
  return a;
}

Local local_product(const PrimaryPart& part, const Local& a, const Local& b) {
  const std::size_t r = part.coords.size();
  Local c(r, std::vector<std::int64_t>(r, 0));
  for (std::size_t x = 0; x < r; ++x) {
    for (std::size_t y = 0; y < r; ++y) {
      std::int64_t acc = 0;
      for (std::size_t z = 0; z < r; ++z) {
        acc = reduce(acc + mulmod(a[x][z], b[z][y], part.q[x]), part.q[x]);
      }
      c[x][y] = acc;
    }
  }
  return c;
}

bool local_is_identity(const PrimaryPart& part, const Local& a) {
  for (std::size_t x = 0; x < a.size(); ++x) {
    for (std::size_t y = 0; y < a.size(); ++y) {
      if (a[x][y] != reduce(x == y ? 1 : 0, part.q[x])) return false;
    }
  }
  return true;
}

// Gauss-Jordan over F_p; nullopt if singular.
std::optional<Local> invert_mod_prime(Local a, std::int64_t p) {
  const std::size_t r = a.size();
  Local inv(r, std::vector<std::int64_t>(r, 0));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) a[i][j] = reduce(a[i][j], p);
    inv[i][i] = 1;
  }
  for (std::size_t col = 0; col < r; ++col) {
    std::size_t pivot = col;
    while (pivot < r && a[pivot][col] == 0) ++pivot;
    if (pivot == r) return std::nullopt;
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    const std::int64_t scale = inverse_mod(a[col][col], p);
    for (std::size_t j = 0; j < r; ++j) {
      a[col][j] = mulmod(a[col][j], scale, p);
      inv[col][j] = mulmod(inv[col][j], scale, p);
    }
    for (std::size_t row = 0; row < r; ++row) {
      if (row == col || a[row][col] == 0) continue;
      const std::int64_t f = a[row][col];
      for (std::size_t j = 0; j < r; ++j) {
        a[row][j] = reduce(a[row][j] - mulmod(f, a[col][j], p), p);
        inv[row][j] = reduce(inv[row][j] - mulmod(f, inv[col][j], p), p);
      }
    }
  }
  return inv;
}

// Inverse of the restriction to K_p: start from the inverse of the induced
// map on K_p / p K_p, then Newton X <- X (2 - A X). The error A X - 1 maps
// K_p into p^(2^t) K_p after t steps.
std::optional<Local> invert_local(const PrimaryPart& part, const Local& a) {
  auto x = invert_mod_prime(a, part.p);
  if (!x) return std::nullopt;
  const std::size_t r = a.size();
  for (int iter = 0; iter < 64; ++iter) {
    const Local ax = local_product(part, a, *x);
    if (local_is_identity(part, ax)) return x;
    Local two_minus = ax;
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < r; ++j) {
        two_minus[i][j] =
            reduce((i == j ? 2 : 0) - ax[i][j], part.q[i]);
      }
    }
    *x = local_product(part, *x, two_minus);
  }
  return std::nullopt;
}

IntMatrix invert_matrix(const FiniteLcaGroup& group, const IntMatrix& m) {
  const auto divisors = group.divisors();
  const std::size_t d = divisors.size();
  IntMatrix n_mat(d);
  for (std::int64_t p : prime_factors(group.order())) {
    const PrimaryPart part = primary_part(group, p);
    const auto x = invert_local(part, restrict_to(part, group, m));
    if (!x) throw InvalidAutomorphism("matrix is not invertible on " +
                                      group.describe());
    // p-component of e_j is c_j m_j e_j with c_j = m_j^-1 mod q_j.
    for (std::size_t b = 0; b < part.coords.size(); ++b) {
      const std::size_t j = part.coords[b];
      const std::int64_t c = inverse_mod(part.m[b], part.q[b]);
      for (std::size_t a = 0; a < part.coords.size(); ++a) {
        const std::size_t i = part.coords[a];
        const std::int64_t local = mulmod((*x)[a][b], c, part.q[a]);
        n_mat(i, j) = reduce(n_mat(i, j) + part.m[a] * local, divisors[i]);
      }
    }
  }
  return n_mat;
}

IntMatrix multiply_matrices(const FiniteLcaGroup& group, const IntMatrix& a,
                            const IntMatrix& b) {
  const auto divisors = group.divisors();
  const std::size_t d = a.dim();
  IntMatrix c(d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      std::int64_t acc = 0;
      for (std::size_t l = 0; l < d; ++l) {
        acc = reduce(acc + mulmod(a(i, l), b(l, j), divisors[i]), divisors[i]);
      }
      c(i, j) = acc;
    }
  }
  return c;
}

}  // namespace

IntMatrix::IntMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim, 0) {}

IntMatrix::IntMatrix(
    std::initializer_list<std::initializer_list<std::int64_t>> rows)
    : dim_(rows.size()) {
  entries_.reserve(dim_ * dim_);
  for (const auto& row : rows) {
    if (row.size() != dim_) throw StructuralError("IntMatrix: not square");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

IntMatrix IntMatrix::from_rows(
    const std::vector<std::vector<std::int64_t>>& rows) {
  IntMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) {
      throw StructuralError("IntMatrix: not square");
    }
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::identity(std::size_t dim) {
  IntMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1;
  return m;
}

std::vector<std::vector<std::int64_t>> IntMatrix::rows() const {
  std::vector<std::vector<std::int64_t>> out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    out[i].assign(entries_.begin() + static_cast<std::ptrdiff_t>(i * dim_),
                  entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * dim_));
  }
  return out;
}

DeltaValue::DeltaValue(double value) : value_(value) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw DomainError("DeltaValue must be positive and finite");
  }
}

double DeltaValue::pow(double exponent) const {
  if (value_ == 1.0) return 1.0;
  return std::pow(value_, exponent);
}

IntMatrix normalize_endomorphism(const FiniteLcaGroup& group,
                                 const IntMatrix& matrix) {
  const auto divisors = group.divisors();
  if (matrix.dim() != divisors.size()) {
    throw StructuralError("automorphism matrix is " +
                          std::to_string(matrix.dim()) + "x" +
                          std::to_string(matrix.dim()) + " on group of rank " +
                          std::to_string(divisors.size()));
  }
  IntMatrix out = matrix;
  for (std::size_t i = 0; i < divisors.size(); ++i) {
    for (std::size_t j = 0; j < divisors.size(); ++j) {
      out(i, j) = reduce(matrix(i, j), divisors[i]);
      if (mulmod(out(i, j), divisors[j], divisors[i]) != 0) {
        throw InvalidAutomorphism(
            "matrix entry (" + std::to_string(i) + "," + std::to_string(j) +
            ") does not map Z_" + std::to_string(divisors[j]) + " into Z_" +
            std::to_string(divisors[i]));
      }
    }
  }
  return out;
}

bool is_bijective_exhaustive(const FiniteLcaGroup& group,
                             const IntMatrix& normalized) {
  const auto order = static_cast<std::size_t>(group.order());
  std::vector<bool> hit(order, false);
  const auto divisors = group.divisors();
  const std::size_t d = divisors.size();
  GroupElement image = group.zero();
  for (std::size_t idx = 0; idx < order; ++idx) {
    const GroupElement k = group.element_at(idx);
    for (std::size_t i = 0; i < d; ++i) {
      std::int64_t acc = 0;
      for (std::size_t j = 0; j < d; ++j) {
        acc = reduce(acc + mulmod(normalized(i, j), k.coords[j], divisors[i]),
                     divisors[i]);
      }
      image.coords[i] = acc;
    }
    const std::size_t target = group.index_of(image);
    if (hit[target]) return false;
    hit[target] = true;
  }
  return true;
}

bool is_bijective_algebraic(const FiniteLcaGroup& group,
                            const IntMatrix& normalized) {
  for (std::int64_t p : prime_factors(group.order())) {
    const PrimaryPart part = primary_part(group, p);
    if (!invert_mod_prime(restrict_to(part, group, normalized), p)) {
      return false;
    }
  }
  return true;
}

Automorphism::Automorphism(FiniteLcaGroup group, IntMatrix matrix)
    : group_(std::move(group)),
      matrix_(normalize_endomorphism(group_, matrix)) {
  const bool bijective = group_.order() <= kExhaustiveBijectionLimit
                             ? is_bijective_exhaustive(group_, matrix_)
                             : is_bijective_algebraic(group_, matrix_);
  if (!bijective) {
    throw InvalidAutomorphism("matrix is not a bijection of " +
                              group_.describe());
  }
}

Automorphism::Automorphism(FiniteLcaGroup group, IntMatrix matrix, Unchecked)
    : group_(std::move(group)), matrix_(std::move(matrix)) {}

Automorphism Automorphism::identity(const FiniteLcaGroup& group) {
  return Automorphism(group,
                      normalize_endomorphism(group, IntMatrix::identity(group.rank())),
                      Unchecked{});
}

Automorphism Automorphism::scalar(const FiniteLcaGroup& group, std::int64_t c) {
  IntMatrix m = IntMatrix::identity(group.rank());
  for (std::size_t i = 0; i < group.rank(); ++i) m(i, i) = c;
  return Automorphism(group, m);
}

bool Automorphism::is_identity() const {
  return matrix_ == normalize_endomorphism(group_, IntMatrix::identity(group_.rank()));
}

GroupElement apply(const Automorphism& alpha, const GroupElement& k) {
  const FiniteLcaGroup& group = alpha.group();
  group.check_member(k);
  const auto divisors = group.divisors();
  const IntMatrix& m = alpha.matrix();
  GroupElement out = group.zero();
  for (std::size_t i = 0; i < divisors.size(); ++i) {
    std::int64_t acc = 0;
    for (std::size_t j = 0; j < divisors.size(); ++j) {
      acc = reduce(acc + mulmod(m(i, j), k.coords[j], divisors[i]), divisors[i]);
    }
    out.coords[i] = acc;
  }
  return out;
}

Automorphism compose(const Automorphism& alpha, const Automorphism& beta) {
  if (!(alpha.group() == beta.group())) {
    throw StructuralError("compose: automorphisms of different groups");
  }
  return Automorphism(alpha.group_,
                      multiply_matrices(alpha.group_, alpha.matrix_, beta.matrix_),
                      Automorphism::Unchecked{});
}

Automorphism invert(const Automorphism& alpha) {
  IntMatrix inv = invert_matrix(alpha.group_, alpha.matrix_);
  const IntMatrix check = multiply_matrices(alpha.group_, alpha.matrix_, inv);
  if (!(check == normalize_endomorphism(alpha.group_,
                                        IntMatrix::identity(alpha.group_.rank())))) {
    throw InvalidAutomorphism("invert: inverse verification failed");
  }
  return Automorphism(alpha.group_, std::move(inv), Automorphism::Unchecked{});
}

DeltaValue delta(const Automorphism&) { return DeltaValue(1.0); }

Automorphism dual_automorphism(const Automorphism& alpha) {
  const Automorphism inv = invert(alpha);
  const auto divisors = alpha.group().divisors();
  const std::size_t d = divisors.size();
  IntMatrix dual(d);
  for (std::size_t l = 0; l < d; ++l) {
    for (std::size_t i = 0; i < d; ++i) {
      // N[i][l] * n_l is a multiple of n_i by well-definedness of N.
      const __int128 scaled = static_cast<__int128>(inv.matrix_(i, l)) * divisors[l];
      dual(l, i) = reduce(static_cast<std::int64_t>((scaled / divisors[i]) % divisors[l]),
                          divisors[l]);
    }
  }
  return Automorphism(alpha.group_, std::move(dual), Automorphism::Unchecked{});
}

std::vector<std::size_t> permutation_table(const Automorphism& alpha) {
  const FiniteLcaGroup& group = alpha.group();
  std::vector<std::size_t> table(static_cast<std::size_t>(group.order()));
  for (std::size_t idx = 0; idx < table.size(); ++idx) {
    table[idx] = group.index_of(apply(alpha, group.element_at(idx)));
  }
  return table;
}

LinearContinuumMap::LinearContinuumMap(std::size_t dim,
                                       std::vector<double> row_major)
    : dim_(dim), m_(std::move(row_major)) {
  if (m_.size() != dim_ * dim_) {
    throw StructuralError("LinearContinuumMap: expected dim*dim entries");
  }
  if (!(std::abs(determinant()) > 0.0)) {
    throw InvalidAutomorphism("LinearContinuumMap: singular matrix");
  }
}

LinearContinuumMap LinearContinuumMap::scaling(double a) {
  return LinearContinuumMap(1, {a});
}

double LinearContinuumMap::determinant() const {
  std::vector<double> lu = m_;
  double det = 1.0;
  for (std::size_t col = 0; col < dim_; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < dim_; ++r) {
      if (std::abs(lu[r * dim_ + col]) > std::abs(lu[pivot * dim_ + col])) {
        pivot = r;
      }
    }
    if (lu[pivot * dim_ + col] == 0.0) return 0.0;
    if (pivot != col) {
      for (std::size_t j = 0; j < dim_; ++j) {
        std::swap(lu[pivot * dim_ + j], lu[col * dim_ + j]);
      }
      det = -det;
    }
    const double piv = lu[col * dim_ + col];
    det *= piv;
    for (std::size_t r = col + 1; r < dim_; ++r) {
      const double f = lu[r * dim_ + col] / piv;
      for (std::size_t j = col; j < dim_; ++j) {
        lu[r * dim_ + j] -= f * lu[col * dim_ + j];
      }
    }
  }
  return det;
}

std::vector<double> LinearContinuumMap::apply(const std::vector<double>& x) const {
  if (x.size() != dim_) throw StructuralError("LinearContinuumMap: rank mismatch");
  std::vector<double> y(dim_, 0.0);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) y[i] += m_[i * dim_ + j] * x[j];
  }
  return y;
}

std::vector<double> LinearContinuumMap::apply_dual(
    const std::vector<double>& omega) const {
  if (omega.size() != dim_) {
    throw StructuralError("LinearContinuumMap: rank mismatch");
  }
  // Gaussian elimination on [M^T | omega] with partial pivoting.
  std::vector<double> a(dim_ * dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) a[i * dim_ + j] = m_[j * dim_ + i];
  }
  std::vector<double> rhs = omega;
  for (std::size_t col = 0; col < dim_; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < dim_; ++r) {
      if (std::abs(a[r * dim_ + col]) > std::abs(a[pivot * dim_ + col])) pivot = r;
    }
    if (pivot != col) {
      for (std::size_t j = 0; j < dim_; ++j) {
        std::swap(a[pivot * dim_ + j], a[col * dim_ + j]);
      }
      std::swap(rhs[pivot], rhs[col]);
    }
    for (std::size_t r = col + 1; r < dim_; ++r) {
      const double f = a[r * dim_ + col] / a[col * dim_ + col];
      if (f == 0.0) continue;
      for (std::size_t j = col; j < dim_; ++j) a[r * dim_ + j] -= f * a[col * dim_ + j];
      rhs[r] -= f * rhs[col];
    }
  }
  std::vector<double> y(dim_, 0.0);
  for (std::size_t i = dim_; i-- > 0;) {
    double acc = rhs[i];
    for (std::size_t j = i + 1; j < dim_; ++j) acc -= a[i * dim_ + j] * y[j];
    y[i] = acc / a[i * dim_ + i];
  }
  return y;
}

DeltaValue delta(const LinearContinuumMap& map) {
  return DeltaValue(1.0 / std::abs(map.determinant()));
}

}  // namespace tauh
