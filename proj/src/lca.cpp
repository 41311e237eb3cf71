#include "tauh/lca.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "tauh/errors.hpp"

namespace tauh {

struct FiniteLcaGroup::Data {
  std::vector<std::int64_t> divisors;
  std::vector<std::size_t> strides;
  std::int64_t order = 1;
  std::int64_t exponent = 1;
  std::vector<Complex> roots;  // roots[p] = exp(2 pi i p / exponent)
};

namespace {

std::int64_t reduce(std::int64_t x, std::int64_t n) {
  std::int64_t r = x % n;
  return r < 0 ? r + n : r;
}

Complex exact_root(std::int64_t p, std::int64_t n) {
  if ((4 * p) % n == 0) {
    switch ((4 * p) / n) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      case 3: return {0.0, -1.0};
    }
  }
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(p) /
                       static_cast<double>(n);
  return std::polar(1.0, angle);
}

bool is_power_of_two(std::int64_t n) { return n > 0 && (n & (n - 1)) == 0; }

// One-dimensional transform of `line` (length n) with twiddles taken from
// the group's root table; sign < 0 gives exp(-2 pi i jk/n).
void dft_line(const FiniteLcaGroup& group, std::span<Complex> line,
              std::int64_t n, int sign, std::vector<Complex>& scratch) {
  const std::int64_t exponent = group.exponent();
  const std::int64_t step = exponent / n;
  auto twiddle = [&](std::int64_t q) {
    q %= n;
    std::int64_t p = q * step;
    if (sign < 0 && p != 0) p = exponent - p;
    return group.root_of_unity(p);
  };

  if (n >= 4 && is_power_of_two(n)) {
    const auto un = static_cast<std::size_t>(n);
    for (std::size_t i = 1, j = 0; i < un; ++i) {
      std::size_t bit = un >> 1;
      for (; j & bit; bit >>= 1) j ^= bit;
      j ^= bit;
      if (i < j) std::swap(line[i], line[j]);
    }
    for (std::size_t len = 2; len <= un; len <<= 1) {
      const std::int64_t stride = n / static_cast<std::int64_t>(len);
      for (std::size_t start = 0; start < un; start += len) {
        for (std::size_t m = 0; m < len / 2; ++m) {
          const Complex w = twiddle(static_cast<std::int64_t>(m) * stride);
          const Complex u = line[start + m];
          const Complex v = line[start + m + len / 2] * w;
          line[start + m] = u + v;
          line[start + m + len / 2] = u - v;
        }
      }
    }
    return;
  }

  scratch.assign(static_cast<std::size_t>(n), Complex{});
  for (std::int64_t j = 0; j < n; ++j) {
    Complex acc{};
    for (std::int64_t k = 0; k < n; ++k) {
      acc += line[static_cast<std::size_t>(k)] * twiddle(j * k);
    }
    scratch[static_cast<std::size_t>(j)] = acc;
  }
  std::copy(scratch.begin(), scratch.end(), line.begin());
}

void separable_dft(const FiniteLcaGroup& group, std::span<Complex> values,
                   int sign) {
  if (values.size() != static_cast<std::size_t>(group.order())) {
    throw StructuralError("dft: table length does not match group order");
  }
  const auto divisors = group.divisors();
  std::vector<Complex> line;
  std::vector<Complex> scratch;
  std::size_t stride = values.size();
  for (std::size_t axis = 0; axis < divisors.size(); ++axis) {
    const auto n = static_cast<std::size_t>(divisors[axis]);
    stride /= n;
    if (n == 1) continue;
    const std::size_t block = n * stride;
    line.resize(n);
    for (std::size_t outer = 0; outer < values.size(); outer += block) {
      for (std::size_t inner = 0; inner < stride; ++inner) {
        const std::size_t base = outer + inner;
        for (std::size_t t = 0; t < n; ++t) line[t] = values[base + t * stride];
        dft_line(group, line, divisors[axis], sign, scratch);
        for (std::size_t t = 0; t < n; ++t) values[base + t * stride] = line[t];
      }
    }
  }
}

}  // namespace

FiniteLcaGroup::FiniteLcaGroup(std::vector<std::int64_t> divisors,
                               std::int64_t max_order) {
  auto data = std::make_shared<Data>();
  data->divisors = std::move(divisors);
  for (auto n : data->divisors) {
    if (n < 1) throw DomainError("FiniteLcaGroup: divisors must be >= 1");
    if (data->order > max_order / n) {
      throw CapacityError("FiniteLcaGroup: order exceeds cap of " +
                          std::to_string(max_order));
    }
    data->order *= n;
    data->exponent = std::lcm(data->exponent, n);
  }
  data->strides.assign(data->divisors.size(), 1);
  for (std::size_t i = data->divisors.size(); i-- > 1;) {
    data->strides[i - 1] =
        data->strides[i] * static_cast<std::size_t>(data->divisors[i]);
  }
  data->roots.resize(static_cast<std::size_t>(data->exponent));
  for (std::int64_t p = 0; p < data->exponent; ++p) {
    data->roots[static_cast<std::size_t>(p)] = exact_root(p, data->exponent);
  }
  data_ = std::move(data);
}

FiniteLcaGroup FiniteLcaGroup::cyclic(std::int64_t n) {
  return FiniteLcaGroup({n});
}

std::span<const std::int64_t> FiniteLcaGroup::divisors() const {
  return data_->divisors;
}
std::size_t FiniteLcaGroup::rank() const { return data_->divisors.size(); }
std::int64_t FiniteLcaGroup::order() const { return data_->order; }
std::int64_t FiniteLcaGroup::exponent() const { return data_->exponent; }

GroupElement FiniteLcaGroup::element(std::vector<std::int64_t> coords) const {
  if (coords.size() != rank()) {
    throw StructuralError("element: expected " + std::to_string(rank()) +
                          " coordinates, got " + std::to_string(coords.size()));
  }
  for (std::size_t i = 0; i < coords.size(); ++i) {
    coords[i] = reduce(coords[i], data_->divisors[i]);
  }
  return GroupElement{std::move(coords)};
}

GroupElement FiniteLcaGroup::zero() const {
  return GroupElement{std::vector<std::int64_t>(rank(), 0)};
}

GroupElement FiniteLcaGroup::add(const GroupElement& a,
                                 const GroupElement& b) const {
  check_member(a);
  check_member(b);
  GroupElement out = a;
  for (std::size_t i = 0; i < rank(); ++i) {
    out.coords[i] = reduce(a.coords[i] + b.coords[i], data_->divisors[i]);
  }
  return out;
}

GroupElement FiniteLcaGroup::negate(const GroupElement& a) const {
  check_member(a);
  GroupElement out = a;
  for (std::size_t i = 0; i < rank(); ++i) {
    out.coords[i] = reduce(-a.coords[i], data_->divisors[i]);
  }
  return out;
}

GroupElement FiniteLcaGroup::subtract(const GroupElement& a,
                                      const GroupElement& b) const {
  return add(a, negate(b));
}

std::size_t FiniteLcaGroup::index_of(const GroupElement& k) const {
  check_member(k);
  std::size_t idx = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    idx += static_cast<std::size_t>(k.coords[i]) * data_->strides[i];
  }
  return idx;
}

GroupElement FiniteLcaGroup::element_at(std::size_t index) const {
  if (index >= static_cast<std::size_t>(order())) {
    throw StructuralError("element_at: index out of range");
  }
  GroupElement out = zero();
  for (std::size_t i = 0; i < rank(); ++i) {
    out.coords[i] = static_cast<std::int64_t>(index / data_->strides[i]);
    index %= data_->strides[i];
  }
  return out;
}

std::vector<GroupElement> FiniteLcaGroup::elements() const {
  std::vector<GroupElement> all;
  all.reserve(static_cast<std::size_t>(order()));
  for (std::size_t i = 0; i < static_cast<std::size_t>(order()); ++i) {
    all.push_back(element_at(i));
  }
  return all;
}

bool FiniteLcaGroup::contains(const GroupElement& k) const {
  if (k.coords.size() != rank()) return false;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (k.coords[i] < 0 || k.coords[i] >= data_->divisors[i]) return false;
  }
  return true;
}

void FiniteLcaGroup::check_member(const GroupElement& k) const {
  if (k.coords.size() != rank()) {
    throw StructuralError("element of rank " + std::to_string(k.coords.size()) +
                          " used in group " + describe());
  }
  if (!contains(k)) {
    throw StructuralError("element coordinates not reduced for group " +
                          describe());
  }
}

std::int64_t FiniteLcaGroup::pairing(const GroupElement& j,
                                     const GroupElement& k) const {
  check_member(j);
  check_member(k);
  std::int64_t p = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    const std::int64_t n = data_->divisors[i];
    const std::int64_t term = (j.coords[i] * k.coords[i]) % n;
    p = (p + term * (data_->exponent / n)) % data_->exponent;
  }
  return p;
}

Complex FiniteLcaGroup::root_of_unity(std::int64_t p) const {
  return data_->roots[static_cast<std::size_t>(reduce(p, data_->exponent))];
}

std::string FiniteLcaGroup::describe() const {
  if (rank() == 0) return "{0}";
  std::ostringstream os;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (i) os << " x ";
    os << "Z_" << data_->divisors[i];
  }
  return os.str();
}

bool operator==(const FiniteLcaGroup& a, const FiniteLcaGroup& b) {
  return a.data_ == b.data_ || a.data_->divisors == b.data_->divisors;
}

GroupElement group_add(const FiniteLcaGroup& group, const GroupElement& a,
                       const GroupElement& b) {
  return group.add(a, b);
}

Complex char_eval(const FiniteLcaGroup& group, const Character& omega,
                  const GroupElement& k) {
  return group.root_of_unity(group.pairing(omega.index, k));
}

const char* to_string(Domain d) {
  return d == Domain::group ? "K" : "K^";
}

KFunction::KFunction(FiniteLcaGroup g, Domain d)
    : group(std::move(g)),
      domain(d),
      values(static_cast<std::size_t>(group.order())) {}

KFunction::KFunction(FiniteLcaGroup g, Domain d, std::vector<Complex> v)
    : group(std::move(g)), domain(d), values(std::move(v)) {
  if (values.size() != static_cast<std::size_t>(group.order())) {
    throw StructuralError("KFunction: table has " +
                          std::to_string(values.size()) +
                          " entries, group order is " +
                          std::to_string(group.order()));
  }
  for (const auto& z : values) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw StructuralError("KFunction: non-finite entry");
    }
  }
}

Complex& KFunction::operator[](const GroupElement& k) {
  return values[group.index_of(k)];
}

const Complex& KFunction::operator[](const GroupElement& k) const {
  return values[group.index_of(k)];
}

void dft_forward(const FiniteLcaGroup& group, std::span<Complex> values) {
  separable_dft(group, values, -1);
}

void dft_inverse(const FiniteLcaGroup& group, std::span<Complex> values) {
  separable_dft(group, values, +1);
  const double scale = 1.0 / static_cast<double>(group.order());
  for (auto& z : values) z *= scale;
}

KFunction fourier_K(const KFunction& v) {
  if (v.domain != Domain::group) {
    throw StructuralError("fourier_K: input must be a function on K");
  }
  KFunction out(v.group, Domain::dual, v.values);
  dft_forward(out.group, out.values);
  return out;
}

KFunction inverse_fourier_K(const KFunction& phi) {
  if (phi.domain != Domain::dual) {
    throw StructuralError("inverse_fourier_K: input must be a function on K^");
  }
  KFunction out(phi.group, Domain::group, phi.values);
  dft_inverse(out.group, out.values);
  return out;
}

Complex inner_K(const KFunction& u, const KFunction& v, Measure measure) {
  if (!(u.group == v.group)) {
    throw StructuralError("inner_K: functions live on different groups");
  }
  if (u.domain != v.domain) {
    throw StructuralError("inner_K: mixing a K-function with a K^-function");
  }
  const Domain expected =
      measure == Measure::haar_K ? Domain::group : Domain::dual;
  if (u.domain != expected) {
    throw StructuralError(std::string("inner_K: measure does not match domain ") +
                          to_string(u.domain));
  }
  Complex acc{};
  for (std::size_t i = 0; i < u.values.size(); ++i) {
    acc += u.values[i] * std::conj(v.values[i]);
  }
  if (measure == Measure::plancherel_Khat) {
    acc /= static_cast<double>(u.group.order());
  }
  return acc;
}

}  // namespace tauh
