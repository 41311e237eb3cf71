#include "tauh/semidirect.hpp"

#include <cmath>
#include <map>
#include <set>

#include "tauh/errors.hpp"

namespace tauh {

struct TauSystem::Data {
  explicit Data(FiniteLcaGroup k) : K(std::move(k)) {}

  FiniteLcaGroup K;
  std::vector<std::string> labels;
  std::vector<Automorphism> taus;
  std::vector<Automorphism> tau_hats;
  CayleyTable cayley;
  std::vector<std::size_t> inverse;
  std::size_t identity = 0;
  std::vector<double> delta;
  std::vector<std::vector<std::size_t>> omega_perms;
  bool is_dual = false;
};

namespace {

// Above this |H| associativity of a supplied Cayley table is sampled.
constexpr std::size_t kExhaustiveAssociativityLimit = 256;

CayleyTable derive_cayley(const std::vector<Automorphism>& taus) {
  std::map<IntMatrix, std::size_t, bool (*)(const IntMatrix&, const IntMatrix&)>
      lookup([](const IntMatrix& a, const IntMatrix& b) {
        return a.rows() < b.rows();
      });
  for (std::size_t h = 0; h < taus.size(); ++h) {
    if (!lookup.emplace(taus[h].matrix(), h).second) {
      throw InvalidSystem(
          "H labels map to the same automorphism; supply a Cayley table");
    }
  }
  CayleyTable table(taus.size(), std::vector<std::size_t>(taus.size()));
  for (std::size_t h = 0; h < taus.size(); ++h) {
    for (std::size_t t = 0; t < taus.size(); ++t) {
      const Automorphism product = compose(taus[h], taus[t]);
      const auto it = lookup.find(product.matrix());
      if (it == lookup.end()) {
        throw InvalidSystem("H is not closed under composition");
      }
      table[h][t] = it->second;
    }
  }
  return table;
}

void validate_cayley(const CayleyTable& table, std::size_t n) {
  if (table.size() != n) throw InvalidSystem("Cayley table has wrong size");
  for (const auto& row : table) {
    if (row.size() != n) throw InvalidSystem("Cayley table is not square");
    std::vector<bool> seen(n, false);
    for (auto v : row) {
      if (v >= n) throw InvalidSystem("Cayley table entry out of range");
      if (seen[v]) throw InvalidSystem("Cayley table row is not a permutation");
      seen[v] = true;
    }
  }
  auto associative = [&](std::size_t a, std::size_t b, std::size_t c) {
    return table[table[a][b]][c] == table[a][table[b][c]];
  };
  if (n <= kExhaustiveAssociativityLimit) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (!associative(a, b, c)) throw InvalidSystem("H law is not associative");
  } else {
    std::uint64_t state = 0x9e3779b97f4a7c15ULL;
    auto next = [&] {
      state ^= state << 13;
      state ^= state >> 7;
      state ^= state << 17;
      return static_cast<std::size_t>(state % n);
    };
    for (int i = 0; i < 100'000; ++i) {
      if (!associative(next(), next(), next())) {
        throw InvalidSystem("H law is not associative");
      }
    }
  }
}

std::vector<std::size_t> build_permutation(const FiniteLcaGroup& K,
                                           const Automorphism& alpha) {
  std::vector<std::size_t> perm(static_cast<std::size_t>(K.order()));
  for (std::size_t idx = 0; idx < perm.size(); ++idx) {
    perm[idx] = K.index_of(apply(alpha, K.element_at(idx)));
  }
  return perm;
}

}  // namespace

TauSystem::TauSystem(TauSystemSpec spec, std::int64_t max_order) {
  auto data = std::make_shared<Data>(spec.K);
  const std::size_t n = spec.labels.size();
  if (n == 0) throw InvalidSystem("H must contain at least the identity");
  if (spec.automorphisms.size() != n) {
    throw InvalidSystem("one automorphism per H label is required");
  }
  if (static_cast<std::int64_t>(n) > max_order / spec.K.order()) {
    throw CapacityError("|H|*|K| exceeds cap of " + std::to_string(max_order));
  }
  std::set<std::string> unique(spec.labels.begin(), spec.labels.end());
  if (unique.size() != n) throw InvalidSystem("H labels must be unique");
  for (const auto& a : spec.automorphisms) {
    if (!(a.group() == spec.K)) {
      throw StructuralError("automorphism acts on " + a.group().describe() +
                            ", expected " + spec.K.describe());
    }
  }

  if (spec.cayley) {
    validate_cayley(*spec.cayley, n);
    data->cayley = std::move(*spec.cayley);
  } else {
    data->cayley = derive_cayley(spec.automorphisms);
  }

  // Identity: the unique e with e*h = h for all h.
  bool found = false;
  for (std::size_t e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (std::size_t h = 0; h < n && ok; ++h) ok = data->cayley[e][h] == h;
    if (ok) {
      data->identity = e;
      found = true;
    }
  }
  if (!found) throw InvalidSystem("H has no identity element");
  if (!spec.automorphisms[data->identity].is_identity()) {
    throw InvalidSystem("identity label must map to the identity automorphism");
  }
  data->inverse.assign(n, n);
  for (std::size_t h = 0; h < n; ++h) {
    for (std::size_t t = 0; t < n; ++t) {
      if (data->cayley[h][t] == data->identity) data->inverse[h] = t;
    }
    if (data->inverse[h] == n) throw InvalidSystem("H element without inverse");
  }

  for (std::size_t h = 0; h < n; ++h) {
    for (std::size_t t = 0; t < n; ++t) {
      const Automorphism product =
          compose(spec.automorphisms[h], spec.automorphisms[t]);
      if (!(product == spec.automorphisms[data->cayley[h][t]])) {
        throw InvalidSystem("tau is not a homomorphism at (" + spec.labels[h] +
                            ", " + spec.labels[t] + ")");
      }
    }
  }

  data->delta = spec.delta.value_or(std::vector<double>(n, 1.0));
  if (data->delta.size() != n) throw InvalidSystem("delta table has wrong size");
  for (double d : data->delta) {
    if (!(d > 0.0) || !std::isfinite(d)) {
      throw InvalidSystem("delta values must be positive and finite");
    }
  }
  for (std::size_t h = 0; h < n; ++h) {
    for (std::size_t t = 0; t < n; ++t) {
      const double lhs = data->delta[data->cayley[h][t]];
      const double rhs = data->delta[h] * data->delta[t];
      if (std::abs(lhs - rhs) > 1e-12 * std::max(lhs, rhs)) {
        throw InvalidSystem("delta is not multiplicative");
      }
    }
  }

  data->labels = std::move(spec.labels);
  data->taus = std::move(spec.automorphisms);
  data->tau_hats.reserve(n);
  data->omega_perms.reserve(n);
  for (const auto& a : data->taus) {
    data->tau_hats.push_back(dual_automorphism(a));
    data->omega_perms.push_back(build_permutation(data->K, data->tau_hats.back()));
  }
  data_ = std::move(data);
}

const FiniteLcaGroup& TauSystem::K() const { return data_->K; }
std::size_t TauSystem::h_count() const { return data_->labels.size(); }
std::int64_t TauSystem::order() const {
  return static_cast<std::int64_t>(h_count()) * data_->K.order();
}
bool TauSystem::is_dual() const { return data_->is_dual; }

const std::string& TauSystem::label(std::size_t h) const {
  check_label(h);
  return data_->labels[h];
}

std::optional<std::size_t> TauSystem::find_label(const std::string& label) const {
  for (std::size_t h = 0; h < data_->labels.size(); ++h) {
    if (data_->labels[h] == label) return h;
  }
  return std::nullopt;
}

std::size_t TauSystem::h_identity() const { return data_->identity; }

std::size_t TauSystem::h_multiply(std::size_t h, std::size_t t) const {
  check_label(h);
  check_label(t);
  return data_->cayley[h][t];
}

std::size_t TauSystem::h_inverse(std::size_t h) const {
  check_label(h);
  return data_->inverse[h];
}

const CayleyTable& TauSystem::cayley() const { return data_->cayley; }

const Automorphism& TauSystem::tau(std::size_t h) const {
  check_label(h);
  return data_->taus[h];
}

const Automorphism& TauSystem::tau_hat(std::size_t h) const {
  check_label(h);
  return data_->tau_hats[h];
}

DeltaValue TauSystem::delta(std::size_t h) const {
  check_label(h);
  return DeltaValue(data_->delta[h]);
}

std::span<const std::size_t> TauSystem::omega_permutation(std::size_t h) const {
  check_label(h);
  return data_->omega_perms[h];
}

void TauSystem::check_label(std::size_t h) const {
  if (h >= data_->labels.size()) {
    throw StructuralError("unknown H label index " + std::to_string(h));
  }
}

GTauElement identity_element(const TauSystem& sys) {
  return {sys.h_identity(), sys.K().zero()};
}

GTauElement element_at(const TauSystem& sys, std::size_t index) {
  const auto kn = static_cast<std::size_t>(sys.K().order());
  return {index / kn, sys.K().element_at(index % kn)};
}

std::size_t index_of(const TauSystem& sys, const GTauElement& x) {
  sys.check_label(x.h);
  return x.h * static_cast<std::size_t>(sys.K().order()) + sys.K().index_of(x.k);
}

GTauElement multiply(const TauSystem& sys, const GTauElement& x,
                     const GTauElement& y) {
  return {sys.h_multiply(x.h, y.h), sys.K().add(x.k, apply(sys.tau(x.h), y.k))};
}

GTauElement invert(const TauSystem& sys, const GTauElement& x) {
  const std::size_t h_inv = sys.h_inverse(x.h);
  return {h_inv, apply(sys.tau(h_inv), sys.K().negate(x.k))};
}

Character omega_action(const TauSystem& sys, std::size_t h,
                       const Character& omega) {
  return Character{apply(sys.tau_hat(h), omega.index)};
}

TauSystem tau_dual(const TauSystem& sys) {
  const auto& src = *sys.data_;
  auto data = std::make_shared<TauSystem::Data>(src.K);
  data->labels = src.labels;
  data->cayley = src.cayley;
  data->inverse = src.inverse;
  data->identity = src.identity;
  data->taus = src.tau_hats;
  data->delta.reserve(src.delta.size());
  for (double d : src.delta) data->delta.push_back(1.0 / d);
  for (const auto& a : data->taus) {
    data->tau_hats.push_back(dual_automorphism(a));
    data->omega_perms.push_back(build_permutation(data->K, data->tau_hats.back()));
  }
  data->is_dual = !src.is_dual;
  TauSystem out;
  out.data_ = std::move(data);
  return out;
}

GTauHatElement multiply_dual(const TauSystem& sys, const GTauHatElement& x,
                             const GTauHatElement& y) {
  const Character eta_h = omega_action(sys, x.h, y.omega);
  return {sys.h_multiply(x.h, y.h),
          Character{sys.K().add(x.omega.index, eta_h.index)}};
}

GTauHatElement invert_dual(const TauSystem& sys, const GTauHatElement& x) {
  const std::size_t h_inv = sys.h_inverse(x.h);
  return {h_inv,
          omega_action(sys, h_inv, Character{sys.K().negate(x.omega.index)})};
}

GTauElement double_dual_theta(const TauSystem& sys, const GTauElement& x) {
  sys.check_label(x.h);
  sys.K().check_member(x.k);
  return x;
}

Complex evaluation_character(const FiniteLcaGroup& K, const GroupElement& k,
                             const Character& omega) {
  return char_eval(K, omega, k);
}

std::pair<double, double> pushforward_check(const TauSystem& sys, std::size_t h,
                                            const KFunction& g) {
  if (!(g.group == sys.K()) || g.domain != Domain::dual) {
    throw StructuralError("pushforward_check: g must be a function on K^");
  }
  const auto perm = sys.omega_permutation(h);
  double lhs = 0.0;
  double rhs = 0.0;
  for (std::size_t w = 0; w < perm.size(); ++w) {
    lhs += g.values[perm[w]].real();
    rhs += g.values[w].real();
  }
  const double scale = 1.0 / static_cast<double>(sys.K().order());
  return {lhs * scale, sys.delta(h).value() * rhs * scale};
}

double modular_function(const TauSystem& sys, const GTauElement& x) {
  sys.K().check_member(x.k);
  return sys.delta(x.h).value();
}

const char* to_string(Side side) {
  return side == Side::primal ? "primal" : "dual";
}

GroupFunction::GroupFunction(TauSystem sys, Side side)
    : system_(std::move(sys)),
      side_(side),
      values_(static_cast<std::size_t>(system_.order())) {}

GroupFunction::GroupFunction(TauSystem sys, Side side, std::vector<Complex> values)
    : system_(std::move(sys)), side_(side), values_(std::move(values)) {
  if (values_.size() != static_cast<std::size_t>(system_.order())) {
    throw StructuralError("GroupFunction: table has " +
                          std::to_string(values_.size()) + " entries, expected " +
                          std::to_string(system_.order()));
  }
  for (const auto& z : values_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw StructuralError("GroupFunction: non-finite entry");
    }
  }
}

std::size_t GroupFunction::row_size() const {
  return static_cast<std::size_t>(system_.K().order());
}

std::span<const Complex> GroupFunction::row(std::size_t h) const {
  system_.check_label(h);
  return std::span<const Complex>(values_).subspan(h * row_size(), row_size());
}

std::span<Complex> GroupFunction::row(std::size_t h) {
  system_.check_label(h);
  return std::span<Complex>(values_).subspan(h * row_size(), row_size());
}

Complex& GroupFunction::at(std::size_t h, std::size_t k_index) {
  return row(h)[k_index];
}

Complex GroupFunction::at(std::size_t h, std::size_t k_index) const {
  return row(h)[k_index];
}

double GroupFunction::weight(std::size_t h) const {
  const double d = system_.delta(h).value();
  if (side_ == Side::primal) return d;
  return 1.0 / (d * static_cast<double>(system_.K().order()));
}

double l2_norm_squared(const GroupFunction& f) {
  double total = 0.0;
  for (std::size_t h = 0; h < f.system().h_count(); ++h) {
    double row_sum = 0.0;
    for (const auto& z : f.row(h)) row_sum += std::norm(z);
    total += f.weight(h) * row_sum;
  }
  return total;
}

Complex inner(const GroupFunction& f, const GroupFunction& g) {
  if (f.side() != g.side()) {
    throw ContractError("inner: functions on different sides");
  }
  if (f.values().size() != g.values().size() ||
      !(f.system().K() == g.system().K())) {
    throw StructuralError("inner: functions on different systems");
  }
  Complex total{};
  for (std::size_t h = 0; h < f.system().h_count(); ++h) {
    Complex row_sum{};
    const auto a = f.row(h);
    const auto b = g.row(h);
    for (std::size_t i = 0; i < a.size(); ++i) row_sum += a[i] * std::conj(b[i]);
    total += f.weight(h) * row_sum;
  }
  return total;
}

}  // namespace tauh
