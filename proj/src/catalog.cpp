#include "tauh/catalog.hpp"

#include <charconv>
#include <numeric>

#include "tauh/errors.hpp"

namespace tauh {

namespace {

std::int64_t mod(std::int64_t x, std::int64_t n) {
  std::int64_t r = x % n;
  return r < 0 ? r + n : r;
}

void require_n(std::int64_t n, const char* family) {
  if (n < 2) {
    throw DomainError(std::string(family) + ": n must be >= 2, got " +
                      std::to_string(n));
  }
}

std::int64_t unit_inverse(std::int64_t h, std::int64_t n) {
  for (std::int64_t t = 1; t < n; ++t) {
    if (mod(h * t, n) == 1) return t;
  }
  return 1;  // n == 2 style degenerate unit group
}

}  // namespace

CatalogEntry finite_affine(std::int64_t n) {
  require_n(n, "finite_affine");
  const FiniteLcaGroup K = FiniteLcaGroup::cyclic(n);
  TauSystemSpec spec{K, {}, {}, std::nullopt, std::nullopt};
  std::vector<std::int64_t> units;
  for (std::int64_t h = 1; h < n; ++h) {
    if (std::gcd(h, n) == 1) units.push_back(h);
  }
  for (auto h : units) {
    spec.labels.push_back(std::to_string(h));
    spec.automorphisms.push_back(Automorphism::scalar(K, h));
  }
  TauSystem sys(std::move(spec));

  // (h, j)(h', j') = (h h', j + j' h^-1).
  DualLaw oracle = [sys, n](const GTauHatElement& x, const GTauHatElement& y) {
    const std::int64_t h = std::stoll(sys.label(x.h));
    const std::int64_t t = std::stoll(sys.label(y.h));
    const auto product = sys.find_label(std::to_string(mod(h * t, n)));
    const std::int64_t j = x.omega.index.coords[0];
    const std::int64_t jp = y.omega.index.coords[0];
    return GTauHatElement{
        *product, Character{GroupElement{{mod(j + jp * unit_inverse(h, n), n)}}}};
  };
  return {"affine:" + std::to_string(n), std::move(sys), std::move(oracle),
          "H = units(Z_" + std::to_string(n) + ") acting on Z_" +
              std::to_string(n) + " by multiplication; delta = 1"};
}

CatalogEntry finite_heisenberg(std::int64_t n) {
  require_n(n, "finite_heisenberg");
  // K coordinates (w, z): w stands for K^ = Z_n, z for the circle, cut down
  // to the n-th roots of unity so that z * w(s) stays inside.
  const FiniteLcaGroup K({n, n});
  TauSystemSpec spec{K, {}, {}, std::nullopt, std::nullopt};
  for (std::int64_t s = 0; s < n; ++s) {
    spec.labels.push_back(std::to_string(s));
    spec.automorphisms.emplace_back(K, IntMatrix{{1, 0}, {s, 1}});
  }
  TauSystem sys(std::move(spec));

  // (s, k, m)(s', k', m') = (s + s', k + k' - m' s, m + m').
  DualLaw oracle = [n](const GTauHatElement& x, const GTauHatElement& y) {
    const auto s = static_cast<std::int64_t>(x.h);
    const auto sp = static_cast<std::int64_t>(y.h);
    const auto& a = x.omega.index.coords;
    const auto& b = y.omega.index.coords;
    return GTauHatElement{static_cast<std::size_t>(mod(s + sp, n)),
                          Character{GroupElement{
                              {mod(a[0] + b[0] - b[1] * s, n), mod(a[1] + b[1], n)}}}};
  };
  return {"heisenberg:" + std::to_string(n), std::move(sys), std::move(oracle),
          "finite Weyl-Heisenberg: H = Z_" + std::to_string(n) +
              ", K = Z_n x Z_n (circle replaced by n-th roots of unity); delta = 1"};
}

CatalogEntry finite_motion(std::int64_t n) {
  require_n(n, "finite_motion");
  const FiniteLcaGroup K({n, n});
  // J^e for e = 0..3; labels are exponents of the quarter turn.
  const std::vector<IntMatrix> rotations = {
      {{1, 0}, {0, 1}}, {{0, -1}, {1, 0}}, {{-1, 0}, {0, -1}}, {{0, 1}, {-1, 0}}};
  TauSystemSpec spec{K, {"I", "J", "J2", "J3"}, {}, CayleyTable(4, std::vector<std::size_t>(4)),
                     std::nullopt};
  for (const auto& r : rotations) spec.automorphisms.emplace_back(K, r);
  for (std::size_t e = 0; e < 4; ++e) {
    for (std::size_t f = 0; f < 4; ++f) (*spec.cayley)[e][f] = (e + f) % 4;
  }
  TauSystem sys(std::move(spec));

  // (s, w)(s', w') = (s s', w + w'_s) with w'_s = s w' for a rotation s
  // (w'_s = s^-T w' and rotations are orthogonal).
  DualLaw oracle = [n, rotations](const GTauHatElement& x, const GTauHatElement& y) {
    const IntMatrix& r = rotations[x.h];
    const auto& w = x.omega.index.coords;
    const auto& wp = y.omega.index.coords;
    const std::int64_t r0 = r(0, 0) * wp[0] + r(0, 1) * wp[1];
    const std::int64_t r1 = r(1, 0) * wp[0] + r(1, 1) * wp[1];
    return GTauHatElement{(x.h + y.h) % 4,
                          Character{GroupElement{{mod(w[0] + r0, n), mod(w[1] + r1, n)}}}};
  };
  return {"motion:" + std::to_string(n), std::move(sys), std::move(oracle),
          "finite motion group: quarter-turn rotations acting on Z_" +
              std::to_string(n) + "^2; H compact so delta = 1"};
}

std::optional<CatalogEntry> catalog_lookup(const std::string& name) {
  const auto colon = name.find(':');
  if (colon == std::string::npos) return std::nullopt;
  const std::string family = name.substr(0, colon);
  const std::string arg = name.substr(colon + 1);
  std::int64_t n = 0;
  const auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), n);
  const bool numeric = ec == std::errc{} && ptr == arg.data() + arg.size();
  if (family == "affine" || family == "heisenberg" || family == "motion") {
    if (!numeric) throw DomainError(name + ": parameter must be an integer");
    if (family == "affine") return finite_affine(n);
    if (family == "heisenberg") return finite_heisenberg(n);
    return finite_motion(n);
  }
  return std::nullopt;
}

std::vector<CatalogFamily> catalog_families() {
  return {
      {"affine:<n>", "finite affine group units(Z_n) x| Z_n"},
      {"heisenberg:<n>", "finite Weyl-Heisenberg group Z_n x| (Z_n x Z_n)"},
      {"motion:<n>", "finite motion group {I,J,J^2,J^3} x| Z_n^2"},
      {"affine-continuum:default", "affine group (0,inf) x| R on the desk-scale quadrature grid"},
  };
}

}  // namespace tauh
