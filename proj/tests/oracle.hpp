#pragma once

// Brute-force reference implementations. Nothing here calls the transform
// or group-law code under test; only plain data (divisors, matrices, labels,
// delta) is read from the library objects.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <vector>

#include "tauh/semidirect.hpp"

namespace oracle {

using Complex = std::complex<double>;
using Vec = std::vector<std::int64_t>;

inline std::int64_t mod(std::int64_t x, std::int64_t n) {
  const std::int64_t r = x % n;
  return r < 0 ? r + n : r;
}

inline std::vector<std::int64_t> divisors(const tauh::FiniteLcaGroup& K) {
  return {K.divisors().begin(), K.divisors().end()};
}

inline std::size_t order(const Vec& n) {
  std::size_t o = 1;
  for (auto d : n) o *= static_cast<std::size_t>(d);
  return o;
}

// Mixed radix, last coordinate fastest.
inline Vec unrank(const Vec& n, std::size_t idx) {
  Vec k(n.size());
  for (std::size_t i = n.size(); i-- > 0;) {
    k[i] = static_cast<std::int64_t>(idx % static_cast<std::size_t>(n[i]));
    idx /= static_cast<std::size_t>(n[i]);
  }
  return k;
}

inline std::size_t rank(const Vec& n, const Vec& k) {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < n.size(); ++i) {
    idx = idx * static_cast<std::size_t>(n[i]) + static_cast<std::size_t>(mod(k[i], n[i]));
  }
  return idx;
}

// exp(2 pi i sum j_i k_i / n_i), phase accumulated in long double.
inline Complex character(const Vec& n, const Vec& j, const Vec& k) {
  long double turns = 0;
  for (std::size_t i = 0; i < n.size(); ++i) {
    turns += static_cast<long double>(mod(j[i] * k[i], n[i])) / n[i];
  }
  turns -= std::floor(turns);
  const long double phase = 2 * std::numbers::pi_v<long double> * turns;
  return {static_cast<double>(std::cos(phase)), static_cast<double>(std::sin(phase))};
}

inline std::vector<Complex> dft(const Vec& n, const std::vector<Complex>& v) {
  const std::size_t N = order(n);
  std::vector<Complex> out(N);
  for (std::size_t w = 0; w < N; ++w) {
    for (std::size_t k = 0; k < N; ++k) {
      out[w] += v[k] * std::conj(character(n, unrank(n, w), unrank(n, k)));
    }
  }
  return out;
}

inline std::vector<Complex> idft(const Vec& n, const std::vector<Complex>& phi) {
  const std::size_t N = order(n);
  std::vector<Complex> out(N);
  for (std::size_t k = 0; k < N; ++k) {
    for (std::size_t w = 0; w < N; ++w) {
      out[k] += phi[w] * character(n, unrank(n, w), unrank(n, k));
    }
    out[k] /= static_cast<double>(N);
  }
  return out;
}

// Row i of M k, reduced mod n_i.
inline Vec mat_apply(const Vec& n, const tauh::IntMatrix& m, const Vec& k) {
  Vec out(n.size());
  for (std::size_t i = 0; i < n.size(); ++i) {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < n.size(); ++j) s = mod(s + mod(m(i, j), n[i]) * k[j], n[i]);
    out[i] = s;
  }
  return out;
}

// Permutation of K indices induced by tau_h, tabulated by brute force.
inline std::vector<std::size_t> tau_table(const tauh::TauSystem& sys, std::size_t h) {
  const Vec n = divisors(sys.K());
  std::vector<std::size_t> t(order(n));
  for (std::size_t k = 0; k < t.size(); ++k) {
    t[k] = rank(n, mat_apply(n, sys.tau(h).matrix(), unrank(n, k)));
  }
  return t;
}

inline std::size_t h_inverse(const tauh::TauSystem& sys, std::size_t h) {
  for (std::size_t t = 0; t < sys.h_count(); ++t) {
    if (sys.cayley()[h][t] == sys.h_identity()) return t;
  }
  return sys.h_count();
}

// (h,k)(h',k') = (h h', k + tau_h(k')), on flat indices h*|K| + k.
inline std::size_t multiply(const tauh::TauSystem& sys, std::size_t x, std::size_t y) {
  const Vec n = divisors(sys.K());
  const std::size_t N = order(n);
  const std::size_t h = x / N, hp = y / N;
  const Vec k = unrank(n, x % N);
  const Vec kp = mat_apply(n, sys.tau(h).matrix(), unrank(n, y % N));
  Vec s(n.size());
  for (std::size_t i = 0; i < n.size(); ++i) s[i] = mod(k[i] + kp[i], n[i]);
  return sys.cayley()[h][hp] * N + rank(n, s);
}

// F_tau(f)(h, w) = delta(h) sum_k f(h,k) conj(w(k)).
inline std::vector<Complex> tau_fourier(const tauh::TauSystem& sys,
                                        const std::vector<Complex>& f) {
  const Vec n = divisors(sys.K());
  const std::size_t N = order(n);
  std::vector<Complex> out(f.size());
  for (std::size_t h = 0; h < sys.h_count(); ++h) {
    const std::vector<Complex> row(f.begin() + h * N, f.begin() + (h + 1) * N);
    const auto hat = dft(n, row);
    for (std::size_t w = 0; w < N; ++w) out[h * N + w] = sys.delta(h).value() * hat[w];
  }
  return out;
}

// F^#(f)(h, w) = delta(h)^(3/2) sum_k f(h,k) conj(w(tau_{h^-1} k)).
inline std::vector<Complex> gen_tau_fourier(const tauh::TauSystem& sys,
                                            const std::vector<Complex>& f) {
  const Vec n = divisors(sys.K());
  const std::size_t N = order(n);
  std::vector<Complex> out(f.size());
  for (std::size_t h = 0; h < sys.h_count(); ++h) {
    const auto back = tau_table(sys, h_inverse(sys, h));
    const double d = std::pow(sys.delta(h).value(), 1.5);
    for (std::size_t w = 0; w < N; ++w) {
      Complex s = 0;
      for (std::size_t k = 0; k < N; ++k) {
        s += f[h * N + k] * std::conj(character(n, unrank(n, w), unrank(n, back[k])));
      }
      out[h * N + w] = d * s;
    }
  }
  return out;
}

inline double sup_diff(std::span<const Complex> a, std::span<const Complex> b) {
  double m = 0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace oracle
