#pragma once

// Self-contained random number generation. The <random> engines are portable
// but the distributions are not (they differ across standard libraries), and
// seeded runs must be bit-reproducible across platforms, so all sampling
// algorithms live here.

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "ccm/common.hpp"

namespace ccm {

inline uint64_t splitmix64(uint64_t& state) {
  uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Derives an independent stream seed, e.g. for parallel chains.
inline uint64_t derive_seed(uint64_t base, uint64_t stream) {
  uint64_t s = base;
  uint64_t a = splitmix64(s);
  s = base ^ (0x9e3779b97f4a7c15ULL * (stream + 1));
  uint64_t b = splitmix64(s);
  return a ^ (b + 0x632be59bd9b4e019ULL * (stream + 1));
}

// xoshiro256++ (Blackman & Vigna), seeded via splitmix64.
class Rng {
 public:
  explicit Rng(uint64_t seed) {
    uint64_t sm = seed;
    for (auto& w : s_) w = splitmix64(sm);
  }

  uint64_t next() {
    const uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  // Uniform on [0,1), 53-bit resolution.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool coin() { return (next() >> 63) != 0; }

  // Unbiased integer in [0, n). Lemire's method with rejection.
  uint64_t bounded(uint64_t n) {
    if (n == 0) throw UsageError("bounded(0) is undefined");
    uint64_t x = next();
    __uint128_t m = static_cast<__uint128_t>(x) * n;
    auto l = static_cast<uint64_t>(m);
    if (l < n) {
      uint64_t t = (-n) % n;
      while (l < t) {
        x = next();
        m = static_cast<__uint128_t>(x) * n;
        l = static_cast<uint64_t>(m);
      }
    }
    return static_cast<uint64_t>(m >> 64);
  }

  // Standard normal via Marsaglia polar, one spare cached.
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u, v, q;
    do {
      u = 2.0 * uniform() - 1.0;
      v = 2.0 * uniform() - 1.0;
      q = u * u + v * v;
    } while (q >= 1.0 || q == 0.0);
    double f = std::sqrt(-2.0 * std::log(q) / q);
    spare_ = v * f;
    has_spare_ = true;
    return u * f;
  }

  double normal(double mean, double sd) { return mean + sd * normal(); }

  // Exact Poisson: inversion-by-multiplication for small lambda, PTRS
  // transformed rejection (Hoermann) otherwise.
  int64_t poisson(double lambda) {
    if (!(lambda > 0.0)) throw UsageError("poisson: lambda must be > 0");
    if (lambda < 10.0) {
      double l = std::exp(-lambda);
      double p = 1.0;
      int64_t k = 0;
      do {
        ++k;
        p *= uniform();
      } while (p > l);
      return k - 1;
    }
    const double smu = std::sqrt(lambda);
    const double b = 0.931 + 2.53 * smu;
    const double a = -0.059 + 0.02483 * b;
    const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
    const double v_r = 0.9277 - 3.6224 / (b - 2.0);
    const double log_lambda = std::log(lambda);
    for (;;) {
      double u = uniform() - 0.5;
      double v = uniform();
      double us = 0.5 - std::fabs(u);
      auto k = static_cast<int64_t>(std::floor((2.0 * a / us + b) * u + lambda + 0.43));
      if (us >= 0.07 && v <= v_r) return k;
      if (k < 0 || (us < 0.013 && v > us)) continue;
      if (std::log(v * inv_alpha / (a / (us * us) + b)) <=
          k * log_lambda - lambda - std::lgamma(static_cast<double>(k) + 1.0))
        return k;
    }
  }

  // Marsaglia-Tsang gamma(shape, 1).
  double gamma(double shape) {
    if (!(shape > 0.0)) throw UsageError("gamma: shape must be > 0");
    if (shape < 1.0) {
      double u = uniform();
      while (u == 0.0) u = uniform();
      return gamma(shape + 1.0) * std::pow(u, 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
      double x, v;
      do {
        x = normal();
        v = 1.0 + c * x;
      } while (v <= 0.0);
      v = v * v * v;
      double u = uniform();
      if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
      if (u > 0.0 && std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
    }
  }

  double beta(double a, double b) {
    double x = gamma(a);
    double y = gamma(b);
    return x / (x + y);
  }

  // Binomial by Bernoulli summation; n stays small in this codebase.
  int64_t binomial(int64_t n, double p) {
    int64_t k = 0;
    for (int64_t i = 0; i < n; ++i) k += (uniform() < p) ? 1 : 0;
    return k;
  }

  void dirichlet(std::span<const double> alpha, std::span<double> out) {
    double total = 0.0;
    for (size_t i = 0; i < alpha.size(); ++i) {
      out[i] = gamma(alpha[i]);
      total += out[i];
    }
    for (size_t i = 0; i < alpha.size(); ++i) out[i] /= total;
  }

 private:
  static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

  uint64_t s_[4] = {};
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace ccm
