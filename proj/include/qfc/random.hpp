// Copyright 2026 the qfc developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "qfc/errors.hpp"

namespace qfc {

/// Deterministic random source. std::mt19937_64 has a fully specified
/// bit stream; the variate transforms below are hand-rolled because the
/// standard distribution objects are implementation-defined, which would
/// break the byte-identical-output contract of the CLI.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform double in (0, 1]; never returns 0 so logs are safe.
  double uniform() {
    // 53-bit mantissa resolution.
    const std::uint64_t bits = engine_() >> 11;
    return (static_cast<double>(bits) + 1.0) * (1.0 / 9007199254740992.0);
  }

  /// Standard normal via Box-Muller (one variate per call).
  double normal() {
    const double u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  }

  /// Poisson sample with mean `lambda`. Knuth's product method below
  /// lambda = 10, Hormann's PTRD transformed rejection above it.
  std::uint64_t poisson(double lambda) {
    if (lambda < 0.0) throw domain_error("poisson: negative mean");
    if (lambda == 0.0) return 0;
    if (lambda < 10.0) return poisson_knuth(lambda);
    return poisson_ptrd(lambda);
  }

private:
  std::uint64_t poisson_knuth(double lambda) {
    const double limit = std::exp(-lambda);
    double prod = 1.0;
    std::uint64_t k = 0;
    do {
      prod *= uniform();
      ++k;
    } while (prod > limit);
    return k - 1;
  }

  std::uint64_t poisson_ptrd(double mu) {
    const double smu = std::sqrt(mu);
    const double b = 0.931 + 2.53 * smu;
    const double a = -0.059 + 0.02483 * b;
    const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
    const double v_r = 0.9277 - 3.6224 / (b - 2.0);

    for (;;) {
      double u = uniform() - 0.5;
      double v = uniform();
      const double us = 0.5 - std::abs(u);
      const double kf = std::floor((2.0 * a / us + b) * u + mu + 0.43);
      if (us >= 0.07 && v <= v_r) return static_cast<std::uint64_t>(kf);
      if (kf < 0.0 || (us < 0.013 && v > us)) continue;
      const double lhs = std::log(v * inv_alpha / (a / (us * us) + b));
      const double rhs = -mu + kf * std::log(mu) - std::lgamma(kf + 1.0);
      if (lhs <= rhs) return static_cast<std::uint64_t>(kf);
    }
  }

  std::mt19937_64 engine_;
};

}  // namespace qfc
