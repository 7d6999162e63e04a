// Copyright 2026 the qfc developers.
// SPDX-License-Identifier: Apache-2.0
#include <catch2/catch_amalgamated.hpp>

#include "qfc/random.hpp"

TEST_CASE("rng is deterministic for a fixed seed") {
  qfc::Rng a(99), b(99);
  for (int i = 0; i < 100; ++i) CHECK(a.uniform() == b.uniform());
  qfc::Rng c(99), d(100);
  CHECK(c.uniform() != d.uniform());
}

TEST_CASE("uniform stays in (0, 1]") {
  qfc::Rng rng(1);
  for (int i = 0; i < 10000; ++i) {
    const double u = rng.uniform();
    CHECK(u > 0.0);
    CHECK(u <= 1.0);
  }
}

TEST_CASE("normal moments") {
  qfc::Rng rng(2);
  const int n = 100000;
  double sum = 0.0, sq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double z = rng.normal();
    sum += z;
    sq += z * z;
  }
  CHECK(sum / n == Catch::Approx(0.0).margin(0.02));
  CHECK(sq / n == Catch::Approx(1.0).margin(0.02));
}

TEST_CASE("poisson moments across both sampling regimes") {
  qfc::Rng rng(3);
  CHECK(rng.poisson(0.0) == 0);
  CHECK_THROWS_AS(rng.poisson(-1.0), qfc::domain_error);

  for (double lambda : {4.0, 40.0, 1.0e4}) {
    const int n = 20000;
    double sum = 0.0, sq = 0.0;
    for (int i = 0; i < n; ++i) {
      const double k = static_cast<double>(rng.poisson(lambda));
      sum += k;
      sq += k * k;
    }
    const double mean = sum / n;
    const double var = sq / n - mean * mean;
    // 5-sigma-ish statistical windows.
    CHECK(mean == Catch::Approx(lambda).epsilon(0.0).margin(5.0 * std::sqrt(lambda / n)));
    CHECK(var == Catch::Approx(lambda).epsilon(0.05));
  }
}
