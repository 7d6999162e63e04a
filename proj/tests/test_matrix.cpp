// Copyright 2026 the qfc developers.
// SPDX-License-Identifier: Apache-2.0
#include <catch2/catch_amalgamated.hpp>

#include "qfc/matrix.hpp"
#include "test_support.hpp"

using qfc::ComplexMatrix;
using qfc::cplx;

TEST_CASE("matrix basics") {
  ComplexMatrix a(2, {1, 2, 3, 4});
  ComplexMatrix b = ComplexMatrix::identity(2);

  CHECK((a * b).max_abs_diff(a) == 0.0);
  CHECK((a + a).max_abs_diff(2.0 * a) == 0.0);
  CHECK(a.trace() == cplx(5, 0));
  CHECK(a.transpose()(0, 1) == cplx(3, 0));
  CHECK(a.adjoint()(0, 1) == cplx(3, 0));

  ComplexMatrix c(2, {cplx(0, 1), 0, 0, 0});
  CHECK(c.adjoint()(0, 0) == cplx(0, -1));

  CHECK_THROWS_AS(ComplexMatrix(3), qfc::contract_error);
  CHECK_THROWS_AS(ComplexMatrix(2, {1, 2, 3}), qfc::contract_error);
}

TEST_CASE("kron follows the slow-fast index convention") {
  ComplexMatrix a(2, {1, 2, 3, 4});
  ComplexMatrix b(2, {0, 5, 6, 0});
  const ComplexMatrix k = kron(a, b);
  CHECK(k(0, 1) == cplx(5, 0));    // a(0,0)*b(0,1)
  CHECK(k(0, 3) == cplx(10, 0));   // a(0,1)*b(0,1)
  CHECK(k(3, 2) == cplx(24, 0));   // a(1,1)*b(1,0)
  CHECK(kron(ComplexMatrix::identity(2), ComplexMatrix::identity(2))
            .max_abs_diff(ComplexMatrix::identity(4)) == 0.0);
}

TEST_CASE("eigh solves a known 2x2") {
  const auto es = qfc::eigh(qfc_test::pauli_x());
  REQUIRE(es.values.size() == 2);
  CHECK(es.values[0] == Catch::Approx(-1.0).margin(1e-12));
  CHECK(es.values[1] == Catch::Approx(1.0).margin(1e-12));
}

TEST_CASE("eigh decomposition residual on random Hermitian matrices") {
  qfc::Rng rng(20260810);
  for (int trial = 0; trial < 50; ++trial) {
    const int dim = (trial % 2 == 0) ? 4 : 2;
    ComplexMatrix g(dim);
    for (int r = 0; r < dim; ++r)
      for (int c = 0; c < dim; ++c) g(r, c) = cplx(rng.normal(), rng.normal());
    const ComplexMatrix a = g.hermitized();

    const auto es = qfc::eigh(a);

    // A V = V diag(lambda)
    ComplexMatrix lam(dim);
    for (int i = 0; i < dim; ++i) lam(i, i) = es.values[static_cast<size_t>(i)];
    CHECK((a * es.vectors).max_abs_diff(es.vectors * lam) < 1e-10);

    // V unitary, eigenvalues sum to the trace, sorted ascending.
    CHECK((es.vectors.adjoint() * es.vectors).max_abs_diff(ComplexMatrix::identity(dim)) < 1e-12);
    double sum = 0.0;
    for (double v : es.values) sum += v;
    CHECK(sum == Catch::Approx(a.trace().real()).margin(1e-10));
    CHECK(std::is_sorted(es.values.begin(), es.values.end()));
  }
}

TEST_CASE("eigh rejects non-Hermitian input") {
  CHECK_THROWS_AS(qfc::eigh(ComplexMatrix(2, {0, 1, 0, 0})), qfc::domain_error);
}

TEST_CASE("hermitian_function computes matrix square roots") {
  qfc::Rng rng(7);
  ComplexMatrix g(4);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) g(r, c) = cplx(rng.normal(), rng.normal());
  const ComplexMatrix psd = g * g.adjoint();
  const ComplexMatrix root =
      qfc::hermitian_function(psd, [](double x) { return std::sqrt(x); });
  CHECK((root * root).max_abs_diff(psd) < 1e-9);
}
