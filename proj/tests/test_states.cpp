// Copyright 2026 the qfc developers.
// SPDX-License-Identifier: Apache-2.0
#include <catch2/catch_amalgamated.hpp>

#include "qfc/states.hpp"
#include "test_support.hpp"

using qfc::ComplexMatrix;
using qfc::cplx;
using qfc::DensityMatrix;

TEST_CASE("density matrix validation") {
  CHECK_THROWS_AS(DensityMatrix(ComplexMatrix(2, {0.5, 1, 0, 0.5})), qfc::contract_error);
  CHECK_THROWS_AS(DensityMatrix(ComplexMatrix(2, {0.7, 0, 0, 0.7})), qfc::contract_error);
  // Hermitian, unit trace, but indefinite.
  CHECK_THROWS_AS(DensityMatrix(ComplexMatrix(2, {1.5, 0, 0, -0.5})), qfc::contract_error);

  const DensityMatrix plus = DensityMatrix::pure({1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0)});
  CHECK(plus.matrix()(0, 1).real() == Catch::Approx(0.5));
}

TEST_CASE("polarization state normalization") {
  CHECK_THROWS_AS(qfc::PolarizationState(1.0, 1.0), qfc::contract_error);
  const qfc::PolarizationState h(1.0, 0.0);
  CHECK(h.density().matrix()(0, 0).real() == 1.0);
}

TEST_CASE("depolarize endpoints and domain") {
  const DensityMatrix bell = DensityMatrix::bell_phi_plus();
  CHECK(qfc::depolarize(bell, 1.0).matrix().max_abs_diff(bell.matrix()) < 1e-15);
  CHECK(qfc::depolarize(bell, 0.0).matrix().max_abs_diff(
            (0.25 * ComplexMatrix::identity(4))) < 1e-15);
  CHECK_THROWS_AS(qfc::depolarize(bell, -0.1), qfc::domain_error);
  CHECK_THROWS_AS(qfc::depolarize(bell, 1.1), qfc::domain_error);
}

TEST_CASE("partial transpose of a product state") {
  qfc::Rng rng(11);
  const DensityMatrix a = qfc_test::random_density(rng, 2);
  const DensityMatrix b = qfc_test::random_density(rng, 2);
  const DensityMatrix prod = DensityMatrix(kron(a.matrix(), b.matrix()));

  const ComplexMatrix pt = qfc::partial_transpose(prod, qfc::kPhotonSubsystem);
  CHECK(pt.max_abs_diff(kron(a.matrix(), b.matrix().transpose())) < 1e-12);
  CHECK(qfc::eigh(pt).values.front() > -1e-12);  // still PSD

  const ComplexMatrix pt_ion = qfc::partial_transpose(prod, qfc::kIonSubsystem);
  CHECK(pt_ion.max_abs_diff(kron(a.matrix().transpose(), b.matrix())) < 1e-12);

  CHECK_THROWS_AS(qfc::partial_transpose(prod, 3), qfc::domain_error);
}

TEST_CASE("partial transpose of the Bell state has minimum eigenvalue -1/2") {
  const ComplexMatrix pt =
      qfc::partial_transpose(DensityMatrix::bell_phi_plus(), qfc::kPhotonSubsystem);
  const auto es = qfc::eigh(pt);
  CHECK(es.values.front() == Catch::Approx(-0.5).margin(1e-12));
  CHECK(es.values.back() == Catch::Approx(0.5).margin(1e-12));

  const DensityMatrix mixed = DensityMatrix::maximally_mixed(4);
  CHECK(qfc::partial_transpose(mixed, qfc::kIonSubsystem)
            .max_abs_diff(mixed.matrix()) < 1e-15);
}

TEST_CASE("negativity values") {
  CHECK(qfc::negativity(DensityMatrix::bell_phi_plus()) == Catch::Approx(0.5).margin(1e-12));

  qfc::Rng rng(13);
  for (int i = 0; i < 5; ++i) {
    const DensityMatrix a = qfc_test::random_density(rng, 2);
    const DensityMatrix b = qfc_test::random_density(rng, 2);
    CHECK(qfc::negativity(DensityMatrix(kron(a.matrix(), b.matrix()))) == 0.0);
  }
}

TEST_CASE("Werner state negativity follows the closed form") {
  const DensityMatrix bell = DensityMatrix::bell_phi_plus();
  for (double p : {0.0, 0.2, 1.0 / 3.0, 0.4, 0.6, 0.8, 1.0}) {
    const double expected = std::max(0.0, (3.0 * p - 1.0) / 4.0);
    CHECK(qfc::negativity(qfc::depolarize(bell, p)) == Catch::Approx(expected).margin(1e-9));
  }
  // Separability threshold sits at p = 1/3.
  CHECK(qfc::negativity(qfc::depolarize(bell, 1.0 / 3.0 + 1e-6)) > 0.0);
  CHECK(qfc::negativity(qfc::depolarize(bell, 1.0 / 3.0 - 1e-6)) == 0.0);
}

TEST_CASE("negativity is invariant under local unitaries") {
  qfc::Rng rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const DensityMatrix rho = qfc_test::random_density(rng, 4);
    const double n0 = qfc::negativity(rho);
    const ComplexMatrix u = kron(qfc_test::random_unitary(rng), qfc_test::random_unitary(rng));
    const DensityMatrix rotated = DensityMatrix(qfc_test::conjugate(u, rho.matrix()).hermitized());
    CHECK(qfc::negativity(rotated) == Catch::Approx(n0).margin(1e-9));
  }
}

TEST_CASE("partial trace of the Bell state is maximally mixed") {
  const ComplexMatrix reduced =
      qfc::partial_trace(DensityMatrix::bell_phi_plus().matrix(), qfc::kPhotonSubsystem);
  CHECK(reduced.max_abs_diff(0.5 * ComplexMatrix::identity(2)) < 1e-15);
}
