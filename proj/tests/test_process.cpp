// Copyright 2026 the qfc developers.
// SPDX-License-Identifier: Apache-2.0
#include <catch2/catch_amalgamated.hpp>

#include "qfc/process.hpp"
#include "test_support.hpp"

using qfc::ComplexMatrix;
using qfc::cplx;
using qfc::DensityMatrix;
using qfc::OperatorBasis;
using qfc::ProcessMatrix;

TEST_CASE("operator basis elements are unitary and HS-orthogonal") {
  const OperatorBasis& basis = OperatorBasis::instance();
  for (int i = 0; i < 4; ++i) {
    const ComplexMatrix& o = basis.element(i);
    CHECK((o * o.adjoint()).max_abs_diff(ComplexMatrix::identity(2)) < 1e-15);
    for (int j = 0; j < 4; ++j) {
      const cplx ip = (basis.element(i).adjoint() * basis.element(j)).trace();
      CHECK(std::abs(ip - (i == j ? cplx(2, 0) : cplx(0, 0))) < 1e-15);
    }
  }
  // Element 3 is -iY, which is real.
  CHECK(basis.element(3).max_abs_diff(ComplexMatrix(2, {0, -1, 1, 0})) == 0.0);
}

TEST_CASE("process matrix validation") {
  // Not trace preserving.
  ComplexMatrix half(4);
  half(0, 0) = 0.5;
  CHECK_THROWS_AS(ProcessMatrix(half), qfc::contract_error);

  // Trace preserving but indefinite.
  ComplexMatrix indef(4);
  indef(0, 0) = 1.5;
  indef(1, 1) = -0.5;
  CHECK_THROWS_AS(ProcessMatrix(indef), qfc::contract_error);

  CHECK(ProcessMatrix::identity().identity_weight() == 1.0);
  CHECK(ProcessMatrix::depolarizing(0.9).identity_weight() == Catch::Approx(0.925));
  CHECK_THROWS_AS(ProcessMatrix::depolarizing(1.5), qfc::domain_error);
}

TEST_CASE("apply_process reproduces Pauli conjugations") {
  const DensityMatrix plus = DensityMatrix::pure({1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0)});
  const DensityMatrix minus = DensityMatrix::pure({1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0)});

  CHECK(qfc::apply_process(ProcessMatrix::identity(), plus).matrix().max_abs_diff(plus.matrix()) <
        1e-15);
  // Z flips the phase of |+>.
  CHECK(qfc::apply_process(ProcessMatrix::pauli(1), plus).matrix().max_abs_diff(minus.matrix()) <
        1e-15);

  qfc::Rng rng(23);
  for (int i = 0; i < 10; ++i) {
    const DensityMatrix rho = qfc_test::random_density(rng, 2);
    // Oracle: (rho + X rho X + Y rho Y + Z rho Z)/4 = I/2, and conjugation
    // by -iY equals conjugation by Y.
    const ComplexMatrix sum =
        0.25 * (rho.matrix() + qfc_test::conjugate(qfc_test::pauli_x(), rho.matrix()) +
                qfc_test::conjugate(qfc_test::pauli_y(), rho.matrix()) +
                qfc_test::conjugate(qfc_test::pauli_z(), rho.matrix()));
    CHECK(sum.max_abs_diff(0.5 * ComplexMatrix::identity(2)) < 1e-12);
    CHECK(qfc::apply_process(ProcessMatrix::depolarizing(0.0), rho).matrix().max_abs_diff(sum) <
          1e-12);
  }

  CHECK_THROWS_AS(qfc::apply_process(ProcessMatrix::identity(), DensityMatrix::bell_phi_plus()),
                  qfc::domain_error);
}

TEST_CASE("depolarizing channel matches its definition") {
  qfc::Rng rng(29);
  for (double w : {0.0, 0.3, 0.7, 1.0}) {
    const ProcessMatrix chan = ProcessMatrix::depolarizing(w);
    const DensityMatrix rho = qfc_test::random_density(rng, 2);
    const ComplexMatrix expected =
        w * rho.matrix() + ((1.0 - w) / 2.0) * ComplexMatrix::identity(2);
    CHECK(qfc::apply_process(chan, rho).matrix().max_abs_diff(expected) < 1e-12);
  }
}

TEST_CASE("apply_to_photon_half acts on the fast index") {
  const DensityMatrix bell = DensityMatrix::bell_phi_plus();

  CHECK(qfc::apply_to_photon_half(ProcessMatrix::identity(), bell)
            .matrix()
            .max_abs_diff(bell.matrix()) < 1e-12);

  // X on the photon sends (|gH>+|eV>)/sqrt(2) to (|gV>+|eH>)/sqrt(2).
  const double r = 1.0 / std::sqrt(2.0);
  const DensityMatrix flipped = DensityMatrix::pure({0.0, r, r, 0.0});
  CHECK(qfc::apply_to_photon_half(ProcessMatrix::pauli(2), bell)
            .matrix()
            .max_abs_diff(flipped.matrix()) < 1e-12);
  // Oracle: direct conjugation by I (x) X.
  const ComplexMatrix ix = kron(ComplexMatrix::identity(2), qfc_test::pauli_x());
  CHECK(qfc_test::conjugate(ix, bell.matrix()).max_abs_diff(flipped.matrix()) < 1e-12);

  // Fully depolarizing the photon leaves rho_ion (x) I/2.
  qfc::Rng rng(31);
  const DensityMatrix rho = qfc_test::random_density(rng, 4);
  const ComplexMatrix expected =
      kron(qfc::partial_trace(rho.matrix(), qfc::kPhotonSubsystem),
           0.5 * ComplexMatrix::identity(2));
  CHECK(qfc::apply_to_photon_half(ProcessMatrix::depolarizing(0.0), rho)
            .matrix()
            .max_abs_diff(expected) < 1e-12);

  CHECK_THROWS_AS(
      qfc::apply_to_photon_half(ProcessMatrix::identity(), DensityMatrix::maximally_mixed(2)),
      qfc::domain_error);
}

TEST_CASE("unitary_from_angles") {
  CHECK(qfc::unitary_from_angles(0, 0, 0).max_abs_diff(ComplexMatrix::identity(2)) < 1e-15);
  CHECK(qfc::unitary_from_angles(M_PI, 0, 0).max_abs_diff(ComplexMatrix(2, {0, -1, 1, 0})) <
        1e-15);

  qfc::Rng rng(37);
  for (int i = 0; i < 100; ++i) {
    const ComplexMatrix u = qfc_test::random_unitary(rng);
    CHECK((u * u.adjoint()).max_abs_diff(ComplexMatrix::identity(2)) < 1e-12);
  }
}

TEST_CASE("chi of a unitary channel") {
  qfc::Rng rng(41);
  for (int i = 0; i < 20; ++i) {
    const ComplexMatrix v = qfc_test::random_unitary(rng);
    const ProcessMatrix chan = ProcessMatrix::from_unitary(v);
    CHECK(chan.identity_weight() == Catch::Approx(std::norm(v.trace() / 2.0)).margin(1e-12));

    // Conjugation action matches direct computation.
    const DensityMatrix rho = qfc_test::random_density(rng, 2);
    CHECK(qfc::apply_process(chan, rho).matrix().max_abs_diff(
              qfc_test::conjugate(v, rho.matrix())) < 1e-12);

    // Global phase of the unitary does not matter.
    const ProcessMatrix phased = ProcessMatrix::from_unitary(std::polar(1.0, 1.234) * v);
    CHECK(phased.chi().max_abs_diff(chan.chi()) < 1e-12);
  }
}

TEST_CASE("channel of U then channel of U-dagger is the identity map") {
  qfc::Rng rng(43);
  for (int i = 0; i < 100; ++i) {
    const ComplexMatrix u = qfc_test::random_unitary(rng);
    const ProcessMatrix fwd = ProcessMatrix::from_unitary(u);
    const ProcessMatrix bwd = ProcessMatrix::from_unitary(u.adjoint());
    const DensityMatrix rho = qfc_test::random_density(rng, 2);
    const DensityMatrix round = qfc::apply_process(bwd, qfc::apply_process(fwd, rho));
    CHECK(round.matrix().max_abs_diff(rho.matrix()) < 1e-9);
  }
}

TEST_CASE("apply_process preserves trace and positivity for CPTP channels") {
  qfc::Rng rng(47);
  std::vector<ProcessMatrix> channels;
  channels.push_back(ProcessMatrix::identity());
  channels.push_back(ProcessMatrix::depolarizing(0.35));
  channels.push_back(ProcessMatrix::from_unitary(qfc_test::random_unitary(rng)));
  for (int i = 0; i < 1000; ++i) {
    const DensityMatrix rho = qfc_test::random_density(rng, 2);
    const DensityMatrix out = qfc::apply_process(channels[static_cast<size_t>(i % 3)], rho);
    CHECK(std::abs(out.matrix().trace().real() - 1.0) < 1e-9);
    CHECK(qfc::eigh(out.matrix()).values.front() > -1e-9);
  }
}

TEST_CASE("unitary composition helpers agree") {
  qfc::Rng rng(53);
  const ProcessMatrix chan = ProcessMatrix::depolarizing(0.8);
  for (int i = 0; i < 10; ++i) {
    const ComplexMatrix u = qfc_test::random_unitary(rng);
    const ProcessMatrix post = qfc::compose_post_unitary(chan, u);
    CHECK(post.identity_weight() ==
          Catch::Approx(qfc::identity_weight_after_unitary(chan, u)).margin(1e-12));

    // compose_post(from_unitary(V), V^dagger) is the identity process.
    const ProcessMatrix undone = qfc::compose_post_unitary(ProcessMatrix::from_unitary(u),
                                                           u.adjoint());
    CHECK(undone.chi().max_abs_diff(ProcessMatrix::identity().chi()) < 1e-12);

    // Pre-composition: eps(U rho U^dagger) checked pointwise.
    const ProcessMatrix pre = qfc::compose_pre_unitary(chan, u);
    const DensityMatrix rho = qfc_test::random_density(rng, 2);
    const DensityMatrix via_pre = qfc::apply_process(pre, rho);
    const DensityMatrix via_steps = qfc::apply_process(
        chan, DensityMatrix(qfc_test::conjugate(u, rho.matrix()).hermitized()));
    CHECK(via_pre.matrix().max_abs_diff(via_steps.matrix()) < 1e-12);
  }
}
