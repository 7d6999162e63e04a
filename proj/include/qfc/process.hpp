// Copyright 2026 the qfc developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cmath>

#include "qfc/states.hpp"

namespace qfc {

/// The fixed operator basis {I, Z, X, -iY} for one-qubit channels.
///
/// All four elements are unitary, real, and orthogonal under the
/// Hilbert-Schmidt inner product with norm^2 = 2. Index order matters:
/// chi(0,0) is the identity-process weight quoted as the conversion
/// fidelity throughout the toolkit.
class OperatorBasis {
public:
  static constexpr int kSize = 4;

  static const OperatorBasis& instance() {
    static const OperatorBasis basis;
    return basis;
  }

  const ComplexMatrix& element(int k) const { return elements_[static_cast<size_t>(k)]; }

  /// Precomputed element(j)^dagger * element(i), used by the
  /// trace-preservation condition sum_ij chi_ij O_j^dagger O_i = I.
  const ComplexMatrix& dagger_product(int j, int i) const {
    return products_[static_cast<size_t>(j * kSize + i)];
  }

  static const char* label() { return "I,Z,X,-iY"; }

private:
  OperatorBasis()
      : elements_{ComplexMatrix(2, {1, 0, 0, 1}),    // I
                  ComplexMatrix(2, {1, 0, 0, -1}),   // Z
                  ComplexMatrix(2, {0, 1, 1, 0}),    // X
                  ComplexMatrix(2, {0, -1, 1, 0})},  // -iY
        products_{make_products(elements_)} {}

  static std::array<ComplexMatrix, 16> make_products(const std::array<ComplexMatrix, 4>& el) {
    std::array<ComplexMatrix, 16> out{
        ComplexMatrix(2), ComplexMatrix(2), ComplexMatrix(2), ComplexMatrix(2),
        ComplexMatrix(2), ComplexMatrix(2), ComplexMatrix(2), ComplexMatrix(2),
        ComplexMatrix(2), ComplexMatrix(2), ComplexMatrix(2), ComplexMatrix(2),
        ComplexMatrix(2), ComplexMatrix(2), ComplexMatrix(2), ComplexMatrix(2)};
    for (int j = 0; j < 4; ++j)
      for (int i = 0; i < 4; ++i)
        out[static_cast<size_t>(j * 4 + i)] = el[static_cast<size_t>(j)].adjoint() * el[static_cast<size_t>(i)];
    return out;
  }

  std::array<ComplexMatrix, 4> elements_;
  std::array<ComplexMatrix, 16> products_;
};

/// Max element deviation of sum_ij chi_ij O_j^dagger O_i from the identity.
inline double trace_preservation_deviation(const ComplexMatrix& chi) {
  const OperatorBasis& basis = OperatorBasis::instance();
  ComplexMatrix sum(2);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      sum = sum + chi(i, j) * basis.dagger_product(j, i);
  return sum.max_abs_diff(ComplexMatrix::identity(2));
}

/// One-qubit channel in chi-matrix form over {I, Z, X, -iY}:
/// eps(rho) = sum_ij chi_ij O_i rho O_j^dagger.
class ProcessMatrix {
public:
  static constexpr double kHermitianTol = 1e-9;
  static constexpr double kEigenvalueFloor = -1e-9;
  static constexpr double kTracePreservationTol = 1e-6;

  explicit ProcessMatrix(const ComplexMatrix& chi) : chi_(chi) { validate(); }

  /// chi = diag(1,0,0,0); the do-nothing channel.
  static ProcessMatrix identity() { return pauli(0); }

  /// Conjugation by basis element k (0=I, 1=Z, 2=X, 3=-iY).
  static ProcessMatrix pauli(int k) {
    if (k < 0 || k > 3) throw domain_error("ProcessMatrix::pauli: index must be 0..3");
    ComplexMatrix chi(4);
    chi(k, k) = 1.0;
    return ProcessMatrix(chi);
  }

  /// Channel rho -> w*rho + (1-w)*I/2, i.e. chi = w*e1e1 + (1-w)/4 * I.
  /// Its identity weight is (1+3w)/4.
  static ProcessMatrix depolarizing(double w) {
    if (!(w >= 0.0 && w <= 1.0))
      throw domain_error("ProcessMatrix::depolarizing: weight must lie in [0,1]");
    ComplexMatrix chi(4);
    for (int k = 0; k < 4; ++k) chi(k, k) = (1.0 - w) / 4.0;
    chi(0, 0) += w;
    return ProcessMatrix(chi);
  }

  /// Rank-one chi of a unitary channel rho -> U rho U^dagger; invariant
  /// under the global phase of U.
  static ProcessMatrix from_unitary(const ComplexMatrix& u) {
    if (u.dim() != 2) throw domain_error("ProcessMatrix::from_unitary: requires a 2x2 unitary");
    const std::array<cplx, 4> a = expansion_coefficients(u);
    ComplexMatrix chi(4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) chi(i, j) = a[static_cast<size_t>(i)] * std::conj(a[static_cast<size_t>(j)]);
    return ProcessMatrix(chi);
  }

  const ComplexMatrix& chi() const { return chi_; }

  /// chi(0,0): the weight of the identity process.
  double identity_weight() const { return chi_(0, 0).real(); }

  /// Coefficients of M in the operator basis: M = sum_k c_k O_k.
  static std::array<cplx, 4> expansion_coefficients(const ComplexMatrix& m) {
    const OperatorBasis& basis = OperatorBasis::instance();
    std::array<cplx, 4> c{};
    for (int k = 0; k < 4; ++k)
      c[static_cast<size_t>(k)] = 0.5 * (basis.element(k).adjoint() * m).trace();
    return c;
  }

private:
  void validate() const {
    if (chi_.dim() != 4) throw contract_error("ProcessMatrix: chi must be 4x4");
    if (!chi_.is_hermitian(kHermitianTol))
      throw contract_error("ProcessMatrix: chi not Hermitian within 1e-9");
    const EigenSystem es = eigh(chi_);
    if (es.values.front() < kEigenvalueFloor)
      throw contract_error("ProcessMatrix: chi eigenvalue " + std::to_string(es.values.front()) +
                           " below -1e-9");
    const double tp = trace_preservation_deviation(chi_);
    if (tp > kTracePreservationTol)
      throw contract_error("ProcessMatrix: trace preservation violated by " + std::to_string(tp));
  }

  ComplexMatrix chi_;
};

/// eps(rho) = sum_ij chi_ij O_i rho O_j^dagger for a one-qubit state.
inline DensityMatrix apply_process(const ProcessMatrix& process, const DensityMatrix& rho) {
  if (rho.dim() != 2)
    throw domain_error("apply_process: rho must be a one-qubit state");
  const OperatorBasis& basis = OperatorBasis::instance();
  const ComplexMatrix& chi = process.chi();
  ComplexMatrix out(2);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const cplx w = chi(i, j);
      if (w == cplx(0.0, 0.0)) continue;
      out = out + w * ((basis.element(i) * rho.matrix()) * basis.element(j).adjoint());
    }
  return DensityMatrix(out.hermitized());
}

/// (Identity (x) eps)(rho) for a two-qubit state; the photon is the fast index.
inline DensityMatrix apply_to_photon_half(const ProcessMatrix& process, const DensityMatrix& rho) {
  if (rho.dim() != 4)
    throw domain_error("apply_to_photon_half: rho must be a two-qubit state");
  const OperatorBasis& basis = OperatorBasis::instance();
  const ComplexMatrix& chi = process.chi();
  const ComplexMatrix id2 = ComplexMatrix::identity(2);
  ComplexMatrix out(4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const cplx w = chi(i, j);
      if (w == cplx(0.0, 0.0)) continue;
      const ComplexMatrix oi = kron(id2, basis.element(i));
      const ComplexMatrix oj = kron(id2, basis.element(j));
      out = out + w * ((oi * rho.matrix()) * oj.adjoint());
    }
  return DensityMatrix(out.hermitized());
}

/// U = Rz(phi) * Ry(theta) * Rz(lam); (pi,0,0) gives exactly -iY.
inline ComplexMatrix unitary_from_angles(double theta, double phi, double lam) {
  const double ct = std::cos(theta / 2.0);
  const double st = std::sin(theta / 2.0);
  const cplx ep = std::polar(1.0, phi / 2.0);
  const cplx el = std::polar(1.0, lam / 2.0);
  ComplexMatrix u(2);
  u(0, 0) = std::conj(ep) * std::conj(el) * ct;
  u(0, 1) = -std::conj(ep) * el * st;
  u(1, 0) = ep * std::conj(el) * st;
  u(1, 1) = ep * el * ct;
  return u;
}

namespace detail {
/// chi' = C chi C^dagger for a coefficient matrix C expanding the
/// transformed basis elements in the original basis.
inline ComplexMatrix congruence(const ComplexMatrix& coeff, const ComplexMatrix& chi) {
  return (coeff * chi) * coeff.adjoint();
}
}  // namespace detail

/// Channel rho -> U eps(rho) U^dagger.
inline ProcessMatrix compose_post_unitary(const ProcessMatrix& process, const ComplexMatrix& u) {
  const OperatorBasis& basis = OperatorBasis::instance();
  ComplexMatrix coeff(4);
  for (int i = 0; i < 4; ++i) {
    const auto c = ProcessMatrix::expansion_coefficients(u * basis.element(i));
    for (int k = 0; k < 4; ++k) coeff(k, i) = c[static_cast<size_t>(k)];
  }
  return ProcessMatrix(detail::congruence(coeff, process.chi()).hermitized());
}

/// Channel rho -> eps(U rho U^dagger).
inline ProcessMatrix compose_pre_unitary(const ProcessMatrix& process, const ComplexMatrix& u) {
  const OperatorBasis& basis = OperatorBasis::instance();
  ComplexMatrix coeff(4);
  for (int i = 0; i < 4; ++i) {
    const auto c = ProcessMatrix::expansion_coefficients(basis.element(i) * u);
    for (int k = 0; k < 4; ++k) coeff(k, i) = c[static_cast<size_t>(k)];
  }
  return ProcessMatrix(detail::congruence(coeff, process.chi()).hermitized());
}

/// Identity weight of the channel rho -> U eps(rho) U^dagger without
/// building the full composed chi: chi'(0,0) = r chi r^dagger with
/// r_i = tr(U O_i)/2.
inline double identity_weight_after_unitary(const ProcessMatrix& process, const ComplexMatrix& u) {
  const OperatorBasis& basis = OperatorBasis::instance();
  std::array<cplx, 4> r{};
  for (int i = 0; i < 4; ++i) r[static_cast<size_t>(i)] = 0.5 * (u * basis.element(i)).trace();
  cplx acc(0.0, 0.0);
  const ComplexMatrix& chi = process.chi();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      acc += r[static_cast<size_t>(i)] * chi(i, j) * std::conj(r[static_cast<size_t>(j)]);
  return acc.real();
}

}  // namespace qfc
