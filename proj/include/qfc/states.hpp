// Copyright 2026 the qfc developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <vector>

#include "qfc/matrix.hpp"

namespace qfc {

// Two-qubit index convention, fixed repo-wide: the ion is subsystem 1 and
// owns the slow (leftmost) index, the photon is subsystem 2 and owns the
// fast index. Basis order for a two-qubit matrix is therefore
// |ion=0,ph=0>, |ion=0,ph=1>, |ion=1,ph=0>, |ion=1,ph=1>.
inline constexpr int kIonSubsystem = 1;
inline constexpr int kPhotonSubsystem = 2;

/// Validated quantum state of one or two qubits.
///
/// Construction enforces Hermiticity and unit trace to 1e-9 and
/// positive semidefiniteness down to eigenvalues of -1e-9; anything
/// worse is a hard error rather than silently repaired.
class DensityMatrix {
public:
  static constexpr double kHermitianTol = 1e-9;
  static constexpr double kTraceTol = 1e-9;
  static constexpr double kEigenvalueFloor = -1e-9;

  explicit DensityMatrix(const ComplexMatrix& rho) : rho_(rho) { validate(); }

  /// |psi><psi| from a (not necessarily normalized beyond 1e-9) amplitude vector.
  static DensityMatrix pure(const std::vector<cplx>& amplitudes) {
    const int dim = static_cast<int>(amplitudes.size());
    ComplexMatrix rho(dim);
    for (int r = 0; r < dim; ++r)
      for (int c = 0; c < dim; ++c)
        rho(r, c) = amplitudes[static_cast<size_t>(r)] * std::conj(amplitudes[static_cast<size_t>(c)]);
    return DensityMatrix(rho);
  }

  /// Maximally mixed state I/d.
  static DensityMatrix maximally_mixed(int dim) {
    return DensityMatrix((1.0 / dim) * ComplexMatrix::identity(dim));
  }

  /// (|0,0> + |1,1>)/sqrt(2); with the ion-slow convention this is the
  /// ion-photon Bell state (|g,H> + |e,V>)/sqrt(2).
  static DensityMatrix bell_phi_plus() {
    const double r = 1.0 / std::sqrt(2.0);
    return pure({r, 0.0, 0.0, r});
  }

  const ComplexMatrix& matrix() const { return rho_; }
  int dim() const { return rho_.dim(); }

private:
  void validate() const {
    if (!rho_.is_hermitian(kHermitianTol))
      throw contract_error("DensityMatrix: not Hermitian within 1e-9");
    if (std::abs(rho_.trace() - cplx(1.0, 0.0)) > kTraceTol)
      throw contract_error("DensityMatrix: trace deviates from 1 by more than 1e-9");
    const EigenSystem es = eigh(rho_);
    if (es.values.front() < kEigenvalueFloor)
      throw contract_error("DensityMatrix: eigenvalue " + std::to_string(es.values.front()) +
                           " below -1e-9");
  }

  ComplexMatrix rho_;
};

/// Single-photon polarization qubit alpha|H> + beta|V>.
struct PolarizationState {
  cplx h;  // amplitude on |H>
  cplx v;  // amplitude on |V>

  PolarizationState(cplx h_amp, cplx v_amp) : h(h_amp), v(v_amp) {
    if (std::abs(std::norm(h) + std::norm(v) - 1.0) > 1e-9)
      throw contract_error("PolarizationState: |alpha|^2+|beta|^2 != 1");
  }

  DensityMatrix density() const { return DensityMatrix::pure({h, v}); }
};

/// w * rho + (1 - w) * I/d.
inline DensityMatrix depolarize(const DensityMatrix& rho, double w) {
  if (!(w >= 0.0 && w <= 1.0))
    throw domain_error("depolarize: weight must lie in [0,1]");
  const int d = rho.dim();
  return DensityMatrix(w * rho.matrix() + ((1.0 - w) / d) * ComplexMatrix::identity(d));
}

/// Transpose the chosen subsystem of a two-qubit state (1 = ion/slow,
/// 2 = photon/fast). The result is Hermitian but in general not PSD.
inline ComplexMatrix partial_transpose(const DensityMatrix& rho, int subsystem) {
  if (rho.dim() != 4)
    throw domain_error("partial_transpose: requires a two-qubit state");
  if (subsystem != kIonSubsystem && subsystem != kPhotonSubsystem)
    throw domain_error("partial_transpose: subsystem index must be 1 or 2");
  const ComplexMatrix& m = rho.matrix();
  ComplexMatrix out(4);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d) {
          // rows |a,b>, cols
          // |c,d>; transposing subsystem 1 swaps a<->c, subsystem 2 swaps b<->d.
          if (subsystem == kIonSubsystem)
            out(2 * a + b, 2 * c + d) = m(2 * c + b, 2 * a + d);
          else
            out(2 * a + b, 2 * c + d) = m(2 * a + d, 2 * c + b);
        }
  return out;
}

/// Entanglement negativity N = (||rho^Gamma||_1 - 1)/2, computed as the
/// sum of |negative eigenvalues| of the partial transpose. Eigenvalues
/// above -1e-12 count as zero so that product states give exactly 0.
inline double negativity(const DensityMatrix& rho) {
  if (rho.dim() != 4)
    throw domain_error("negativity: requires a two-qubit state");
  const EigenSystem es = eigh(partial_transpose(rho, kPhotonSubsystem));
  double n = 0.0;
  for (double lam : es.values)
    if (lam < -1e-12) n -= lam;
  return n;
}

/// Trace out the chosen subsystem of a 4x4 matrix; returns the 2x2 remainder.
inline ComplexMatrix partial_trace(const ComplexMatrix& m, int traced_subsystem) {
  if (m.dim() != 4)
    throw domain_error("partial_trace: requires a 4x4 matrix");
  if (traced_subsystem != kIonSubsystem && traced_subsystem != kPhotonSubsystem)
    throw domain_error("partial_trace: subsystem index must be 1 or 2");
  ComplexMatrix out(2);
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c)
      for (int k = 0; k < 2; ++k)
        out(r, c) += (traced_subsystem == kIonSubsystem) ? m(2 * k + r, 2 * k + c)
                                                         : m(2 * r + k, 2 * c + k);
  return out;
}

}  // namespace qfc
