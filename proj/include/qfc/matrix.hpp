// Copyright 2026 the qfc developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <initializer_list>
#include <string>
#include <vector>

#include "qfc/errors.hpp"

namespace qfc {

using cplx = std::complex<double>;

/// Dense complex matrix of dimension 2 or 4, row-major, value semantics.
///
/// The toolkit only ever deals with one- and two-qubit objects, so storage
/// is a fixed 16-entry array and no allocation happens anywhere downstream.
class ComplexMatrix {
public:
  static constexpr int kMaxDim = 4;

  explicit ComplexMatrix(int dim) : dim_(dim) {
    check_dim(dim);
    m_.fill(cplx(0.0, 0.0));
  }

  ComplexMatrix(int dim, std::initializer_list<cplx> entries) : ComplexMatrix(dim) {
    if (static_cast<int>(entries.size()) != dim * dim)
      throw contract_error("ComplexMatrix: entry count " + std::to_string(entries.size()) +
                           " does not match dim " + std::to_string(dim));
    int i = 0;
    for (const cplx& e : entries) m_[static_cast<size_t>(i++)] = e;
  }

  static ComplexMatrix identity(int dim) {
    ComplexMatrix out(dim);
    for (int i = 0; i < dim; ++i) out(i, i) = 1.0;
    return out;
  }

  int dim() const { return dim_; }

  cplx& operator()(int r, int c) { return m_[static_cast<size_t>(r * dim_ + c)]; }
  const cplx& operator()(int r, int c) const { return m_[static_cast<size_t>(r * dim_ + c)]; }

  ComplexMatrix operator+(const ComplexMatrix& o) const {
    require_same_dim(o);
    ComplexMatrix out(dim_);
    for (int i = 0; i < dim_ * dim_; ++i) out.m_[static_cast<size_t>(i)] = m_[static_cast<size_t>(i)] + o.m_[static_cast<size_t>(i)];
    return out;
  }

  ComplexMatrix operator-(const ComplexMatrix& o) const {
    require_same_dim(o);
    ComplexMatrix out(dim_);
    for (int i = 0; i < dim_ * dim_; ++i) out.m_[static_cast<size_t>(i)] = m_[static_cast<size_t>(i)] - o.m_[static_cast<size_t>(i)];
    return out;
  }

  ComplexMatrix operator*(const ComplexMatrix& o) const {
    require_same_dim(o);
    ComplexMatrix out(dim_);
    for (int r = 0; r < dim_; ++r)
      for (int k = 0; k < dim_; ++k) {
        const cplx a = (*this)(r, k);
        if (a == cplx(0.0, 0.0)) continue;
        for (int c = 0; c < dim_; ++c) out(r, c) += a * o(k, c);
      }
    return out;
  }

  friend ComplexMatrix operator*(const cplx& s, const ComplexMatrix& m) {
    ComplexMatrix out(m.dim_);
    for (int i = 0; i < m.dim_ * m.dim_; ++i) out.m_[static_cast<size_t>(i)] = s * m.m_[static_cast<size_t>(i)];
    return out;
  }

  friend ComplexMatrix operator*(double s, const ComplexMatrix& m) { return cplx(s, 0.0) * m; }

  ComplexMatrix adjoint() const {
    ComplexMatrix out(dim_);
    for (int r = 0; r < dim_; ++r)
      for (int c = 0; c < dim_; ++c) out(c, r) = std::conj((*this)(r, c));
    return out;
  }

  ComplexMatrix transpose() const {
    ComplexMatrix out(dim_);
    for (int r = 0; r < dim_; ++r)
      for (int c = 0; c < dim_; ++c) out(c, r) = (*this)(r, c);
    return out;
  }

  cplx trace() const {
    cplx t(0.0, 0.0);
    for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
  }

  double frobenius_norm() const {
    double s = 0.0;
    for (int i = 0; i < dim_ * dim_; ++i) s += std::norm(m_[static_cast<size_t>(i)]);
    return std::sqrt(s);
  }

  /// Largest |a_ij - b_ij| over all entries.
  double max_abs_diff(const ComplexMatrix& o) const {
    require_same_dim(o);
    double d = 0.0;
    for (int i = 0; i < dim_ * dim_; ++i)
      d = std::max(d, std::abs(m_[static_cast<size_t>(i)] - o.m_[static_cast<size_t>(i)]));
    return d;
  }

  bool is_hermitian(double tol) const { return max_abs_diff(adjoint()) <= tol; }

  /// (A + A^dagger)/2; cheap clean-up for almost-Hermitian inputs.
  ComplexMatrix hermitized() const { return 0.5 * (*this + adjoint()); }

private:
  static void check_dim(int dim) {
    if (dim != 2 && dim != 4)
      throw contract_error("ComplexMatrix: dim must be 2 or 4, got " + std::to_string(dim));
  }
  void require_same_dim(const ComplexMatrix& o) const {
    if (o.dim_ != dim_)
      throw contract_error("ComplexMatrix: dimension mismatch " + std::to_string(dim_) + " vs " +
                           std::to_string(o.dim_));
  }

  int dim_;
  std::array<cplx, kMaxDim * kMaxDim> m_;
};

/// Kronecker product of two 2x2 matrices; index convention is
/// (row: 2*r_a + r_b), i.e. the first factor owns the slow index.
inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != 2 || b.dim() != 2)
    throw contract_error("kron: only 2x2 (x) 2x2 is supported");
  ComplexMatrix out(4);
  for (int ra = 0; ra < 2; ++ra)
    for (int ca = 0; ca < 2; ++ca)
      for (int rb = 0; rb < 2; ++rb)
        for (int cb = 0; cb < 2; ++cb)
          out(2 * ra + rb, 2 * ca + cb) = a(ra, ca) * b(rb, cb);
  return out;
}

/// Eigendecomposition of a Hermitian matrix: A = V diag(values) V^dagger.
struct EigenSystem {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // columns, unitary

  EigenSystem(int dim) : values(static_cast<size_t>(dim), 0.0), vectors(ComplexMatrix::identity(dim)) {}
};

/// Cyclic Jacobi eigensolver for Hermitian 2x2/4x4 matrices.
///
/// Each rotation zeroes one off-diagonal pair; sweeps repeat until the
/// off-diagonal Frobenius mass drops below tol * max(1, ||A||_F).
inline EigenSystem eigh(const ComplexMatrix& a, double tol = 1e-12) {
  const int n = a.dim();
  if (!a.is_hermitian(1e-8))
    throw domain_error("eigh: matrix is not Hermitian");

  ComplexMatrix work = a.hermitized();
  ComplexMatrix vecs = ComplexMatrix::identity(n);
  const double scale = std::max(1.0, work.frobenius_norm());

  auto off_norm = [&]() {
    double s = 0.0;
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c)
        if (r != c) s += std::norm(work(r, c));
    return std::sqrt(s);
  };

  constexpr int kMaxSweeps = 100;
  for (int sweep = 0; sweep < kMaxSweeps && off_norm() > tol * scale; ++sweep) {
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const cplx g = work(p, q);
        const double ag = std::abs(g);
        if (ag <= tol * scale * 1e-3) continue;

        // Phase removal then a real Jacobi rotation on the (p,q) block.
        const cplx phase = g / ag;
        const double app = work(p, p).real();
        const double aqq = work(q, q).real();
        const double tau = (aqq - app) / (2.0 * ag);
        // Stable root of t^2 - 2*tau*t - 1 = 0 (zeroes the rotated (p,q) entry).
        const double t = (tau >= 0.0 ? -1.0 : 1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        ComplexMatrix rot = ComplexMatrix::identity(n);
        rot(p, p) = c;
        rot(p, q) = -s;
        rot(q, p) = std::conj(phase) * s;
        rot(q, q) = std::conj(phase) * c;

        work = (rot.adjoint() * work) * rot;
        vecs = vecs * rot;
      }
    }
  }
  if (off_norm() > 1e-9 * scale)
    throw domain_error("eigh: Jacobi iteration failed to converge");

  EigenSystem out(n);
  std::array<int, 4> order{0, 1, 2, 3};
  std::sort(order.begin(), order.begin() + n,
            [&](int i, int j) { return work(i, i).real() < work(j, j).real(); });
  for (int k = 0; k < n; ++k) {
    out.values[static_cast<size_t>(k)] = work(order[static_cast<size_t>(k)], order[static_cast<size_t>(k)]).real();
    for (int r = 0; r < n; ++r) out.vectors(r, k) = vecs(r, order[static_cast<size_t>(k)]);
  }
  return out;
}

/// f(A) for Hermitian A via eigendecomposition; eigenvalues below
/// `floor` are lifted to it first (used for A^{-1/2} of near-singular maps).
template <typename Fn>
ComplexMatrix hermitian_function(const ComplexMatrix& a, Fn&& f, double floor = 0.0) {
  const EigenSystem es = eigh(a);
  const int n = a.dim();
  ComplexMatrix out(n);
  for (int k = 0; k < n; ++k) {
    const double lam = std::max(es.values[static_cast<size_t>(k)], floor);
    const double flam = f(lam);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c)
        out(r, c) += flam * es.vectors(r, k) * std::conj(es.vectors(c, k));
  }
  return out;
}

}  // namespace qfc
