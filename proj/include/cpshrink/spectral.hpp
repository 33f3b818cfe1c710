/*
 * Copyright 2026 The cpshrink Authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

#ifndef CPSHRINK_SPECTRAL_HPP
#define CPSHRINK_SPECTRAL_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "cpshrink/error.hpp"

namespace cpshrink {

using complex_t = std::complex<double>;

// Dense complex matrix, the carrier for operators and Kraus maps alike.
using ComplexMatrix = Eigen::MatrixXcd;

// Relative tolerances shared across the library.
inline constexpr double kHermiticityTol = 1e-10;
inline constexpr double kPsdTol = 1e-9;

bool all_finite(const ComplexMatrix &m);

// Throws NonFinite if any entry component is NaN or Inf.
void require_finite(const ComplexMatrix &m);

//=========================================================================
// HermitianOperator
//=========================================================================

// A validated self-adjoint square matrix. The stored matrix is the exact
// Hermitian part (m + m^dagger) / 2 of the input, which differs from the
// input by at most the accepted hermiticity tolerance.
class HermitianOperator {
public:
  // Accepts m when max |m - m^dagger| <= 1e-10 * max(1, max |m_ij|).
  explicit HermitianOperator(const ComplexMatrix &m);

  static HermitianOperator identity(std::size_t dim);
  static HermitianOperator zero(std::size_t dim);
  // Projector u u^dagger onto the (normalized) vector u.
  static HermitianOperator projector(const Eigen::VectorXcd &u);

  std::size_t dim() const { return static_cast<std::size_t>(m_.rows()); }
  const ComplexMatrix &matrix() const { return m_; }
  double trace() const { return m_.trace().real(); }

  HermitianOperator operator+(const HermitianOperator &o) const;
  HermitianOperator operator-(const HermitianOperator &o) const;
  HermitianOperator operator*(double c) const;

private:
  struct Trusted {};
  HermitianOperator(ComplexMatrix m, Trusted) : m_(std::move(m)) {}

  ComplexMatrix m_;
};

//=========================================================================
// Spectra
//=========================================================================

// Singular values sorted non-increasing, zero-padded to padded_dim.
class SingularSpectrum {
public:
  // Sorts the given nonnegative values descending and appends zeros up to
  // padded_dim. Throws PadTooSmall if there are more values than padded_dim.
  static SingularSpectrum from_values(std::vector<double> values,
                                      std::size_t padded_dim);

  std::span<const double> values() const { return values_; }
  std::size_t padded_dim() const { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }

private:
  explicit SingularSpectrum(std::vector<double> values)
      : values_(std::move(values)) {}

  std::vector<double> values_;
};

struct EigenSystem {
  std::vector<double> eigenvalues; // descending
  ComplexMatrix eigenvectors;      // column i pairs with eigenvalues[i]
};

// Singular values of m, descending, padded with zeros to padded_dim.
// Throws PadTooSmall if padded_dim < min(rows, cols), NonFinite on NaN/Inf.
SingularSpectrum singular_values(const ComplexMatrix &m,
                                 std::size_t padded_dim);

// Eigenvalues descending with matching orthonormal eigenvectors. Within a
// degenerate cluster the solver's order (reversed) is kept as is.
EigenSystem hermitian_eigensystem(const HermitianOperator &x);

struct JordanParts {
  HermitianOperator positive;
  HermitianOperator negative;
};

// x = Q - R with Q, R positive semidefinite on orthogonal supports.
JordanParts jordan_decomposition(const HermitianOperator &x);

// |x| = Q + R, assembled from the eigensystem.
HermitianOperator absolute_value(const HermitianOperator &x);

// min eigenvalue >= -1e-9 * max(1, max eigenvalue).
bool is_psd(const HermitianOperator &x);

double spectral_norm(const ComplexMatrix &m);
double trace_norm(const ComplexMatrix &m);

} // namespace cpshrink

#endif // CPSHRINK_SPECTRAL_HPP
